#include "jlcomb/transfer.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace jlcomb {

Segment c_map(const LineRegistry& reg, const Segment& seg, int d) {
  if (seg.step != 1) throw DomainError("c_map expects a split-side segment");
  const int s = reg.step(seg.line, d);
  if (seg.len % s != 0)
    throw DomainError("segment of length " + std::to_string(seg.len) +
                      " is not transferable (s=" + std::to_string(s) + ")");
  return Segment{seg.line, seg.start + Exponent(s - 1, 2), seg.len / s, s};
}

Segment c_inv(const Segment& dseg) {
  const int s = dseg.step;
  return Segment{dseg.line, dseg.start - Exponent(s - 1, 2), dseg.len * s, 1};
}

bool is_d_compatible(const LineRegistry& reg, const Segment& seg, int d) {
  return seg.len % reg.step(seg.line, d) == 0;
}

bool is_d_compatible(const LineRegistry& reg, const Multisegment& m, int d) {
  return std::all_of(m.begin(), m.end(),
                     [&](const Segment& s) { return is_d_compatible(reg, s, d); });
}

VirtualRep lj_std(const LineRegistry& reg, const VirtualRep& x, int d) {
  if (x.d() != 1) throw DomainError("lj_std expects a split-side virtual representation");
  VirtualRep out(d);
  for (const auto& [m, c] : x.terms()) {
    if (!is_d_compatible(reg, m, d)) continue;
    std::vector<Segment> segs;
    segs.reserve(m.size());
    for (const auto& s : m) segs.push_back(c_map(reg, s, d));
    out.add(Multisegment(std::move(segs)), c);
  }
  return out;
}

Multisegment m_map(const Multisegment& dside) {
  std::vector<Segment> segs;
  segs.reserve(dside.size());
  for (const auto& s : dside) segs.push_back(c_inv(s));
  return Multisegment(std::move(segs));
}

bool ll_less(const Multisegment& a, const Multisegment& b) { return is_lower(q_map(a), q_map(b)); }

std::vector<CuspidalPoint> f_support(const Multisegment& m) { return m_map(m).support(); }

Segment base_d_cuspidal(const LineRegistry& reg, LineId line, int d) {
  return Segment{line, Exponent(0), 1, reg.step(line, d)};
}

namespace {

Exponent half(int num) { return Exponent(num, 2); }

int epsilon(int s, int k, int l) {
  if (s % 2 == 1) return 1;
  return ((k * l / s) % 2 == 0) ? 1 : -1;
}

Segment d_esi(const LineRegistry& reg, LineId line, int len, int d) {
  return centered_segment(line, len, reg.step(line, d), Exponent(0));
}

}  // namespace

SignedUnitaryProduct lj_u(const LineRegistry& reg, LineId line, int l, int k, int d) {
  if (l < 1 || k < 1) throw DomainError("lj_u needs l, k >= 1");
  const int s = reg.step(line, d);
  if (k % s != 0 && l % s != 0) return {};
  const int b = k % s + l % s;
  SignedUnitaryProduct out;
  out.sign = (l % s == 0) ? 1 : epsilon(s, k, l);
  for (int i = 1; i <= b; ++i)
    out.product.units.push_back(
        make_u_prime(d_esi(reg, line, (l - 1) / s + 1, d), (k - 1) / s + 1, half(2 * i - b - 1)));
  if (l / s > 0 && k / s > 0)
    for (int j = 1; j <= s - b; ++j)
      out.product.units.push_back(
          make_u_prime(d_esi(reg, line, l / s, d), k / s, half(2 * j - (s - b + 1))));
  out.product.canonicalize();
  return out;
}

SignedUnitaryProduct lj_u_cases(const LineRegistry& reg, LineId line, int l, int k, int d) {
  if (l < 1 || k < 1) throw DomainError("lj_u needs l, k >= 1");
  const int s = reg.step(line, d);
  SignedUnitaryProduct out;
  if (l % s == 0) {
    out.sign = 1;
    out.product = ubar_factor(d_esi(reg, line, l / s, d), k);
  } else if (k % s == 0) {
    out.sign = epsilon(s, k, l);
    const int a = l / s, b = l % s, kp = k / s;
    for (int i = 1; i <= b; ++i)
      out.product.units.push_back(make_u_prime(d_esi(reg, line, a + 1, d), kp, half(2 * i - b - 1)));
    if (a != 0)
      for (int j = 1; j <= s - b; ++j)
        out.product.units.push_back(
            make_u_prime(d_esi(reg, line, a, d), kp, half(2 * j - (s - b + 1))));
  }
  out.product.canonicalize();
  return out;
}

int s_gamma(const LineRegistry& reg, const std::vector<GenericFactor>& gamma, int d) {
  std::int64_t s = 1;
  for (const auto& f : gamma) {
    const int si = reg.step(f.line, d);
    if (f.len % si != 0) s = lcm64(s, si);
  }
  return static_cast<int>(s);
}

Multisegment lg_label(const std::vector<GenericFactor>& gamma, int k) {
  Multisegment m;
  for (const auto& f : gamma) m = m + speh_u(f.len, f.line, k, f.e);
  return m;
}

namespace {

void twist_units(UnitaryProduct& p, const Exponent& t) {
  for (auto& u : p.units) u.twist += t;
}

}  // namespace

SignedUnitaryProduct lj_generic(const LineRegistry& reg, const std::vector<GenericFactor>& gamma,
                                int k, int d) {
  for (const auto& f : gamma)
    if (!(Exponent(-1, 2) < f.e && f.e < Exponent(1, 2)))
      throw DomainError("generic data needs |e| < 1/2");
  if (k % s_gamma(reg, gamma, d) != 0) return {};
  SignedUnitaryProduct out;
  out.sign = 1;
  for (const auto& f : gamma) {
    SignedUnitaryProduct part = lj_u(reg, f.line, f.len, k, d);
    if (part.sign == 0) return {};
    out.sign *= part.sign;
    twist_units(part.product, f.e);
    out.product.units.insert(out.product.units.end(), part.product.units.begin(),
                             part.product.units.end());
  }
  out.product.canonicalize();
  return out;
}

bool operator<(const UnitaryProduct& a, const UnitaryProduct& b) {
  return std::lexicographical_compare(a.units.begin(), a.units.end(), b.units.begin(),
                                      b.units.end());
}

namespace {

// Label of |LJ| of one split unit (possibly a complementary pair).
std::optional<Multisegment> unit_lju_label(const LineRegistry& reg, const SpehUnit& u, int d) {
  if (u.kind != UnitKind::u) throw DomainError("expected a split-side unit");
  SignedUnitaryProduct t = lj_u(reg, u.base.line, u.base.len, u.k, d);
  if (t.sign == 0) return std::nullopt;
  Multisegment base = product_label(t.product).shifted(u.twist);
  if (!u.alpha) return base;
  return base.shifted(*u.alpha) + base.shifted(-*u.alpha);
}

struct Candidate {
  SpehUnit unit;
  Multisegment image;
};

// Split units on the line of the first remaining segment whose lowest
// F-point is the lowest F-point of that line, and whose image fits.
std::vector<Candidate> candidates(const LineRegistry& reg, const Multisegment& rest, int d) {
  std::vector<Candidate> out;
  const LineId line = rest.segments().front().line;
  std::optional<Exponent> low;
  for (const auto& s : rest)
    if (s.line == line) {
      Exponent b = c_inv(s).start;
      if (!low || b < *low) low = b;
    }
  const Exponent x = *low;
  auto consider = [&](int n, const std::optional<Exponent>& alpha) {
    for (int l = 1; l < n; ++l) {
      SpehUnit u = make_u(l, line, n - l);
      u.alpha = alpha;
      auto img = unit_lju_label(reg, u, d);
      if (img && rest.contains(*img)) out.push_back({u, std::move(*img)});
    }
  };
  const Exponent two_x = Exponent(2) * x;
  if (is_integer(two_x)) {
    const std::int64_t n = 2 - two_x.numerator();
    if (n >= 2) consider(static_cast<int>(n), std::nullopt);
  } else {
    for (std::int64_t n = floor_div(-two_x, Exponent(1)) + 1; Exponent(n) < Exponent(2) - two_x; ++n) {
      const Exponent alpha = Exponent(1) - Exponent(n, 2) - x;
      if (n >= 2 && Exponent(0) < alpha && alpha < Exponent(1, 2)) consider(static_cast<int>(n), alpha);
    }
  }
  return out;
}

class PreimageSearch {
 public:
  PreimageSearch(const LineRegistry& reg, int d, std::size_t limit) : reg_(reg), d_(d), limit_(limit) {}

  // Least completion of `rest`, as a canonical product.
  std::optional<UnitaryProduct> best(const Multisegment& rest) {
    if (rest.empty()) return UnitaryProduct{};
    if (auto it = memo_.find(rest); it != memo_.end()) return it->second;
    if (++visited_ > limit_) throw DomainError("in_image_lju: search limit exceeded");
    std::optional<UnitaryProduct> result;
    for (auto& c : candidates(reg_, rest, d_)) {
      auto sub = best(rest.minus(c.image));
      if (!sub) continue;
      sub->units.push_back(c.unit);
      sub->canonicalize();
      if (!result || *sub < *result) result = std::move(sub);
    }
    memo_.emplace(rest, result);
    return result;
  }

  std::size_t visited() const { return visited_; }

 private:
  const LineRegistry& reg_;
  int d_;
  std::size_t limit_;
  std::size_t visited_ = 0;
  std::map<Multisegment, std::optional<UnitaryProduct>> memo_;
};

Multisegment target_label(const UnitaryProduct& target, int d) {
  Multisegment label = product_label(target);
  for (const auto& s : label)
    if (s.step == 1 && d != 1) throw DomainError("in_image_lju expects an inner-form product");
  return label;
}

}  // namespace

std::optional<Multisegment> lju_label(const LineRegistry& reg, const UnitaryProduct& split, int d) {
  Multisegment m;
  for (const auto& u : split.units) {
    auto img = unit_lju_label(reg, u, d);
    if (!img) return std::nullopt;
    m = m + *img;
  }
  return m;
}

std::optional<UnitaryProduct> in_image_lju_reference(const LineRegistry& reg,
                                                     const UnitaryProduct& target, int d,
                                                     std::size_t node_limit) {
  PreimageSearch search(reg, d, node_limit);
  return search.best(target_label(target, d));
}

std::optional<UnitaryProduct> in_image_lju(const LineRegistry& reg, const UnitaryProduct& target,
                                           int d, std::size_t node_limit) {
  const Multisegment label = target_label(target, d);
  if (label.empty()) return UnitaryProduct{};
  const std::vector<Candidate> first = candidates(reg, label, d);
  std::vector<std::optional<UnitaryProduct>> results(first.size());
  std::exception_ptr error;
  std::mutex error_lock;

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(first.size()); ++i) {
    try {
      const auto& c = first[static_cast<std::size_t>(i)];
      PreimageSearch search(reg, d, node_limit);
      auto sub = search.best(label.minus(c.image));
      if (sub) {
        sub->units.push_back(c.unit);
        sub->canonicalize();
      }
      results[static_cast<std::size_t>(i)] = std::move(sub);
    } catch (...) {
      std::lock_guard<std::mutex> guard(error_lock);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::optional<UnitaryProduct> best;
  for (auto& r : results)
    if (r && (!best || *r < *best)) best = std::move(r);
  return best;
}

}  // namespace jlcomb
