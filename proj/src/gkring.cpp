#include "jlcomb/gkring.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jlcomb {

VirtualRep VirtualRep::basis(Multisegment m, int d, std::int64_t coeff) {
  VirtualRep v(d);
  v.add(m, coeff);
  return v;
}

std::int64_t VirtualRep::coeff(const Multisegment& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void VirtualRep::add(const Multisegment& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void VirtualRep::require_same_side(const VirtualRep& o) const {
  if (d_ != o.d_)
    throw DomainError("side mismatch: d=" + std::to_string(d_) + " and d=" + std::to_string(o.d_));
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
  require_same_side(o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& o) {
  require_same_side(o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

VirtualRep VirtualRep::operator+(const VirtualRep& o) const {
  VirtualRep r = *this;
  return r += o;
}

VirtualRep VirtualRep::operator-(const VirtualRep& o) const {
  VirtualRep r = *this;
  return r -= o;
}

VirtualRep VirtualRep::operator-() const { return scaled(-1); }

VirtualRep VirtualRep::scaled(std::int64_t c) const {
  VirtualRep r(d_);
  if (c == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
  return r;
}

VirtualRep VirtualRep::shifted(const Exponent& t) const {
  VirtualRep r(d_);
  for (const auto& [m, c] : terms_) r.add(m.shifted(t), c);
  return r;
}

VirtualRep product(const VirtualRep& a, const VirtualRep& b) {
  if (a.d() != b.d())
    throw DomainError("product of virtual representations on different sides");
  VirtualRep r(a.d());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add(ma + mb, ca * cb);
  return r;
}

std::strong_ordering operator<=>(const SpehUnit& a, const SpehUnit& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.base <=> b.base; c != 0) return c;
  if (auto c = a.k <=> b.k; c != 0) return c;
  if (auto c = compare(a.twist, b.twist); c != 0) return c;
  if (a.alpha.has_value() != b.alpha.has_value())
    return a.alpha.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
  return a.alpha ? compare(*a.alpha, *b.alpha) : std::strong_ordering::equal;
}

void UnitaryProduct::canonicalize() { std::sort(units.begin(), units.end()); }

Segment centered_segment(LineId line, int len, int step, const Exponent& c) {
  if (len < 1) throw DomainError("segment length must be positive");
  return Segment{line, c - Exponent((len - 1) * step, 2), len, step};
}

namespace {

Multisegment spread(const Segment& sigma, int k, int spacing, const Exponent& twist) {
  if (k < 1) throw DomainError("Speh unit needs k >= 1");
  std::vector<Segment> segs;
  segs.reserve(k);
  for (int i = 0; i < k; ++i)
    segs.push_back(sigma.shifted(twist + Exponent(spacing) * Exponent(2 * i - (k - 1), 2)));
  return Multisegment(std::move(segs));
}

}  // namespace

Multisegment speh_u(int sigma_len, LineId line, int k, const Exponent& twist) {
  return spread(centered_segment(line, sigma_len, 1, Exponent(0)), k, 1, twist);
}

Multisegment speh_u_prime(const Segment& sigma, int k, const Exponent& twist) {
  return spread(sigma, k, sigma.step, twist);
}

Multisegment speh_ubar(const Segment& sigma, int k, const Exponent& twist) {
  return spread(sigma, k, 1, twist);
}

Multisegment pi_u_alpha(const SpehUnit& u, const Exponent& alpha) {
  if (!(Exponent(0) < alpha && alpha < Exponent(1, 2)))
    throw DomainError("alpha must lie in (0, 1/2), got " + to_string(alpha));
  SpehUnit plain = u;
  plain.alpha.reset();
  Multisegment m = unit_label(plain);
  const Exponent a = alpha * Exponent(u.base.step);
  return m.shifted(a) + m.shifted(-a);
}

Multisegment unit_label(const SpehUnit& u) {
  if (u.alpha) {
    SpehUnit plain = u;
    plain.alpha.reset();
    return pi_u_alpha(plain, *u.alpha);
  }
  switch (u.kind) {
    case UnitKind::u:
    case UnitKind::u_prime:
      return spread(u.base, u.k, u.base.step, u.twist);
    case UnitKind::ubar:
      return speh_ubar(u.base, u.k, u.twist);
  }
  return {};
}

Multisegment product_label(const UnitaryProduct& p) {
  Multisegment m;
  for (const auto& u : p.units) m = m + unit_label(u);
  return m;
}

SpehUnit make_u(int sigma_len, LineId line, int k, const Exponent& twist) {
  return SpehUnit{UnitKind::u, centered_segment(line, sigma_len, 1, Exponent(0)), k, twist, {}};
}

SpehUnit make_u_prime(const Segment& sigma, int k, const Exponent& twist) {
  return SpehUnit{UnitKind::u_prime, sigma, k, twist, {}};
}

UnitaryProduct ubar_factor(const Segment& sigma, int k) {
  if (k < 1) throw DomainError("ubar_factor needs k >= 1");
  const int s = sigma.step;
  const int a = k / s, b = k % s;
  UnitaryProduct out;
  if (b == 0) {
    for (int i = 1; i <= s; ++i)
      out.units.push_back(make_u_prime(sigma, a, Exponent(2 * i - (s + 1), 2)));
  } else {
    for (int i = 1; i <= b; ++i)
      out.units.push_back(make_u_prime(sigma, a + 1, Exponent(2 * i - (b + 1), 2)));
    if (a > 0)
      for (int j = 1; j <= s - b; ++j)
        out.units.push_back(make_u_prime(sigma, a, Exponent(2 * j - (s - b + 1), 2)));
  }
  out.canonicalize();
  return out;
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Lehmer-code unranking into perm, a permutation of {0..k-1}.
void unrank(std::uint64_t r, int k, std::vector<int>& perm) {
  std::vector<int> pool(static_cast<std::size_t>(k));
  std::iota(pool.begin(), pool.end(), 0);
  perm.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const std::uint64_t f = factorial(k - 1 - i);
    const auto idx = static_cast<std::size_t>(r / f);
    r %= f;
    perm[static_cast<std::size_t>(i)] = pool[idx];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
}

int permutation_sign(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

struct TadicTerm {
  LineId line;
  int l, k, step;
  Exponent shift;

  // Label for permutation w (0-based values), or nullopt when w is not in W_k^l.
  std::optional<Multisegment> operator()(const std::vector<int>& w) const {
    std::vector<Segment> segs;
    segs.reserve(k);
    for (int i = 1; i <= k; ++i) {
      const int len = (w[i - 1] + 1) + l - i;
      if (len < 0) return std::nullopt;
      if (len == 0) continue;
      segs.push_back(Segment{line, Exponent(i * step) + shift, len, step});
    }
    return Multisegment(std::move(segs));
  }
};

TadicTerm make_term(LineId line, int l, int k, int step, const Exponent& center) {
  if (l < 1 || k < 1 || step < 1) throw DomainError("tadic_sum needs l, k, step >= 1");
  return TadicTerm{line, l, k, step, center - Exponent(step) * Exponent(k + l, 2)};
}

}  // namespace

VirtualRep tadic_sum_reference(LineId line, int l, int k, int step, int d,
                               const Exponent& center) {
  const TadicTerm term = make_term(line, l, k, step, center);
  VirtualRep out(d);
  std::vector<int> w(k);
  std::iota(w.begin(), w.end(), 0);
  do {
    if (auto m = term(w)) out.add(*m, permutation_sign(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

VirtualRep tadic_sum(LineId line, int l, int k, int step, int d, const Exponent& center) {
  const TadicTerm term = make_term(line, l, k, step, center);
  if (k > 20) throw DomainError("tadic_sum: k too large");
  const std::uint64_t total = factorial(k);
  std::vector<VirtualRep> partial;

  // Each thread unranks the first permutation of its block of ranks and
  // walks the rest in lexicographic order.
#pragma omp parallel
  {
#ifdef _OPENMP
    const int nthreads = omp_get_num_threads();
    const int tid = omp_get_thread_num();
#else
    const int nthreads = 1;
    const int tid = 0;
#endif
#pragma omp single
    partial.assign(static_cast<std::size_t>(nthreads), VirtualRep(d));

    const std::uint64_t n = static_cast<std::uint64_t>(nthreads);
    const std::uint64_t t = static_cast<std::uint64_t>(tid);
    const std::uint64_t begin = total * t / n, end = total * (t + 1) / n;
    VirtualRep& local = partial[static_cast<std::size_t>(tid)];
    if (begin < end) {
      std::vector<int> w;
      unrank(begin, k, w);
      for (std::uint64_t r = begin; r < end; ++r) {
        if (auto m = term(w)) local.add(*m, permutation_sign(w));
        std::next_permutation(w.begin(), w.end());
      }
    }
  }

  VirtualRep out = std::move(partial.front());
  for (std::size_t i = 1; i < partial.size(); ++i) out += partial[i];
  return out;
}

std::uint64_t admissible_count(int l, int k) {
  // Place values for positions k, k-1, ..., 1: position i accepts w(i) >= i - l.
  std::uint64_t count = 1;
  for (int i = k; i >= 1; --i) {
    const int allowed = k - std::max(1, i - l) + 1;
    const int used = k - i;
    if (allowed - used <= 0) return 0;
    count *= static_cast<std::uint64_t>(allowed - used);
  }
  return count;
}

VirtualRep expand_u(int l, LineId line, int k) { return tadic_sum(line, l, k, 1, 1, Exponent(0)); }

VirtualRep expand_u_prime(LineId line, int l, int k, int s, int d) {
  return tadic_sum(line, l, k, s, d, Exponent(0));
}

VirtualRep expand_unit(const SpehUnit& u, int d) {
  if (u.kind == UnitKind::ubar) {
    UnitaryProduct p = ubar_factor(u.base, u.k);
    return expand_product(p, d).shifted(u.twist);
  }
  auto once = [&](const Exponent& t) {
    return tadic_sum(u.base.line, u.base.len, u.k, u.base.step, d, u.base.center() + t);
  };
  if (!u.alpha) return once(u.twist);
  const Exponent a = *u.alpha * Exponent(u.base.step);
  return product(once(u.twist + a), once(u.twist - a));
}

VirtualRep expand_product(const UnitaryProduct& p, int d) {
  VirtualRep out = VirtualRep::basis(Multisegment{}, d);
  for (const auto& u : p.units) out = product(out, expand_unit(u, d));
  return out;
}

VirtualRep expand_ubar(LineId line, int l, int k, int s, int d) {
  return expand_product(ubar_factor(centered_segment(line, l, s, Exponent(0)), k), d);
}

namespace {

class Recognizer {
 public:
  explicit Recognizer(std::vector<Segment> segs) : remaining_(std::move(segs)) {}

  std::optional<UnitaryProduct> run() {
    if (solve()) {
      UnitaryProduct p{found_};
      p.canonicalize();
      return p;
    }
    return std::nullopt;
  }

 private:
  bool take(const Multisegment& m) {
    for (const auto& s : m) {
      auto it = std::lower_bound(remaining_.begin(), remaining_.end(), s);
      if (it == remaining_.end() || !(*it == s)) return false;
      remaining_.erase(it);
    }
    return true;
  }

  bool attempt(const SpehUnit& unit) {
    Multisegment label = unit_label(unit);
    std::vector<Segment> saved = remaining_;
    if (!take(label)) {
      remaining_ = std::move(saved);
      return false;
    }
    found_.push_back(unit);
    if (solve()) return true;
    found_.pop_back();
    remaining_ = std::move(saved);
    return false;
  }

  bool solve() {
    if (remaining_.empty()) return true;
    const Segment first = remaining_.front();
    const int step = first.step;
    const Exponent c = first.center();
    const int same_shape = static_cast<int>(std::count_if(
        remaining_.begin(), remaining_.end(),
        [&](const Segment& s) { return s.line == first.line && s.len == first.len && s.step == step; }));
    const Segment base = centered_segment(first.line, first.len, step, Exponent(0));
    const UnitKind kind = step == 1 ? UnitKind::u : UnitKind::u_prime;
    for (int k = 1; k <= same_shape; ++k) {
      for (int i = 0; i < k; ++i) {
        // first is copy i of a unit whose copies sit at step((k-1)/2 - i) + tau.
        const Exponent tau = c - Exponent(step) * Exponent(k - 1 - 2 * i, 2);
        if (tau == Exponent(0)) {
          if (attempt(SpehUnit{kind, base, k, Exponent(0), {}})) return true;
          continue;
        }
        Exponent alpha = tau / Exponent(step);
        if (alpha < Exponent(0)) alpha = -alpha;
        if (alpha < Exponent(1, 2) && 2 * k <= same_shape)
          if (attempt(SpehUnit{kind, base, k, Exponent(0), alpha})) return true;
      }
    }
    return false;
  }

  std::vector<Segment> remaining_;
  std::vector<SpehUnit> found_;
};

}  // namespace

std::optional<UnitaryProduct> recognize_unitary(const Multisegment& m, std::size_t limit) {
  if (m.size() > limit)
    throw DomainError("recognize_unitary: " + std::to_string(m.size()) +
                      " segments exceed the limit " + std::to_string(limit));
  return Recognizer(m.segments()).run();
}

}  // namespace jlcomb
