#include "jlcomb/global.hpp"

#include <algorithm>

namespace jlcomb {

void GlobalAlgebra::add_place(std::string name, int d_v) {
  if (d_v < 2) throw DomainError("place '" + name + "': d_v must be at least 2");
  if (!places_.emplace(std::move(name), d_v).second) throw DomainError("duplicate place");
}

int GlobalAlgebra::d_at(const std::string& place) const {
  auto it = places_.find(place);
  return it == places_.end() ? 1 : it->second;
}

int GlobalAlgebra::d() const {
  std::int64_t d = 1;
  for (const auto& [name, dv] : places_) d = lcm64(d, dv);
  return static_cast<int>(d);
}

namespace {

const std::vector<GenericFactor>& local_data(const GlobalCuspidalData& rho, const std::string& v) {
  auto it = rho.locals.find(v);
  if (it == rho.locals.end())
    throw DomainError("no local data for '" + rho.name + "' at place '" + v + "'");
  return it->second;
}

}  // namespace

int s_rho_D(const LineRegistry& reg, const GlobalCuspidalData& rho, const GlobalAlgebra& alg) {
  std::int64_t s = 1;
  for (const auto& [v, dv] : alg.places()) s = lcm64(s, s_gamma(reg, local_data(rho, v), dv));
  return static_cast<int>(s);
}

bool d_compatible_mw(const LineRegistry& reg, const GlobalCuspidalData& rho, int k,
                     const GlobalAlgebra& alg) {
  if (k < 1) throw DomainError("k must be positive");
  return k % s_rho_D(reg, rho, alg) == 0;
}

DiscreteSeriesLabel g_inverse(const LineRegistry& reg, const DiscreteSeriesLabel& split,
                              const GlobalAlgebra& alg) {
  if (split.d != 1) throw DomainError("g_inverse expects a split-side label");
  const int s = s_rho_D(reg, split.rho, alg);
  if (split.k % s != 0)
    throw DomainError("MW(" + split.rho.name + ", " + std::to_string(split.k) +
                      ") is not D-compatible (s_rho,D = " + std::to_string(s) + ")");
  return DiscreteSeriesLabel{alg.d(), split.rho, split.k / s};
}

DiscreteSeriesLabel g_map(const LineRegistry& reg, const DiscreteSeriesLabel& inner,
                          const GlobalAlgebra& alg) {
  if (inner.d == 1) throw DomainError("g_map expects an inner-form label");
  return DiscreteSeriesLabel{1, inner.rho, inner.k * s_rho_D(reg, inner.rho, alg)};
}

LocalComponent local_component(const LineRegistry& reg, const DiscreteSeriesLabel& label,
                               const std::string& place, const GlobalAlgebra& alg) {
  const DiscreteSeriesLabel split = label.d == 1 ? label : g_map(reg, label, alg);
  const auto& gamma = local_data(split.rho, place);
  const int dv = alg.d_at(place);
  if (dv == 1) return lg_label(gamma, split.k);
  return lj_generic(reg, gamma, split.k, dv);
}

std::optional<std::vector<Exponent>> interval_decomposition(std::vector<Exponent> a) {
  if (a.empty()) return std::vector<Exponent>{};
  const bool integral = is_integer(a.front());
  for (const auto& x : a) {
    if (is_integer(x) != integral) return std::nullopt;
    if (!integral && !is_integer(Exponent(2) * x)) return std::nullopt;
  }
  std::map<Exponent, int> f;
  for (const auto& x : a) ++f[x];
  auto mult = [&](const Exponent& x) {
    auto it = f.find(x);
    return it == f.end() ? 0 : it->second;
  };
  const Exponent first = integral ? Exponent(0) : Exponent(1, 2);
  Exponent top = first;
  for (const auto& [x, c] : f) top = std::max(top, x < Exponent(0) ? -x : x);

  std::vector<Exponent> radii;
  for (Exponent c = first; c <= top; c += 1) {
    const int count = mult(c) - mult(c + 1);
    if (count < 0) return std::nullopt;
    radii.insert(radii.end(), static_cast<std::size_t>(count), c);
  }
  // Reassemble and compare; this rejects asymmetric inputs.
  std::vector<Exponent> rebuilt;
  for (const auto& c : radii)
    for (Exponent x = -c; x <= c; x += 1) rebuilt.push_back(x);
  std::sort(a.begin(), a.end());
  std::sort(rebuilt.begin(), rebuilt.end());
  if (rebuilt != a) return std::nullopt;
  return radii;
}

std::optional<std::vector<Exponent>> interval_decomposition(const std::vector<std::int64_t>& a) {
  std::vector<Exponent> e(a.begin(), a.end());
  return interval_decomposition(std::move(e));
}

namespace {

// Per cuspidal and per class (integral / half-integral exponents), the
// multiset of exponents of the cuspidal support.
std::map<std::pair<std::string, bool>, std::vector<Exponent>> supports(
    const std::vector<DiscreteSeriesLabel>& x) {
  std::map<std::pair<std::string, bool>, std::vector<Exponent>> out;
  for (const auto& lab : x) {
    if (lab.k < 1) throw DomainError("k must be positive");
    const bool integral = lab.k % 2 == 1;
    auto& bucket = out[{lab.rho.name, integral}];
    for (int i = 0; i < lab.k; ++i) bucket.push_back(Exponent(lab.k - 1 - 2 * i, 2));
  }
  return out;
}

}  // namespace

bool match_discrete_products(const std::vector<DiscreteSeriesLabel>& x,
                             const std::vector<DiscreteSeriesLabel>& y) {
  auto sx = supports(x), sy = supports(y);
  if (sx.size() != sy.size()) return false;
  for (auto& [key, values] : sx) {
    auto it = sy.find(key);
    if (it == sy.end()) return false;
    auto dx = interval_decomposition(values);
    auto dy = interval_decomposition(it->second);
    if (!dx || !dy) throw DomainError("support is not a union of symmetric intervals");
    if (*dx != *dy) return false;
  }
  return true;
}

boost::multiprecision::cpp_int levi_conjugate_count(int n, int l) {
  if (n < 1 || l < 1 || n % l != 0) throw DomainError("levi_conjugate_count needs l | n");
  using boost::multiprecision::cpp_int;
  auto fact = [](int m) {
    cpp_int f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  const int m = n / l;
  cpp_int denom = fact(l);
  const cpp_int fm = fact(m);
  for (int i = 0; i < l; ++i) denom *= fm;
  return fact(n) / denom;
}

}  // namespace jlcomb
