#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jlcomb/transfer.hpp"

namespace jlcomb {

/// Ramification data: d_v >= 2 at the finitely many non-split places.
class GlobalAlgebra {
 public:
  void add_place(std::string name, int d_v);
  const std::map<std::string, int>& places() const { return places_; }
  /// d_v at a place; 1 when the algebra splits there.
  int d_at(const std::string& place) const;
  /// lcm of the d_v.
  int d() const;

 private:
  std::map<std::string, int> places_;
};

/// A cuspidal automorphic representation of GL_p, given by its line and the
/// generic unitary local data at the places that matter.
struct GlobalCuspidalData {
  std::string name;
  LineId line;
  std::map<std::string, std::vector<GenericFactor>> locals;
};

/// MW(rho, k) when d == 1, MW'(rho', k) with rho' = G^{-1}(MW(rho, s_{rho,D}))
/// otherwise.
struct DiscreteSeriesLabel {
  int d = 1;
  GlobalCuspidalData rho;
  int k = 1;

  bool cuspidal() const { return k == 1; }
};

int s_rho_D(const LineRegistry& reg, const GlobalCuspidalData& rho, const GlobalAlgebra& alg);
bool d_compatible_mw(const LineRegistry& reg, const GlobalCuspidalData& rho, int k,
                     const GlobalAlgebra& alg);
DiscreteSeriesLabel g_inverse(const LineRegistry& reg, const DiscreteSeriesLabel& split,
                              const GlobalAlgebra& alg);
DiscreteSeriesLabel g_map(const LineRegistry& reg, const DiscreteSeriesLabel& inner,
                          const GlobalAlgebra& alg);

using LocalComponent = std::variant<Multisegment, SignedUnitaryProduct>;
/// Split places give the Lg(gamma_v, k) label; ramified places the transfer
/// |LJ| of the component of the split discrete series.
LocalComponent local_component(const LineRegistry& reg, const DiscreteSeriesLabel& label,
                               const std::string& place, const GlobalAlgebra& alg);

/// Decomposition of a multiset of exponents into symmetric sets
/// {-c, -c+1, ..., c}; returns the radii c in increasing order. All values
/// must be integers, or all must be half-integers.
std::optional<std::vector<Exponent>> interval_decomposition(std::vector<Exponent> a);
std::optional<std::vector<Exponent>> interval_decomposition(const std::vector<std::int64_t>& a);

bool match_discrete_products(const std::vector<DiscreteSeriesLabel>& x,
                             const std::vector<DiscreteSeriesLabel>& y);

/// n! / (l! (m!)^l) with m = n / l.
boost::multiprecision::cpp_int levi_conjugate_count(int n, int l);

}  // namespace jlcomb
