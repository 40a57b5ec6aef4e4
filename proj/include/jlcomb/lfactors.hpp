#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jlcomb/multiseg.hpp"

namespace jlcomb {

/// prod_i (1 - q^{-s-a_i})^{-1}, stored as the sorted multiset of the a_i.
struct FormalLFactor {
  std::vector<Exponent> shifts;

  FormalLFactor operator*(const FormalLFactor& o) const;
  bool operator==(const FormalLFactor&) const = default;
};

/// prod eps'(s + shift, tag, psi), stored as a sorted multiset of
/// (cuspidal line, shift); psi is implicit.
struct EpsilonFactor {
  std::vector<std::pair<LineId, Exponent>> factors;

  EpsilonFactor operator*(const EpsilonFactor& o) const;
  bool operator==(const EpsilonFactor&) const = default;
};

/// prod_shift L(z + shift, rho x rho~)^{e(shift)}; zero exponents removed.
struct FormalRSProduct {
  std::map<Exponent, std::int64_t> exps;

  FormalRSProduct operator*(const FormalRSProduct& o) const;
  FormalRSProduct inverse() const;
  FormalRSProduct shifted(const Exponent& t) const;
  bool operator==(const FormalRSProduct&) const = default;
};

/// L-factor of one essentially square integrable of the side with index d
/// (d = 1 for the split side). Non-empty only for segments on an unramified
/// p = 1 line whose cuspidal lives on D^x (p s = d): then the single shift is
/// the exponent of the last block plus (d-1)/2.
FormalLFactor l_esi(const LineRegistry& reg, const Segment& seg, int d);
FormalLFactor l_irr(const LineRegistry& reg, const Multisegment& m, int d);
/// eps' over the F-cuspidal support (inner-form blocks expanded).
EpsilonFactor eps_irr(const Multisegment& m);

FormalRSProduct rs_lg(int s);
std::pair<FormalRSProduct, FormalRSProduct> normalizing_factor(int s);
/// L(z)/L(z+1) for L given as a shift map, split into numerator and denominator.
std::pair<FormalRSProduct, FormalRSProduct> rs_quotient(const FormalRSProduct& l);

/// "(1 - q^(-s-3/2))^-1 (1 - q^(-s-1/2))^-1", or "1" when empty.
std::string render(const FormalLFactor& l);
std::string render(const LineRegistry& reg, const EpsilonFactor& e);
std::string render(const FormalRSProduct& r);

}  // namespace jlcomb
