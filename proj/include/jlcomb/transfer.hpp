#pragma once

#include <optional>
#include <vector>

#include "jlcomb/gkring.hpp"

namespace jlcomb {

/// Split essentially square integrable -> inner-form one with the same
/// F-support. Throws DomainError when s does not divide the length.
Segment c_map(const LineRegistry& reg, const Segment& seg, int d);
/// Inverse of c_map; the step of seg' is s.
Segment c_inv(const Segment& dseg);

bool is_d_compatible(const LineRegistry& reg, const Segment& seg, int d);
bool is_d_compatible(const LineRegistry& reg, const Multisegment& m, int d);

/// LJ on the standard basis: compatible labels go factorwise through c_map,
/// the rest vanish.
VirtualRep lj_std(const LineRegistry& reg, const VirtualRep& x, int d);

Multisegment m_map(const Multisegment& dside);
inline Multisegment q_map(const Multisegment& dside) { return m_map(dside); }
bool ll_less(const Multisegment& a, const Multisegment& b);

/// F-support of a label of either side (inner-form segments are expanded
/// into their blocks).
std::vector<CuspidalPoint> f_support(const Multisegment& m);

struct SignedUnitaryProduct {
  int sign = 0;
  UnitaryProduct product;

  bool operator==(const SignedUnitaryProduct&) const = default;
};

/// Inner-form cuspidal attached to the line: F-block of length s centered at 0.
Segment base_d_cuspidal(const LineRegistry& reg, LineId line, int d);

/// Transfer of u(Z(rho, l), k), single closed formula.
SignedUnitaryProduct lj_u(const LineRegistry& reg, LineId line, int l, int k, int d);
/// Same transfer from the separate s|l and s|k case formulas.
SignedUnitaryProduct lj_u_cases(const LineRegistry& reg, LineId line, int l, int k, int d);

/// nu^e sigma with sigma a unitary split square integrable (centered at 0).
struct GenericFactor {
  LineId line;
  int len = 1;
  Exponent e;
};

int s_gamma(const LineRegistry& reg, const std::vector<GenericFactor>& gamma, int d);
/// Label of Lg(gamma, k) on the split side.
Multisegment lg_label(const std::vector<GenericFactor>& gamma, int k);
SignedUnitaryProduct lj_generic(const LineRegistry& reg, const std::vector<GenericFactor>& gamma,
                                int k, int d);

/// Split unitary product whose |LJ| equals the target label, canonically least
/// among all of them; nullopt when there is none. Throws DomainError when the
/// search visits more than node_limit states.
std::optional<UnitaryProduct> in_image_lju(const LineRegistry& reg, const UnitaryProduct& target,
                                           int d, std::size_t node_limit = 5'000'000);
std::optional<UnitaryProduct> in_image_lju_reference(const LineRegistry& reg,
                                                     const UnitaryProduct& target, int d,
                                                     std::size_t node_limit = 5'000'000);

/// |LJ| label of a split unitary product, or nullopt if some factor vanishes.
std::optional<Multisegment> lju_label(const LineRegistry& reg, const UnitaryProduct& split, int d);

bool operator<(const UnitaryProduct& a, const UnitaryProduct& b);

}  // namespace jlcomb
