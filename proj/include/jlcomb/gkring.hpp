#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "jlcomb/multiseg.hpp"

namespace jlcomb {

/// Element of the Grothendieck group on the standard basis. Each key is a
/// standard label, i.e. the multiset of segments of the induced module. d
/// is the side tag: 1 for the split side, the index of D otherwise.
class VirtualRep {
 public:
  explicit VirtualRep(int d = 1) : d_(d) {}
  static VirtualRep basis(Multisegment m, int d = 1, std::int64_t coeff = 1);

  int d() const { return d_; }
  const std::map<Multisegment, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coeff(const Multisegment& m) const;

  void add(const Multisegment& m, std::int64_t c);
  VirtualRep& operator+=(const VirtualRep& o);
  VirtualRep& operator-=(const VirtualRep& o);
  VirtualRep operator+(const VirtualRep& o) const;
  VirtualRep operator-(const VirtualRep& o) const;
  VirtualRep operator-() const;
  VirtualRep scaled(std::int64_t c) const;
  VirtualRep shifted(const Exponent& t) const;

  bool operator==(const VirtualRep&) const = default;

 private:
  void require_same_side(const VirtualRep& o) const;

  int d_ = 1;
  std::map<Multisegment, std::int64_t> terms_;
};

/// Bilinear induction product.
VirtualRep product(const VirtualRep& a, const VirtualRep& b);

enum class UnitKind { u, u_prime, ubar };

/// A Speh unit. base is the square integrable (split side) or its inner-form
/// counterpart, centered at 0, with step 1 or s. twist is an F-exponent. When
/// alpha is set the unit is the complementary-series pair
/// nu^{a} x nu^{-a} with a = alpha * step (alpha in (0, 1/2)).
struct SpehUnit {
  UnitKind kind = UnitKind::u;
  Segment base;
  int k = 1;
  Exponent twist;
  std::optional<Exponent> alpha;

  bool operator==(const SpehUnit&) const = default;
};

std::strong_ordering operator<=>(const SpehUnit& a, const SpehUnit& b);

struct UnitaryProduct {
  std::vector<SpehUnit> units;

  void canonicalize();
  bool operator==(const UnitaryProduct&) const = default;
};

/// Multisegment of a single unit (Langlands quotient label).
Multisegment unit_label(const SpehUnit& u);
Multisegment product_label(const UnitaryProduct& p);

/// Segment of length len and step `step` centered at c.
Segment centered_segment(LineId line, int len, int step, const Exponent& c);

Multisegment speh_u(int sigma_len, LineId line, int k, const Exponent& twist);
/// sigma is a D-side segment; its own center is kept and the copies are spread
/// by sigma.step (u') or by 1 (ubar).
Multisegment speh_u_prime(const Segment& sigma, int k, const Exponent& twist);
Multisegment speh_ubar(const Segment& sigma, int k, const Exponent& twist);
/// Union of the +alpha and -alpha shifted labels of u; alpha is in units of
/// the unit's step.
Multisegment pi_u_alpha(const SpehUnit& u, const Exponent& alpha);

SpehUnit make_u(int sigma_len, LineId line, int k, const Exponent& twist = Exponent(0));
SpehUnit make_u_prime(const Segment& sigma, int k, const Exponent& twist = Exponent(0));

/// ubar(sigma, k) written as a product of twisted u'(sigma, .) units.
UnitaryProduct ubar_factor(const Segment& sigma, int k);

/// Signed sum over w in W_k^l of the products Z(nu^{i step} rho, w(i)+l-i),
/// twisted by -step (k+l)/2 + center. step 1 gives u(Z(rho,l),k); step s gives
/// u'(T(rho',l),k).
VirtualRep tadic_sum(LineId line, int l, int k, int step, int d, const Exponent& center);
VirtualRep tadic_sum_reference(LineId line, int l, int k, int step, int d,
                               const Exponent& center);
/// Number of permutations in W_k^l.
std::uint64_t admissible_count(int l, int k);

VirtualRep expand_u(int l, LineId line, int k);
/// sigma' = T(rho', l) with rho' on `line` of step s.
VirtualRep expand_u_prime(LineId line, int l, int k, int s, int d);
/// Expansion of a single unit of kind u or u' on the standard basis.
VirtualRep expand_unit(const SpehUnit& u, int d);
VirtualRep expand_product(const UnitaryProduct& p, int d);
VirtualRep expand_ubar(LineId line, int l, int k, int s, int d);

/// Factorization of m into twist-0 units of kind u (step 1) or u' (step s)
/// and complementary-series pairs. Throws DomainError above `limit` segments.
std::optional<UnitaryProduct> recognize_unitary(const Multisegment& m, std::size_t limit = 24);

}  // namespace jlcomb
