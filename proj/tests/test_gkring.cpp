#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "helpers.hpp"
#include "jlcomb/gkring.hpp"

using namespace jlcomb;
using namespace jlcomb::testing;

namespace {

VirtualRep basis(std::initializer_list<Segment> segs, std::int64_t c = 1, int d = 1) {
  return VirtualRep::basis(ms(segs), d, c);
}

UnitaryProduct canon(std::vector<SpehUnit> units) {
  UnitaryProduct p{std::move(units)};
  p.canonicalize();
  return p;
}

}  // namespace

TEST(Product, Examples) {
  EXPECT_EQ(product(basis({seg(0, 0)}), basis({seg(1, 1)})), basis({seg(0, 0), seg(1, 1)}));
  const VirtualRep x = basis({seg(0, 1)}, 3) + basis({seg(2, 2)}, -1);
  EXPECT_EQ(product(x, VirtualRep::basis(Multisegment{})), x);
  const VirtualRep a = basis({seg(0, 0)}), b = basis({seg(1, 1)}), c = basis({seg(5, 6)});
  EXPECT_EQ(product(a - b, c), product(a, c) - product(b, c));
}

TEST(Product, RejectsMixedSides) {
  EXPECT_THROW(product(basis({seg(0, 0)}), basis({dseg(0, 1, 2)}, 1, 2)), DomainError);
  EXPECT_THROW(basis({seg(0, 0)}) + basis({dseg(0, 1, 2)}, 1, 2), DomainError);
}

TEST(VirtualRep, ZeroCoefficientsVanish) {
  VirtualRep v = basis({seg(0, 1)}) - basis({seg(0, 1)});
  EXPECT_TRUE(v.empty());
  EXPECT_EQ(v.coeff(ms({seg(0, 1)})), 0);
}

TEST(Speh, SplitExamples) {
  EXPECT_EQ(speh_u(2, kRho, 2, q(0)), ms({seg(-1, 0), seg(0, 1)}));
  for (int l = 1; l <= 5; ++l)
    EXPECT_EQ(speh_u(l, kRho, 1, q(0)), ms({seg(q(-(l - 1), 2), q(l - 1, 2))}));
  EXPECT_EQ(speh_u(1, kRho, 3, q(0)), ms({seg(-1, -1), seg(0, 0), seg(1, 1)}));
  EXPECT_EQ(speh_u(1, kRho, 1, q(1, 3)), ms({seg(q(1, 3), q(1, 3))}));
}

TEST(Speh, InnerFormExamples) {
  const Segment rho2 = dseg(0, 1, 2);
  EXPECT_EQ(speh_u_prime(rho2, 2, q(0)), ms({dseg(-1, 1, 2), dseg(1, 1, 2)}));
  EXPECT_EQ(speh_ubar(rho2, 2, q(0)), ms({dseg(q(-1, 2), 1, 2), dseg(q(1, 2), 1, 2)}));
  EXPECT_EQ(speh_ubar(rho2, 1, q(0)), ms({rho2}));
  EXPECT_EQ(rigid_decomposition(speh_ubar(rho2, 2, q(0))).size(), 2u);
}

TEST(Speh, ComplementarySeries) {
  EXPECT_EQ(pi_u_alpha(make_u(2, kRho, 1), q(1, 4)),
            ms({seg(q(-3, 4), q(1, 4)), seg(q(-1, 4), q(3, 4))}));
  EXPECT_THROW(pi_u_alpha(make_u(2, kRho, 1), q(0)), DomainError);
  EXPECT_THROW(pi_u_alpha(make_u(2, kRho, 1), q(1, 2)), DomainError);
  Multisegment four;
  for (auto a : {q(-1, 2), q(1, 2)})
    for (auto b : {q(-1, 3), q(1, 3)}) four = four + ms({seg(a + b, a + b)});
  EXPECT_EQ(pi_u_alpha(make_u(1, kRho, 2), q(1, 3)), four);
}

TEST(UbarFactor, Examples) {
  const Segment rho2 = dseg(0, 1, 2);
  EXPECT_EQ(ubar_factor(rho2, 4),
            canon({make_u_prime(rho2, 2, q(-1, 2)), make_u_prime(rho2, 2, q(1, 2))}));
  EXPECT_EQ(ubar_factor(rho2, 3), canon({make_u_prime(rho2, 2), make_u_prime(rho2, 1)}));
  EXPECT_EQ(ubar_factor(rho2, 1), canon({make_u_prime(rho2, 1)}));
}

TEST(UbarFactor, LabelMatchesUbar) {
  for (int s = 1; s <= 4; ++s)
    for (int len = 1; len <= 3; ++len)
      for (int k = 1; k <= 8; ++k) {
        const Segment sigma = centered_segment(kRho, len, s, q(0));
        EXPECT_EQ(product_label(ubar_factor(sigma, k)), speh_ubar(sigma, k, q(0)))
            << "s=" << s << " len=" << len << " k=" << k;
      }
}

TEST(ExpandU, Examples) {
  VirtualRep e = expand_u(2, kRho, 2);
  EXPECT_EQ(e, basis({seg(-1, 0), seg(0, 1)}) - basis({seg(-1, 1), seg(0, 0)}));
  for (int l = 1; l <= 4; ++l)
    EXPECT_EQ(expand_u(l, kRho, 1), basis({seg(q(-(l - 1), 2), q(l - 1, 2))}));
  EXPECT_EQ(expand_u(1, kRho, 2),
            basis({seg(q(-1, 2), q(-1, 2)), seg(q(1, 2), q(1, 2))}) - basis({seg(q(-1, 2), q(1, 2))}));
}

TEST(ExpandU, InnerFormExamples) {
  EXPECT_EQ(expand_u_prime(kRho, 1, 2, 2, 2),
            basis({dseg(-1, 1, 2), dseg(1, 1, 2)}, 1, 2) - basis({dseg(-1, 2, 2)}, 1, 2));
  EXPECT_EQ(expand_u_prime(kRho, 3, 1, 2, 2), basis({centered_segment(kRho, 3, 2, q(0))}, 1, 2));
  const VirtualRep e = expand_u_prime(kRho, 2, 2, 2, 2);
  EXPECT_EQ(e.size(), 2u);
  // Same combinatorics as the split case, blocks of size 2.
  VirtualRep split = expand_u(2, kRho, 2);
  for (const auto& [m, c] : split.terms()) {
    std::vector<Segment> segs;
    for (const auto& s : m) segs.push_back(Segment{kRho, s.start * 2, s.len, 2});
    EXPECT_EQ(e.coeff(Multisegment(segs)), c);
  }
}

TEST(ExpandU, LeadingTermIsTheUnit) {
  for (int l = 1; l <= 4; ++l)
    for (int k = 1; k <= 4; ++k) {
      const VirtualRep e = expand_u(l, kRho, k);
      const Multisegment top = speh_u(l, kRho, k, q(0));
      EXPECT_EQ(e.coeff(top), 1);
      for (const auto& [m, c] : e.terms()) {
        EXPECT_EQ(m.support(), top.support());
        EXPECT_TRUE(is_lower(m, top)) << l << " " << k;
      }
    }
}

TEST(ExpandU, TermCountBoundedByAdmissible) {
  for (int l = 1; l <= 4; ++l)
    for (int k = 1; k <= 4; ++k) {
      std::int64_t total = 0;
      const VirtualRep e = expand_u(l, kRho, k);
      for (const auto& [m, c] : e.terms()) total += std::abs(c);
      EXPECT_LE(static_cast<std::uint64_t>(total), admissible_count(l, k));
    }
  EXPECT_EQ(admissible_count(2, 2), 2u);
  EXPECT_EQ(admissible_count(5, 1), 1u);
  EXPECT_EQ(admissible_count(1, 2), 2u);
}

TEST(ExpandUbar, Examples) {
  const Segment rho2 = dseg(0, 1, 2);
  EXPECT_EQ(expand_ubar(kRho, 1, 1, 2, 2), basis({rho2}, 1, 2));
  const VirtualRep one = expand_u_prime(kRho, 1, 2, 2, 2);
  EXPECT_EQ(expand_ubar(kRho, 1, 4, 2, 2), product(one.shifted(q(-1, 2)), one.shifted(q(1, 2))));
  const VirtualRep e2 = expand_ubar(kRho, 1, 2, 2, 2);
  EXPECT_EQ(e2, basis({dseg(q(-1, 2), 1, 2), dseg(q(1, 2), 1, 2)}, 1, 2));
}

TEST(Recognize, Examples) {
  auto r = recognize_unitary(speh_u(2, kRho, 2, q(0)));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, canon({make_u(2, kRho, 2)}));
  r = recognize_unitary(pi_u_alpha(make_u(2, kRho, 1), q(1, 4)));
  ASSERT_TRUE(r);
  SpehUnit pair = make_u(2, kRho, 1);
  pair.alpha = q(1, 4);
  EXPECT_EQ(*r, canon({pair}));
  EXPECT_FALSE(recognize_unitary(ms({seg(q(-1, 4), q(5, 4))})));
  EXPECT_EQ(recognize_unitary(Multisegment{}), UnitaryProduct{});
}

TEST(Recognize, ProductsOfUnitsRoundTrip) {
  LineRegistry reg = one_line();
  for (int l1 = 1; l1 <= 3; ++l1)
    for (int k1 = 1; k1 <= 3; ++k1)
      for (int l2 = 1; l2 <= 2; ++l2) {
        const Multisegment m = speh_u(l1, kRho, k1, q(0)) + speh_u(l2, kRho, 2, q(0));
        auto r = recognize_unitary(m);
        ASSERT_TRUE(r);
        EXPECT_EQ(product_label(*r), m);
        EXPECT_TRUE(is_hermitian(reg, m));
      }
}

TEST(Units, AreHermitian) {
  LineRegistry reg = one_line();
  for (int l = 1; l <= 4; ++l)
    for (int k = 1; k <= 4; ++k) {
      EXPECT_TRUE(is_hermitian(reg, speh_u(l, kRho, k, q(0))));
      EXPECT_TRUE(is_hermitian(reg, speh_u_prime(centered_segment(kRho, l, 2, q(0)), k, q(0))));
      EXPECT_TRUE(is_hermitian(reg, speh_ubar(centered_segment(kRho, l, 3, q(0)), k, q(0))));
      EXPECT_TRUE(is_hermitian(reg, pi_u_alpha(make_u(l, kRho, k), q(1, 5))));
    }
}
