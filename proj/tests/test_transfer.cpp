#include <gtest/gtest.h>

#include <functional>

#include "helpers.hpp"
#include "jlcomb/sweeps.hpp"
#include "jlcomb/transfer.hpp"

using namespace jlcomb;
using namespace jlcomb::testing;

namespace {

LineRegistry lines_p1_p2() {
  LineRegistry reg = one_line();
  reg.register_line("tau", 2);
  return reg;
}

}  // namespace

TEST(CMap, Examples) {
  const LineRegistry reg = one_line();
  EXPECT_EQ(c_map(reg, seg(q(-1, 2), q(1, 2)), 2), dseg(0, 1, 2));
  EXPECT_EQ(c_map(reg, seg(q(-3, 2), q(3, 2)), 2), dseg(-1, 2, 2));
  EXPECT_THROW(c_map(reg, seg(0, 2), 2), DomainError);
  EXPECT_EQ(c_inv(dseg(-1, 2, 2)), seg(q(-3, 2), q(3, 2)));
}

TEST(CMap, RoundTripKeepsSupport) {
  const LineRegistry reg = lines_p1_p2();
  for (int d = 1; d <= 4; ++d)
    for (const auto& line : reg.lines())
      for (int len = 1; len <= 8; ++len)
        for (int a = -2; a <= 2; ++a) {
          const Segment s{line.id, q(a, 2), len, 1};
          if (!is_d_compatible(reg, s, d)) {
            EXPECT_THROW(c_map(reg, s, d), DomainError);
            continue;
          }
          const Segment t = c_map(reg, s, d);
          EXPECT_EQ(t.step, reg.step(line.id, d));
          EXPECT_EQ(c_inv(t), s);
          EXPECT_EQ(f_support(Multisegment({t})), s.points());
        }
}

TEST(Compatibility, Examples) {
  const LineRegistry reg = one_line();
  EXPECT_TRUE(is_d_compatible(reg, ms({seg(q(-1, 2), q(1, 2))}), 2));
  EXPECT_FALSE(is_d_compatible(reg, ms({seg(0, 0)}), 2));
  EXPECT_FALSE(is_d_compatible(reg, ms({seg(q(-1, 2), q(1, 2)), seg(0, 0)}), 2));
}

TEST(LjStd, Examples) {
  const LineRegistry reg = one_line();
  EXPECT_EQ(lj_std(reg, VirtualRep::basis(ms({seg(q(-1, 2), q(1, 2))})), 2),
            VirtualRep::basis(ms({dseg(0, 1, 2)}), 2));
  EXPECT_TRUE(lj_std(reg, VirtualRep::basis(ms({seg(0, 0)})), 2).empty());
  EXPECT_EQ(lj_std(reg, expand_u(1, kRho, 2), 2), VirtualRep::basis(ms({dseg(0, 1, 2)}), 2, -1));
  EXPECT_THROW(lj_std(reg, VirtualRep::basis(ms({dseg(0, 1, 2)}), 2), 2), DomainError);
}

TEST(LjStd, IsLinear) {
  const LineRegistry reg = one_line();
  const VirtualRep a = expand_u(2, kRho, 2), b = expand_u(1, kRho, 4);
  EXPECT_EQ(lj_std(reg, a + b.scaled(3), 2), lj_std(reg, a, 2) + lj_std(reg, b, 2).scaled(3));
}

TEST(QMap, Examples) {
  EXPECT_EQ(q_map(ms({dseg(0, 1, 2)})), ms({seg(q(-1, 2), q(1, 2))}));
  const Multisegment x = ms({dseg(-1, 2, 2)});
  EXPECT_TRUE(ll_less(x, x));
}

TEST(LlLess, AdjacentInnerFormBlocks) {
  // The split images are {[-3/2,3/2]} and {[-3/2,-1/2],[1/2,3/2]}, which are
  // adjacent, so the split order relates them too.
  const Multisegment a = ms({dseg(-1, 2, 2)});
  const Multisegment b = ms({dseg(-1, 1, 2), dseg(1, 1, 2)});
  EXPECT_TRUE(is_lower(a, b));
  EXPECT_TRUE(ll_less(a, b));
  EXPECT_FALSE(ll_less(b, a));
}

TEST(LlLess, AgreesWithInnerFormOrderOnSmallLabels) {
  // Every label with at most four blocks centered in {0,...,3}, step 2, so
  // that both offset classes occur.
  const LineRegistry reg = one_line();
  std::size_t related = 0;
  std::function<void(std::vector<CuspidalPoint>, int)> go = [&](std::vector<CuspidalPoint> sup, int from) {
    if (!sup.empty()) {
      const auto all = enumerate_multisegments(reg, sup, 2, 12);
      for (const auto& a : all)
        for (const auto& b : all) {
          const bool d_order = is_lower(a, b);
          EXPECT_EQ(ll_less(a, b), d_order);
          related += d_order ? 1 : 0;
        }
    }
    if (sup.size() == 4) return;
    for (int c = from; c <= 3; ++c) {
      sup.push_back({kRho, q(c)});
      go(sup, c);
      sup.pop_back();
    }
  };
  go({}, 0);
  EXPECT_GT(related, 0u);
}

TEST(LjU, Examples) {
  const LineRegistry reg = one_line();
  const Segment rho2 = dseg(0, 1, 2);
  auto t = lj_u(reg, kRho, 2, 3, 2);
  EXPECT_EQ(t.sign, 1);
  EXPECT_EQ(t.product, ubar_factor(rho2, 3));
  t = lj_u(reg, kRho, 1, 1, 2);
  EXPECT_EQ(t.sign, 0);
  EXPECT_TRUE(t.product.units.empty());
  t = lj_u(reg, kRho, 1, 2, 2);
  EXPECT_EQ(t.sign, -1);
  EXPECT_EQ(t.product.units, std::vector<SpehUnit>{make_u_prime(rho2, 1)});
}

TEST(LjU, AgreesWithCaseSplit) {
  LineRegistry reg = one_line();
  reg.register_line("tau", 2);
  reg.register_line("chi", 3);
  for (const auto& line : reg.lines())
    for (int d = 1; d <= 6; ++d)
      for (int l = 1; l <= 8; ++l)
        for (int k = 1; k <= 8; ++k)
          EXPECT_EQ(lj_u(reg, line.id, l, k, d), lj_u_cases(reg, line.id, l, k, d))
              << line.name << " d=" << d << " l=" << l << " k=" << k;
}

TEST(LjU, MatchesTermwiseTransfer) {
  const LineRegistry reg = one_line();
  for (int d = 2; d <= 3; ++d)
    for (int l = 1; l <= 3; ++l)
      for (int k = 1; k <= 3; ++k) {
        const VirtualRep lhs = lj_std(reg, expand_u(l, kRho, k), d);
        const auto t = lj_u(reg, kRho, l, k, d);
        if (t.sign == 0) {
          EXPECT_TRUE(lhs.empty()) << d << " " << l << " " << k;
          continue;
        }
        EXPECT_EQ(lhs, expand_product(t.product, d).scaled(t.sign)) << d << " " << l << " " << k;
      }
}

TEST(LjU, SupportIsPreserved) {
  const LineRegistry reg = one_line();
  for (int d = 2; d <= 4; ++d)
    for (int l = 1; l <= 6; ++l)
      for (int k = 1; k <= 6; ++k) {
        const auto t = lj_u(reg, kRho, l, k, d);
        if (t.sign == 0) continue;
        EXPECT_EQ(f_support(product_label(t.product)), speh_u(l, kRho, k, q(0)).support());
      }
}

TEST(LjGeneric, Examples) {
  const LineRegistry reg = one_line();
  const Segment rho2 = dseg(0, 1, 2);
  auto t = lj_generic(reg, {{kRho, 2, q(0)}}, 1, 2);
  EXPECT_EQ(t.sign, 1);
  EXPECT_EQ(t.product.units, std::vector<SpehUnit>{make_u_prime(rho2, 1)});
  t = lj_generic(reg, {{kRho, 1, q(0)}}, 2, 2);
  EXPECT_EQ(t.sign, -1);
  EXPECT_EQ(t.product.units, std::vector<SpehUnit>{make_u_prime(rho2, 1)});
  EXPECT_EQ(lj_generic(reg, {{kRho, 1, q(0)}}, 3, 2).sign, 0);
  EXPECT_THROW(lj_generic(reg, {{kRho, 1, q(1, 2)}}, 2, 2), DomainError);
}

TEST(LjGeneric, SGamma) {
  LineRegistry reg = one_line();
  LineId chi = reg.register_line("chi", 1);
  EXPECT_EQ(s_gamma(reg, {{kRho, 2, q(0)}}, 2), 1);
  EXPECT_EQ(s_gamma(reg, {{kRho, 1, q(0)}}, 2), 2);
  EXPECT_EQ(s_gamma(reg, {{kRho, 1, q(0)}, {chi, 2, q(1, 5)}}, 3), 3);
  EXPECT_EQ(s_gamma(reg, {{kRho, 2, q(0)}, {chi, 3, q(0)}}, 6), 6);
}

TEST(InImage, Examples) {
  const LineRegistry reg = one_line();
  auto r = in_image_lju(reg, UnitaryProduct{}, 2);
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->units.empty());
  for (int k = 1; k <= 3; ++k) {
    const UnitaryProduct target = ubar_factor(dseg(0, 1, 2), 2 * k);
    r = in_image_lju(reg, target, 2);
    ASSERT_TRUE(r) << k;
    auto img = lju_label(reg, *r, 2);
    ASSERT_TRUE(img);
    EXPECT_EQ(*img, product_label(target));
  }
}

TEST(InImage, SingleUnprimedUnitHasNoPreimage) {
  const LineRegistry reg = one_line();
  // u'(rho', 1) twisted by 1/4 is not hermitian.
  UnitaryProduct t{{make_u_prime(dseg(0, 1, 2), 1, q(1, 4))}};
  EXPECT_FALSE(in_image_lju(reg, t, 2));
  EXPECT_THROW(in_image_lju(reg, UnitaryProduct{{make_u(1, kRho, 1)}}, 2), DomainError);
}

TEST(InImage, ParallelMatchesSerial) {
  const LineRegistry reg = one_line();
  for (int d = 2; d <= 3; ++d)
    for (int l = 1; l <= 2; ++l)
      for (int k = 1; k <= 6; ++k) {
        UnitaryProduct target = ubar_factor(centered_segment(kRho, l, d, q(0)), k);
        EXPECT_EQ(in_image_lju(reg, target, d), in_image_lju_reference(reg, target, d));
      }
}
