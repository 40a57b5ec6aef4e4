#include <gtest/gtest.h>

#include "helpers.hpp"
#include "jlcomb/duality.hpp"
#include "jlcomb/sweeps.hpp"

using namespace jlcomb;
using namespace jlcomb::testing;

TEST(MwDual, Examples) {
  EXPECT_EQ(mw_dual(ms({seg(0, 2)})), ms({seg(0, 0), seg(1, 1), seg(2, 2)}));
  EXPECT_EQ(mw_dual(ms({seg(-1, 0), seg(0, 1)})), ms({seg(-1, 0), seg(0, 1)}));
  EXPECT_EQ(mw_dual(ms({seg(0, 1), seg(1, 1)})), ms({seg(0, 0), seg(1, 1), seg(1, 1)}));
  EXPECT_THROW(mw_dual(ms({seg(0, 0), seg(q(1, 2), q(1, 2))})), DomainError);
}

TEST(MwDual, UnlinkedProductsExplode) {
  // Pairwise unlinked segments: the dual is the product of the duals.
  const Multisegment m = ms({seg(0, 3), seg(1, 2), seg(1, 1), seg(5, 6)});
  Multisegment expect;
  for (const auto& s : m) expect = expect + mw_dual(ms({s}));
  EXPECT_EQ(mw_dual(m), expect);
}

TEST(DualIrr, Examples) {
  EXPECT_EQ(dual_irr(Multisegment{}), Multisegment{});
  for (int l = 1; l <= 4; ++l)
    for (int k = 1; k <= 4; ++k)
      EXPECT_EQ(dual_irr(speh_u(l, kRho, k, q(0))), speh_u(k, kRho, l, q(0))) << l << " " << k;
  for (int s = 2; s <= 3; ++s)
    for (int l = 1; l <= 3; ++l)
      for (int k = 1; k <= 3; ++k) {
        const Segment sigma = centered_segment(kRho, l, s, q(0));
        const Segment tau = centered_segment(kRho, k, s, q(0));
        EXPECT_EQ(dual_irr(speh_ubar(sigma, k * s, q(0))), speh_ubar(tau, l * s, q(0)))
            << s << " " << l << " " << k;
      }
}

TEST(DualIrr, InvolutionOnCorpus) {
  for (const auto& group : window_corpus(kRho, 4, 6))
    for (const auto& m : group) {
      EXPECT_TRUE(duality_roundtrip(m));
      EXPECT_EQ(dual_irr(dual_irr(m)), m);
    }
  const Multisegment mixed = ms({seg(0, 1), seg(q(1, 2), q(3, 2)), seg(0, 0, LineId{1}), dseg(0, 2, 2)});
  EXPECT_EQ(dual_irr(dual_irr(mixed)), mixed);
  EXPECT_EQ(dual_irr(mixed).support(), mixed.support());
}

TEST(RawDual, Examples) {
  EXPECT_EQ(raw_dual_std(VirtualRep::basis(ms({seg(0, 1)}))),
            VirtualRep::basis(ms({seg(0, 0), seg(1, 1)})) - VirtualRep::basis(ms({seg(0, 1)})));
  EXPECT_EQ(raw_dual_std(VirtualRep::basis(ms({seg(0, 0)}))), VirtualRep::basis(ms({seg(0, 0)})));
  const VirtualRep a = raw_dual_std(VirtualRep::basis(ms({seg(0, 1)})));
  const VirtualRep b = raw_dual_std(VirtualRep::basis(ms({seg(2, 3)})));
  const VirtualRep ab = raw_dual_std(VirtualRep::basis(ms({seg(0, 1), seg(2, 3)})));
  EXPECT_EQ(ab.size(), 4u);
  EXPECT_EQ(ab, product(a, b));
}

TEST(RawDual, IsInvolution) {
  for (const auto& group : window_corpus(kRho, 3, 6))
    for (const auto& m : group) {
      const VirtualRep x = VirtualRep::basis(m);
      EXPECT_EQ(raw_dual_std(raw_dual_std(x)), x);
    }
}
