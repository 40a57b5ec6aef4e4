#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "jlcomb/multiseg.hpp"
#include "jlcomb/sweeps.hpp"

using namespace jlcomb;
using namespace jlcomb::testing;

TEST(SegmentRelation, Examples) {
  EXPECT_EQ(segment_relation(seg(0, 0), seg(1, 1)), SegmentRelation::linked_adjacent);
  EXPECT_EQ(segment_relation(seg(0, 2), seg(1, 3)), SegmentRelation::linked_overlapping);
  EXPECT_EQ(segment_relation(seg(0, 1), seg(q(1, 2), q(3, 2))), SegmentRelation::unlinked);
  EXPECT_EQ(segment_relation(seg(0, 1), seg(0, 1)), SegmentRelation::equal);
  EXPECT_EQ(segment_relation(seg(0, 3), seg(1, 2)), SegmentRelation::unlinked);
  EXPECT_EQ(segment_relation(seg(0, 0), seg(2, 2)), SegmentRelation::unlinked);
}

TEST(SegmentRelation, InnerFormSteps) {
  // Step 2: blocks at 0 and 2 are adjacent, at 0 and 1 are on different lines.
  EXPECT_EQ(segment_relation(dseg(0, 1, 2), dseg(2, 1, 2)), SegmentRelation::linked_adjacent);
  EXPECT_EQ(segment_relation(dseg(0, 1, 2), dseg(1, 1, 2)), SegmentRelation::unlinked);
  EXPECT_EQ(segment_relation(dseg(0, 1, 2), seg(1, 1)), SegmentRelation::unlinked);
}

TEST(SegmentRelation, SymmetricAndMatchesSetDefinition) {
  std::vector<Segment> all;
  for (int a = 0; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) all.push_back(seg(a, b));
  for (const auto& x : all)
    for (const auto& y : all) {
      EXPECT_EQ(segment_relation(x, y), segment_relation(y, x));
      std::set<int> sx, sy, u;
      for (int i = 0; i < x.len; ++i) sx.insert(static_cast<int>(x.start.numerator()) + i);
      for (int i = 0; i < y.len; ++i) sy.insert(static_cast<int>(y.start.numerator()) + i);
      u = sx;
      u.insert(sy.begin(), sy.end());
      const bool is_interval = *u.rbegin() - *u.begin() + 1 == static_cast<int>(u.size());
      const bool link = is_interval && u != sx && u != sy;
      EXPECT_EQ(linked(x, y), link);
      if (link) {
        std::vector<int> inter;
        std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(inter));
        EXPECT_EQ(segment_relation(x, y) == SegmentRelation::linked_adjacent, inter.empty());
      }
    }
}

TEST(ElementarySuccessors, Examples) {
  auto r = elementary_successors(ms({seg(0, 2), seg(1, 3)}));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], ms({seg(0, 3), seg(1, 2)}));
  r = elementary_successors(ms({seg(0, 0), seg(1, 1)}));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], ms({seg(0, 1)}));
  EXPECT_TRUE(elementary_successors(ms({seg(0, 1), seg(0, 1)})).empty());
}

TEST(IsLower, Examples) {
  const Multisegment m = ms({seg(0, 1), seg(2, 3)});
  EXPECT_TRUE(is_lower(m, m));
  EXPECT_TRUE(is_lower(ms({seg(0, 1)}), ms({seg(0, 0), seg(1, 1)})));
  EXPECT_FALSE(is_lower(ms({seg(0, 0), seg(1, 1)}), ms({seg(0, 1)})));
  EXPECT_TRUE(is_lower(ms({seg(0, 2), seg(1, 1)}), ms({seg(0, 1), seg(1, 2)})));
  EXPECT_FALSE(is_lower(ms({seg(0, 1)}), ms({seg(0, 0), seg(2, 2)})));
}

TEST(IsLower, AgreesWithUnprunedSearch) {
  for (const auto& group : window_corpus(kRho, 4, 5))
    for (const auto& a : group)
      for (const auto& b : group) EXPECT_EQ(is_lower(a, b), is_lower_reference(a, b));
}

TEST(IsLower, MixedLinesAndOffsets) {
  LineId tau{1};
  const Multisegment upper = ms({seg(0, 0), seg(1, 1), seg(q(1, 2), q(1, 2)), seg(q(3, 2), q(3, 2)),
                                 seg(0, 0, tau), seg(1, 1, tau)});
  const Multisegment lower = ms({seg(0, 1), seg(q(1, 2), q(3, 2)), seg(0, 0, tau), seg(1, 1, tau)});
  EXPECT_TRUE(is_lower(lower, upper));
  EXPECT_TRUE(is_lower_reference(lower, upper));
  EXPECT_FALSE(is_lower(upper, lower));
}

TEST(Stats, Examples) {
  auto st = stats(ms({seg(0, 1), seg(1, 3)}));
  EXPECT_EQ(st.ell, 3);
  EXPECT_EQ(st.endings, (std::vector<CuspidalPoint>{{kRho, q(1)}, {kRho, q(3)}}));
  EXPECT_EQ(st.support.size(), 5u);
  st = stats(Multisegment{});
  EXPECT_EQ(st.ell, 0);
  EXPECT_TRUE(st.endings.empty() && st.support.empty());
  st = stats(ms({seg(-1, 0), seg(0, 1)}));
  EXPECT_EQ(st.support, (std::vector<CuspidalPoint>{{kRho, q(-1)}, {kRho, q(0)}, {kRho, q(0)}, {kRho, q(1)}}));
}

TEST(RigidDecomposition, Examples) {
  EXPECT_EQ(rigid_decomposition(ms({seg(0, 1), seg(q(1, 2), q(3, 2))})).size(), 2u);
  EXPECT_EQ(rigid_decomposition(ms({seg(0, 1), seg(0, 1, LineId{1})})).size(), 2u);
  EXPECT_EQ(rigid_decomposition(ms({seg(0, 1), seg(1, 2)})).size(), 1u);
}

TEST(RigidDecomposition, PartsAreMutuallyUnlinked) {
  const Multisegment m = ms({seg(0, 1), seg(q(1, 2), q(3, 2)), seg(1, 2), seg(q(-1, 2), q(1, 2)),
                             dseg(0, 1, 2), dseg(1, 1, 2)});
  auto parts = rigid_decomposition(m);
  Multisegment back;
  for (const auto& p : parts) back = back + p;
  EXPECT_EQ(back, m);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (const auto& x : parts[i])
        for (const auto& y : parts[j]) EXPECT_FALSE(linked(x, y));
}

TEST(Hermitian, Examples) {
  LineRegistry reg;
  LineId rho = reg.register_line("rho", 1);
  LineId a = reg.register_line("a", 1);
  LineId b = reg.register_line("b", 1, a);
  EXPECT_TRUE(is_hermitian(reg, ms({seg(-1, 0, rho), seg(0, 1, rho)})));
  EXPECT_EQ(hermitian_dual(reg, ms({seg(0, 1, rho)})), ms({seg(-1, 0, rho)}));
  EXPECT_FALSE(is_hermitian(reg, ms({seg(0, 1, rho)})));
  EXPECT_EQ(hermitian_dual(reg, ms({seg(0, 0, a)})), ms({seg(0, 0, b)}));
}

TEST(Hermitian, InvolutionCommutingWithSuccessors) {
  LineRegistry reg = one_line();
  for (const auto& group : window_corpus(kRho, 4, 5))
    for (const auto& m : group) {
      const Multisegment h = hermitian_dual(reg, m);
      EXPECT_EQ(hermitian_dual(reg, h), m);
      std::vector<Multisegment> left;
      for (const auto& x : elementary_successors(m)) left.push_back(hermitian_dual(reg, x));
      std::sort(left.begin(), left.end());
      EXPECT_EQ(left, elementary_successors(h));
    }
}

TEST(Enumerate, Examples) {
  auto r = enumerate_multisegments({{kRho, q(0)}, {kRho, q(1)}, {kRho, q(1)}});
  EXPECT_EQ(r.size(), 2u);
  EXPECT_NE(std::find(r.begin(), r.end(), ms({seg(0, 1), seg(1, 1)})), r.end());
  EXPECT_NE(std::find(r.begin(), r.end(), ms({seg(0, 0), seg(1, 1), seg(1, 1)})), r.end());
  EXPECT_EQ(enumerate_multisegments({{kRho, q(0)}}), std::vector<Multisegment>{ms({seg(0, 0)})});
  EXPECT_EQ(enumerate_multisegments({{kRho, q(0)}, {kRho, q(2)}}),
            std::vector<Multisegment>{ms({seg(0, 0), seg(2, 2)})});
}

TEST(Enumerate, LimitAndDistinctness) {
  std::vector<CuspidalPoint> big(11, CuspidalPoint{kRho, q(0)});
  EXPECT_THROW(enumerate_multisegments(big), DomainError);
  // Brute force: number of multisegments with support {0,1,2,3} once each is
  // the number of compositions of 4.
  auto r = enumerate_multisegments({{kRho, q(0)}, {kRho, q(1)}, {kRho, q(2)}, {kRho, q(3)}});
  EXPECT_EQ(r.size(), 8u);
  std::set<Multisegment> uniq(r.begin(), r.end());
  EXPECT_EQ(uniq.size(), r.size());
  for (const auto& m : r) EXPECT_EQ(m.support_size(), 4u);
}

TEST(Enumerate, InnerFormSteps) {
  LineRegistry reg = one_line();
  // d = 2: blocks at 0 and 2 can join, 0 and 1 never.
  auto r = enumerate_multisegments(reg, {{kRho, q(0)}, {kRho, q(1)}, {kRho, q(2)}}, 2);
  EXPECT_EQ(r.size(), 2u);
  for (const auto& m : r)
    for (const auto& s : m) EXPECT_EQ(s.step, 2);
}

TEST(Multisegment, ContainsAndMinus) {
  const Multisegment m = ms({seg(0, 1), seg(0, 1), seg(2, 2)});
  EXPECT_TRUE(m.contains(ms({seg(0, 1), seg(2, 2)})));
  EXPECT_FALSE(m.contains(ms({seg(2, 2), seg(2, 2)})));
  EXPECT_EQ(m.minus(ms({seg(0, 1)})), ms({seg(0, 1), seg(2, 2)}));
  EXPECT_THROW(m.minus(ms({seg(5, 5)})), DomainError);
  EXPECT_THROW(Multisegment({Segment{kRho, q(0), 0, 1}}), DomainError);
}
