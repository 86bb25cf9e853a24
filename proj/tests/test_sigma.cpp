#include <gtest/gtest.h>

#include <random>

#include "bohr/bohr.hpp"
#include "support.hpp"

using namespace bohr;

namespace {

void expect_valid(const SigmaOpen& s) {
  EXPECT_TRUE(s.in_range());
  EXPECT_TRUE(s.monotone());
}

std::vector<std::vector<std::uint64_t>> sorted_masks(const std::vector<SigmaOpen>& frame) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& s : frame) out.push_back(s.masks());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(SigmaOpen, RejectsInvalidAssignments) {
  const auto p = fixtures::chain3();
  EXPECT_THROW(SigmaOpen(p, {0, 0}), DomainError);
  EXPECT_THROW(SigmaOpen(p, {0, 4, 0}), DomainError);
  // S(C·1) = 1 but S(D_2) = 0 breaks monotonicity.
  EXPECT_THROW(SigmaOpen(p, {1, 0, 7}), DomainError);
  EXPECT_THROW(SigmaOpen(nullptr, {}), DomainError);
}

TEST(TopBot, Examples) {
  for (const auto& [name, p] : test::fixture_posets()) {
    const SigmaOpen t = top(p);
    const SigmaOpen b = bot(p);
    for (std::size_t c = 0; c < p->size(); ++c) {
      EXPECT_EQ(t.value(c), CMatrix::identity(p->dim())) << name;
      EXPECT_TRUE(b.value(c).is_zero()) << name;
    }
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
      const SigmaOpen s = test::random_sigma(rng, p);
      EXPECT_TRUE(leq(b, s) && leq(s, t)) << name;
    }
  }
}

TEST(MeetJoin, UnitAndIdempotence) {
  std::mt19937_64 rng(32);
  for (const auto& [name, p] : test::fixture_posets())
    for (int i = 0; i < 30; ++i) {
      const SigmaOpen s = test::random_sigma(rng, p);
      EXPECT_EQ(meet(s, top(p)), s) << name;
      EXPECT_EQ(join(s, bot(p)), s) << name;
      EXPECT_EQ(meet(s, s), s) << name;
      EXPECT_EQ(join(s, s), s) << name;
    }
}

TEST(MeetJoin, ChainExample) {
  const auto p = fixtures::chain3();
  const SigmaOpen s = fixtures::m3_example(p);
  const SigmaOpen t = chi_up(1, p);
  const SigmaOpen m = meet(s, t);
  EXPECT_TRUE(m.value(0).is_zero());
  EXPECT_EQ(m.value(1), CMatrix::diag({1, 1, 0}));
  EXPECT_EQ(m.value(2), CMatrix::identity(3));
}

TEST(MeetJoin, PosetMismatch) {
  EXPECT_THROW(meet(top(fixtures::chain3()), top(fixtures::chain3())), DomainError);
  EXPECT_THROW(join(top(fixtures::chain2()), bot(fixtures::m2_star())), DomainError);
}

TEST(Heyting, Examples) {
  std::mt19937_64 rng(33);
  for (const auto& [name, p] : test::fixture_posets()) {
    EXPECT_EQ(heyting_neg(top(p)), bot(p)) << name;
    EXPECT_EQ(heyting_neg(bot(p)), top(p)) << name;
    EXPECT_EQ(double_neg(top(p)), top(p)) << name;
    for (int i = 0; i < 20; ++i) {
      const SigmaOpen s = test::random_sigma(rng, p);
      const SigmaOpen t = test::random_sigma(rng, p);
      EXPECT_EQ(heyting_implies(bot(p), t), top(p)) << name;
      EXPECT_EQ(heyting_implies(s, s), top(p)) << name;
      EXPECT_EQ(heyting_neg(s), heyting_implies(s, bot(p))) << name;
    }
  }
}

TEST(Heyting, M3ExcludedMiddleFails) {
  const auto p = fixtures::m3_fixture();
  const SigmaOpen s = fixtures::m3_example(p);
  EXPECT_TRUE(s.value(0).is_zero());
  EXPECT_TRUE(heyting_neg(s).value(0).is_zero());
  const SigmaOpen nn = double_neg(s);
  EXPECT_EQ(nn.value(0), CMatrix::identity(3));
  EXPECT_NE(nn, s);
  EXPECT_NE(join(s, heyting_neg(s)), top(p));
  // Each D_2-type gets its conjugated diag(1,1,0).
  for (std::size_t c = 0; c < p->size(); ++c)
    if (p->context(c).size() == 2) EXPECT_EQ(projection_rank(s.value(c)), 2U);
}

TEST(Heyting, SingleBottomIsBoolean) {
  const auto p = fixtures::trivial(3);
  for (const auto& s : enumerate_frame(p)) {
    EXPECT_EQ(double_neg(s), s);
    EXPECT_EQ(join(s, heyting_neg(s)), top(p));
  }
}

TEST(Heyting, RandomOutputsAreValidAndNotNotInflates) {
  std::mt19937_64 rng(34);
  for (const auto& [name, p] : test::fixture_posets())
    for (int i = 0; i < 200; ++i) {
      const SigmaOpen s = test::random_sigma(rng, p);
      const SigmaOpen t = test::random_sigma(rng, p);
      for (const auto& r : {meet(s, t), join(s, t), heyting_implies(s, t), heyting_neg(s), double_neg(s)})
        expect_valid(r);
      EXPECT_TRUE(leq(s, double_neg(s))) << name;
      EXPECT_EQ(double_neg(s), heyting_neg(heyting_neg(s))) << name;
    }
}

TEST(EnumerateFrame, Counts) {
  EXPECT_EQ(enumerate_frame(fixtures::trivial(2)).size(), 2U);
  EXPECT_EQ(enumerate_frame(fixtures::chain2()).size(), 5U);
  EXPECT_EQ(enumerate_frame(fixtures::m2_star()).size(), 65U);
  EXPECT_THROW(enumerate_frame(fixtures::m2_star(), 64), DomainError);
}

TEST(EnumerateFrame, MatchesIndependentOracle) {
  for (const auto& [name, p] : test::fixture_posets()) {
    const auto frame = enumerate_frame(p);
    auto oracle = test::oracle_frame(*p);
    std::sort(oracle.begin(), oracle.end());
    EXPECT_EQ(sorted_masks(frame), oracle) << name;
    EXPECT_EQ(enumerate_frame(p), frame) << "deterministic order on " << name;
  }
}

TEST(Properties, ExhaustiveAdjunctionAndLargestImplication) {
  for (const auto& [name, p] : test::fixture_posets()) {
    if (name == "m3") continue;
    const auto frame = enumerate_frame(p);
    for (const auto& s : frame)
      for (const auto& t : frame) {
        const SigmaOpen imp = heyting_implies(s, t);
        SigmaOpen largest = bot(p);
        for (const auto& r : frame) {
          const bool adj = leq(meet(r, s), t);
          EXPECT_EQ(leq(r, imp), adj) << name;
          if (adj) largest = join(largest, r);
        }
        EXPECT_EQ(imp, largest) << name;
      }
  }
}

TEST(Properties, NotNotEqualsNegNegOnWholeFrames) {
  for (const auto& [name, p] : test::fixture_posets())
    for (const auto& s : enumerate_frame(p)) EXPECT_EQ(double_neg(s), heyting_neg(heyting_neg(s))) << name;
}

TEST(Properties, SampledAdjunctionOnM3) {
  const auto p = fixtures::m3_fixture();
  const auto frame = enumerate_frame(p);
  std::mt19937_64 rng(35);
  std::uniform_int_distribution<std::size_t> pick(0, frame.size() - 1);
  for (int i = 0; i < 5000; ++i) {
    const auto& r = frame[pick(rng)];
    const auto& s = frame[pick(rng)];
    const auto& t = frame[pick(rng)];
    EXPECT_EQ(leq(r, heyting_implies(s, t)), leq(meet(r, s), t));
  }
}

TEST(ChiUp, Examples) {
  for (const auto& [name, p] : test::fixture_posets()) {
    EXPECT_EQ(chi_up(0, p), top(p)) << name;
    for (std::size_t d1 = 0; d1 < p->size(); ++d1) {
      const SigmaOpen x = chi_up(d1, p);
      expect_valid(x);
      for (std::size_t e = 0; e < p->size(); ++e)
        EXPECT_EQ(x.mask(e), p->leq(d1, e) ? p->context(e).full_mask() : 0U) << name;
      for (std::size_t d2 = 0; d2 < p->size(); ++d2) {
        const SigmaOpen y = chi_up(d2, p);
        EXPECT_EQ(leq(x, y), p->leq(d2, d1)) << name;
        // Meet is χ of ↑d1 ∩ ↑d2.
        const SigmaOpen m = meet(x, y);
        for (std::size_t e = 0; e < p->size(); ++e)
          EXPECT_EQ(m.mask(e) != 0, p->leq(d1, e) && p->leq(d2, e)) << name;
      }
    }
  }
  const auto star = fixtures::m2_star();
  EXPECT_EQ(meet(chi_up(1, star), chi_up(2, star)), bot(star));
  EXPECT_EQ(chi_up(sphere_context(0, 1, 0), star), chi_up(*star->index_of(sphere_context(0, 1, 0)), star));
  EXPECT_THROW(chi_up(sphere_context(Rational(3, 5), Rational(4, 5), 0), star), DomainError);
  EXPECT_THROW(chi_up(9, star), DomainError);
}

TEST(SP, Examples) {
  const auto star = fixtures::m2_star();
  EXPECT_EQ(s_p(CMatrix::identity(2), star), top(star));
  EXPECT_EQ(s_p(CMatrix::zero(2), star), bot(star));
  EXPECT_THROW(s_p(CMatrix::diag({2, 0}), star), DomainError);
}

TEST(SP, DoesNotPreserveJoins) {
  const auto star = fixtures::m2_star();
  const CMatrix p = p_sphere(1, 0, 0);
  const CMatrix q = p_sphere(0, 1, 0);
  const CMatrix pq = CMatrix::identity(2);  // p ∨ q for distinct rank-1 projections
  const SigmaOpen lhs = s_p(pq, star);
  const SigmaOpen rhs = join(s_p(p, star), s_p(q, star));
  EXPECT_EQ(lhs, top(star));
  EXPECT_NE(lhs, rhs);
  std::size_t neither = 0;
  for (std::size_t c = 0; c < star->size(); ++c) {
    const auto& atoms = star->context(c).atoms();
    if (solve_linear_membership(p, atoms) || solve_linear_membership(q, atoms)) continue;
    ++neither;
    EXPECT_EQ(rhs.mask(c), 0U);
    EXPECT_NE(lhs.mask(c), rhs.mask(c));
  }
  EXPECT_EQ(neither, 2U) << "C·1 and the z-axis context";
}

TEST(SP, ValidOnEveryBlockButNotALatticeMap) {
  bool witness = false;
  for (const auto& [name, p] : test::fixture_posets())
    for (std::size_t c = 0; c < p->size(); ++c) {
      const auto& ctx = p->context(c);
      for (std::uint64_t a = 0; a <= ctx.full_mask(); ++a) {
        const SigmaOpen sa = s_p(ctx.projection(a), p);
        expect_valid(sa);
        EXPECT_EQ(sa.mask(c), a) << name;
        for (std::uint64_t b = 0; b <= ctx.full_mask(); ++b) {
          const SigmaOpen sb = s_p(ctx.projection(b), p);
          if (s_p(ctx.projection(a & b), p) != meet(sa, sb) || s_p(ctx.projection(a | b), p) != join(sa, sb))
            witness = true;
        }
      }
    }
  EXPECT_TRUE(witness);
}

TEST(SP, NotOrderPreserving) {
  // diag(1,0,0) ≤ diag(1,1,0), yet a context containing the first but not the
  // second makes S_p exceed S_q there.
  EXPECT_TRUE(proj_leq(CMatrix::diag({1, 0, 0}), CMatrix::diag({1, 1, 0})));
  const std::vector<Context> seeds{fixtures::diagonal3(), fixtures::conjugate(fixtures::diagonal3(),
                                                                               fixtures::rotation3(1, 2, Rational(3, 5), Rational(4, 5)))};
  const auto q = std::make_shared<const ContextPoset>(build_poset(seeds, 3));
  EXPECT_FALSE(leq(s_p(CMatrix::diag({1, 0, 0}), q), s_p(CMatrix::diag({1, 1, 0}), q)));
}

TEST(Properties, FiniteDistributivity) {
  std::mt19937_64 rng(36);
  for (const auto& [name, p] : test::fixture_posets()) {
    const auto frame = enumerate_frame(p);
    std::uniform_int_distribution<std::size_t> pick(0, frame.size() - 1);
    for (int i = 0; i < 500; ++i) {
      const auto& s = frame[pick(rng)];
      SigmaOpen lhs = bot(p);
      SigmaOpen rhs = bot(p);
      const int n = i % 4;
      for (int j = 0; j < n; ++j) {
        const auto& t = frame[pick(rng)];
        lhs = join(lhs, t);
        rhs = join(rhs, meet(s, t));
      }
      EXPECT_EQ(meet(s, lhs), rhs) << name;
    }
  }
}
