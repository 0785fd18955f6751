#include <gtest/gtest.h>

#include "endosign/endoscopy/endoscopy.hpp"
#include "endosign/endoscopy/gauss_sum.hpp"
#include "endosign/endoscopy/signs.hpp"
#include "endosign/roots/catalog.hpp"
#include "oracles.hpp"

using namespace endosign;

namespace {

BasedAutomorphism identity_theta(const RootDatum& g) { return enumerate_based_automorphisms(g).front(); }

RatVector rat(std::initializer_list<std::pair<long, long>> xs) {
  RatVector v;
  for (auto [n, d] : xs) v.emplace_back(n, d);
  for (auto& x : v) x.canonicalize();
  return v;
}

}  // namespace

TEST(TorsionDualElement, ReducesAndComputesOrder) {
  const TorsionDualElement q(rat({{3, 2}, {-1, 3}, {2, 1}}));
  EXPECT_EQ(q.q(), rat({{1, 2}, {2, 3}, {0, 1}}));
  EXPECT_EQ(q.order(), 6);
  EXPECT_TRUE(TorsionDualElement(rat({{4, 1}})).is_trivial());
}

TEST(Subsystem, SL2HalfGivesTorus) {
  const RootDatum g = build_named("A1:sc");
  const auto d = endoscopic_subsystem(g, TorsionDualElement(rat({{1, 2}})));
  EXPECT_TRUE(d.h_roots.empty());
  EXPECT_EQ(d.h_datum.num_roots(), 0u);
}

TEST(Subsystem, TrivialQKeepsEverything) {
  for (const std::string name : {"A2", "B3", "G2"}) {
    const RootDatum g = build_named(name);
    const auto d = endoscopic_subsystem(g, TorsionDualElement(RatVector(g.rank(), Rational(0))));
    EXPECT_EQ(d.h_roots.size(), g.num_roots());
    EXPECT_EQ(d.h_datum.cartan_matrix(), g.cartan_matrix());
  }
}

TEST(Subsystem, ProductKeepsSecondFactor) {
  const RootDatum g = build_named("A1xA1");
  const auto d = endoscopic_subsystem(g, TorsionDualElement(rat({{1, 2}, {0, 1}})));
  ASSERT_EQ(d.h_roots.size(), 2u);
  for (std::size_t i : d.h_roots) {
    EXPECT_EQ(g.root(i)[0], 0);
    EXPECT_NE(g.root(i)[1], 0);
  }
}

TEST(Subsystem, LongRootsOfG2) {
  // q = (1/3)(fundamental coweight direction) keeps the long roots: an A2.
  const RootDatum g = build_named("G2");
  for (long a = 0; a < 6; ++a) {
    for (long b = 0; b < 6; ++b) {
      const auto d = endoscopic_subsystem(g, TorsionDualElement(rat({{a, 6}, {b, 6}})));
      EXPECT_TRUE(is_reflection_closed(g, d.h_roots));
      EXPECT_EQ(d.h_datum.num_roots(), d.h_roots.size());
    }
  }
}

TEST(GammaFixed, Examples) {
  const RootDatum a1 = build_named("A1:sc");
  const auto d = endoscopic_subsystem(a1, TorsionDualElement(rat({{1, 2}})), weyl_from_word(a1, {1}),
                                      identity_theta(a1));
  EXPECT_TRUE(validate_gamma_fixed(d));
  const auto q0 = endoscopic_subsystem(a1, TorsionDualElement(rat({{0, 1}})), weyl_from_word(a1, {1}),
                                       identity_theta(a1));
  EXPECT_TRUE(validate_gamma_fixed(q0));
  const RootDatum g = build_named("A1xA1");
  const auto swap = enumerate_based_automorphisms(g).back();
  const auto moved = endoscopic_subsystem(g, TorsionDualElement(rat({{1, 2}, {0, 1}})), weyl_from_word(g, {}), swap);
  const auto report = gamma_fixedness(moved);
  EXPECT_FALSE(report.fixes_q);
  EXPECT_FALSE(report.stabilizes_h_roots);
  EXPECT_FALSE(validate_gamma_fixed(moved));
}

TEST(Elliptic, SL2Examples) {
  const RootDatum a1 = build_named("A1:sc");
  const TorsionDualElement half(rat({{1, 2}}));
  EXPECT_TRUE(is_elliptic(endoscopic_subsystem(a1, half, weyl_from_word(a1, {1}), identity_theta(a1))));
  const auto split = endoscopic_subsystem(a1, half, weyl_from_word(a1, {}), identity_theta(a1));
  EXPECT_FALSE(is_elliptic(split));
  EXPECT_EQ(ellipticity(split).h_fixed_central_dim, 1u);
  EXPECT_EQ(ellipticity(split).g_fixed_central_dim, 0u);
  for (const std::string name : {"A2", "B2", "A2:sc*T1"}) {
    const RootDatum g = build_named(name);
    EXPECT_TRUE(is_elliptic(endoscopic_subsystem(g, TorsionDualElement(RatVector(g.rank(), Rational(0))))));
  }
}

TEST(Elliptic, StableUnderTwistWhenFixed) {
  // Whenever s is Gamma-fixed, h_roots is reflection-closed and stable.
  for (const std::string name : {"A2", "B2", "G2", "A1xA1"}) {
    const RootDatum g = build_named(name);
    for (const auto& theta : enumerate_based_automorphisms(g)) {
      for (const auto& w : enumerate_weyl_group(g)) {
        for (long a = 0; a < 4; ++a) {
          for (long b = 0; b < 4; ++b) {
            const auto d = endoscopic_subsystem(g, TorsionDualElement(rat({{a, 4}, {b, 4}})), w, theta);
            EXPECT_TRUE(is_reflection_closed(g, d.h_roots));
            if (gamma_fixedness(d).fixes_q) EXPECT_TRUE(gamma_fixedness(d).stabilizes_h_roots) << name;
          }
        }
      }
    }
  }
}

TEST(Signs, SplitRank) {
  EXPECT_EQ(split_rank(IntMatrix::identity(2)), 2u);
  EXPECT_EQ(split_rank(IntMatrix::from_rows({{-1}})), 0u);
  EXPECT_EQ(split_rank(IntMatrix::from_rows({{0, 1}, {1, 0}})), 1u);
}

TEST(Signs, RelativeRank) {
  const RootDatum a1 = build_named("A1:sc");
  EXPECT_EQ(eps_relative_rank(a1, identity_theta(a1), weyl_from_word(a1, {})), 1);
  EXPECT_EQ(eps_relative_rank(a1, identity_theta(a1), weyl_from_word(a1, {1})), -1);
  const RootDatum a2 = build_named("A2");
  EXPECT_EQ(split_rank(weyl_from_word(a2, {1, 2}).matrix), 0u);
  EXPECT_EQ(eps_relative_rank(a2, identity_theta(a2), weyl_from_word(a2, {1, 2})), 1);
}

TEST(Signs, EpsL) {
  const RootDatum g = build_named("A1xA1");
  EXPECT_EQ(eps_L_unramified(identity_theta(g), weyl_from_word(g, {})), 1);
  EXPECT_EQ(eps_L_unramified(identity_theta(g), weyl_from_word(g, {2})), -1);
  const WeylElement minus_one = weyl_from_word(g, {1, 2});
  ASSERT_EQ(minus_one.matrix, -IntMatrix::identity(2));
  EXPECT_EQ(eps_L_unramified(identity_theta(g), minus_one), 1);
}

TEST(Orbits, Examples) {
  const RootDatum a1 = build_named("A1:sc");
  const auto sym = classify_orbits(a1, weyl_from_word(a1, {1}).matrix);
  ASSERT_EQ(sym.orbits.size(), 1u);
  EXPECT_EQ(sym.orbits[0].kind, OrbitKind::Symmetric);
  EXPECT_EQ(sym.n_symmetric, 1u);
  const auto triv = classify_orbits(a1, IntMatrix::identity(1));
  EXPECT_EQ(triv.orbits.size(), 2u);
  EXPECT_EQ(triv.n_symmetric, 0u);
  for (const auto& o : triv.orbits) EXPECT_EQ(o.kind, OrbitKind::Asymmetric);
  const RootDatum g = build_named("A1xA1");
  const auto swap = classify_orbits(g, enumerate_based_automorphisms(g).back().matrix);
  EXPECT_EQ(swap.orbits.size(), 2u);
  EXPECT_EQ(swap.n_symmetric, 0u);
  EXPECT_TRUE(swap.dichotomy_holds);
  EXPECT_THROW(classify_orbits(a1, IntMatrix::from_rows({{3}})), InputError);
}

TEST(Orbits, DeterminantParityExamples) {
  const RootDatum a1 = build_named("A1:sc");
  const auto p = det_equals_symmetric_parity(a1, identity_theta(a1), weyl_from_word(a1, {1}));
  EXPECT_EQ(p.det_omega, -1);
  EXPECT_EQ(p.n_symmetric, 1u);
  EXPECT_TRUE(p.equal());
  const RootDatum g2 = build_named("G2");
  const WeylElement w0 = enumerate_weyl_group(g2).back();
  ASSERT_EQ(w0.matrix, -IntMatrix::identity(2));
  const auto q = det_equals_symmetric_parity(g2, identity_theta(g2), w0);
  EXPECT_EQ(q.det_omega, 1);
  EXPECT_EQ(q.n_symmetric, 6u);
  EXPECT_TRUE(q.equal());
}

TEST(Orbits, ParityClaims) {
  const RootDatum a1 = build_named("A1:sc");
  const auto c = parity_claims(a1, identity_theta(a1), weyl_from_word(a1, {1}));
  EXPECT_EQ(c.s_prime, 1u);
  ASSERT_EQ(c.symmetric_intersections.size(), 1u);
  EXPECT_EQ(c.symmetric_intersections[0].count, 1u);
  EXPECT_TRUE(c.all_hold());
  const auto e = parity_claims(a1, identity_theta(a1), weyl_from_word(a1, {}));
  EXPECT_EQ(e.s_prime, 0u);
  EXPECT_TRUE(e.symmetric_intersections.empty());
  const RootDatum b2 = build_named("B2");
  const auto l = parity_claims(b2, identity_theta(b2), enumerate_weyl_group(b2).back());
  EXPECT_EQ(l.s_prime, 4u);
  EXPECT_EQ(l.symmetric_intersections.size(), 4u);
  for (const auto& o : l.symmetric_intersections) EXPECT_EQ(o.count % 2, 1u);
  EXPECT_TRUE(l.all_hold());
}

TEST(ThreeSigns, Examples) {
  const RootDatum a1 = build_named("A1:sc");
  const SignReport r = three_signs(a1, identity_theta(a1), weyl_from_word(a1, {1}));
  EXPECT_EQ(r.eps_relative_rank, -1);
  EXPECT_EQ(r.det_omega, -1);
  EXPECT_EQ(r.eps_L, -1);
  EXPECT_EQ(r.minus_one_to_n, -1);
  EXPECT_TRUE(r.all_equal);
  for (const std::string name : {"A2", "B3", "G2", "D4:sc"}) {
    const RootDatum g = build_named(name);
    for (const auto& theta : enumerate_based_automorphisms(g)) {
      const SignReport s = three_signs(g, theta, weyl_from_word(g, {}));
      EXPECT_TRUE(s.all_equal && s.det_omega == 1) << name;
    }
  }
  const RootDatum a2 = build_named("A2");
  const SignReport f = three_signs(a2, enumerate_based_automorphisms(a2).back(), weyl_from_word(a2, {}));
  EXPECT_EQ(f.n_symmetric, 0u);
  EXPECT_EQ(f.eps_relative_rank, 1);
  EXPECT_TRUE(f.all_equal);
}

TEST(ThreeSigns, ExhaustiveOnRankTwo) {
  for (const std::string name : {"A1xA1", "A2:sc", "A2:ad", "B2", "G2", "A1:sc*T1"}) {
    const RootDatum g = build_named(name);
    for (const auto& theta : enumerate_based_automorphisms(g)) {
      for (const auto& w : enumerate_weyl_group(g)) {
        const SignReport s = three_signs(g, theta, w);
        EXPECT_TRUE(s.all_equal) << name << " w=" << word_to_string(w.reduced_word);
        EXPECT_TRUE(classify_orbits(g, w.matrix * theta.matrix).dichotomy_holds);
        EXPECT_TRUE(parity_claims(g, theta, w).all_hold());
      }
    }
  }
}

TEST(GaussSum, SmallPrimes) {
  EXPECT_EQ(gauss_sum_norm(3, 1), -3);
  EXPECT_EQ(gauss_sum_norm(5, 1), -5);
  for (long j = 1; j < 7; ++j) EXPECT_EQ(gauss_sum_norm(7, j), -7);
  EXPECT_EQ(gauss_sum_norm(101, 17), -101);
}

TEST(GaussSum, NormAgreesWithFrobeniusPower) {
  for (long p : {3L, 5L, 7L, 11L, 13L, 29L}) {
    const QuadraticField f(p);
    for (const auto& k : f.elements()) EXPECT_EQ(f.norm(k), oracle::frobenius_norm(k.a, k.b, f.c(), p)) << p;
    const auto counts = norm_counts(f);
    EXPECT_EQ(counts[0], 1);
    for (long t = 1; t < p; ++t) EXPECT_EQ(counts[static_cast<std::size_t>(t)], p + 1);
  }
}

TEST(GaussSum, RejectsBadArguments) {
  EXPECT_THROW(gauss_sum_norm(2, 1), InputError);
  EXPECT_THROW(gauss_sum_norm(9, 1), InputError);
  EXPECT_THROW(gauss_sum_norm(103, 1), InputError);
  EXPECT_THROW(gauss_sum_norm(5, 10), InputError);
  EXPECT_EQ(QuadraticField(7).c(), 3);
  EXPECT_EQ(QuadraticField(17).c(), 3);
}
