// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "endosign/cohomology/lattice_catalog.hpp"
#include "endosign/cohomology/pairings.hpp"
#include "endosign/endoscopy/gauss_sum.hpp"
#include "endosign/endoscopy/signs.hpp"
#include "endosign/lattice/smith.hpp"
#include "endosign/packets/packets.hpp"
#include "endosign/roots/catalog.hpp"
#include "oracles.hpp"

using namespace endosign;

namespace {

// Time budgets in seconds. Every numeric comparison below is exact.
constexpr double kSignsBudget = 30.0;
constexpr double kGaussBudget = 1.0;
constexpr double kPairingsBudget = 60.0;
constexpr std::size_t kRandomConjugates = 200;
constexpr std::size_t kRandomCoboundaries = 1000;
constexpr std::size_t kRandomSmithMatrices = 1000;
constexpr unsigned kMaxOrder = 6;

const std::vector<std::string> kSignSystems = {"A1:sc", "A1:ad", "A1xA1", "A1:ad*A1:ad", "A2:sc", "A2:ad",
                                               "B2:sc", "B2:ad", "G2",    "A3:sc",       "A3:ad", "B3:sc",
                                               "B3:ad", "C3:sc", "C3:ad"};

struct Outcome {
  bool pass = true;
  std::size_t cases = 0;
  std::ostringstream note;

  void fail(const std::string& witness) {
    if (pass) note << "first failure: " << witness << "; ";
    pass = false;
  }
  void require(bool ok, const std::function<std::string()>& witness) {
    ++cases;
    if (!ok) fail(witness());
  }
};

struct Twist {
  RootDatum g;
  FrobeniusTwist twist;
  std::string key;
};

std::vector<Twist> catalog_twists(const std::vector<std::string>& names) {
  std::vector<Twist> out;
  for (const auto& name : names) {
    const RootDatum g = build_named(name);
    const auto thetas = enumerate_based_automorphisms(g);
    for (std::size_t t = 0; t < thetas.size(); ++t) {
      for (const auto& w : enumerate_weyl_group(g)) {
        out.push_back({g, make_twist(g, w, thetas[t]),
                       name + " theta#" + std::to_string(t) + " w=" + word_to_string(w.reduced_word)});
      }
    }
  }
  return out;
}

Outcome criterion_signs() {
  Outcome o;
  for (const auto& name : kSignSystems) {
    const RootDatum g = build_named(name);
    for (const auto& theta : enumerate_based_automorphisms(g)) {
      for (const auto& w : enumerate_weyl_group(g)) {
        const SignReport s = three_signs(g, theta, w);
        o.require(s.all_equal && s.eps_relative_rank == s.det_omega && s.det_omega == s.eps_L &&
                      s.eps_L == s.minus_one_to_n,
                  [&] { return name + " w=" + word_to_string(w.reduced_word); });
      }
    }
  }
  o.note << o.cases << " (G, theta, omega) cases over " << kSignSystems.size() << " data";
  return o;
}

Outcome criterion_determinant_lemma() {
  Outcome o;
  std::size_t symmetric_orbits = 0;
  for (const auto& name : kSignSystems) {
    const RootDatum g = build_named(name);
    for (const auto& theta : enumerate_based_automorphisms(g)) {
      for (const auto& w : enumerate_weyl_group(g)) {
        const auto key = [&] { return name + " w=" + word_to_string(w.reduced_word); };
        const DeterminantParity p = det_equals_symmetric_parity(g, theta, w);
        o.require(p.equal(), key);
        o.require(classify_orbits(g, w.matrix * theta.matrix).dichotomy_holds, key);
        const ParityClaims c = parity_claims(g, theta, w);
        o.require(c.same_size(), key);
        o.require(c.claim1(), key);
        o.require(c.claim2(), key);
        symmetric_orbits += c.symmetric_intersections.size();
      }
    }
  }
  o.note << o.cases << " assertions, " << symmetric_orbits << " symmetric orbits inspected";
  return o;
}

Outcome criterion_gauss() {
  Outcome o;
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    const QuadraticField f(p);
    for (const auto& k : f.elements()) {
      o.require(f.norm(k) == oracle::frobenius_norm(k.a, k.b, f.c(), p), [&] { return "norm mismatch p=" + std::to_string(p); });
    }
    for (long j = 1; j < p; ++j) {
      const Integer v = gauss_sum_norm(p, j);
      o.require(v == -p, [&] { return "p=" + std::to_string(p) + " j=" + std::to_string(j) + " sum=" + v.get_str(); });
    }
  }
  o.note << o.cases << " checks for p in {3,5,7,11,13}, all nonzero psi";
  return o;
}

void pairings_on(const GammaLattice& l, Outcome& o, std::size_t& pairs) {
  const GammaLattice d = l.dual();
  const TateGroup left = h1_lattice(l);
  const TateGroup right = tate_h_minus1(d);
  for (const auto& x : left.elements()) {
    const IntVector c = left.representative(x);
    for (const auto& y : right.elements()) {
      const IntVector mu = right.representative(y);
      const QmodZ a = pairing_standard(l, c, mu);
      const QmodZ b = pairing_cup(l, c, mu);
      const QmodZ e = pairing_cft(l, c, mu);
      ++pairs;
      o.require(a == b && b == e, [&] {
        return "sigma=" + l.sigma().to_string() + " m=" + std::to_string(l.order()) + " c=" + to_string(c) +
               " mu=" + to_string(mu) + " values " + a.to_string() + "," + b.to_string() + "," + e.to_string();
      });
    }
  }
}

Outcome criterion_three_pairings() {
  Outcome o;
  std::size_t pairs = 0;
  const auto lattices = signed_permutation_lattices(3, kMaxOrder);
  for (const auto& l : lattices) pairings_on(l, o, pairs);
  std::mt19937_64 rng(20240901);
  std::uniform_int_distribution<std::size_t> pick(0, lattices.size() - 1);
  for (std::size_t i = 0; i < kRandomConjugates; ++i) {
    const GammaLattice& base = lattices[pick(rng)];
    pairings_on(conjugate(base, random_unimodular(base.rank(), rng)), o, pairs);
  }
  o.note << lattices.size() << " signed-permutation lattices + " << kRandomConjugates << " conjugates, " << pairs
         << " class pairs";
  return o;
}

Outcome criterion_perfectness(const std::vector<Twist>& twists) {
  Outcome o;
  for (const auto& t : twists) {
    const GammaLattice xstar(t.twist.a, t.twist.order);
    const PerfectnessReport r = check_perfectness(xstar);
    o.require(r.order_left == r.order_right, [&] { return t.key + " orders differ"; });
    o.require(r.injective && r.unit_elementary_divisors, [&] { return t.key + " pairing not perfect"; });
  }
  o.note << twists.size() << " catalog twists (X^* and X_* lattices)";
  return o;
}

Outcome criterion_anticommutation(const std::vector<Twist>& twists) {
  Outcome o;
  std::size_t classes = 0;
  for (const auto& t : twists) {
    const GammaLattice x = GammaLattice(t.twist.a, t.twist.order).dual();
    const Coinvariants coinv(x);
    const TateGroup h = h1_torus_model(x);
    for (const auto& e : enumerate_torsion(coinv.torsion())) {
      const IntVector lambda = coinv.lift_torsion(e);
      ++classes;
      o.require(dr_map(h, lambda) == tn_map(h, -lambda), [&] { return t.key + " lambda=" + to_string(lambda); });
      const CocycleTable z = cocycle_from_value(x, CocycleAnchor::Frobenius, lambda);
      const unsigned m = x.order();
      const IntVector& at_fi = z.values[(m - 1) % m];
      const IntVector& at_sigma = z.values[1 % m];
      o.require(at_sigma == -(x.sigma() * at_fi), [&] { return t.key + " normalization, lambda=" + to_string(lambda); });
      if (m > 1) o.require(at_fi == lambda, [&] { return t.key + " z(Fi) != lambda"; });
    }
  }
  o.note << classes << " torsion classes over " << twists.size() << " twists";
  return o;
}

Outcome criterion_invariant_map() {
  Outcome o;
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> entry(-50, 50);
  for (unsigned m = 1; m <= kMaxOrder; ++m) {
    o.require(invariant_map(TwoCocycleZ::fundamental_class(m)) == QmodZ(1, m),
              [&] { return "fundamental class m=" + std::to_string(m); });
    for (std::size_t i = 0; i < kRandomCoboundaries; ++i) {
      std::vector<Integer> f(m);
      for (auto& x : f) x = entry(rng);
      o.require(invariant_map(TwoCocycleZ::coboundary(f)).is_zero(), [&] { return "coboundary m=" + std::to_string(m); });
    }
  }
  o.note << kRandomCoboundaries << " coboundaries per m <= " << kMaxOrder << " plus fundamental classes";
  return o;
}

Outcome criterion_diagram(const std::vector<Twist>& twists) {
  Outcome o;
  std::size_t trselp = 0, evaluations = 0;
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (const auto& t : twists) {
    const ParameterCombinatorics pc(t.g, t.twist);
    const ComponentGroup c = component_group(pc);
    o.require(c.matches_coinvariants(), [&] { return t.key + " |C_phi| != |[X_Gamma]_tor|"; });
    if (!trselp_validate(pc).ok) continue;
    ++trselp;
    const auto central = enumerate_central_points(pc);
    for (const auto& e : enumerate_torsion(pc.x_coinvariants().torsion())) {
      IntVector lambda = pc.x_coinvariants().lift_torsion(e);
      IntVector nu(lambda.size());
      for (auto& v : nu) v = entry(rng);
      for (const IntVector& rep : {lambda, IntVector(lambda + pc.x().augmentation() * nu)}) {
        const AbelianElement u = central_restriction(pc, rep);
        for (const auto& r : central) {
          ++evaluations;
          o.require(character_eval(pc, rep, r) == central_pairing(pc, u, r),
                    [&] { return t.key + " lambda=" + to_string(rep) + " r=" + to_string(r.r); });
        }
      }
    }
  }
  o.note << trselp << " TRSELP-valid twists of " << twists.size() << ", " << evaluations << " central evaluations";
  return o;
}

Outcome criterion_kottwitz(const std::vector<Twist>& twists) {
  Outcome o;
  std::size_t tn_failures = 0, checks = 0;
  std::string tn_witness;
  for (const auto& t : twists) {
    const ParameterCombinatorics pc(t.g, t.twist);
    const auto points = enumerate_fixed_points(pc);
    for (const auto& e : enumerate_torsion(pc.x_coinvariants().torsion())) {
      const IntVector lambda = pc.x_coinvariants().lift_torsion(e);
      for (const auto& r : points) {
        ++checks;
        const KottwitzCheck dr = kottwitz_sign_check(pc, lambda, r, Normalization::DeBackerReeder);
        o.require(dr.ok, [&] {
          return t.key + " lambda=" + to_string(lambda) + " r=" + to_string(r.r) + " pairing=" + dr.pairing.to_string() +
                 " character=" + dr.character.to_string();
        });
        const bool tn_ok = kottwitz_sign_check(pc, lambda, r, Normalization::TateNakayama).ok;
        // Unsigned TN agrees with DR exactly on characters of order <= 2.
        o.require(tn_ok == (dr.character.order() <= 2), [&] { return t.key + " TN/order mismatch"; });
        if (!tn_ok && tn_failures++ == 0) tn_witness = t.key + " lambda=" + to_string(lambda) + " r=" + to_string(r.r);
      }
    }
  }
  o.require(tn_failures > 0, [] { return std::string("TN normalization never fails"); });
  o.note << checks << " (lambda, t) pairs pass with DR; TN fails on " << tn_failures << ", e.g. " << tn_witness;
  return o;
}

Outcome criterion_substrate() {
  Outcome o;
  std::mt19937_64 rng(123456);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::uniform_int_distribution<long> entry(-10, 10);
  for (std::size_t t = 0; t < kRandomSmithMatrices; ++t) {
    IntMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    const auto key = [&] { return a.to_string(); };
    const SmithDecomposition s = smith_normal_form(a);
    o.require(s.U * s.D * s.V == a, key);
    o.require(abs(s.U.determinant()) == 1 && abs(s.V.determinant()) == 1, key);
    bool diagonal_ok = true;
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j && s.D(i, j) != 0) diagonal_ok = false;
    const IntVector d = s.diagonal();
    for (std::size_t i = 0; i + 1 < s.rank; ++i)
      if (!mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t())) diagonal_ok = false;
    o.require(diagonal_ok, key);
    const auto expected = oracle::invariant_factors(a);
    bool factors_ok = expected.size() == s.rank;
    for (std::size_t i = 0; factors_ok && i < s.rank; ++i) factors_ok = d[i] == abs(expected[i]);
    o.require(factors_ok, key);

    const IntMatrix k = kernel_basis(a);
    o.require((a * k).is_zero() && k.cols() == a.cols() - s.rank, key);
    if (k.cols() > 0) {
      const SmithDecomposition sk = smith_normal_form(k);
      bool saturated = sk.rank == k.cols();
      for (std::size_t i = 0; saturated && i < sk.rank; ++i) saturated = sk.D(i, i) == 1;
      o.require(saturated, key);
    }
    const Cokernel c(a);
    IntVector v(a.rows());
    for (auto& x : v) x = entry(rng);
    o.require(c.project(v).is_zero() == solve_integer(a, v).has_value(), key);
    o.require(c.project(c.lift(c.project(v))) == c.project(v), key);
    bool columns_vanish = true;
    for (const auto& col : a.columns()) columns_vanish = columns_vanish && c.project(col).is_zero();
    o.require(columns_vanish, key);
  }
  o.note << kRandomSmithMatrices << " random matrices up to 6x6, " << o.cases << " assertions";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<std::string> packet_systems = kSignSystems;
  std::vector<Twist> twists;
  const auto t0 = std::chrono::steady_clock::now();
  twists = catalog_twists(packet_systems);
  const double setup = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("catalog: %zu twists (setup %.2f s)\n", twists.size(), setup);

  const std::vector<Criterion> criteria = {
      {1, "three-signs proposition", kSignsBudget, criterion_signs},
      {2, "determinant lemma and parity claims", 0, criterion_determinant_lemma},
      {3, "Gauss-sum reduction", kGaussBudget, criterion_gauss},
      {4, "three pairings agree", kPairingsBudget, criterion_three_pairings},
      {5, "perfectness", 0, [&] { return criterion_perfectness(twists); }},
      {6, "TN/DR anti-commutation", 0, [&] { return criterion_anticommutation(twists); }},
      {7, "invariant map", 0, criterion_invariant_map},
      {8, "diagram commutativity", 0, [&] { return criterion_diagram(twists); }},
      {9, "Kottwitz sign", 0, [&] { return criterion_kottwitz(twists); }},
      {10, "substrate properties", 0, criterion_substrate},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass;
    std::string timing = std::to_string(secs).substr(0, 5) + " s";
    if (c.budget > 0) {
      timing += " of " + std::to_string(static_cast<int>(c.budget)) + " s budget";
      if (secs > c.budget) pass = false;
    }
    if (!pass) ++failures;
    std::printf("criterion %2d %s  %s: %s (%s)\n", c.id, pass ? "PASS" : "FAIL", c.name, o.note.str().c_str(),
                timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
