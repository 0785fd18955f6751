#include "endosign/cli/suites.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <cstdio>
#include <random>
#include <thread>

#include "endosign/cohomology/lattice_catalog.hpp"
#include "endosign/cohomology/pairings.hpp"
#include "endosign/endoscopy/gauss_sum.hpp"
#include "endosign/endoscopy/signs.hpp"
#include "endosign/packets/packets.hpp"
#include "endosign/roots/catalog.hpp"

namespace endosign::cli {

namespace {

constexpr std::size_t kCoboundariesPerOrder = 1000;

std::string pad(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%06zu", i);
  return buf;
}

/// Deterministic per-case generator: depends only on the seed and a stream id.
std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

struct CaseList {
  std::string suite;
  std::vector<Case> cases;
  void add(const std::string& label, std::function<Check()> run) {
    cases.push_back({suite + "/" + pad(cases.size()) + " " + label, std::move(run)});
  }
};

// One (G, theta) pair with all of W.
struct ThetaFamily {
  std::string label;
  RootDatum g;
  BasedAutomorphism theta;
};

std::vector<ThetaFamily> theta_families(std::size_t max_rank) {
  std::vector<ThetaFamily> out;
  for (const auto& name : verification_systems(max_rank)) {
    const RootDatum g = build_named(name);
    const auto thetas = enumerate_based_automorphisms(g);
    for (std::size_t t = 0; t < thetas.size(); ++t) out.push_back({name + " theta#" + std::to_string(t), g, thetas[t]});
  }
  return out;
}

struct TwistCase {
  std::string label;
  RootDatum g;
  FrobeniusTwist twist;
};

std::vector<TwistCase> twist_cases(const VerifyOptions& o) {
  std::vector<TwistCase> out;
  for (const auto& f : theta_families(o.max_rank)) {
    for (const auto& w : enumerate_weyl_group(f.g)) {
      FrobeniusTwist t = make_twist(f.g, w, f.theta);
      if (t.order > o.max_order) continue;
      out.push_back({f.label + " w=" + word_to_string(w.reduced_word), f.g, std::move(t)});
    }
  }
  return out;
}

void signs_suite(CaseList& list, const VerifyOptions& o) {
  for (const auto& f : theta_families(o.max_rank)) {
    list.add(f.label, [f] {
      Check c{f.label, true, Json::object()};
      std::size_t n = 0;
      for (const auto& w : enumerate_weyl_group(f.g)) {
        ++n;
        const SignReport s = three_signs(f.g, f.theta, w);
        if (!s.all_equal && c.pass) {
          c.pass = false;
          c.witness["counterexample"] = {{"omega", w.reduced_word},
                                         {"eps_relative_rank", s.eps_relative_rank},
                                         {"det_omega", s.det_omega},
                                         {"eps_L", s.eps_L},
                                         {"minus_one_to_n", s.minus_one_to_n}};
        }
      }
      c.witness["omega_cases"] = n;
      return c;
    });
  }
}

void claims_suite(CaseList& list, const VerifyOptions& o) {
  for (const auto& f : theta_families(o.max_rank)) {
    list.add(f.label, [f] {
      Check c{f.label, true, Json::object()};
      std::size_t n = 0, symmetric = 0;
      for (const auto& w : enumerate_weyl_group(f.g)) {
        ++n;
        const DeterminantParity p = det_equals_symmetric_parity(f.g, f.theta, w);
        const bool dichotomy = classify_orbits(f.g, w.matrix * f.theta.matrix).dichotomy_holds;
        const ParityClaims claims = parity_claims(f.g, f.theta, w);
        symmetric += claims.symmetric_intersections.size();
        if ((!p.equal() || !dichotomy || !claims.all_hold()) && c.pass) {
          c.pass = false;
          c.witness["counterexample"] = {{"omega", w.reduced_word},
                                         {"det_omega", p.det_omega},
                                         {"minus_one_to_n", p.minus_one_to_n},
                                         {"dichotomy", dichotomy},
                                         {"inversions", claims.inversions},
                                         {"s_prime", claims.s_prime},
                                         {"s_prime_symmetric", claims.s_prime_symmetric},
                                         {"claim2", claims.claim2()}};
        }
      }
      c.witness["omega_cases"] = n;
      c.witness["symmetric_orbits"] = symmetric;
      return c;
    });
  }
}

void gauss_suite(CaseList& list, const VerifyOptions& o) {
  for (long p : o.primes) {
    list.add("p=" + std::to_string(p), [p] {
      Check c{"p=" + std::to_string(p), true, Json::object()};
      const QuadraticField field(p);
      const auto counts = norm_counts(field);
      long total = 0;
      for (long n : counts) total += n;
      const bool counts_ok = total == p * p && counts[0] == 1;
      Json values = Json::array();
      for (long j = 1; j < p; ++j) {
        const Integer v = gauss_sum_norm(p, j);
        values.push_back(to_json(v));
        if (v != -p && c.pass) {
          c.pass = false;
          c.witness["counterexample"] = {{"psi_index", j}, {"value", to_json(v)}};
        }
      }
      if (!counts_ok) {
        c.pass = false;
        c.witness["norm_counts"] = counts;
      }
      c.witness["non_residue"] = field.c();
      c.witness["value"] = values.front();
      c.witness["values_all_equal"] = std::all_of(values.begin(), values.end(), [&](const Json& v) { return v == values.front(); });
      return c;
    });
  }
}

Check pairings_on(const std::string& label, const GammaLattice& l) {
  Check c{label, true, {{"sigma", to_json(l.sigma())}, {"m", l.order()}}};
  const GammaLattice d = l.dual();
  const TateGroup left = h1_lattice(l);
  const TateGroup right = tate_h_minus1(d);
  std::size_t pairs = 0;
  for (const auto& x : left.elements()) {
    const IntVector cv = left.representative(x);
    for (const auto& y : right.elements()) {
      const IntVector mu = right.representative(y);
      ++pairs;
      const QmodZ a = pairing_standard(l, cv, mu), b = pairing_cup(l, cv, mu), e = pairing_cft(l, cv, mu);
      if ((a != b || b != e) && c.pass) {
        c.pass = false;
        c.witness["counterexample"] = {{"c", to_json(cv)}, {"mu", to_json(mu)}, {"standard", to_json(a)},
                                       {"cup", to_json(b)}, {"cft", to_json(e)}};
      }
    }
  }
  const PerfectnessReport p = check_perfectness(l);
  if (!p.perfect()) {
    c.pass = false;
    c.witness["perfectness"] = {{"order_left", to_json(p.order_left)}, {"order_right", to_json(p.order_right)},
                                {"injective", p.injective}, {"unit_elementary_divisors", p.unit_elementary_divisors}};
  }
  c.witness["h1"] = left.group().to_string();
  c.witness["class_pairs"] = pairs;
  return c;
}

void pairings_suite(CaseList& list, const VerifyOptions& o) {
  const auto lattices = std::make_shared<const std::vector<GammaLattice>>(
      signed_permutation_lattices(o.max_rank, o.max_order));
  for (std::size_t i = 0; i < lattices->size(); ++i) {
    const std::string label = "signed#" + std::to_string(i);
    list.add(label, [label, lattices, i] { return pairings_on(label, (*lattices)[i]); });
  }
  for (std::size_t i = 0; i < o.samples; ++i) {
    const std::string label = "conjugate#" + std::to_string(i);
    list.add(label, [label, lattices, seed = o.seed, i] {
      auto rng = case_rng(seed, 1000000 + i);
      const GammaLattice& base = (*lattices)[std::uniform_int_distribution<std::size_t>(0, lattices->size() - 1)(rng)];
      return pairings_on(label, conjugate(base, random_unimodular(base.rank(), rng)));
    });
  }
  for (unsigned m = 1; m <= o.max_order; ++m) {
    const std::string label = "invariant_map m=" + std::to_string(m);
    list.add(label, [label, m, seed = o.seed] {
      Check c{label, true, Json::object()};
      const QmodZ fundamental = invariant_map(TwoCocycleZ::fundamental_class(m));
      c.witness["fundamental_class"] = to_json(fundamental);
      if (fundamental != QmodZ(1, m)) c.pass = false;
      auto rng = case_rng(seed, 2000000 + m);
      std::uniform_int_distribution<long> entry(-50, 50);
      for (std::size_t k = 0; k < kCoboundariesPerOrder; ++k) {
        std::vector<Integer> f(m);
        for (auto& x : f) x = entry(rng);
        const QmodZ v = invariant_map(TwoCocycleZ::coboundary(f));
        if (!v.is_zero() && c.pass) {
          c.pass = false;
          Json fj = Json::array();
          for (const auto& x : f) fj.push_back(to_json(x));
          c.witness["counterexample"] = {{"cochain", fj}, {"invariant", to_json(v)}};
        }
      }
      c.witness["coboundaries"] = kCoboundariesPerOrder;
      return c;
    });
  }
}

Check anticom_on(const std::string& label, const GammaLattice& x) {
  Check c{label, true, Json::object()};
  const Coinvariants coinv(x);
  const TateGroup h = h1_torus_model(x);
  std::size_t classes = 0;
  const unsigned m = x.order();
  for (const auto& e : enumerate_torsion(coinv.torsion())) {
    const IntVector lambda = coinv.lift_torsion(e);
    ++classes;
    const CocycleTable z = cocycle_from_value(x, CocycleAnchor::Frobenius, lambda);
    const IntVector& at_fi = z.values[(m - 1) % m];
    const IntVector& at_sigma = z.values[1 % m];
    const bool commutes = dr_map(h, lambda) == tn_map(h, -lambda);
    const bool normalized = at_sigma == -(x.sigma() * at_fi) && (m == 1 || at_fi == lambda);
    if ((!commutes || !normalized) && c.pass) {
      c.pass = false;
      c.witness["counterexample"] = {{"lambda", to_json(lambda)}, {"commutes", commutes}, {"normalized", normalized}};
    }
  }
  c.witness["torsion_classes"] = classes;
  return c;
}

void anticom_suite(CaseList& list, const VerifyOptions& o) {
  for (const auto& t : twist_cases(o)) {
    list.add(t.label, [t] { return anticom_on(t.label, GammaLattice(t.twist.a, t.twist.order).dual()); });
  }
  const auto lattices = std::make_shared<const std::vector<GammaLattice>>(
      signed_permutation_lattices(o.max_rank, o.max_order));
  for (std::size_t i = 0; i < o.samples; ++i) {
    const std::string label = "conjugate#" + std::to_string(i);
    list.add(label, [label, lattices, seed = o.seed, i] {
      auto rng = case_rng(seed, 3000000 + i);
      const GammaLattice& base = (*lattices)[std::uniform_int_distribution<std::size_t>(0, lattices->size() - 1)(rng)];
      return anticom_on(label, conjugate(base, random_unimodular(base.rank(), rng)));
    });
  }
}

void diagram_suite(CaseList& list, const VerifyOptions& o) {
  const auto twists = twist_cases(o);
  for (std::size_t i = 0; i < twists.size(); ++i) {
    list.add(twists[i].label, [t = twists[i], seed = o.seed, i] {
      Check c{t.label, true, Json::object()};
      const ParameterCombinatorics pc(t.g, t.twist);
      const ComponentGroup cg = component_group(pc);
      c.witness["component_group"] = cg.group().to_string();
      if (!cg.matches_coinvariants()) {
        c.pass = false;
        c.witness["coinvariant_torsion_order"] = to_json(cg.coinvariant_torsion_order);
      }
      const auto classes = enumerate_torsion(pc.x_coinvariants().torsion());
      const bool trselp = trselp_validate(pc).ok;
      c.witness["trselp"] = trselp;
      std::size_t evaluations = 0;
      if (trselp) {
        auto rng = case_rng(seed, 4000000 + i);
        std::uniform_int_distribution<long> entry(-3, 3);
        const auto central = enumerate_central_points(pc);
        for (const auto& e : classes) {
          const IntVector lambda = pc.x_coinvariants().lift_torsion(e);
          IntVector nu(lambda.size());
          for (auto& v : nu) v = entry(rng);
          // Any representative of the class must give the same answer.
          for (const IntVector& rep : {lambda, IntVector(lambda + pc.x().augmentation() * nu)}) {
            const AbelianElement u = central_restriction(pc, rep);
            for (const auto& r : central) {
              ++evaluations;
              const QmodZ direct = character_eval(pc, rep, r), via = central_pairing(pc, u, r);
              if (direct != via && c.pass) {
                c.pass = false;
                c.witness["counterexample"] = {{"lambda", to_json(rep)}, {"r", to_json(r.r)},
                                               {"direct", to_json(direct)}, {"via_center", to_json(via)}};
              }
            }
          }
        }
      }
      c.witness["central_evaluations"] = evaluations;

      // DR must always hold; TN must fail exactly when the character has order > 2.
      std::size_t pairs = 0, tn_failures = 0;
      for (const auto& e : classes) {
        const IntVector lambda = pc.x_coinvariants().lift_torsion(e);
        for (const auto& r : enumerate_fixed_points(pc)) {
          ++pairs;
          const KottwitzCheck dr = kottwitz_sign_check(pc, lambda, r, Normalization::DeBackerReeder);
          const KottwitzCheck tn = kottwitz_sign_check(pc, lambda, r, Normalization::TateNakayama);
          tn_failures += tn.ok ? 0 : 1;
          const bool tn_expected = dr.character.order() <= 2;
          if ((!dr.ok || tn.ok != tn_expected) && c.pass) {
            c.pass = false;
            c.witness["kottwitz_counterexample"] = {{"lambda", to_json(lambda)}, {"r", to_json(r.r)},
                                                    {"dr_pairing", to_json(dr.pairing)},
                                                    {"tn_pairing", to_json(tn.pairing)},
                                                    {"character", to_json(dr.character)}};
          }
        }
      }
      c.witness["kottwitz_pairs"] = pairs;
      c.witness["tn_failures"] = tn_failures;
      return c;
    });
  }
}

void add_suite(const std::string& suite, const VerifyOptions& o, std::vector<Case>& out) {
  CaseList list{suite, {}};
  if (suite == "signs") signs_suite(list, o);
  else if (suite == "claims") claims_suite(list, o);
  else if (suite == "gauss") gauss_suite(list, o);
  else if (suite == "pairings") pairings_suite(list, o);
  else if (suite == "anticom") anticom_suite(list, o);
  else if (suite == "diagram") diagram_suite(list, o);
  else throw InputError("unknown suite '" + suite + "'");
  for (auto& c : list.cases) out.push_back(std::move(c));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"signs", "pairings", "anticom", "diagram", "gauss", "claims", "all"};
  return names;
}

std::vector<std::string> verification_systems(std::size_t max_rank) {
  std::vector<std::string> out;
  for (const auto& e : catalog()) {
    if (e.rank <= max_rank) out.push_back(e.name);
  }
  const std::vector<std::pair<std::string, std::size_t>> products = {
      {"A1xA1", 2},         {"A1:sc*A1:ad", 2},  {"A1:ad*A1:ad", 2},   {"A1:sc*T1", 2},
      {"A1xA1xA1", 3},      {"A1:ad*A1:ad*A1:ad", 3}, {"A1:sc*A2:sc", 3}, {"A1:ad*A2:ad", 3}};
  for (const auto& [name, rank] : products) {
    if (rank <= max_rank) out.push_back(name);
  }
  return out;
}

void validate_options(const VerifyOptions& o) {
  if (o.max_rank < 1 || o.max_rank > kMaxRankCap) {
    throw InputError("--max-rank must lie in [1, " + std::to_string(kMaxRankCap) + "]");
  }
  if (o.max_order < 1 || o.max_order > kMaxOrderCap) {
    throw InputError("--max-order must lie in [1, " + std::to_string(kMaxOrderCap) + "]");
  }
  if (o.primes.empty()) throw InputError("--primes must list at least one prime");
  for (long p : o.primes) {
    if (p > kMaxPrimeCap || !is_odd_prime(p)) {
      throw InputError("--primes: " + std::to_string(p) + " is not an odd prime <= " + std::to_string(kMaxPrimeCap));
    }
  }
  if (o.samples > 100000) throw InputError("--samples must be at most 100000");
}

std::vector<Check> run_cases(const std::vector<Case>& cases, unsigned threads) {
  std::vector<Check> results(cases.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        results[i] = cases[i].run();
      } catch (const std::exception& e) {
        results[i] = Check{cases[i].key, false, {{"exception", e.what()}}};
      }
      results[i].name = cases[i].key;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, cases.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::stable_sort(results.begin(), results.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return results;
}

std::vector<Case> suite_cases(const std::string& suite, const VerifyOptions& options) {
  std::vector<Case> out;
  if (suite == "all") {
    for (const auto& s : suite_names())
      if (s != "all") add_suite(s, options, out);
  } else {
    add_suite(suite, options, out);
  }
  return out;
}

Report verify(const std::string& suite, const VerifyOptions& options) {
  validate_options(options);
  Report report("verify");
  report.body()["suite"] = suite;
  Json primes = Json::array();
  for (long p : options.primes) primes.push_back(p);
  report.body()["options"] = {{"max_rank", options.max_rank},
                              {"max_order", options.max_order},
                              {"primes", primes},
                              {"seed", options.seed},
                              {"samples", options.samples}};
  const auto cases = suite_cases(suite, options);
  Json totals = Json::object();
  for (const char* field : {"omega_cases", "class_pairs", "coboundaries", "torsion_classes", "central_evaluations",
                            "kottwitz_pairs", "tn_failures"}) {
    totals[field] = 0;
  }
  for (auto& c : run_cases(cases, options.threads)) {
    for (auto& [field, total] : totals.items()) {
      if (c.witness.contains(field)) total = total.get<std::uint64_t>() + c.witness[field].get<std::uint64_t>();
    }
    report.add_check(std::move(c));
  }
  report.body()["totals"] = totals;
  report.finalize();
  return report;
}

}  // namespace endosign::cli
