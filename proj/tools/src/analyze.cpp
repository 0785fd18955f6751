#include "endosign/cli/analyze.hpp"

#include "endosign/cohomology/pairings.hpp"
#include "endosign/endoscopy/signs.hpp"
#include "endosign/packets/packets.hpp"

namespace endosign::cli {

namespace {

Json roots_json(const RootDatum& g, const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (std::size_t i : indices) out.push_back(to_json(g.root(i)));
  return out;
}

void signs_section(const InputSpec& spec, Report& report) {
  const SignReport s = three_signs(spec.datum, spec.theta, spec.omega);
  const ParityClaims c = parity_claims(spec.datum, spec.theta, spec.omega);
  Json j = Json::object();
  j["omega"] = spec.omega.reduced_word;
  j["eps_relative_rank"] = s.eps_relative_rank;
  j["det_omega"] = s.det_omega;
  j["eps_L"] = s.eps_L;
  j["minus_one_to_n"] = s.minus_one_to_n;
  j["n_symmetric"] = s.n_symmetric;
  j["inversions"] = c.inversions;
  j["s_prime"] = c.s_prime;
  j["s_prime_symmetric"] = c.s_prime_symmetric;
  report.body()["signs"] = j;

  Json values = {{"eps_relative_rank", s.eps_relative_rank},
                 {"det_omega", s.det_omega},
                 {"eps_L", s.eps_L},
                 {"minus_one_to_n", s.minus_one_to_n}};
  report.add_check({"signs.all_equal", s.all_equal, values});
  report.add_check({"signs.inversion_counts_agree", c.same_size(),
                    {{"inversions", c.inversions}, {"s_prime", c.s_prime}}});
  report.add_check({"signs.claim1_parity", c.claim1(),
                    {{"s_prime", c.s_prime}, {"s_prime_symmetric", c.s_prime_symmetric}}});
  Json per_orbit = Json::array();
  for (const auto& o : c.symmetric_intersections) per_orbit.push_back({{"orbit", o.orbit_index}, {"count", o.count}});
  report.add_check({"signs.claim2_odd_per_symmetric_orbit", c.claim2(), {{"intersections", per_orbit}}});
}

void orbits_section(const InputSpec& spec, Report& report) {
  const OrbitReport r = classify_orbits(spec.datum, spec.omega.matrix * spec.theta.matrix);
  Json orbits = Json::array();
  Json mixed = nullptr;
  for (const auto& o : r.orbits) {
    Json e = {{"kind", orbit_kind_name(o.kind)}, {"roots", roots_json(spec.datum, o.members)}};
    if (o.kind == OrbitKind::Mixed && mixed.is_null()) mixed = e;
    orbits.push_back(std::move(e));
  }
  report.body()["orbits"] = {{"count", r.orbits.size()}, {"n_symmetric", r.n_symmetric}, {"orbits", orbits}};
  Json witness = Json::object();
  if (!mixed.is_null()) witness["mixed_orbit"] = mixed;
  report.add_check({"orbits.dichotomy", r.dichotomy_holds, witness});
}

void endoscopy_section(const InputSpec& spec, Report& report) {
  const EndoscopicDatum d = endoscopic_subsystem(spec.datum, *spec.q, spec.omega, spec.theta);
  const GammaFixedness f = gamma_fixedness(d);
  const EllipticityReport e = ellipticity(d);
  Json h_coroots = Json::array();
  for (std::size_t i : d.h_roots) h_coroots.push_back(to_json(spec.datum.coroot(i)));
  Json h_simple = Json::array();
  for (const auto& v : d.h_datum.simple_roots()) h_simple.push_back(to_json(v));
  Json j = Json::object();
  j["q"] = to_json(d.q.q());
  j["order"] = to_json(d.q.order());
  j["h_num_roots"] = d.h_roots.size();
  j["h_coroots"] = h_coroots;
  j["h_simple_roots"] = h_simple;
  j["gamma_fixed"] = {{"fixes_q", f.fixes_q}, {"stabilizes_h_roots", f.stabilizes_h_roots}};
  j["elliptic"] = e.elliptic();
  j["h_fixed_central_dim"] = e.h_fixed_central_dim;
  j["g_fixed_central_dim"] = e.g_fixed_central_dim;
  report.body()["endoscopy"] = j;

  report.add_check({"endoscopy.gamma_fixed", f.ok(),
                    {{"fixes_q", f.fixes_q}, {"stabilizes_h_roots", f.stabilizes_h_roots},
                     {"action", to_json(d.action())}, {"q", to_json(d.q.q())}}});
  if (!e.elliptic()) {
    report.add_warning("endoscopic datum is not elliptic: fixed central dimensions " +
                       std::to_string(e.h_fixed_central_dim) + " (H) vs " + std::to_string(e.g_fixed_central_dim) +
                       " (G)");
  }
}

void packet_section(const InputSpec& spec, Report& report) {
  FrobeniusTwist twist = make_twist(spec.datum, spec.w, spec.theta);
  if (spec.m_override) twist.order = *spec.m_override;
  const ParameterCombinatorics pc(spec.datum, twist);
  Json j = Json::object();
  j["w"] = spec.w.reduced_word;
  j["a"] = to_json(twist.a);
  j["m"] = twist.order;

  const TrselpReport tr = trselp_validate(pc);
  j["trselp"] = tr.ok;
  if (!tr.ok && tr.witness) {
    report.add_warning("TRSELP fails: fixed cocharacter " + to_string(tr.witness->first) + " pairs nontrivially with root " +
                       to_string(tr.witness->second));
    j["trselp_witness"] = {{"fixed_vector", to_json(tr.witness->first)}, {"root", to_json(tr.witness->second)}};
  }

  const ComponentGroup c = component_group(pc);
  j["component_group"] = to_json(c.group());
  j["x_coinvariants_torsion"] = to_json(pc.x_coinvariants().torsion());
  j["xbar_torsion"] = to_json(pc.xbar_torsion());
  report.add_check({"packet.component_group_order", c.matches_coinvariants(),
                    {{"component_group_order", to_json(c.group().order())},
                     {"coinvariant_torsion_order", to_json(c.coinvariant_torsion_order)}}});

  Json fibers = Json::array();
  for (const auto& f : packet_fibers(pc)) {
    Json members = Json::array();
    for (const auto& e : f.members) members.push_back(to_json(e));
    fibers.push_back({{"u", to_json(f.u)}, {"size", f.members.size()}, {"members", members}});
  }
  j["num_fibers"] = fibers.size();
  j["fibers"] = fibers;

  // Kottwitz sign over every (lambda, t) pair, DR normalization.
  const auto points = enumerate_fixed_points(pc);
  const auto classes = enumerate_torsion(pc.x_coinvariants().torsion());
  std::size_t pairs = 0, tn_failures = 0;
  Json dr_witness = Json::object();
  bool dr_ok = true;
  for (const auto& e : classes) {
    const IntVector lambda = pc.x_coinvariants().lift_torsion(e);
    for (const auto& t : points) {
      ++pairs;
      const KottwitzCheck k = kottwitz_sign_check(pc, lambda, t, Normalization::DeBackerReeder);
      if (!k.ok && dr_ok) {
        dr_ok = false;
        dr_witness = {{"lambda", to_json(lambda)}, {"r", to_json(t.r)}, {"pairing", to_json(k.pairing)},
                      {"character", to_json(k.character)}};
      }
      if (!kottwitz_sign_check(pc, lambda, t, Normalization::TateNakayama).ok) ++tn_failures;
    }
  }
  j["kottwitz"] = {{"pairs", pairs}, {"tn_failures", tn_failures}};
  report.add_check({"packet.kottwitz_sign", dr_ok, dr_witness});

  if (tr.ok) {
    const auto central = enumerate_central_points(pc);
    bool ok = true;
    Json witness = Json::object();
    std::size_t evaluations = 0;
    for (const auto& e : classes) {
      const IntVector lambda = pc.x_coinvariants().lift_torsion(e);
      const AbelianElement u = central_restriction(pc, lambda);
      for (const auto& r : central) {
        ++evaluations;
        const QmodZ direct = character_eval(pc, lambda, r);
        const QmodZ via = central_pairing(pc, u, r);
        if (direct != via && ok) {
          ok = false;
          witness = {{"lambda", to_json(lambda)}, {"r", to_json(r.r)}, {"direct", to_json(direct)},
                     {"via_center", to_json(via)}};
        }
      }
    }
    j["central_evaluations"] = evaluations;
    report.add_check({"packet.diagram_commutes", ok, witness});
  }
  report.body()["packet"] = j;
}

void lattices_section(const InputSpec& spec, Report& report) {
  Json out = Json::array();
  for (const auto& job : spec.lattice_jobs) {
    const GammaLattice& l = job.lattice;
    const GammaLattice d = l.dual();
    const TateGroup left = h1_lattice(l);
    const TateGroup right = tate_h_minus1(d);
    const PerfectnessReport p = check_perfectness(l);
    Json j = {{"label", job.label},
              {"m", l.order()},
              {"h1", to_json(left.group())},
              {"h_minus1_dual", to_json(right.group())},
              {"h_minus1", to_json(tate_h_minus1(l).group())},
              {"h0", to_json(tate_h0(l).group())},
              {"coinvariants", to_json(coinvariants(l).group())}};
    out.push_back(j);
    const std::string prefix = "lattice[" + job.label + "].";
    report.add_check({prefix + "perfectness", p.perfect(),
                      {{"order_left", to_json(p.order_left)}, {"order_right", to_json(p.order_right)},
                       {"injective", p.injective}, {"unit_elementary_divisors", p.unit_elementary_divisors}}});

    bool agree = true;
    Json witness = Json::object();
    for (const auto& x : left.elements()) {
      const IntVector c = left.representative(x);
      for (const auto& y : right.elements()) {
        const IntVector mu = right.representative(y);
        const QmodZ a = pairing_standard(l, c, mu), b = pairing_cup(l, c, mu), e = pairing_cft(l, c, mu);
        if ((a != b || b != e) && agree) {
          agree = false;
          witness = {{"c", to_json(c)}, {"mu", to_json(mu)}, {"standard", to_json(a)}, {"cup", to_json(b)},
                     {"cft", to_json(e)}};
        }
      }
    }
    report.add_check({prefix + "three_pairings_agree", agree, witness});

    const Coinvariants coinv(l);
    const TateGroup h = h1_torus_model(l);
    bool anticom = true;
    witness = Json::object();
    for (const auto& e : enumerate_torsion(coinv.torsion())) {
      const IntVector lambda = coinv.lift_torsion(e);
      if (!(dr_map(h, lambda) == tn_map(h, -lambda)) && anticom) {
        anticom = false;
        witness = {{"lambda", to_json(lambda)}};
      }
    }
    report.add_check({prefix + "dr_equals_tn_of_negation", anticom, witness});
  }
  report.body()["lattices"] = out;
}

}  // namespace

const char* section_name(Section s) {
  switch (s) {
    case Section::Signs: return "signs";
    case Section::Orbits: return "orbits";
    case Section::Endoscopy: return "endoscopy";
    case Section::Packet: return "packet";
    case Section::Lattices: return "lattices";
  }
  return "?";
}

std::vector<Section> all_sections() {
  return {Section::Signs, Section::Orbits, Section::Endoscopy, Section::Packet, Section::Lattices};
}

Report analyze(const InputSpec& spec, const std::vector<Section>& sections) {
  Report report("analyze");
  report.body()["input"] = spec.echo;
  report.body()["datum"] = {{"name", spec.datum_name},
                            {"rank", spec.datum.rank()},
                            {"semisimple_rank", spec.datum.semisimple_rank()},
                            {"num_roots", spec.datum.num_roots()},
                            {"theta", to_json(spec.theta.matrix)}};
  for (Section s : sections) {
    switch (s) {
      case Section::Signs: signs_section(spec, report); break;
      case Section::Orbits: orbits_section(spec, report); break;
      case Section::Endoscopy:
        if (spec.q) endoscopy_section(spec, report);
        break;
      case Section::Packet: packet_section(spec, report); break;
      case Section::Lattices:
        if (!spec.lattice_jobs.empty()) lattices_section(spec, report);
        break;
    }
  }
  report.finalize();
  return report;
}

}  // namespace endosign::cli
