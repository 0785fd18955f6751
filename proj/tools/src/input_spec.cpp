#include "endosign/cli/input_spec.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "endosign/roots/catalog.hpp"

namespace endosign::cli {

namespace {

const std::set<std::string> kKnownKeys = {"version", "datum", "theta", "omega", "w", "q", "m_override", "lattice_jobs"};

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

/// Runs f, re-raising any InputError as a SpecError located at `where`.
template <class F>
auto at(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SpecError&) {
    throw;
  } catch (const InputError& e) {
    throw SpecError(where, e.what());
  }
}

Integer read_integer(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  if (j.is_string()) {
    const Rational r = at(ptr, [&] { return parse_rational(j.get<std::string>()); });
    if (r.get_den() != 1) throw SpecError(ptr, "expected an integer, got '" + j.get<std::string>() + "'");
    return r.get_num();
  }
  throw SpecError(ptr, "expected an integer");
}

long read_small(const Json& j, const std::string& ptr, long lo, long hi) {
  const Integer x = read_integer(j, ptr);
  if (x < lo || x > hi) {
    throw SpecError(ptr, "value " + x.get_str() + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return x.get_si();
}

Rational read_rational(const Json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(read_integer(j, ptr));
  if (j.is_string()) return at(ptr, [&] { return parse_rational(j.get<std::string>()); });
  throw SpecError(ptr, "expected a rational written as \"num/den\"");
}

const Json& require_array(const Json& j, const std::string& ptr) {
  if (!j.is_array()) throw SpecError(ptr, "expected an array");
  return j;
}

IntVector read_int_vector(const Json& j, const std::string& ptr, std::optional<std::size_t> length = {}) {
  require_array(j, ptr);
  if (length && j.size() != *length) {
    throw SpecError(ptr, "expected " + std::to_string(*length) + " entries, got " + std::to_string(j.size()));
  }
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_integer(j[i], child(ptr, i)));
  return v;
}

IntMatrix read_square_matrix(const Json& j, const std::string& ptr, std::optional<std::size_t> size = {}) {
  require_array(j, ptr);
  const std::size_t n = size.value_or(j.size());
  if (j.size() != n || n == 0) throw SpecError(ptr, "expected a square matrix with " + std::to_string(n) + " rows");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(read_int_vector(j[i], child(ptr, i), n));
  return IntMatrix::from_rows(rows);
}

WeylWord read_word(const Json& j, const std::string& ptr, std::size_t semisimple_rank) {
  require_array(j, ptr);
  WeylWord word;
  for (std::size_t i = 0; i < j.size(); ++i) {
    word.push_back(static_cast<int>(read_small(j[i], child(ptr, i), 1, static_cast<long>(semisimple_rank))));
  }
  return word;
}

RootDatum read_datum(const Json& j, std::string& name) {
  const std::string ptr = "/datum";
  if (j.is_string()) {
    name = j.get<std::string>();
    return at(ptr, [&] { return build_named(name); });
  }
  if (!j.is_object()) throw SpecError(ptr, "expected a catalog name or {rank, simple_roots, simple_coroots}");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "rank" && key != "simple_roots" && key != "simple_coroots") {
      throw SpecError(child(ptr, key), "unknown field");
    }
  }
  if (!j.contains("rank")) throw SpecError(ptr, "missing field 'rank'");
  const auto rank = static_cast<std::size_t>(read_small(j["rank"], child(ptr, "rank"), 1, 16));
  std::vector<IntVector> roots, coroots;
  const Json& rj = j.contains("simple_roots") ? j["simple_roots"] : Json::array();
  const Json& cj = j.contains("simple_coroots") ? j["simple_coroots"] : Json::array();
  require_array(rj, child(ptr, "simple_roots"));
  require_array(cj, child(ptr, "simple_coroots"));
  if (rj.size() != cj.size()) throw SpecError(ptr, "simple_roots and simple_coroots differ in length");
  for (std::size_t i = 0; i < rj.size(); ++i) {
    roots.push_back(read_int_vector(rj[i], child(child(ptr, "simple_roots"), i), rank));
    coroots.push_back(read_int_vector(cj[i], child(child(ptr, "simple_coroots"), i), rank));
  }
  name = "explicit";
  return at(ptr, [&] { return RootDatum::from_simple(rank, roots, coroots, "explicit"); });
}

BasedAutomorphism read_theta(const Json* j, const RootDatum& g) {
  const std::string ptr = "/theta";
  std::vector<int> identity(g.semisimple_rank());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i + 1);
  if (j == nullptr) return at(ptr, [&] { return based_automorphism_from_permutation(g, identity); });
  if (j->is_array()) {
    if (j->size() != g.semisimple_rank()) {
      throw SpecError(ptr, "permutation must have " + std::to_string(g.semisimple_rank()) + " entries");
    }
    std::vector<int> perm;
    for (std::size_t i = 0; i < j->size(); ++i) {
      perm.push_back(static_cast<int>(read_small((*j)[i], child(ptr, i), 1, static_cast<long>(g.semisimple_rank()))));
    }
    return at(ptr, [&] { return based_automorphism_from_permutation(g, perm); });
  }
  if (j->is_object() && j->contains("matrix") && j->size() == 1) {
    const IntMatrix m = read_square_matrix((*j)["matrix"], child(ptr, "matrix"), g.rank());
    return at(ptr, [&] { return make_based_automorphism(g, m); });
  }
  throw SpecError(ptr, "expected a permutation of simple indices or {\"matrix\": [[...]]}");
}

}  // namespace

InputSpec parse_input_spec(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SpecError("byte " + std::to_string(e.byte), e.what());
  }
  if (!root.is_object()) throw SpecError("/", "top level must be an object");
  for (const auto& [key, value] : root.items()) {
    (void)value;
    if (!kKnownKeys.count(key)) throw SpecError("/" + key, "unknown field");
  }
  if (!root.contains("version")) throw SpecError("/version", "missing mandatory field");
  if (read_integer(root["version"], "/version") != 1) throw SpecError("/version", "unsupported version (expected 1)");
  if (!root.contains("datum")) throw SpecError("/datum", "missing mandatory field");

  InputSpec spec;
  spec.echo = root;
  spec.datum = read_datum(root["datum"], spec.datum_name);
  const RootDatum& g = spec.datum;
  spec.theta = read_theta(root.contains("theta") ? &root["theta"] : nullptr, g);

  const WeylWord omega = root.contains("omega") ? read_word(root["omega"], "/omega", g.semisimple_rank()) : WeylWord{};
  spec.omega = weyl_from_word(g, omega);
  at("/omega", [&] { return make_twist(g, spec.omega, spec.theta); });
  if (root.contains("w")) {
    spec.w = weyl_from_word(g, read_word(root["w"], "/w", g.semisimple_rank()));
    at("/w", [&] { return make_twist(g, spec.w, spec.theta); });
  } else {
    spec.w = spec.omega;
  }

  if (root.contains("q")) {
    const Json& qj = require_array(root["q"], "/q");
    if (qj.size() != g.rank()) {
      throw SpecError("/q", "expected " + std::to_string(g.rank()) + " coordinates, got " + std::to_string(qj.size()));
    }
    RatVector q;
    for (std::size_t i = 0; i < qj.size(); ++i) q.push_back(read_rational(qj[i], child("/q", i)));
    spec.q = TorsionDualElement(q);
  }

  if (root.contains("m_override")) {
    const auto m = static_cast<unsigned>(read_small(root["m_override"], "/m_override", 1, 10000));
    const FrobeniusTwist t = make_twist(g, spec.w, spec.theta);
    if (m % t.order != 0) {
      throw SpecError("/m_override", "declared order " + std::to_string(m) + " is not a multiple of the twist order " +
                                         std::to_string(t.order));
    }
    spec.m_override = m;
  }

  if (root.contains("lattice_jobs")) {
    const Json& jobs = require_array(root["lattice_jobs"], "/lattice_jobs");
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      const std::string ptr = child("/lattice_jobs", i);
      const Json& job = jobs[i];
      if (!job.is_object()) throw SpecError(ptr, "expected {\"sigma\": [[...]], \"m\": k}");
      for (const auto& [key, value] : job.items()) {
        (void)value;
        if (key != "sigma" && key != "m" && key != "label") throw SpecError(child(ptr, key), "unknown field");
      }
      if (!job.contains("sigma") || !job.contains("m")) throw SpecError(ptr, "fields 'sigma' and 'm' are required");
      const IntMatrix sigma = read_square_matrix(job["sigma"], child(ptr, "sigma"));
      const auto m = static_cast<unsigned>(read_small(job["m"], child(ptr, "m"), 1, 10000));
      std::string label = "job" + std::to_string(i);
      if (job.contains("label")) {
        if (!job["label"].is_string()) throw SpecError(child(ptr, "label"), "expected a string");
        label = job["label"].get<std::string>();
      }
      spec.lattice_jobs.push_back({label, at(ptr, [&] { return GammaLattice(sigma, m); })});
    }
  }
  return spec;
}

InputSpec load_input_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_spec(buf.str());
}

}  // namespace endosign::cli
