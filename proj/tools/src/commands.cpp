#include "endosign/cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "endosign/cli/analyze.hpp"
#include "endosign/cli/suites.hpp"
#include "endosign/roots/catalog.hpp"

namespace endosign::cli {

namespace {

/// "-" sends the JSON document to stdout in place of the text summary.
void emit_json(const Report& report, const std::string& path, std::ostream& out) {
  const std::string text = report.document(utc_timestamp()).dump(2) + "\n";
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::string compact(const Json& j) { return j.dump(); }

void print_checks(const Report& report, std::ostream& out, bool failures_only) {
  for (const auto& c : report.checks()) {
    if (failures_only && c.pass) continue;
    out << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << compact(c.witness) << "\n";
  }
  const Json& s = report.body()["summary"];
  out << "summary: " << s["passed"] << " passed, " << s["failed"] << " failed of " << s["checks"] << "\n";
}

void print_analyze(const Report& report, std::ostream& out) {
  const Json& b = report.body();
  out << "datum " << b["datum"]["name"].get<std::string>() << " (rank " << b["datum"]["rank"] << ")\n";
  if (b.contains("signs")) {
    const Json& s = b["signs"];
    out << "signs: eps_relative_rank=" << s["eps_relative_rank"] << " det_omega=" << s["det_omega"]
        << " eps_L=" << s["eps_L"] << " (-1)^N=" << s["minus_one_to_n"] << " N=" << s["n_symmetric"] << "\n";
  }
  if (b.contains("orbits")) {
    out << "orbits: " << b["orbits"]["count"] << " total, " << b["orbits"]["n_symmetric"] << " symmetric\n";
  }
  if (b.contains("endoscopy")) {
    const Json& e = b["endoscopy"];
    out << "endoscopy: q=" << compact(e["q"]) << " |R_H|=" << e["h_num_roots"] << " elliptic=" << e["elliptic"] << "\n";
  }
  if (b.contains("packet")) {
    const Json& p = b["packet"];
    out << "packet: m=" << p["m"] << " C_phi=" << p["component_group"]["text"].get<std::string>()
        << " [Xbar_Gamma]_tor=" << p["xbar_torsion"]["text"].get<std::string>() << " fibers=" << p["num_fibers"]
        << " trselp=" << p["trselp"] << "\n";
  }
  if (b.contains("lattices")) {
    for (const auto& l : b["lattices"]) {
      out << "lattice " << l["label"].get<std::string>() << ": H^1=" << l["h1"]["text"].get<std::string>()
          << " H^-1(dual)=" << l["h_minus1_dual"]["text"].get<std::string>() << "\n";
    }
  }
  for (const auto& w : b["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
  print_checks(report, out, false);
}

std::vector<long> parse_primes(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long p = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(p);
    } catch (const std::logic_error&) {
      throw InputError("--primes: '" + item + "' is not an integer");
    }
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Endoscopic sign invariants, Tate-Nakayama pairings and packet combinatorics"};
  app.require_subcommand(1);

  std::string input_path, json_path, suite, filter, primes_text = "3,5,7,11,13";
  VerifyOptions options;
  bool quiet = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Run every analysis on an InputSpec file");
  std::vector<std::pair<CLI::App*, Section>> section_cmds;
  for (Section s : all_sections()) {
    if (s == Section::Lattices) continue;
    auto* sub = app.add_subcommand(section_name(s), std::string("Run only the ") + section_name(s) + " section");
    section_cmds.emplace_back(sub, s);
  }
  for (auto* sub : app.get_subcommands([](CLI::App* a) { return a->get_name() != "verify"; })) {
    sub->add_option("file", input_path, "InputSpec JSON file")->required();
    sub->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  }

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "signs|pairings|anticom|diagram|gauss|claims|all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--max-rank", options.max_rank, "Largest rank (<= 3)");
  verify_cmd->add_option("--max-order", options.max_order, "Largest Galois order m (<= 6)");
  verify_cmd->add_option("--primes", primes_text, "Comma-separated odd primes (<= 101)");
  verify_cmd->add_option("--seed", options.seed, "Seed for every randomized case");
  verify_cmd->add_option("--samples", options.samples, "Random conjugate lattices per randomized suite");
  verify_cmd->add_option("--threads", options.threads, "Worker threads (0 = all cores)");
  verify_cmd->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");
  verify_cmd->add_flag("--quiet", quiet, "Print failures and the summary only");

  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in root data");
  catalog_cmd->add_option("--filter", filter, "Substring filter on names");
  catalog_cmd->add_option("--json", json_path, "Write the JSON listing here ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (catalog_cmd->parsed()) {
      Report report("catalog");
      Json entries = Json::array();
      for (const auto& e : catalog(filter)) {
        entries.push_back({{"name", e.name}, {"rank", e.rank}, {"num_roots", e.num_roots}, {"weyl_order", to_json(e.weyl_order)}});
      }
      report.body()["filter"] = filter;
      report.body()["entries"] = entries;
      report.finalize();
      if (!json_path.empty()) emit_json(report, json_path, out);
      if (json_path != "-") {
        for (const auto& e : entries) {
          out << e["name"].get<std::string>() << "  rank=" << e["rank"] << "  roots=" << e["num_roots"]
              << "  |W|=" << e["weyl_order"] << "\n";
        }
      }
      return kPass;
    }

    if (verify_cmd->parsed()) {
      options.primes = parse_primes(primes_text);
      const Report report = verify(suite, options);
      if (!json_path.empty()) emit_json(report, json_path, out);
      if (json_path != "-") {
        out << "suite " << suite << " (seed " << options.seed << ")\n";
        for (const auto& [field, total] : report.body()["totals"].items()) {
          if (total != 0) out << "  " << field << ": " << total << "\n";
        }
        print_checks(report, out, quiet);
      }
      return report.failures() == 0 ? kPass : kCounterexample;
    }

    std::vector<Section> sections = all_sections();
    for (const auto& [sub, s] : section_cmds) {
      if (sub->parsed()) sections = {s};
    }
    (void)analyze_cmd;
    const InputSpec spec = load_input_spec(input_path);
    const Report report = analyze(spec, sections);
    if (!json_path.empty()) emit_json(report, json_path, out);
    if (json_path != "-") print_analyze(report, out);
    return report.failures() == 0 ? kPass : kCounterexample;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace endosign::cli
