#include "opdi/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "opdi/completion.hpp"
#include "opdi/disconnected.hpp"
#include "opdi/extremal.hpp"
#include "opdi/generator.hpp"
#include "opdi/oracle.hpp"
#include "opdi/outerplanar.hpp"

namespace opdi {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  bool witness = false;
  bool json = false;
  bool crosscheck = false;
  bool quiet = false;
  bool timing = false;
};

// Failure that maps to the error exit code with a one-line message.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json edge_list(std::span<const Edge> edges) {
  Json a = Json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

std::string value_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_array()) {
    std::string s;
    for (const Json& x : v) {
      if (!s.empty()) s += ' ';
      s += x.is_array() && x.size() == 2 ? std::to_string(x[0].get<int>()) + '-' + std::to_string(x[1].get<int>()) : value_text(x);
    }
    return s;
  }
  return v.dump();
}

class Runner {
 public:
  Runner(Flags flags, std::ostream& out) : f_(flags), out_(out) {}

  void start(const std::string& command) {
    report_ = Json::object();
    report_["command"] = command;
    t0_ = std::chrono::steady_clock::now();
  }

  Json& report() { return report_; }

  void describe(const Graph& g) {
    report_["n"] = g.order();
    report_["m"] = g.size();
    report_["components"] = connected_components(g).size();
  }

  void attach_witness(const Completion& c, int bound) {
    const VerifyResult v = verify_completion(c, bound);
    if (!v.ok) {
      report_["witness"] = "rejected: " + v.reason;
      return;
    }
    report_["witness_added"] = edge_list(c.added);
    report_["witness_outer_order"] = c.outer_order;
    report_["witness_diameter"] = c.diameter;
  }

  void emit() {
    if (f_.timing)
      report_["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    if (f_.json) {
      out_ << report_.dump() << '\n';
      return;
    }
    if (f_.quiet) {
      if (report_.contains("answer")) out_ << value_text(report_["answer"]) << '\n';
      return;
    }
    for (const auto& [key, value] : report_.items()) out_ << key << ": " << value_text(value) << '\n';
  }

  const Flags& flags() const { return f_; }

 private:
  Flags f_;
  std::ostream& out_;
  Json report_;
  std::chrono::steady_clock::time_point t0_;
};

Graph load(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_graph(buf.str());
  }
  return read_graph_file(path);
}

// Loads an outerplanar graph, naming the failed certificate otherwise.
Graph load_outerplanar(const std::string& path) {
  Graph g = load(path);
  const long long bound = 2LL * g.order() - 3;
  if (g.order() >= 2 && static_cast<long long>(g.size()) > bound)
    throw CliError("not outerplanar: " + std::to_string(g.size()) + " edges exceed 2n-3 = " + std::to_string(bound));
  if (!is_outerplanar(g)) throw CliError("not outerplanar: planarity test with a universal apex vertex failed");
  return g;
}

void require_oracle_range(const Graph& g) {
  if (g.order() > kOracleMaxVertices)
    throw CliError("oracle refuses n = " + std::to_string(g.order()) + ": exhaustive enumeration is capped at " +
                   std::to_string(kOracleMaxVertices) + " vertices");
}

int cmd_decide(Runner& r, const std::string& path, int D) {
  r.start("decide");
  const Graph g = load_outerplanar(path);
  r.describe(g);
  r.report()["bound"] = D;
  const DisconnectedResult res = opdi_disconnected(g, D, {Execution::Parallel, r.flags().witness});
  r.report()["answer"] = res.feasible ? "yes" : "no";
  r.report()["rule"] = std::string(rule_name(res.rule));
  if (res.feasible && r.flags().witness) {
    if (res.witness)
      r.attach_witness(*res.witness, D);
    else
      r.report()["witness"] = "unavailable";
  }
  bool agree = true;
  if (r.flags().crosscheck) {
    if (g.order() <= kOracleMaxVertices) {
      const bool oracle = oracle_opdi(g) <= D;
      agree = oracle == res.feasible;
      r.report()["oracle_answer"] = oracle ? "yes" : "no";
      r.report()["crosscheck"] = agree ? "agree" : "disagree";
    } else {
      r.report()["crosscheck"] = "skipped: n above oracle cap";
    }
  }
  r.emit();
  if (!agree) throw CliError("solver and oracle disagree");
  return res.feasible ? kExitYes : kExitNo;
}

int cmd_minimize(Runner& r, const std::string& path) {
  r.start("minimize");
  const Graph g = load_outerplanar(path);
  r.describe(g);
  const int value = opdi_value(g);
  r.report()["answer"] = value;
  if (r.flags().witness) {
    if (auto c = find_completion(g, value))
      r.attach_witness(*c, value);
    else
      r.report()["witness"] = "unavailable";
  }
  bool agree = true;
  if (r.flags().crosscheck) {
    if (g.order() <= kOracleMaxVertices) {
      // Bounds start at 1, so single vertices report 1.
      const int oracle = std::max(1, oracle_opdi(g));
      agree = oracle == value;
      r.report()["oracle_answer"] = oracle;
      r.report()["crosscheck"] = agree ? "agree" : "disagree";
    } else {
      r.report()["crosscheck"] = "skipped: n above oracle cap";
    }
  }
  r.emit();
  if (!agree) throw CliError("solver and oracle disagree");
  return kExitYes;
}

int cmd_oracle(Runner& r, const std::string& path, const std::string& target) {
  r.start("oracle");
  const Graph g = load_outerplanar(path);
  require_oracle_range(g);
  r.describe(g);
  const OracleProfile prof = oracle_profile(g);
  if (target == "min") {
    r.report()["answer"] = prof.min_diameter;
    r.emit();
    return kExitYes;
  }
  int D = 0;
  try {
    std::size_t used = 0;
    D = std::stoi(target, &used);
    if (used != target.size() || D < 1) throw std::invalid_argument(target);
  } catch (const std::exception&) {
    throw CliError("oracle target must be a positive integer or 'min', got '" + target + "'");
  }
  const bool yes = prof.min_diameter <= D;
  r.report()["bound"] = D;
  r.report()["answer"] = yes ? "yes" : "no";
  r.emit();
  return yes ? kExitYes : kExitNo;
}

int cmd_approx(Runner& r, const std::string& path) {
  r.start("approx");
  const Graph g = load_outerplanar(path);
  if (!is_connected(g)) throw CliError("approx needs a connected graph");
  r.describe(g);
  const Completion c = star_triangulate(g);
  r.report()["answer"] = c.diameter;
  r.attach_witness(c, -1);
  if (r.flags().crosscheck) {
    if (g.order() <= kOracleMaxVertices) {
      const int opt = oracle_opdi(g);
      r.report()["oracle_answer"] = opt;
      const bool ok = opt <= c.diameter && c.diameter <= 2 * std::max(opt, 1);
      r.report()["crosscheck"] = ok ? "within factor 2" : "bound violated";
    } else {
      r.report()["crosscheck"] = "skipped: n above oracle cap";
    }
  }
  r.emit();
  return kExitYes;
}

int cmd_matching(Runner& r, const std::string& path) {
  r.start("matching");
  const Graph g = load(path);
  if (!is_maximal_outerplanar(g) || g.order() < 3) throw CliError("matching needs a maximal outerplanar graph with n >= 3");
  r.describe(g);
  const ParallelMatching pm = max_parallel_matching(g);
  r.report()["answer"] = pm.edges.size();
  r.report()["diameter"] = diameter(g);
  r.report()["matching"] = edge_list(pm.edges);
  r.report()["outer_order"] = pm.outer_order;
  if (r.flags().crosscheck) {
    if (g.size() <= 20) {
      const int brute = brute_force_parallel_matching(g, pm.outer_order);
      r.report()["brute_force_answer"] = brute;
      r.report()["crosscheck"] = brute == static_cast<int>(pm.edges.size()) ? "agree" : "disagree";
    } else {
      r.report()["crosscheck"] = "skipped: too many edges for brute force";
    }
  }
  r.emit();
  return kExitYes;
}

int cmd_obstruction(Runner& r, std::ostream& out, const std::string& family, int index, const std::string& dir,
                    bool verify) {
  r.start("obstruction");
  const Family f = family == "A" ? Family::A : Family::B;
  const std::vector<Graph> members = gen_obstruction(f, index);
  r.report()["family"] = family;
  r.report()["index"] = index;
  r.report()["answer"] = members.size();
  Json texts = Json::array(), files = Json::array(), verified = Json::array();
  for (std::size_t i = 0; i < members.size(); ++i) {
    texts.push_back(format_graph(members[i]));
    if (!dir.empty()) {
      std::filesystem::create_directories(dir);
      const auto path = std::filesystem::path(dir) / (family + std::to_string(index) + "_" + std::to_string(i + 1) + ".txt");
      std::ofstream file(path);
      if (!file) throw CliError("cannot write " + path.string());
      write_graph(file, members[i]);
      files.push_back(path.string());
    }
    if (verify) verified.push_back(index == 0 ? true : verify_obstruction(members[i], index));
  }
  if (!dir.empty()) r.report()["files"] = files;
  if (verify) r.report()["verified"] = verified;
  if (r.flags().json || r.flags().quiet || !dir.empty()) {
    if (r.flags().json) r.report()["graphs"] = texts;
    r.emit();
  } else {
    for (std::size_t i = 0; i < members.size(); ++i) {
      out << "# " << family << "_" << index << " member " << (i + 1) << " of " << members.size();
      if (verify) out << (verified[i].get<bool>() ? ", verified" : ", NOT verified");
      out << '\n' << texts[i].get<std::string>();
    }
  }
  if (verify)
    for (const Json& v : verified)
      if (!v.get<bool>()) return kExitNo;
  return kExitYes;
}

int cmd_gen(Runner& r, std::ostream& out, int n, std::uint64_t seed, bool connected) {
  r.start("gen");
  const Graph g = generate_outerplanar(n, seed, connected);
  if (r.flags().json) {
    r.describe(g);
    r.report()["seed"] = seed;
    r.report()["connected"] = connected;
    r.report()["graph"] = format_graph(g);
    r.emit();
  } else {
    write_graph(out, g);
  }
  return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Outerplanar diameter improvement: exact solver, oracle and extremal tools", "opdi"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_flag("--witness", flags.witness, "Emit a verified completion for yes answers");
  app.add_flag("--json", flags.json, "Machine-readable flat JSON report");
  app.add_flag("--crosscheck", flags.crosscheck, "Compare against the exhaustive oracle when n is small");
  app.add_flag("--quiet", flags.quiet, "Print only the answer");
  app.add_flag("--timing", flags.timing, "Include wall time in the report (breaks byte-identical output)");

  std::string file, target, family, dir;
  int bound = 0, index = 0, n = 0;
  std::uint64_t seed = 0;
  bool connected = false, verify = false;

  auto* decide_cmd = app.add_subcommand("decide", "Is there an outerplanar completion of diameter <= D?");
  decide_cmd->add_option("file", file, "Edge-list file, or - for stdin")->required();
  decide_cmd->add_option("D", bound, "Diameter bound")->required()->check(CLI::Range(1, 1 << 20));
  auto* minimize_cmd = app.add_subcommand("minimize", "Smallest achievable diameter");
  minimize_cmd->add_option("file", file)->required();
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive answer for n <= 10");
  oracle_cmd->add_option("file", file)->required();
  oracle_cmd->add_option("target", target, "D or 'min'")->required();
  auto* approx_cmd = app.add_subcommand("approx", "Star triangulation 2-approximation");
  approx_cmd->add_option("file", file)->required();
  auto* obstruction_cmd = app.add_subcommand("obstruction", "Members of obstruction family A_i or B_i");
  obstruction_cmd->add_option("family", family)->required()->check(CLI::IsMember({"A", "B"}));
  obstruction_cmd->add_option("index", index)->required()->check(CLI::NonNegativeNumber);
  obstruction_cmd->add_option("--out", dir, "Write each member to DIR/<family><index>_<k>.txt");
  obstruction_cmd->add_flag("--verify", verify, "Check that each member is infeasible at D = index");
  auto* matching_cmd = app.add_subcommand("matching", "Maximum parallel matching of a maximal outerplanar graph");
  matching_cmd->add_option("file", file)->required();
  auto* gen_cmd = app.add_subcommand("gen", "Random outerplanar graph");
  gen_cmd->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("seed", seed)->required();
  gen_cmd->add_flag("--connected", connected, "Never delete a bridge");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitYes : kExitError;
  }

  Runner runner(flags, out);
  try {
    if (*decide_cmd) return cmd_decide(runner, file, bound);
    if (*minimize_cmd) return cmd_minimize(runner, file);
    if (*oracle_cmd) return cmd_oracle(runner, file, target);
    if (*approx_cmd) return cmd_approx(runner, file);
    if (*obstruction_cmd) return cmd_obstruction(runner, out, family, index, dir, verify);
    if (*matching_cmd) return cmd_matching(runner, file);
    if (*gen_cmd) return cmd_gen(runner, out, n, seed, connected);
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace opdi
