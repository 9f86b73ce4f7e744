// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "opdi/connected.hpp"
#include "opdi/disconnected.hpp"
#include "opdi/extremal.hpp"
#include "opdi/oracle.hpp"
#include "support.hpp"

using namespace opdi;
using namespace opdi::test;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Witness tally shared by every criterion that produces completions.
struct WitnessLedger {
  long checked = 0;
  long failed = 0;
  void check(const Completion& c, int D) {
    ++checked;
    if (!verify_completion(c, D).ok) ++failed;
  }
} witnesses;

std::string first_mismatch;

void note_mismatch(const std::string& what, const Graph& g, int D) {
  if (!first_mismatch.empty()) return;
  std::ostringstream s;
  s << what << " at D=" << D << " on [" << format_graph(g) << "]";
  first_mismatch = s.str();
  for (char& ch : first_mismatch)
    if (ch == '\n') ch = ' ';
}

Outcome connected_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1001);
  long graphs = 0, checks = 0, mismatches = 0;
  while (graphs < 5000) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = generate_outerplanar(n, rng(), true);
    const OracleProfile prof = oracle_profile(g);
    const Vertex root = default_root(g);
    for (int D = 1; D <= n; ++D) {
      const ConnectedResult res = opdi_connected(g, root, D);
      const bool want = prof.min_diameter <= D;
      ++checks;
      if (res.feasible() != want || res.ecc != prof.at(root, D)) {
        ++mismatches;
        note_mismatch("connected", g, D);
      }
      if (res.feasible()) witnesses.check(reconstruct_completion(res), D);
      ConnectedSolver solver(g, D);
      for (Vertex r = 0; r < n; ++r) {
        ++checks;
        if (solver.ecc_star(r) != prof.at(r, D)) {
          ++mismatches;
          note_mismatch("ecc* at a cut or non-default root", g, D);
        }
      }
    }
    ++graphs;
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << graphs << " graphs, " << checks << " checks, " << mismatches << " mismatches, " << secs << " s (limit 300 s)";
  return {mismatches == 0 && secs < 300, d.str()};
}

Outcome disconnected_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2002);
  long graphs = 0, checks = 0, mismatches = 0, odd = 0, even = 0;
  while (graphs < 2000) {
    const int parts = 2 + static_cast<int>(rng() % 3);
    const Graph g = random_union(rng, parts, parts + static_cast<int>(rng() % static_cast<std::uint64_t>(9 - parts)));
    const std::size_t k = connected_components(g).size();
    if (k < 2 || k > 4) continue;
    const int opt = oracle_opdi(g);
    for (int D = 1; D <= g.order(); ++D) {
      const DisconnectedResult res = opdi_disconnected(g, D, {Execution::Parallel, true});
      ++checks;
      (D % 2 ? odd : even)++;
      if (res.feasible != (opt <= D)) {
        ++mismatches;
        note_mismatch("disconnected", g, D);
      }
      if (res.feasible) {
        if (res.witness)
          witnesses.check(*res.witness, D);
        else {
          ++witnesses.checked;
          ++witnesses.failed;
        }
      }
    }
    ++graphs;
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << graphs << " graphs, " << checks << " decisions (" << odd << " odd D, " << even << " even D), " << mismatches
    << " mismatches, " << secs << " s (limit 600 s)";
  return {mismatches == 0 && odd > 0 && even > 0 && secs < 600, d.str()};
}

Outcome dp_cells() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(3003);
  long cells = 0, mismatches = 0;
  while (cells < 600) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = generate_outerplanar(n, rng(), true);
    const auto keys = enumerate_triples(g, default_root(g));
    const int D = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    ConnectedSolver solver(g, D);
    for (int s = 0; s < 4; ++s) {
      const DPKey& key = keys[rng() % keys.size()];
      if (key.x.size() > 8) continue;
      ++cells;
      if (solver.pair_ecc(key.u, key.v, key.x) != oracle_pair_ecc_star(g, key.u, key.v, key.x, D)) {
        ++mismatches;
        note_mismatch("table cell", g, D);
      }
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << cells << " cells, " << mismatches << " mismatches, " << secs << " s (limit 300 s)";
  return {mismatches == 0 && secs < 300, d.str()};
}

Outcome witness_verification() {
  // Larger connected and disconnected instances beyond the oracle range.
  std::mt19937_64 rng(4004);
  for (int i = 0; i < 60; ++i) {
    const Graph g = generate_outerplanar(10 + i, rng(), true);
    const Completion approx = star_triangulate(g);
    witnesses.check(approx, approx.diameter);
    const int D = opdi_value(g);
    if (auto c = find_completion(g, D))
      witnesses.check(*c, D);
    else {
      ++witnesses.checked;
      ++witnesses.failed;
    }
  }
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_union(rng, 2 + i % 3, 12 + i % 10);
    const int D = opdi_value(g);
    if (auto c = find_completion(g, D))
      witnesses.check(*c, D);
    else {
      ++witnesses.checked;
      ++witnesses.failed;
    }
  }
  std::ostringstream d;
  d << witnesses.checked << " witnesses, " << witnesses.failed << " rejected (required 0)";
  return {witnesses.failed == 0 && witnesses.checked > 0, d.str()};
}

Outcome matching_identity() {
  const auto t0 = Clock::now();
  long graphs = 0, bad = 0, brute = 0, brute_bad = 0;
  for (int n = 4; n <= 8; ++n)
    for_each_maximal_outerplanar(n, [&](const MaximalOuterplanar& m) {
      const Graph g = m.graph();
      const int d = diameter(g);
      const ParallelMatching pm = max_parallel_matching(m);
      ++graphs;
      if (static_cast<int>(pm.edges.size()) != d - 1 || !is_parallel_matching(pm.edges, m.outer_order)) ++bad;
      if (n <= 7) {
        ++brute;
        if (brute_force_parallel_matching(g, m.outer_order) != d - 1) ++brute_bad;
      }
    });
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << graphs << " graphs, " << bad << " violations, brute force " << brute << " graphs with " << brute_bad
    << " disagreements, " << secs << " s (limit 180 s)";
  return {bad == 0 && brute_bad == 0 && secs < 180, d.str()};
}

Outcome approximation() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(6006);
  long count = 0, bad = 0;
  for (; count < 1200; ++count) {
    const Graph g = generate_outerplanar(3 + static_cast<int>(rng() % 6), rng(), true);
    const Completion c = star_triangulate(g);
    witnesses.check(c, c.diameter);
    const int opt = oracle_opdi(g);
    if (!(opt <= c.diameter && c.diameter <= 2 * opt)) ++bad;
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << count << " instances, " << bad << " outside [opdi, 2 opdi], " << secs << " s (limit 180 s)";
  return {bad == 0 && secs < 180, d.str()};
}

Outcome obstructions() {
  long members = 0, feasible = 0;
  std::ostringstream sizes;
  for (int D = 1; D <= 5; ++D)
    for (Family f : {Family::A, Family::B})
      for (const Graph& g : gen_obstruction(f, D)) {
        ++members;
        if (!verify_obstruction(g, D)) ++feasible;
        sizes << ' ' << family_name(f) << D << ":n=" << g.order();
      }
  const bool four_k1 = verify_obstruction(Graph(4), 1);
  const bool claw = verify_obstruction(star_graph(3), 1);
  std::ostringstream d;
  d << members << " members (" << sizes.str().substr(1) << "), " << feasible << " feasible at D; 4K1 at D=1 "
    << (four_k1 ? "infeasible" : "FEASIBLE") << ", K1,3 at D=1 " << (claw ? "infeasible" : "FEASIBLE");
  return {feasible == 0 && four_k1 && claw && members > 0, d.str()};
}

Outcome radius_bound() {
  long graphs = 0, bad = 0;
  for (int n = 1; n <= 8; ++n)
    for_each_maximal_outerplanar(n, [&](const MaximalOuterplanar& m) {
      const Graph g = m.graph();
      ++graphs;
      if (radius(g) > diameter(g) / 2 + 1) ++bad;
    });
  std::ostringstream d;
  d << graphs << " maximal outerplanar graphs, " << bad << " violations";
  return {bad == 0, d.str()};
}

double time_decide(const Graph& g, int D) {
  const auto t0 = Clock::now();
  (void)decide(g, D);
  return seconds_since(t0);
}

Outcome performance() {
  std::ostringstream d;
  // Loosest bound: nothing is pruned by D. Running times vary several-fold
  // between random instances of one size, so each point is a median of seven;
  // each instance keeps the faster of two runs to damp machine noise.
  (void)time_decide(generate_outerplanar(60, 99, true), 59);
  std::array<double, 3> medians{};
  const std::array<int, 3> sizes{100, 200, 400};
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<double> t;
    for (std::uint64_t seed = 1; seed <= 7; ++seed) {
      const Graph g = generate_outerplanar(sizes[i], seed, true);
      t.push_back(std::min(time_decide(g, g.order() - 1), time_decide(g, g.order() - 1)));
    }
    std::sort(t.begin(), t.end());
    medians[i] = t[3];
  }
  // Least-squares slope of log t against log n.
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    mx += std::log(sizes[i]) / 3;
    my += std::log(medians[i]) / 3;
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    sxy += (std::log(sizes[i]) - mx) * (std::log(medians[i]) - my);
    sxx += (std::log(sizes[i]) - mx) * (std::log(sizes[i]) - mx);
  }
  const double slope = sxy / sxx;

  double t300 = 0;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Graph g = generate_outerplanar(300, seed, true);
    t300 = std::max(t300, time_decide(g, g.order() - 1));
  }

  // Two to four components on 60 vertices at every even bound up to 16. Seed 6
  // with two halves is the slowest case in a scan of seeds 1..10: the guess
  // search exhausts all 900 connecting edges at D = 4.
  double t_dis = 0;
  long dis_runs = 0;
  for (std::uint64_t seed : {1, 2, 3, 6})
    for (int parts = 2; parts <= 4; ++parts) {
      Graph g(0);
      for (int c = 0; c < parts; ++c)
        g = disjoint_union(g, generate_outerplanar(60 / parts, seed * 10 + static_cast<std::uint64_t>(c), true));
      for (int D = 2; D <= 16; D += 2, ++dis_runs) t_dis = std::max(t_dis, time_decide(g, D));
    }
  d << "n=300 worst " << t300 << " s (limit 10 s); median at n=100/200/400: " << medians[0] << "/" << medians[1] << "/"
    << medians[2] << " s, slope " << slope << " (limit 3.5); disconnected n=60 even D worst " << t_dis
    << " s over " << dis_runs << " decisions (limit 60 s)";
  return {t300 < 10 && slope < 3.5 && t_dis < 60, d.str()};
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* p = ::popen(command.c_str(), "r");
  if (!p) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  const int status = ::pclose(p);
  return out + "<exit " + std::to_string(status) + ">";
}

Outcome determinism() {
  const std::string cli = OPDI_CLI_PATH;
  const std::string dir = "/tmp/opdi_acceptance_" + std::to_string(::getpid());
  if (std::system(("mkdir -p " + dir).c_str()) != 0) return {false, "cannot create " + dir};
  std::vector<std::string> commands;
  for (int i = 0; i < 4; ++i) {
    const std::string file = dir + "/g" + std::to_string(i) + ".txt";
    if (std::system((cli + " gen " + std::to_string(12 + 6 * i) + " " + std::to_string(40 + i) + " --connected > " + file).c_str()) != 0)
      return {false, "cannot generate inputs"};
    commands.push_back(cli + " minimize " + file + " --witness --json");
    commands.push_back(cli + " decide " + file + " 4 --witness");
    commands.push_back(cli + " approx " + file);
  }
  commands.push_back(cli + " obstruction B 3");
  commands.push_back(cli + " gen 30 9 --connected");
  long runs = 0, differing = 0;
  for (const std::string& c : commands) {
    const std::string a = capture(c), b = capture(c);
    ++runs;
    if (a != b) ++differing;
  }
  (void)!std::system(("rm -rf " + dir).c_str());
  std::ostringstream d;
  d << runs << " commands run twice, " << differing << " differing outputs";
  return {differing == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"connected oracle equivalence", connected_equivalence},
      {"disconnected oracle equivalence", disconnected_equivalence},
      {"table cell equivalence", dp_cells},
      {"witness verification", witness_verification},
      {"parallel matching identity", matching_identity},
      {"star triangulation 2-approximation", approximation},
      {"obstruction families", obstructions},
      {"radius bound", radius_bound},
      {"performance", performance},
      {"determinism", determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all &= o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  if (!first_mismatch.empty()) std::cout << "first mismatch: " << first_mismatch << std::endl;
  return all ? 0 : 1;
}
