#include "opdi/disconnected.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>

#include "opdi/connected.hpp"
#include "opdi/outerplanar.hpp"

namespace opdi {

namespace {

// Runs body(i) for i in [0, count), fanning out under OpenMP when asked.
// The first exception thrown by any iteration is rethrown afterwards.
template <class F>
void for_range(std::ptrdiff_t count, Execution exec, F&& body) {
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(opdi_range_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

bool connected_feasible(const Graph& h, int D) {
  if (h.order() <= 1) return true;
  ConnectedSolver solver(h, D);
  return is_finite(solver.ecc_star(default_root(h)));
}

// c plus one fresh vertex joined to u.
Graph with_pendant(const Graph& c, Vertex u) {
  Graph h(c.order() + 1, c.edges());
  h.add_edge(u, c.order());
  return h;
}

struct Pendant {
  int ecc = kInfinity;
  Vertex at = -1;
};

// min over u of ecc*(v) in c + v + uv. Since r+ >= r*, a value equal to
// `floor` cannot be beaten and stops the serial scan.
Pendant escalate(const Graph& c, int D, int floor, Execution exec) {
  const int n = c.order();
  std::vector<int> vals(static_cast<std::size_t>(n), kInfinity);
  if (exec == Execution::Serial) {
    for (Vertex u = 0; u < n; ++u) {
      vals[static_cast<std::size_t>(u)] = ConnectedSolver(with_pendant(c, u), D).ecc_star(n);
      if (vals[static_cast<std::size_t>(u)] == floor) break;
    }
  } else {
    for_range(n, exec, [&](std::ptrdiff_t u) {
      vals[static_cast<std::size_t>(u)] = ConnectedSolver(with_pendant(c, static_cast<Vertex>(u)), D).ecc_star(n);
    });
  }
  Pendant best;
  for (Vertex u = 0; u < n; ++u)
    if (vals[static_cast<std::size_t>(u)] < best.ecc) best = {vals[static_cast<std::size_t>(u)], u};
  return best;
}

struct Radius {
  int value = kInfinity;
  Vertex at = -1;
};

Radius radius_of(const Graph& c, int D) {
  if (c.order() <= 1) return {0, 0};
  ConnectedSolver solver(c, D);
  Radius best;
  for (Vertex u = 0; u < c.order(); ++u) {
    const int e = solver.ecc_star(u);
    if (e < best.value) best = {e, u};
  }
  return best;
}

void check_input(const Graph& g, int D) {
  if (D < 1) throw std::invalid_argument("diameter bound must be at least 1");
  if (!is_outerplanar(g)) throw GraphError("input graph is not outerplanar");
}

// One attachment step of the edge-guessing search: pick a in `from`, b in `to`.
struct Step {
  const VertexList* from;
  const VertexList* to;
};

// Depth-first search over connecting edges, in lexicographic order of
// (step, a, b). Feasibility is monotone under connected subgraphs, so a
// partial choice that already fails is pruned.
class GuessSearch {
 public:
  GuessSearch(const Graph& g, int D, Execution exec) : g_(g), d_(D), exec_(exec) {}

  bool run(const VertexList& start, const std::vector<Step>& steps, std::vector<Edge>& chosen) {
    std::vector<char> in(static_cast<std::size_t>(g_.order()), 0);
    for (Vertex v : start) in[static_cast<std::size_t>(v)] = 1;
    return search(steps, 0, in, chosen);
  }

 private:
  bool feasible(const std::vector<char>& in, const std::vector<Edge>& chosen) const {
    VertexList members;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (in[static_cast<std::size_t>(v)]) members.push_back(v);
    const Graph aug = g_.with_edges(chosen);
    return connected_feasible(induced_subgraph(aug, members).graph, d_);
  }

  bool search(const std::vector<Step>& steps, std::size_t k, std::vector<char>& in, std::vector<Edge>& chosen) {
    if (k == steps.size()) return true;
    for (Vertex v : *steps[k].from) in[static_cast<std::size_t>(v)] = 1;
    std::vector<Edge> cand;
    for (Vertex a : *steps[k].from)
      for (Vertex b : *steps[k].to) cand.push_back(make_edge(a, b));

    auto try_edge = [&](std::size_t i) {
      std::vector<Edge> next = chosen;
      next.push_back(cand[i]);
      return feasible(in, next);
    };
    std::vector<char> ok(cand.size(), 0);
    if (exec_ == Execution::Parallel)
      for_range(static_cast<std::ptrdiff_t>(cand.size()), exec_,
                [&](std::ptrdiff_t i) { ok[static_cast<std::size_t>(i)] = try_edge(static_cast<std::size_t>(i)) ? 1 : 0; });

    for (std::size_t i = 0; i < cand.size(); ++i) {
      const bool good = exec_ == Execution::Parallel ? ok[i] != 0 : try_edge(i);
      if (!good) continue;
      chosen.push_back(cand[i]);
      if (search(steps, k + 1, in, chosen)) return true;
      chosen.pop_back();
    }
    for (Vertex v : *steps[k].from) in[static_cast<std::size_t>(v)] = 0;
    return false;
  }

  const Graph& g_;
  int d_;
  Execution exec_;
};

// Connects every component to the host via a centre vertex and solves the
// resulting connected graph. `core` holds the already-connected part.
std::optional<Completion> build_witness(const Graph& g, int D, const DisconnectedResult& res, const VertexList& core) {
  const Graph joined = g.with_edges(res.connecting);
  const InducedSubgraph host = induced_subgraph(joined, core);
  const Radius centre = radius_of(host.graph, D);
  if (!is_finite(centre.value)) return std::nullopt;

  VertexList candidates{host.to_original[static_cast<std::size_t>(centre.at)]};
  for (Vertex v : core)
    if (v != candidates.front()) candidates.push_back(v);

  std::vector<char> in_core(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : core) in_core[static_cast<std::size_t>(v)] = 1;

  for (Vertex c : candidates) {
    std::vector<Edge> extra = res.connecting;
    for (const ComponentProfile& p : res.profiles)
      if (!in_core[static_cast<std::size_t>(p.component.front())]) extra.push_back(make_edge(p.escalation_vertex, c));
    const Graph whole = g.with_edges(extra);
    const ConnectedResult cr = opdi_connected(whole, default_root(whole), D);
    if (!cr.feasible()) continue;
    const Completion part = reconstruct_completion(cr);
    Completion out = make_completion(g, part.completed());
    if (verify_completion(out, D).ok) return out;
  }
  return std::nullopt;
}

}  // namespace

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Connected: return "connected";
    case Rule::InfeasibleComponent: return "infeasible-component";
    case Rule::AllSmall: return "all-small";
    case Rule::CentralBig: return "central-big";
    case Rule::TooManyBig: return "too-many-big";
    case Rule::TooManyEven: return "too-many-even";
    case Rule::GuessFound: return "guess-found";
    case Rule::GuessExhausted: return "guess-exhausted";
  }
  return "unknown";
}

int min_radius(const Graph& c, int D, Execution) {
  if (!is_connected(c)) throw GraphError("component is disconnected");
  return radius_of(c, D).value;
}

int escalated_ecc(const Graph& c, int D, Execution exec) {
  if (!is_connected(c)) throw GraphError("component is disconnected");
  const int floor = radius_of(c, D).value;
  if (!is_finite(floor)) return kInfinity;
  return escalate(c, D, floor, exec).ecc;
}

ComponentProfile component_profile(const Graph& g, const VertexList& component, int D, Execution exec) {
  const InducedSubgraph sub = induced_subgraph(g, component);
  ComponentProfile p;
  p.component = component;
  const Radius r = radius_of(sub.graph, D);
  if (!is_finite(r.value)) return p;
  const Pendant e = escalate(sub.graph, D, r.value, exec);
  p.min_radius = r.value;
  p.radius_vertex = sub.to_original[static_cast<std::size_t>(r.at)];
  p.escalated_ecc = e.ecc;
  if (e.at >= 0) p.escalation_vertex = sub.to_original[static_cast<std::size_t>(e.at)];
  return p;
}

DisconnectedResult opdi_disconnected(const Graph& g, int D, DisconnectedOptions options) {
  check_input(g, D);
  DisconnectedResult res;
  const auto comps = connected_components(g);

  if (comps.size() <= 1) {
    res.rule = Rule::Connected;
    if (g.order() <= 1) {
      res.feasible = true;
      if (options.witness) res.witness = make_completion(g, g);
      return res;
    }
    const ConnectedResult cr = opdi_connected(g, default_root(g), D);
    res.feasible = cr.feasible();
    if (res.feasible && options.witness) res.witness = reconstruct_completion(cr);
    return res;
  }

  // Profiles are independent; the inner escalation loop stays serial when the
  // outer loop already fans out.
  res.profiles.resize(comps.size());
  const Execution inner = options.exec == Execution::Parallel && comps.size() > 1 ? Execution::Serial : options.exec;
  for_range(static_cast<std::ptrdiff_t>(comps.size()), options.exec, [&](std::ptrdiff_t i) {
    res.profiles[static_cast<std::size_t>(i)] = component_profile(g, comps[static_cast<std::size_t>(i)], D, inner);
  });

  for (const ComponentProfile& p : res.profiles)
    if (!is_finite(p.escalated_ecc)) {
      res.rule = Rule::InfeasibleComponent;
      return res;
    }

  // Components with 2 r+ < D can always be hung off a centre vertex.
  std::vector<std::size_t> big, tied;
  for (std::size_t i = 0; i < res.profiles.size(); ++i) {
    const int twice = 2 * res.profiles[i].escalated_ecc;
    if (twice > D) big.push_back(i);
    else if (twice == D) tied.push_back(i);
  }
  res.big = static_cast<int>(big.size());
  res.tied = static_cast<int>(tied.size());

  VertexList core;  // vertices already joined into one component of the witness
  auto finish = [&](Rule rule, bool feasible) {
    res.rule = rule;
    res.feasible = feasible;
    if (feasible && options.witness) res.witness = build_witness(g, D, res, core);
    return res;
  };

  if (big.empty()) {
    const std::size_t anchor = tied.empty() ? 0 : tied.front();
    core = res.profiles[anchor].component;
    return finish(Rule::AllSmall, true);
  }
  if (big.size() == 1 && 2 * res.profiles[big.front()].min_radius <= D) {
    core = res.profiles[big.front()].component;
    return finish(Rule::CentralBig, true);
  }
  if (big.size() > 3) return finish(Rule::TooManyBig, false);

  const bool odd = D % 2 == 1;
  if (!odd && big.size() + tied.size() >= 5) return finish(Rule::TooManyEven, false);

  // Big components are pairwise adjacent and every tied one touches each big
  // one, so all guessed edges may end in the smallest big component.
  const std::size_t hub =
      *std::min_element(big.begin(), big.end(), [&](std::size_t a, std::size_t b) {
        return res.profiles[a].component.size() < res.profiles[b].component.size();
      });
  const VertexList& hub_vertices = res.profiles[hub].component;
  std::vector<Step> steps;
  for (std::size_t i : big)
    if (i != hub) steps.push_back({&res.profiles[i].component, &hub_vertices});
  if (!odd)
    for (std::size_t i : tied) steps.push_back({&res.profiles[i].component, &hub_vertices});

  std::vector<Edge> chosen;
  GuessSearch search(g, D, options.exec);
  if (!search.run(hub_vertices, steps, chosen)) return finish(Rule::GuessExhausted, false);
  res.connecting = chosen;
  core = hub_vertices;
  for (const Step& s : steps) core.insert(core.end(), s.from->begin(), s.from->end());
  std::sort(core.begin(), core.end());
  return finish(Rule::GuessFound, true);
}

bool decide(const Graph& g, int D, Execution exec) { return opdi_disconnected(g, D, {exec, false}).feasible; }

std::optional<Completion> find_completion(const Graph& g, int D, Execution exec) {
  DisconnectedResult r = opdi_disconnected(g, D, {exec, true});
  return r.witness;
}

int opdi_value(const Graph& g, Execution exec) {
  if (!is_outerplanar(g)) throw GraphError("input graph is not outerplanar");
  const int n = g.order();
  if (n <= 1) return 1;
  // More than three vertices cannot be completed to a clique.
  for (int D = n >= 4 ? 2 : 1; D <= n; ++D)
    if (decide(g, D, exec)) return D;
  throw std::logic_error("no completion of diameter n found");
}

}  // namespace opdi
