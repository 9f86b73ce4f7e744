#pragma once

#include <optional>
#include <string_view>

#include "opdi/completion.hpp"
#include "opdi/execution.hpp"
#include "opdi/graph.hpp"

namespace opdi {

struct ComponentProfile {
  VertexList component;           // sorted vertex ids in the host graph
  int min_radius = kInfinity;     // r*(C)
  int escalated_ecc = kInfinity;  // r+(C)
  Vertex radius_vertex = -1;      // smallest host id attaining r*
  Vertex escalation_vertex = -1;  // smallest host id whose pendant attains r+
};

// Minimum radius over diameter-D outerplanar completions of a connected graph.
int min_radius(const Graph& c, int D, Execution exec = Execution::Parallel);
// Minimum eccentricity of a fresh vertex joined to c, over diameter-D completions.
int escalated_ecc(const Graph& c, int D, Execution exec = Execution::Parallel);
ComponentProfile component_profile(const Graph& g, const VertexList& component, int D,
                                   Execution exec = Execution::Parallel);

// Which step of the component case analysis settled the answer.
enum class Rule {
  Connected,            // single component, solved directly
  InfeasibleComponent,  // some component has no diameter-D completion
  AllSmall,             // every kept component has r+ <= D/2
  CentralBig,           // one big component whose r* <= D/2
  TooManyBig,           // four or more components with r+ > D/2
  TooManyEven,          // even D with p + q >= 5
  GuessFound,           // some choice of connecting edges is feasible
  GuessExhausted,       // no choice of connecting edges is feasible
};
std::string_view rule_name(Rule r);

struct DisconnectedOptions {
  Execution exec = Execution::Parallel;
  bool witness = false;
};

struct DisconnectedResult {
  bool feasible = false;
  Rule rule = Rule::GuessExhausted;
  std::vector<ComponentProfile> profiles;  // one per component, in component order
  int big = 0;                             // p: kept components with 2 r+ > D
  int tied = 0;                            // q: kept components with 2 r+ == D
  std::vector<Edge> connecting;            // guessed edges of the successful choice
  std::optional<Completion> witness;       // verified, when requested and feasible
};

// Decision for graphs with any number of components (D >= 1, g outerplanar).
DisconnectedResult opdi_disconnected(const Graph& g, int D, DisconnectedOptions options = {});

bool decide(const Graph& g, int D, Execution exec = Execution::Parallel);
// Verified completion of diameter at most D, or nullopt if none was found.
std::optional<Completion> find_completion(const Graph& g, int D, Execution exec = Execution::Parallel);
// Least D >= 1 with a diameter-D outerplanar completion (1 for n <= 1 by convention).
int opdi_value(const Graph& g, Execution exec = Execution::Parallel);

}  // namespace opdi
