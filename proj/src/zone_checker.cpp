#include "tarep/zone_checker.hpp"

#include "tarep/zone_graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace tarep {

namespace {

bool violating(const ZoneGraph& graph, const Property& prop, const SymbolicState& s) {
  for (const auto& conj : negated_dnf(prop, s.locations))
    if (graph.intersects(s, conj)) return true;
  return false;
}

}  // namespace

Verdict check(const Network& net, const Property& prop, const CheckOptions& options) {
  ZoneGraph graph(net, clock_scale({&net}, {max_constant(prop)}));
  Verdict verdict;
  auto init = graph.initial();
  if (!init) return verdict;

  struct Node {
    SymbolicState state;
    std::size_t parent;
    NetworkTransition step;
  };
  std::vector<Node> nodes;
  std::unordered_map<SymbolicState, std::size_t, SymbolicStateHash> seen;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  auto finish = [&](std::size_t leaf) {
    SymbolicTimedTrace trace;
    for (std::size_t i = leaf; i != kNone; i = nodes[i].parent) {
      trace.locations.push_back(nodes[i].state.locations);
      if (nodes[i].parent != kNone) trace.steps.push_back(nodes[i].step);
    }
    std::reverse(trace.locations.begin(), trace.locations.end());
    std::reverse(trace.steps.begin(), trace.steps.end());
    verdict.kind = Verdict::Kind::Violated;
    verdict.trace = std::move(trace);
    verdict.states = nodes.size();
    return verdict;
  };

  nodes.push_back({*init, kNone, {}});
  seen.emplace(*init, 0);
  if (violating(graph, prop, *init)) return finish(0);

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (auto& succ : graph.successors(nodes[head].state)) {
      if (seen.count(succ.state)) continue;
      if (nodes.size() >= options.state_limit) {
        verdict.kind = Verdict::Kind::Exhausted;
        verdict.states = nodes.size();
        return verdict;
      }
      seen.emplace(succ.state, nodes.size());
      nodes.push_back({std::move(succ.state), head, std::move(succ.step)});
      if (violating(graph, prop, nodes.back().state)) return finish(nodes.size() - 1);
    }
  }
  verdict.states = nodes.size();
  return verdict;
}

bool violates_at(const Network& net, const Property& prop, const std::vector<NetworkTransition>& steps) {
  ZoneGraph graph(net, clock_scale({&net}, {max_constant(prop)}));
  auto s = graph.initial();
  if (!s) return false;
  for (const auto& step : steps) {
    std::optional<SymbolicState> next;
    for (auto& succ : graph.successors(*s))
      if (succ.step == step) next = std::move(succ.state);
    if (!next) return false;
    s = std::move(next);
  }
  return violating(graph, prop, *s);
}

}  // namespace tarep
