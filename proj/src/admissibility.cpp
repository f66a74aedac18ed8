#include "tarep/admissibility.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace tarep {

namespace {

std::string edge_label(const Network& net, const NetworkTransition& step, bool visible_internal) {
  bool sync = std::any_of(step.parts.begin(), step.parts.end(), [&](const FiredTransition& p) {
    return net.automata[p.automaton.index()].transitions[p.transition].sync != SyncKind::Internal;
  });
  if (sync || visible_internal) return step_label(net, step);
  return {};
}

}  // namespace

UntimedAutomaton build_untimed(const Network& net, const ClockScale& scale, const AdmissibilityOptions& options) {
  ZoneGraph graph(net, scale);
  UntimedAutomaton out;
  auto init = graph.initial();
  if (!init) {
    // No run at all: only the empty word.
    out.edges.emplace_back();
    return out;
  }

  std::vector<SymbolicState> states{*init};
  std::unordered_map<SymbolicState, std::size_t, SymbolicStateHash> index{{*init, 0}};
  std::vector<std::vector<std::pair<std::string, std::size_t>>> raw(1);
  std::set<std::string> alphabet;

  for (std::size_t i = 0; i < states.size(); ++i) {
    for (auto& succ : graph.successors(states[i])) {
      auto [it, fresh] = index.try_emplace(succ.state, states.size());
      if (fresh) {
        if (states.size() >= options.state_limit) throw ExplorationLimit("untimed automaton exceeds state limit");
        states.push_back(std::move(succ.state));
        raw.emplace_back();
      }
      auto label = edge_label(net, succ.step, options.visible_internal);
      if (!label.empty()) alphabet.insert(label);
      raw[i].emplace_back(std::move(label), it->second);
    }
  }

  out.alphabet.assign(alphabet.begin(), alphabet.end());
  out.edges.resize(states.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (auto& [label, target] : raw[i]) {
      int l = -1;
      if (!label.empty())
        l = static_cast<int>(std::lower_bound(out.alphabet.begin(), out.alphabet.end(), label) - out.alphabet.begin());
      out.edges[i].emplace_back(l, target);
    }
  for (auto& e : out.edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  return out;
}

namespace {

using Subset = std::vector<std::size_t>;

// Subset construction over a global alphabet; subsets are ε-closed and
// interned so each gets a small integer id. Id 0 is the empty subset.
class Determinizer {
 public:
  Determinizer(const UntimedAutomaton& a, const std::vector<std::string>& alphabet) : a_(a) {
    for (const auto& l : a.alphabet)
      remap_.push_back(static_cast<int>(std::lower_bound(alphabet.begin(), alphabet.end(), l) - alphabet.begin()));
    intern({});
  }

  std::size_t initial() { return intern(closure({a_.initial})); }

  std::size_t step(std::size_t id, int label) {
    auto key = std::make_pair(id, label);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::set<std::size_t> next;
    for (auto s : subsets_[id])
      for (auto [l, t] : a_.edges[s])
        if (l >= 0 && remap_[l] == label) next.insert(t);
    auto r = intern(closure(Subset(next.begin(), next.end())));
    cache_[key] = r;
    return r;
  }

  bool accepting(std::size_t id) const { return id != 0; }
  std::size_t count() const { return subsets_.size(); }

 private:
  Subset closure(Subset seeds) const {
    std::set<std::size_t> seen(seeds.begin(), seeds.end());
    std::vector<std::size_t> stack(seeds.begin(), seeds.end());
    while (!stack.empty()) {
      auto s = stack.back();
      stack.pop_back();
      for (auto [l, t] : a_.edges[s])
        if (l < 0 && seen.insert(t).second) stack.push_back(t);
    }
    return Subset(seen.begin(), seen.end());
  }

  std::size_t intern(Subset s) {
    auto [it, fresh] = ids_.try_emplace(s, subsets_.size());
    if (fresh) subsets_.push_back(std::move(s));
    return it->second;
  }

  const UntimedAutomaton& a_;
  std::vector<int> remap_;
  std::map<Subset, std::size_t> ids_;
  std::vector<Subset> subsets_;
  std::map<std::pair<std::size_t, int>, std::size_t> cache_;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  std::size_t find(std::size_t x) {
    while (x >= parent.size()) parent.push_back(parent.size());
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool accepts(const UntimedAutomaton& a, const std::vector<std::string>& word) {
  Determinizer d(a, a.alphabet);
  std::size_t s = d.initial();
  for (const auto& w : word) {
    auto it = std::lower_bound(a.alphabet.begin(), a.alphabet.end(), w);
    if (it == a.alphabet.end() || *it != w) return false;
    s = d.step(s, static_cast<int>(it - a.alphabet.begin()));
    if (!d.accepting(s)) return false;
  }
  return d.accepting(s);
}

Equivalence equivalent(const UntimedAutomaton& a, const UntimedAutomaton& b, const AdmissibilityOptions& options) {
  std::vector<std::string> alphabet;
  std::set_union(a.alphabet.begin(), a.alphabet.end(), b.alphabet.begin(), b.alphabet.end(),
                 std::back_inserter(alphabet));
  const int sigma = static_cast<int>(alphabet.size());
  Determinizer da(a, alphabet), db(b, alphabet);
  const std::size_t ia = da.initial(), ib = db.initial();

  // Hopcroft–Karp: states of the left DFA are even, of the right DFA odd.
  UnionFind uf;
  std::deque<std::pair<std::size_t, std::size_t>> work{{ia, ib}};
  uf.unite(2 * ia, 2 * ib + 1);
  bool differ = false;
  std::size_t pairs = 0;
  while (!work.empty() && !differ) {
    auto [p, q] = work.front();
    work.pop_front();
    if (da.accepting(p) != db.accepting(q)) differ = true;
    if (++pairs > options.pair_limit) throw ExplorationLimit("language comparison exceeds pair limit");
    for (int l = 0; l < sigma && !differ; ++l) {
      auto p2 = da.step(p, l), q2 = db.step(q, l);
      if (uf.find(2 * p2) != uf.find(2 * q2 + 1)) {
        uf.unite(2 * p2, 2 * q2 + 1);
        work.emplace_back(p2, q2);
      }
    }
  }
  Equivalence out;
  if (!differ) return out;

  // Shortest witness: plain BFS over the product.
  out.equal = false;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::pair<std::size_t, std::size_t>, int>> parent;
  std::deque<std::pair<std::size_t, std::size_t>> queue{{ia, ib}};
  parent[{ia, ib}] = {{ia, ib}, -1};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (da.accepting(cur.first) != db.accepting(cur.second)) {
      for (auto at = cur; parent[at].second >= 0; at = parent[at].first)
        out.witness.push_back(alphabet[parent[at].second]);
      std::reverse(out.witness.begin(), out.witness.end());
      out.witness_in_first = da.accepting(cur.first);
      return out;
    }
    // Both dead: nothing more to distinguish below this pair.
    if (!da.accepting(cur.first)) continue;
    for (int l = 0; l < sigma; ++l) {
      std::pair next{da.step(cur.first, l), db.step(cur.second, l)};
      if (parent.emplace(next, std::pair{cur, l}).second) queue.push_back(next);
    }
  }
  throw std::logic_error("language difference without witness");
}

Admissibility check_admissible(const Network& original, const Network& repaired, const AdmissibilityOptions& options) {
  auto scale = clock_scale({&original, &repaired});
  auto a = build_untimed(original, scale, options);
  auto b = build_untimed(repaired, scale, options);
  auto eq = equivalent(a, b, options);
  Admissibility out;
  out.admissible = eq.equal;
  if (!eq.equal) {
    out.witness = std::move(eq.witness);
    out.accepted_by = eq.witness_in_first ? "original" : "repaired";
  }
  return out;
}

}  // namespace tarep
