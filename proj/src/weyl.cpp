#include "charlab/weyl.hpp"

#include <algorithm>
#include <deque>

#include "charlab/errors.hpp"
#include "json.hpp"

namespace charlab {

AffineWeight apply_word(const RootDatum& d, const ReducedWord& w, const AffineWeight& mu) {
  AffineWeight cur = mu;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = d.reflect(*it, cur);
  return cur;
}

OrbitGraph orbit_bfs(const RootDatum& d, int energy_bound_half, long max_states) {
  OrbitGraph g;
  FiniteWeight origin(d.rank());
  g.nodes.push_back({origin, 0, {}});
  g.index[origin] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    const FiniteWeight state = g.nodes[u].state;  // copy: nodes may reallocate
    const int du = g.nodes[u].dist;
    // energy in half-units is (lambda|lambda)
    if (to_long(state.norm2()) > energy_bound_half) continue;
    AffineWeight aff(state, 1, state.norm2() / 2);
    for (int i = 0; i <= d.rank(); ++i) {
      FiniteWeight next = d.reflect(i, aff).finite;
      int v = g.find(next);
      if (v < 0) {
        if (static_cast<long>(g.nodes.size()) >= max_states)
          throw BudgetError("orbit BFS exceeded the state budget");
        v = static_cast<int>(g.nodes.size());
        g.nodes.push_back({next, du + 1, {{u, i}}});
        g.index[next] = v;
        queue.push_back(v);
      } else if (g.nodes[v].dist == du + 1) {
        g.nodes[v].parents.emplace_back(u, i);
      }
    }
  }
  return g;
}

namespace {

int default_bound_half(const FiniteWeight& lambda) {
  // target energy is (lambda|lambda)/2; allow two extra q-units
  return static_cast<int>(to_long(lambda.norm2())) + 4;
}

ReducedWord path_word(const OrbitGraph& g, int node) {
  // first parent is the BFS tree parent; letters applied root-first, so the
  // first applied letter sits rightmost in the word
  ReducedWord letters;
  int cur = node;
  while (cur != 0) {
    letters.push_back(g.nodes[cur].parents.front().second);
    cur = g.nodes[cur].parents.front().first;
  }
  return letters;  // leftmost letter is the last applied
}

}  // namespace

ReducedWord pi_lambda(const RootDatum& d, const FiniteWeight& lambda,
                      std::optional<int> energy_bound_half) {
  if (!lambda.is_lattice()) throw std::invalid_argument("pi_lambda needs a lattice weight");
  int bound = energy_bound_half ? *energy_bound_half : default_bound_half(lambda);
  OrbitGraph g = orbit_bfs(d, bound);
  int node = g.find(lambda);
  if (node < 0)
    throw BudgetError("pi_lambda: state not reached within energy bound " +
                      std::to_string(bound) + "/2");
  return path_word(g, node);
}

std::vector<ReducedWord> all_min_words(const RootDatum& d, const FiniteWeight& lambda,
                                       long max_words, std::optional<int> energy_bound_half) {
  if (!lambda.is_lattice()) throw std::invalid_argument("all_min_words needs a lattice weight");
  int bound = energy_bound_half ? *energy_bound_half : default_bound_half(lambda);
  OrbitGraph g = orbit_bfs(d, bound);
  int node = g.find(lambda);
  if (node < 0)
    throw BudgetError("all_min_words: state not reached within energy bound " +
                      std::to_string(bound) + "/2");
  std::vector<ReducedWord> out;
  ReducedWord cur;
  std::function<void(int)> rec = [&](int v) {
    if (v == 0) {
      out.push_back(cur);
      if (static_cast<long>(out.size()) > max_words)
        throw BudgetError("all_min_words exceeded the word budget");
      return;
    }
    for (const auto& [p, letter] : g.nodes[v].parents) {
      cur.push_back(letter);
      rec(p);
      cur.pop_back();
    }
  };
  rec(node);
  std::sort(out.begin(), out.end());
  return out;
}

OrderCheckReport order_compatibility_check(const RootDatum& d, long sample_size,
                                           int energy_bound_half) {
  OrderCheckReport rep;
  if (sample_size <= 0) return rep;
  OrbitGraph g = orbit_bfs(d, energy_bound_half);
  for (const auto& node : g.nodes) {
    for (const auto& [p, letter] : node.parents) {
      if (rep.checked >= sample_size) return rep;
      ++rep.checked;
      const FiniteWeight& parent_state = g.nodes[p].state;
      if (d.macdonald_geq(parent_state, node.state)) {
        ++rep.passed;
      } else {
        rep.failures.push_back("edge s_" + std::to_string(letter) + ": " +
                               format_weight(parent_state) + " !>= " +
                               format_weight(node.state));
      }
    }
  }
  return rep;
}

std::string word_to_json(const ReducedWord& w) {
  nlohmann::json a = nlohmann::json::array();
  for (int i : w) a.push_back(i);
  return a.dump();
}

ReducedWord word_from_json(const std::string& text) {
  nlohmann::json a = nlohmann::json::parse(text);
  if (!a.is_array()) throw std::invalid_argument("word JSON must be an array");
  ReducedWord w;
  for (const auto& x : a) w.push_back(x.get<int>());
  return w;
}

}  // namespace charlab
