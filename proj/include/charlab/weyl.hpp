#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charlab/root_datum.hpp"

namespace charlab {

AffineWeight apply_word(const RootDatum& d, const ReducedWord& w, const AffineWeight& mu);

// Shortest-path structure of the level-one orbit.  States are finite weights
// lambda, standing for lambda + Lambda_0 - (lambda|lambda)/2 delta.
struct OrbitGraph {
  struct Node {
    FiniteWeight state;
    int dist = 0;
    // (parent index, letter) over all shortest predecessors; BFS tree parent first.
    std::vector<std::pair<int, int>> parents;
  };
  std::vector<Node> nodes;
  std::map<FiniteWeight, int> index;

  int find(const FiniteWeight& w) const {
    auto it = index.find(w);
    return it == index.end() ? -1 : it->second;
  }
};

// BFS from Lambda_0 over s_0..s_l, expanding states whose energy
// (lambda|lambda)/2 stays within energy_bound_half/2; neighbor order 0..l.
OrbitGraph orbit_bfs(const RootDatum& d, int energy_bound_half, long max_states = 2000000);

// Minimal word with (pi Lambda_0) having finite part lambda; first in BFS order.
// Default energy bound is (lambda|lambda)/2 + 2.
ReducedWord pi_lambda(const RootDatum& d, const FiniteWeight& lambda,
                      std::optional<int> energy_bound_half = std::nullopt);

std::vector<ReducedWord> all_min_words(const RootDatum& d, const FiniteWeight& lambda,
                                       long max_words = 200000,
                                       std::optional<int> energy_bound_half = std::nullopt);

struct OrderCheckReport {
  long checked = 0;
  long passed = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Walks BFS edges (v, s_i v) with increasing length and checks that the finite
// part of v dominates the child in the Macdonald order.
OrderCheckReport order_compatibility_check(const RootDatum& d, long sample_size,
                                           int energy_bound_half = 24);

std::string word_to_json(const ReducedWord& w);
ReducedWord word_from_json(const std::string& text);

}  // namespace charlab
