#pragma once

#include <vector>

#include "meander/compositions.hpp"
#include "meander/graph.hpp"

namespace testsupport {

// Independent component classifier: plain adjacency-list walk over the edge
// multiset, deciding cycle by edge count == vertex count. Shares nothing with
// the partner-array traversal it cross-checks.
inline meander::ComponentSummary brute_components(const meander::MeanderGraph& g) {
  std::vector<std::vector<int>> adj(g.n + 1);
  for (const auto& [u, v] : g.top_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (const auto& [u, v] : g.bottom_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(g.n + 1, 0);
  meander::ComponentSummary summary;
  for (int start = 1; start <= g.n; ++start) {
    if (seen[start]) continue;
    int vertices = 0;
    long long degree_sum = 0;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++vertices;
      degree_sum += static_cast<long long>(adj[u].size());
      for (int w : adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (degree_sum / 2 == vertices)
      ++summary.cycles;
    else
      ++summary.paths;
  }
  return summary;
}

// Runs fn on every two-sided type with total n (all top/bottom pairs).
template <class F>
void for_each_type_pair(int n, F&& fn) {
  meander::for_each_composition(n, [&](const std::vector<int>& top) {
    meander::for_each_composition(n, [&](const std::vector<int>& bottom) {
      fn(top, bottom);
    });
  });
}

}  // namespace testsupport
