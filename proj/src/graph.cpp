#include "meander/graph.hpp"

namespace meander {

namespace {

void add_side(const std::vector<int>& parts, int n, std::vector<Edge>& edges,
              std::vector<Block>& blocks, std::vector<int>& partner,
              std::vector<int>& block_of) {
  edges.clear();
  blocks.clear();
  partner.assign(n + 1, 0);
  block_of.assign(n + 1, 0);
  int left = 1;
  for (int size : parts) {
    const int right = left + size - 1;
    const int bi = static_cast<int>(blocks.size());
    blocks.emplace_back(left, right);
    for (int v = left; v <= right; ++v) block_of[v] = bi;
    for (int i = 0; i < size / 2; ++i) {
      const int u = left + i, v = right - i;
      edges.emplace_back(u, v);
      partner[u] = v;
      partner[v] = u;
    }
    left = right + 1;
  }
}

}  // namespace

void build_meander_into(const MeanderType& t, MeanderGraph& g) {
  validate(t);
  g.n = t.total();
  add_side(t.top, g.n, g.top_edges, g.top_blocks, g.top_partner, g.top_block_of);
  add_side(t.bottom, g.n, g.bottom_edges, g.bottom_blocks, g.bottom_partner,
           g.bottom_block_of);
}

MeanderGraph build_meander(const MeanderType& t) {
  MeanderGraph g;
  build_meander_into(t, g);
  return g;
}

ComponentSummary analyze_components(const MeanderGraph& g) {
  thread_local std::vector<char> seen;
  thread_local std::vector<int> stack;
  seen.assign(g.n + 1, 0);
  stack.clear();

  ComponentSummary summary;
  for (int v = 1; v <= g.n; ++v) {
    if (seen[v]) continue;
    seen[v] = 1;
    stack.push_back(v);
    bool closed = true;  // every vertex has both arcs -> the component is a cycle
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      const int tp = g.top_partner[u];
      const int bp = g.bottom_partner[u];
      if (tp == 0 || bp == 0) closed = false;
      if (tp != 0 && !seen[tp]) {
        seen[tp] = 1;
        stack.push_back(tp);
      }
      if (bp != 0 && !seen[bp]) {
        seen[bp] = 1;
        stack.push_back(bp);
      }
    }
    if (closed)
      ++summary.cycles;
    else
      ++summary.paths;
  }
  return summary;
}

int index_of(const MeanderGraph& g) {
  const ComponentSummary s = analyze_components(g);
  return 2 * s.cycles + s.paths - 1;
}

bool is_frobenius(const MeanderGraph& g) {
  const ComponentSummary s = analyze_components(g);
  return s.paths == 1 && s.cycles == 0;
}

}  // namespace meander
