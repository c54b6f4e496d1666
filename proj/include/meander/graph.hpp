#pragma once

#include <utility>
#include <vector>

#include "meander/types.hpp"

namespace meander {

enum class Side { top, bottom };

inline Side other_side(Side s) { return s == Side::top ? Side::bottom : Side::top; }

using Edge = std::pair<int, int>;   // unordered vertex pair, stored with first < second
using Block = std::pair<int, int>;  // inclusive vertex span [first, second]

// Planar arc multigraph on vertices 1..n. Every vertex carries at most one
// top arc and one bottom arc; the same pair may appear on both sides (a
// 2-cycle). Arcs of one block nest, never cross. Block spans are kept for
// segment analysis.
struct MeanderGraph {
  int n = 0;
  std::vector<Edge> top_edges;
  std::vector<Edge> bottom_edges;
  std::vector<Block> top_blocks;
  std::vector<Block> bottom_blocks;
  std::vector<int> top_partner;     // size n+1, slot 0 unused; 0 = no arc
  std::vector<int> bottom_partner;  // size n+1, slot 0 unused; 0 = no arc
  std::vector<int> top_block_of;    // size n+1; index into top_blocks
  std::vector<int> bottom_block_of;

  const std::vector<Edge>& edges(Side s) const {
    return s == Side::top ? top_edges : bottom_edges;
  }
  const std::vector<Block>& blocks(Side s) const {
    return s == Side::top ? top_blocks : bottom_blocks;
  }
  int partner(Side s, int v) const {
    return s == Side::top ? top_partner[v] : bottom_partner[v];
  }
  int block_index(Side s, int v) const {
    return s == Side::top ? top_block_of[v] : bottom_block_of[v];
  }
};

// Blockwise arc construction: a block spanning [L,R] gets the edges
// {L+i, R-i} for 0 <= i < (R-L+1)/2, so a size-1 block contributes nothing
// and the center vertex of an odd block stays bare on that side.
MeanderGraph build_meander(const MeanderType& t);

// Same construction reusing g's storage; the hot path for exhaustive scans.
void build_meander_into(const MeanderType& t, MeanderGraph& g);

struct ComponentSummary {
  int paths = 0;  // an isolated vertex is a path of length 0
  int cycles = 0;

  int components() const { return paths + cycles; }
  bool operator==(const ComponentSummary&) const = default;
};

// Exact path/cycle counts. Degrees never exceed 2, so every component is a
// simple path or a simple cycle; a component is a cycle exactly when each of
// its vertices has an arc on both sides.
ComponentSummary analyze_components(const MeanderGraph& g);

// 2*cycles + paths - 1; zero exactly when the meander is one single path.
int index_of(const MeanderGraph& g);

bool is_frobenius(const MeanderGraph& g);

}  // namespace meander
