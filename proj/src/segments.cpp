#include "meander/segments.hpp"

#include <stdexcept>
#include <string>

namespace meander {

namespace {

void require_interior(const MeanderGraph& g, SegmentState s) {
  if (s.is_exterior()) throw std::invalid_argument("the exterior face does not map");
  if (s.label < 1 || s.label > g.n - 1)
    throw std::invalid_argument("segment " + std::to_string(s.label) +
                                " out of range 1.." + std::to_string(g.n - 1));
}

}  // namespace

SegmentState side_segment_map(const MeanderGraph& g, SegmentState s, Side side) {
  require_interior(g, s);
  const int bi = g.block_index(side, s.label);
  if (bi != g.block_index(side, s.label + 1)) return kExterior;
  const auto [left, right] = g.blocks(side)[bi];
  return interior(left + right - 1 - s.label);
}

bool is_end_segment(const MeanderGraph& g, int label, Side side) {
  if (label < 1 || label > g.n - 1) return false;
  if (g.block_index(side, label) != g.block_index(side, label + 1)) return false;
  const auto [left, right] = g.blocks(side)[g.block_index(side, label)];
  return left + right - 1 - label == label;
}

std::vector<int> top_end_segments(const MeanderGraph& g) {
  std::vector<int> out;
  for (int s = 1; s <= g.n - 1; ++s)
    if (is_end_segment(g, s, Side::top)) out.push_back(s);
  return out;
}

bool has_cycle_via_segments(const MeanderGraph& g) {
  const int m = g.n - 1;
  if (m < 1) return false;

  thread_local std::vector<char> reached;
  thread_local std::vector<int> queue;
  reached.assign(m + 1, 0);
  queue.clear();

  auto visit = [&](int s) {
    if (!reached[s]) {
      reached[s] = 1;
      queue.push_back(s);
    }
  };

  // Openings between blocks (on either side) touch the exterior face.
  for (int s = 1; s <= m; ++s)
    if (g.top_block_of[s] != g.top_block_of[s + 1] ||
        g.bottom_block_of[s] != g.bottom_block_of[s + 1])
      visit(s);

  while (!queue.empty()) {
    const int s = queue.back();
    queue.pop_back();
    for (Side side : {Side::top, Side::bottom}) {
      const int bi = g.block_index(side, s);
      if (bi != g.block_index(side, s + 1)) continue;  // opening, already seeded
      const auto [left, right] = g.blocks(side)[bi];
      visit(left + right - 1 - s);
    }
  }

  for (int s = 1; s <= m; ++s)
    if (!reached[s]) return true;
  return false;
}

EscapeTrace escape_trace(const MeanderGraph& g, int s) {
  require_interior(g, interior(s));

  EscapeTrace trace;
  trace.states.push_back(interior(s));

  std::vector<char> visited(g.n, 0);
  visited[s] = 1;

  Side side = Side::bottom;
  while (true) {
    const SegmentState cur = trace.states.back();
    if (is_end_segment(g, cur.label, side)) {
      trace.end = TraceEnd::end_segment;
      trace.end_side = side;
      return trace;
    }
    const SegmentState next = side_segment_map(g, cur, side);
    trace.states.push_back(next);
    if (next.is_exterior()) {
      trace.end = TraceEnd::exterior;
      return trace;
    }
    if (visited[next.label]) {
      trace.end = TraceEnd::cycle;
      return trace;
    }
    visited[next.label] = 1;
    side = other_side(side);
  }
}

}  // namespace meander
