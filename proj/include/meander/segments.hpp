#pragma once

#include <vector>

#include "meander/graph.hpp"

namespace meander {

// Face-flow state: either the gap between vertices `label` and `label+1`
// (1 <= label <= n-1), or the unbounded exterior face (label 0). All openings
// between blocks border the same exterior region, so one sentinel suffices.
struct SegmentState {
  int label = 0;

  bool is_exterior() const { return label == 0; }
  bool operator==(const SegmentState&) const = default;
};

inline constexpr SegmentState kExterior{};
inline SegmentState interior(int label) { return SegmentState{label}; }

// Follows the arcs of one side across the gap. When the gap's two vertices
// lie in different blocks the gap is an opening onto the exterior; within a
// block [L,R] the map is the involution s -> L+R-1-s. Its fixed points are
// exactly that side's end-segments (the gap under an innermost arc).
// Throws std::invalid_argument for an exterior or out-of-range state.
SegmentState side_segment_map(const MeanderGraph& g, SegmentState s, Side side);

// True when `label` is a fixed point of the side map, i.e. the two gap
// vertices are directly joined by an arc of that side.
bool is_end_segment(const MeanderGraph& g, int label, Side side);

// All end-segments whose arc is a top arc, ascending.
std::vector<int> top_end_segments(const MeanderGraph& g);

// Flood from the exterior through both side maps (openings connect to the
// exterior, in-block moves are bidirectional). A segment the flood never
// reaches is walled off by a cycle, so this decides cycle existence without
// tracing components.
bool has_cycle_via_segments(const MeanderGraph& g);

enum class TraceEnd { exterior, end_segment, cycle };

struct EscapeTrace {
  std::vector<SegmentState> states;  // starts with the initial segment
  TraceEnd end = TraceEnd::exterior;
  Side end_side = Side::top;  // the blocked side when end == end_segment
};

// Deterministic alternating walk from segment s, bottom map first. Stops on
// reaching the exterior, on standing at an end-segment of the side about to
// be applied, or on the first revisited state (a cycle; the repeat is kept
// as the trace's last entry).
EscapeTrace escape_trace(const MeanderGraph& g, int s);

}  // namespace meander
