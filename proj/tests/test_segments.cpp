#include <doctest.h>

#include <numeric>

#include "meander/segments.hpp"
#include "support.hpp"

using namespace meander;

namespace {

MeanderType uniform_family(int a, int k, int b) {
  std::vector<int> top(k, a);
  top.push_back(b);
  return make_type(top);
}

}  // namespace

TEST_CASE("side_segment_map follows arcs within a block and opens between blocks") {
  const MeanderGraph g = build_meander(parse_type("2|2/4"));
  CHECK(side_segment_map(g, interior(2), Side::top) == kExterior);
  CHECK(side_segment_map(g, interior(1), Side::top) == interior(1));   // end-segment
  CHECK(side_segment_map(g, interior(1), Side::bottom) == interior(3));
  CHECK(side_segment_map(g, interior(2), Side::bottom) == interior(2));

  CHECK_THROWS_AS(side_segment_map(g, kExterior, Side::top), std::invalid_argument);
  CHECK_THROWS_AS(side_segment_map(g, interior(4), Side::top), std::invalid_argument);
}

TEST_CASE("the side maps are involutions on interior segments") {
  // two-sided up to n = 9
  for (int n = 2; n <= 9; ++n) {
    testsupport::for_each_type_pair(n, [&](const std::vector<int>& top,
                                           const std::vector<int>& bottom) {
      const MeanderGraph g = build_meander(MeanderType{top, bottom});
      for (int s = 1; s < n; ++s)
        for (Side side : {Side::top, Side::bottom}) {
          const SegmentState once = side_segment_map(g, interior(s), side);
          if (once.is_exterior()) continue;
          CHECK(side_segment_map(g, once, side) == interior(s));
        }
    });
  }
  // the map only sees one side's blocks, so single-bottom types up to n = 14
  // cover every block layout that can occur on either side
  MeanderType t;
  MeanderGraph g;
  t.bottom.resize(1);
  for (int n = 2; n <= 14; ++n) {
    t.bottom[0] = n;
    for_each_composition(n, [&](const std::vector<int>& top) {
      t.top = top;
      build_meander_into(t, g);
      for (int s = 1; s < n; ++s)
        for (Side side : {Side::top, Side::bottom}) {
          const SegmentState once = side_segment_map(g, interior(s), side);
          if (once.is_exterior()) continue;
          if (!(side_segment_map(g, once, side) == interior(s))) {
            CAPTURE(format_type(t));
            REQUIRE(side_segment_map(g, once, side) == interior(s));
          }
        }
    });
  }
}

TEST_CASE("top_end_segments are the fixed points of the top map") {
  CHECK(top_end_segments(build_meander(parse_type("2|2|2|1"))) == std::vector<int>{1, 3, 5});
  // 4|4|3: the odd block has no innermost adjacent pair, so only the even
  // blocks contribute (odd multiples of c = 2 inside them).
  CHECK(top_end_segments(build_meander(parse_type("4|4|3"))) == std::vector<int>{2, 6});
  CHECK(top_end_segments(build_meander(parse_type("1|1/2"))).empty());
  CHECK(top_end_segments(build_meander(parse_type("6|6|3"))) == std::vector<int>{3, 9});

  for (int s : top_end_segments(build_meander(parse_type("4|4|3"))))
    CHECK(is_end_segment(build_meander(parse_type("4|4|3")), s, Side::top));
}

TEST_CASE("exterior flood detects cycles") {
  CHECK(has_cycle_via_segments(build_meander(parse_type("6|6|3"))));
  for (int k = 1; k <= 5; ++k)
    CHECK_FALSE(has_cycle_via_segments(build_meander(uniform_family(2, k, 3))));
  CHECK_FALSE(has_cycle_via_segments(build_meander(parse_type("1"))));
  CHECK(has_cycle_via_segments(build_meander(parse_type("2"))));  // 2-cycle walls off gap 1
}

TEST_CASE("segment flood agrees with component cycle counts") {
  MeanderType t;
  MeanderGraph g;
  // single bottom block, n <= 10 here (the acceptance suite pushes to 14)
  t.bottom.resize(1);
  for (int n = 1; n <= 10; ++n) {
    t.bottom[0] = n;
    for_each_composition(n, [&](const std::vector<int>& top) {
      t.top = top;
      build_meander_into(t, g);
      const bool has_cycle = analyze_components(g).cycles >= 1;
      if (has_cycle_via_segments(g) != has_cycle) {
        CAPTURE(format_type(t));
        REQUIRE(has_cycle_via_segments(g) == has_cycle);
      }
    });
  }
  // both sides free, n <= 7
  for (int n = 1; n <= 7; ++n) {
    testsupport::for_each_type_pair(n, [&](const std::vector<int>& top,
                                           const std::vector<int>& bottom) {
      t.top.assign(top.begin(), top.end());
      t.bottom.assign(bottom.begin(), bottom.end());
      build_meander_into(t, g);
      const bool has_cycle = analyze_components(g).cycles >= 1;
      if (has_cycle_via_segments(g) != has_cycle) {
        CAPTURE(format_type(t));
        REQUIRE(has_cycle_via_segments(g) == has_cycle);
      }
    });
  }
}

TEST_CASE("escape traces") {
  SUBCASE("6|6|3 interior segments loop") {
    const MeanderGraph g = build_meander(parse_type("6|6|3"));
    const EscapeTrace trace = escape_trace(g, 1);
    CHECK(trace.end == TraceEnd::cycle);
    const std::vector<int> labels{1, 14, 13, 2, 4, 11, 7, 8, 10, 5, 1};
    REQUIRE(trace.states.size() == labels.size());
    for (size_t i = 0; i < labels.size(); ++i) CHECK(trace.states[i] == interior(labels[i]));
  }
  SUBCASE("2|2|2|1 top-end-segment escapes") {
    const MeanderGraph g = build_meander(parse_type("2|2|2|1"));
    const EscapeTrace trace = escape_trace(g, 3);
    CHECK(trace.end == TraceEnd::exterior);
    REQUIRE(trace.states.size() == 3);
    CHECK(trace.states[0] == interior(3));
    CHECK(trace.states[1] == interior(4));
    CHECK(trace.states[2] == kExterior);
  }
  SUBCASE("a bottom opening exits in one hop") {
    const MeanderGraph g = build_meander(parse_type("1|2|3/2|4"));
    const EscapeTrace trace = escape_trace(g, 2);
    CHECK(trace.end == TraceEnd::exterior);
    REQUIRE(trace.states.size() == 2);
    CHECK(trace.states[1] == kExterior);
  }
  SUBCASE("standing on an end-segment of the pending side stops") {
    const MeanderGraph g = build_meander(parse_type("2|2/4"));
    const EscapeTrace trace = escape_trace(g, 2);  // bottom end-segment
    CHECK(trace.end == TraceEnd::end_segment);
    CHECK(trace.end_side == Side::bottom);
    CHECK(trace.states.size() == 1);
  }
}

TEST_CASE("family segment maps match the closed forms") {
  for (int a = 2; a <= 8; a += 2) {
    const int c = a / 2;
    for (int k = 1; k <= 4; ++k)
      for (int b = 1; b < 2 * a; b += 2) {
        const MeanderGraph g = build_meander(uniform_family(a, k, b));
        const int n = k * a + b;
        REQUIRE(g.n == n);
        for (int x = 1; x < n; ++x) {
          CAPTURE(a); CAPTURE(k); CAPTURE(b); CAPTURE(x);
          // bottom: single block, x -> 2kc + b - x
          CHECK(side_segment_map(g, interior(x), Side::bottom) ==
                interior(2 * k * c + b - x));
          const int block = (x - 1) / a;  // 0-based; vertex x's top block
          if (x % a == 0 && block + 1 <= k) {
            // the opening between consecutive blocks
            CHECK(side_segment_map(g, interior(x), Side::top) == kExterior);
          } else if (block < k) {
            const int ell = block + 1;  // 1-based even-block index
            CHECK(side_segment_map(g, interior(x), Side::top) ==
                  interior((2 * ell - 1) * 2 * c - x));
          } else {
            CHECK(side_segment_map(g, interior(x), Side::top) ==
                  interior(4 * k * c + b - x));
          }
        }
      }
  }
}

TEST_CASE("every top-end-segment escapes when gcd(a, b) = 1") {
  for (int a = 2; a <= 8; a += 2)
    for (int k = 1; k <= 4; ++k)
      for (int b = 1; b < 2 * a; b += 2) {
        if (std::gcd(a, b) != 1) continue;
        const MeanderGraph g = build_meander(uniform_family(a, k, b));
        for (int s : top_end_segments(g)) {
          CAPTURE(a); CAPTURE(k); CAPTURE(b); CAPTURE(s);
          CHECK(escape_trace(g, s).end == TraceEnd::exterior);
        }
      }
}
