#include <doctest.h>

#include "meander/compositions.hpp"
#include "meander/graph.hpp"
#include "meander/reduction.hpp"

using namespace meander;

namespace {

ComponentSummary summary_of(const MeanderType& t) {
  return analyze_components(build_meander(t));
}

}  // namespace

TEST_CASE("reduce_tail peels 2a off the odd tail") {
  const MeanderType a = reduce_tail(parse_type("2|2|7"));
  CHECK(format_type(a) == "2|2|3");
  CHECK(summary_of(a) == summary_of(parse_type("2|2|7")));

  const MeanderType b = reduce_tail(parse_type("4|4|4|9"));
  CHECK(format_type(b) == "4|4|4|1");
  CHECK(summary_of(b) == summary_of(parse_type("4|4|4|9")));
}

TEST_CASE("reduce_tail rejects out-of-shape input with a reason") {
  CHECK_THROWS_WITH_AS(reduce_tail(parse_type("2|2|3")), doctest::Contains("<= 2a"),
                       NotApplicable);
  CHECK_THROWS_WITH_AS(reduce_tail(parse_type("2|3|9")), doctest::Contains("not all equal"),
                       NotApplicable);
  CHECK_THROWS_WITH_AS(reduce_tail(parse_type("3|3|7")), doctest::Contains("odd"),
                       NotApplicable);
  CHECK_THROWS_WITH_AS(reduce_tail(parse_type("2|2|8")), doctest::Contains("even"),
                       NotApplicable);
  CHECK_THROWS_AS(reduce_tail(parse_type("7")), NotApplicable);
  CHECK_THROWS_AS(reduce_tail(parse_type("2|2|7/3|8")), NotApplicable);
}

TEST_CASE("general_reduce rotates the first part and shrinks the last") {
  CHECK(format_type(general_reduce(parse_type("2|3|7"))) == "3|2|3");
  CHECK(format_type(general_reduce(parse_type("2|2|4"))) == "2|2");  // zero tail dropped
  CHECK(format_type(general_reduce(parse_type("4|9"))) == "4|1");
  CHECK(format_type(general_reduce(parse_type("2|4"))) == "2");  // degenerate t = 2

  CHECK_THROWS_AS(general_reduce(parse_type("3|2")), NotApplicable);
  CHECK_THROWS_AS(general_reduce(parse_type("5")), NotApplicable);
  CHECK_THROWS_AS(general_reduce(parse_type("2|2/2|2")), NotApplicable);
}

TEST_CASE("normalize runs general_reduce to a fixed point") {
  CHECK(format_type(normalize(parse_type("2|3|7"))) == "3|2|3");
  CHECK(format_type(normalize(parse_type("5"))) == "5");

  const std::vector<MeanderType> chain = normalize_chain(parse_type("2|2|11"));
  REQUIRE(chain.size() == 3);
  CHECK(format_type(chain[0]) == "2|2|11");
  CHECK(format_type(chain[1]) == "2|2|7");
  CHECK(format_type(chain[2]) == "2|2|3");
}

TEST_CASE("general_reduce preserves the component summary (n <= 18)") {
  MeanderType t;
  t.bottom.resize(1);
  for (int n = 2; n <= 18; ++n) {
    t.bottom[0] = n;
    for_each_composition(n, [&](const std::vector<int>& top) {
      if (top.size() < 2 || top.back() < 2 * top.front()) return;
      t.top = top;
      const MeanderType reduced = general_reduce(t);
      if (!(summary_of(reduced) == summary_of(t))) {
        CAPTURE(format_type(t));
        REQUIRE(summary_of(reduced) == summary_of(t));
      }
    });
  }
}

TEST_CASE("normalize is idempotent and strictly shrinking (n <= 14)") {
  MeanderType t;
  t.bottom.resize(1);
  for (int n = 1; n <= 14; ++n) {
    t.bottom[0] = n;
    for_each_composition(n, [&](const std::vector<int>& top) {
      t.top = top;
      const MeanderType once = normalize(t);
      CHECK(normalize(once) == once);
      if (!(once == t)) CHECK(once.total() < t.total());
      CHECK(summary_of(once) == summary_of(t));
    });
  }
}

TEST_CASE("reduce_tail matches general_reduce on the uniform-prefix domain") {
  for (int a = 2; a <= 6; a += 2)
    for (int copies = 1; copies <= 3; ++copies)
      for (int b = 2 * a + 1; copies * a + b <= 26; b += 2) {
        std::vector<int> top(copies, a);
        top.push_back(b);
        const MeanderType t = make_type(top);
        CHECK(reduce_tail(t) == general_reduce(t));
      }
}

TEST_CASE("expanding the tail by 2a is the inverse of reduce_tail") {
  for (int a = 2; a <= 6; a += 2)
    for (int copies = 1; copies <= 3; ++copies)
      for (int b = 1; b < 2 * a; b += 2) {
        std::vector<int> top(copies, a);
        top.push_back(b + 2 * a);
        const MeanderType expanded = make_type(top);
        top.back() = b;
        const MeanderType original = make_type(top);
        CHECK(reduce_tail(expanded) == original);
        CHECK(summary_of(expanded) == summary_of(original));
      }
}
