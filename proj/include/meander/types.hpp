#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace meander {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two ordered compositions of a common total n. `top` and `bottom` hold the
// block sizes left to right; every part is >= 1 and both sides sum to n.
struct MeanderType {
  std::vector<int> top;
  std::vector<int> bottom;

  int total() const;
  bool single_bottom_block() const { return bottom.size() == 1; }
  bool operator==(const MeanderType&) const = default;
};

// Throws std::invalid_argument when the invariants above do not hold.
void validate(const MeanderType& t);

MeanderType make_type(std::vector<int> top, std::vector<int> bottom);
// Single full bottom block (the a1|a2|...|at shorthand).
MeanderType make_type(std::vector<int> top);

// Grammar (no whitespace):  TYPE := PARTS ("/" PARTS)?   PARTS := INT ("|" INT)*
// with INT a decimal >= 1. Without "/" the bottom is one block of sum(top).
MeanderType parse_type(const std::string& text);

// Canonical form; omits "/BOTTOM" when the bottom is the single full block.
// parse_type(format_type(t)) == t for every valid t.
std::string format_type(const MeanderType& t);

}  // namespace meander
