#pragma once

#include <stdexcept>
#include <vector>

#include "meander/types.hpp"

namespace meander {

// A reduction's precondition does not hold for the given type.
struct NotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a|a|...|a|b over one block, a even, b odd, b > 2a  ->  a|a|...|a|(b-2a).
// Index-preserving (the downward direction of the tail lemma).
MeanderType reduce_tail(const MeanderType& t);

// a1|a2|...|at over one block with at >= 2*a1  ->  a2|...|a_{t-1}|a1|(at-2*a1),
// dropping the last part when it is 0. Index- and component-preserving.
MeanderType general_reduce(const MeanderType& t);

// Applies general_reduce until at < 2*a1 or a single part remains. Identity
// when no step applies; terminates since n shrinks by 2*a1 > 0 per step.
MeanderType normalize(const MeanderType& t);

// The full chain normalize walks through, starting with t itself.
std::vector<MeanderType> normalize_chain(const MeanderType& t);

}  // namespace meander
