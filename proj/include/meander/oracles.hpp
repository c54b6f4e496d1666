#pragma once

#include "meander/graph.hpp"
#include "meander/reduction.hpp"

namespace meander {

// a|b is Frobenius iff gcd(a, b) = 1.
bool frobenius_two_blocks(int a, int b);

// a|b|c is Frobenius iff gcd(a+b, b+c) = 1.
bool frobenius_three_blocks(int a, int b, int c);

// Sufficiency for the uniform family a|a|...|a|b (k copies of even a): when
// gcd(a, b) = 1 the meander is Frobenius, so this returns true. Throws
// NotApplicable when a is odd or gcd(a, b) != 1 — no converse is encoded;
// callers needing those cases must go through the graph.
bool frobenius_even_family(int a, int k, int b);

// Component counts of 2a|2a|...|2a|a (k copies of 2a): ceil(a/2) components
// of which floor(a/2) are cycles, independent of k.
ComponentSummary predicted_components_doubled(int a, int k);

// Component counts of a|a|...|a on n vertices (n a multiple of a):
// ceil(n/2a)*ceil(a/2) components, ceil(n/2a)*floor(a/2) of them cycles.
ComponentSummary predicted_components_uniform(int a, int n);

}  // namespace meander
