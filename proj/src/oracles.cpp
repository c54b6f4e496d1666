#include "meander/oracles.hpp"

#include <numeric>
#include <string>

namespace meander {

namespace {

void require_positive(int value, const char* name) {
  if (value < 1)
    throw std::invalid_argument(std::string(name) + " = " + std::to_string(value) +
                                " must be >= 1");
}

}  // namespace

bool frobenius_two_blocks(int a, int b) {
  require_positive(a, "a");
  require_positive(b, "b");
  return std::gcd(a, b) == 1;
}

bool frobenius_three_blocks(int a, int b, int c) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(c, "c");
  return std::gcd(a + b, b + c) == 1;
}

bool frobenius_even_family(int a, int k, int b) {
  require_positive(a, "a");
  require_positive(k, "k");
  require_positive(b, "b");
  if (a % 2 != 0)
    throw NotApplicable("even-family criterion: a = " + std::to_string(a) + " is odd");
  if (std::gcd(a, b) != 1)
    throw NotApplicable("even-family criterion: gcd(" + std::to_string(a) + ", " +
                        std::to_string(b) + ") = " + std::to_string(std::gcd(a, b)) +
                        " != 1; the criterion is silent here");
  return true;
}

ComponentSummary predicted_components_doubled(int a, int k) {
  require_positive(a, "a");
  require_positive(k, "k");
  return ComponentSummary{a % 2, a / 2};
}

ComponentSummary predicted_components_uniform(int a, int n) {
  require_positive(a, "a");
  require_positive(n, "n");
  if (n % a != 0)
    throw std::invalid_argument("n = " + std::to_string(n) + " is not a multiple of a = " +
                                std::to_string(a));
  const int q = (n + 2 * a - 1) / (2 * a);  // ceil(n / 2a)
  const int cycles = q * (a / 2);
  const int components = q * ((a + 1) / 2);
  return ComponentSummary{components - cycles, cycles};
}

}  // namespace meander
