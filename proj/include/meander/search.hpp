#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "meander/graph.hpp"

namespace meander {

struct CensusRow {
  MeanderType type;  // top composition over one full bottom block
  int n = 0;
  int paths = 0;
  int cycles = 0;
  int index = 0;
  bool frobenius = false;
};

// One row per composition of each n <= n_max into exactly `parts` positive
// parts, n ascending then compositions lexicographic. Streams; rows for a
// fixed n number C(n-1, parts-1).
void census(int n_max, int parts, const std::function<void(const CensusRow&)>& sink);

std::vector<CensusRow> census_rows(int n_max, int parts);

// CSV with header `type,n,paths,cycles,index,frobenius`, or one JSON object
// per line with the same fields.
void write_census_csv(std::ostream& out, int n_max, int parts);
void write_census_jsonl(std::ostream& out, int n_max, int parts);

// Candidate criterion gcd(|sum alpha_i * a_i|, |sum beta_i * a_i|) = 1 over
// the top parts a_1..a_t.
struct GcdCondition {
  std::vector<int> alpha;
  std::vector<int> beta;

  bool operator==(const GcdCondition&) const = default;
};

// gcd convention: gcd(0, x) = |x|, gcd(0, 0) = 0. Requires a single bottom
// block and coefficient length == number of top parts.
bool condition_holds(const GcdCondition& cond, const MeanderType& t);

// Conditions equal up to negating alpha, negating beta, or swapping the two
// vectors decide the same predicate; the canonical class representative is
// the lexicographically greatest variant of (alpha ++ beta).
GcdCondition canonical_condition(const GcdCondition& cond);

struct EliminatedCondition {
  GcdCondition cond;
  std::string witness;  // a meander type on which the condition disagrees
};

struct FalsifyReport {
  int bound = 0;
  int parts = 0;
  int n_max = 0;
  long long conditions_checked = 0;  // canonical classes
  std::vector<GcdCondition> survivors;
  std::vector<EliminatedCondition> eliminated;  // enumeration order
};

// Tests every canonical condition class with coefficients in [-bound, bound]
// (no all-zero vector) against the full census of `parts`-part meanders with
// n <= n_max. A condition survives iff it agrees with Frobenius-ness on every
// row; eliminated conditions carry one witness each. Deterministic: parallel
// and serial runs produce identical reports.
FalsifyReport falsify_conditions(int bound, int parts, int n_max, int jobs = 1);

// JSON object: bound, parts, n_max, conditions_checked, survivors[],
// eliminated_sample[] (at most sample_limit entries).
std::string falsify_report_json(const FalsifyReport& report, int sample_limit = 10);

struct TheoremCheck {
  std::string name;
  long long instances = 0;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct VerifyReport {
  int n_max = 0;
  std::vector<TheoremCheck> checks;

  bool all_passed() const;
  long long total_instances() const;
};

// Swappable deciders so a corrupted oracle can be injected to prove the
// harness actually fails on disagreement.
struct VerifyHooks {
  std::function<bool(int, int)> two_blocks;
  std::function<bool(int, int, int)> three_blocks;
};

// Replays every closed-form result against the graph method up to n_max:
// the two gcd criteria, even-family sufficiency, and both component-count
// formulas. Reports instance counts and the first counterexample per check.
VerifyReport verify_theorem_suite(int n_max);
VerifyReport verify_theorem_suite(int n_max, const VerifyHooks& hooks);

std::string verify_report_json(const VerifyReport& report);

}  // namespace meander
