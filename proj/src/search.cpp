#include "meander/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <thread>

#include "meander/compositions.hpp"
#include "meander/oracles.hpp"

namespace meander {

using ordered_json = nlohmann::ordered_json;

void census(int n_max, int parts, const std::function<void(const CensusRow&)>& sink) {
  if (parts < 1) throw std::invalid_argument("parts must be >= 1");
  MeanderGraph scratch;
  for (int n = parts; n <= n_max; ++n) {
    for_each_composition(n, parts, [&](const std::vector<int>& top) {
      CensusRow row;
      row.type = MeanderType{top, {n}};
      row.n = n;
      build_meander_into(row.type, scratch);
      const ComponentSummary s = analyze_components(scratch);
      row.paths = s.paths;
      row.cycles = s.cycles;
      row.index = 2 * s.cycles + s.paths - 1;
      row.frobenius = s.paths == 1 && s.cycles == 0;
      sink(row);
    });
  }
}

std::vector<CensusRow> census_rows(int n_max, int parts) {
  std::vector<CensusRow> rows;
  census(n_max, parts, [&](const CensusRow& r) { rows.push_back(r); });
  return rows;
}

void write_census_csv(std::ostream& out, int n_max, int parts) {
  out << "type,n,paths,cycles,index,frobenius\n";
  census(n_max, parts, [&](const CensusRow& r) {
    out << format_type(r.type) << ',' << r.n << ',' << r.paths << ',' << r.cycles << ','
        << r.index << ',' << (r.frobenius ? "true" : "false") << '\n';
  });
}

void write_census_jsonl(std::ostream& out, int n_max, int parts) {
  census(n_max, parts, [&](const CensusRow& r) {
    ordered_json j;
    j["type"] = format_type(r.type);
    j["n"] = r.n;
    j["paths"] = r.paths;
    j["cycles"] = r.cycles;
    j["index"] = r.index;
    j["frobenius"] = r.frobenius;
    out << j.dump() << '\n';
  });
}

bool condition_holds(const GcdCondition& cond, const MeanderType& t) {
  if (!t.single_bottom_block())
    throw std::invalid_argument("gcd conditions apply to single-bottom-block types");
  if (cond.alpha.size() != t.top.size() || cond.beta.size() != t.top.size())
    throw std::invalid_argument("coefficient length " +
                                std::to_string(cond.alpha.size()) + "/" +
                                std::to_string(cond.beta.size()) +
                                " does not match part count " +
                                std::to_string(t.top.size()));
  long long sa = 0, sb = 0;
  for (size_t i = 0; i < t.top.size(); ++i) {
    sa += static_cast<long long>(cond.alpha[i]) * t.top[i];
    sb += static_cast<long long>(cond.beta[i]) * t.top[i];
  }
  return std::gcd(sa, sb) == 1;
}

namespace {

bool lex_less(const GcdCondition& a, const GcdCondition& b) {
  if (a.alpha != b.alpha)
    return std::lexicographical_compare(a.alpha.begin(), a.alpha.end(), b.alpha.begin(),
                                        b.alpha.end());
  return std::lexicographical_compare(a.beta.begin(), a.beta.end(), b.beta.begin(),
                                      b.beta.end());
}

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace

GcdCondition canonical_condition(const GcdCondition& cond) {
  const std::vector<int> na = negated(cond.alpha);
  const std::vector<int> nb = negated(cond.beta);
  GcdCondition best = cond;
  const GcdCondition variants[] = {
      {cond.alpha, nb},      {na, cond.beta}, {na, nb},
      {cond.beta, cond.alpha}, {cond.beta, na}, {nb, cond.alpha}, {nb, na},
  };
  for (const GcdCondition& v : variants)
    if (lex_less(best, v)) best = v;
  return best;
}

namespace {

// (-B..B)^t odometer, lexicographically ascending, zero vector skipped.
bool next_vector(std::vector<int>& v, int bound) {
  for (size_t i = v.size(); i-- > 0;) {
    if (v[i] < bound) {
      ++v[i];
      for (size_t j = i + 1; j < v.size(); ++j) v[j] = -bound;
      return true;
    }
  }
  return false;
}

bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

std::vector<GcdCondition> canonical_classes(int bound, int parts) {
  std::vector<GcdCondition> classes;
  std::vector<int> alpha(parts, -bound);
  do {
    if (all_zero(alpha)) continue;
    std::vector<int> beta(parts, -bound);
    do {
      if (all_zero(beta)) continue;
      GcdCondition cond{alpha, beta};
      if (canonical_condition(cond) == cond) classes.push_back(std::move(cond));
    } while (next_vector(beta, bound));
  } while (next_vector(alpha, bound));
  return classes;
}

struct WorkerResult {
  std::vector<size_t> survivors;                       // class indices
  std::vector<std::pair<size_t, std::string>> killed;  // class index -> witness
};

void falsify_worker(const std::vector<GcdCondition>& classes, size_t begin, size_t end,
                    int n_max, int parts, WorkerResult& result) {
  const size_t count = end - begin;
  std::vector<char> alive(count, 1);
  std::vector<std::string> witness(count);
  size_t alive_left = count;

  census(n_max, parts, [&](const CensusRow& row) {
    if (alive_left == 0) return;
    for (size_t i = 0; i < count; ++i) {
      if (!alive[i]) continue;
      long long sa = 0, sb = 0;
      const GcdCondition& c = classes[begin + i];
      for (int p = 0; p < parts; ++p) {
        sa += static_cast<long long>(c.alpha[p]) * row.type.top[p];
        sb += static_cast<long long>(c.beta[p]) * row.type.top[p];
      }
      if ((std::gcd(sa, sb) == 1) != row.frobenius) {
        alive[i] = 0;
        --alive_left;
        witness[i] = format_type(row.type);
      }
    }
  });

  for (size_t i = 0; i < count; ++i) {
    if (alive[i])
      result.survivors.push_back(begin + i);
    else
      result.killed.emplace_back(begin + i, std::move(witness[i]));
  }
}

}  // namespace

FalsifyReport falsify_conditions(int bound, int parts, int n_max, int jobs) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (parts < 2) throw std::invalid_argument("parts must be >= 2");
  if (jobs < 1) jobs = 1;

  FalsifyReport report;
  report.bound = bound;
  report.parts = parts;
  report.n_max = n_max;

  const std::vector<GcdCondition> classes = canonical_classes(bound, parts);
  report.conditions_checked = static_cast<long long>(classes.size());

  const size_t share = (classes.size() + jobs - 1) / std::max(jobs, 1);
  std::vector<WorkerResult> results(jobs);
  std::vector<std::thread> threads;
  for (int j = 0; j < jobs; ++j) {
    const size_t begin = std::min(classes.size(), j * share);
    const size_t end = std::min(classes.size(), (j + 1) * share);
    threads.emplace_back(falsify_worker, std::cref(classes), begin, end, n_max, parts,
                         std::ref(results[j]));
  }
  for (auto& t : threads) t.join();

  // Chunks are contiguous, so concatenation restores enumeration order.
  for (const WorkerResult& r : results) {
    for (size_t idx : r.survivors) report.survivors.push_back(classes[idx]);
    for (const auto& [idx, w] : r.killed)
      report.eliminated.push_back(EliminatedCondition{classes[idx], w});
  }
  std::sort(report.survivors.begin(), report.survivors.end(), lex_less);
  return report;
}

namespace {

ordered_json condition_json(const GcdCondition& c) {
  ordered_json j;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  return j;
}

}  // namespace

std::string falsify_report_json(const FalsifyReport& report, int sample_limit) {
  ordered_json j;
  j["bound"] = report.bound;
  j["parts"] = report.parts;
  j["n_max"] = report.n_max;
  j["conditions_checked"] = report.conditions_checked;
  j["survivors"] = ordered_json::array();
  for (const GcdCondition& c : report.survivors) j["survivors"].push_back(condition_json(c));
  j["eliminated_sample"] = ordered_json::array();
  const size_t limit = sample_limit < 0 ? report.eliminated.size()
                                        : std::min<size_t>(sample_limit, report.eliminated.size());
  for (size_t i = 0; i < limit; ++i) {
    ordered_json e = condition_json(report.eliminated[i].cond);
    e["witness"] = report.eliminated[i].witness;
    j["eliminated_sample"].push_back(std::move(e));
  }
  return j.dump();
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const TheoremCheck& c) { return c.passed; });
}

long long VerifyReport::total_instances() const {
  long long total = 0;
  for (const TheoremCheck& c : checks) total += c.instances;
  return total;
}

namespace {

void record_failure(TheoremCheck& check, const std::string& witness) {
  if (check.passed) {
    check.passed = false;
    check.counterexample = witness;
  }
}

std::vector<int> uniform_top(int a, int copies, int tail) {
  std::vector<int> top(copies, a);
  if (tail > 0) top.push_back(tail);
  return top;
}

}  // namespace

VerifyReport verify_theorem_suite(int n_max) {
  return verify_theorem_suite(n_max, VerifyHooks{});
}

VerifyReport verify_theorem_suite(int n_max, const VerifyHooks& hooks) {
  const auto two = hooks.two_blocks ? hooks.two_blocks : frobenius_two_blocks;
  const auto three = hooks.three_blocks ? hooks.three_blocks : frobenius_three_blocks;

  VerifyReport report;
  report.n_max = n_max;
  MeanderGraph g;

  TheoremCheck two_check{"two_block_gcd"};
  for (int a = 1; a < n_max; ++a)
    for (int b = 1; a + b <= n_max; ++b) {
      ++two_check.instances;
      build_meander_into(MeanderType{{a, b}, {a + b}}, g);
      if (is_frobenius(g) != two(a, b))
        record_failure(two_check, format_type(MeanderType{{a, b}, {a + b}}));
    }
  report.checks.push_back(std::move(two_check));

  TheoremCheck three_check{"three_block_gcd"};
  for (int a = 1; a + 2 <= n_max; ++a)
    for (int b = 1; a + b + 1 <= n_max; ++b)
      for (int c = 1; a + b + c <= n_max; ++c) {
        ++three_check.instances;
        build_meander_into(MeanderType{{a, b, c}, {a + b + c}}, g);
        if (is_frobenius(g) != three(a, b, c))
          record_failure(three_check, format_type(MeanderType{{a, b, c}, {a + b + c}}));
      }
  report.checks.push_back(std::move(three_check));

  TheoremCheck family_check{"even_family"};
  for (int a = 2; a < n_max; a += 2)
    for (int k = 1; k * a < n_max; ++k)
      for (int b = 1; k * a + b <= n_max; ++b) {
        if (std::gcd(a, b) != 1) continue;
        ++family_check.instances;
        const MeanderType t{uniform_top(a, k, b), {k * a + b}};
        build_meander_into(t, g);
        if (!frobenius_even_family(a, k, b) || !is_frobenius(g))
          record_failure(family_check, format_type(t));
      }
  report.checks.push_back(std::move(family_check));

  TheoremCheck doubled_check{"doubled_family_components"};
  for (int a = 1; 3 * a <= n_max; ++a)
    for (int k = 1; 2 * a * k + a <= n_max; ++k) {
      ++doubled_check.instances;
      const MeanderType t{uniform_top(2 * a, k, a), {2 * a * k + a}};
      build_meander_into(t, g);
      if (analyze_components(g) != predicted_components_doubled(a, k))
        record_failure(doubled_check, format_type(t));
    }
  report.checks.push_back(std::move(doubled_check));

  TheoremCheck uniform_check{"uniform_family_components"};
  for (int a = 1; a <= n_max; ++a)
    for (int n = a; n <= n_max; n += a) {
      ++uniform_check.instances;
      const MeanderType t{uniform_top(a, n / a, 0), {n}};
      build_meander_into(t, g);
      if (analyze_components(g) != predicted_components_uniform(a, n))
        record_failure(uniform_check, format_type(t));
    }
  report.checks.push_back(std::move(uniform_check));

  return report;
}

std::string verify_report_json(const VerifyReport& report) {
  ordered_json j;
  j["n_max"] = report.n_max;
  j["all_passed"] = report.all_passed();
  j["total_instances"] = report.total_instances();
  j["checks"] = ordered_json::array();
  for (const TheoremCheck& c : report.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["instances"] = c.instances;
    cj["passed"] = c.passed;
    if (!c.passed) cj["counterexample"] = c.counterexample;
    j["checks"].push_back(std::move(cj));
  }
  return j.dump();
}

}  // namespace meander
