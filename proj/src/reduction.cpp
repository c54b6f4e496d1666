#include "meander/reduction.hpp"

namespace meander {

namespace {

void require_single_bottom(const MeanderType& t, const char* op) {
  validate(t);
  if (!t.single_bottom_block())
    throw NotApplicable(std::string(op) + ": bottom must be a single block");
}

}  // namespace

MeanderType reduce_tail(const MeanderType& t) {
  require_single_bottom(t, "reduce_tail");
  if (t.top.size() < 2)
    throw NotApplicable("reduce_tail: need at least two top parts");
  const int a = t.top.front();
  for (size_t i = 0; i + 1 < t.top.size(); ++i)
    if (t.top[i] != a)
      throw NotApplicable("reduce_tail: leading top parts are not all equal");
  if (a % 2 != 0) throw NotApplicable("reduce_tail: a = " + std::to_string(a) + " is odd");
  const int b = t.top.back();
  if (b % 2 == 0) throw NotApplicable("reduce_tail: b = " + std::to_string(b) + " is even");
  if (b <= 2 * a)
    throw NotApplicable("reduce_tail: b = " + std::to_string(b) + " <= 2a = " +
                        std::to_string(2 * a));
  std::vector<int> top(t.top);
  top.back() = b - 2 * a;
  return make_type(std::move(top));
}

MeanderType general_reduce(const MeanderType& t) {
  require_single_bottom(t, "general_reduce");
  if (t.top.size() < 2)
    throw NotApplicable("general_reduce: need at least two top parts");
  const int first = t.top.front();
  const int last = t.top.back();
  if (last < 2 * first)
    throw NotApplicable("general_reduce: last part " + std::to_string(last) +
                        " < 2 * first part " + std::to_string(first));
  std::vector<int> top(t.top.begin() + 1, t.top.end() - 1);
  top.push_back(first);
  if (last - 2 * first > 0) top.push_back(last - 2 * first);
  return make_type(std::move(top));
}

MeanderType normalize(const MeanderType& t) {
  require_single_bottom(t, "normalize");
  MeanderType cur = t;
  while (cur.top.size() >= 2 && cur.top.back() >= 2 * cur.top.front())
    cur = general_reduce(cur);
  return cur;
}

std::vector<MeanderType> normalize_chain(const MeanderType& t) {
  require_single_bottom(t, "normalize");
  std::vector<MeanderType> chain{t};
  while (chain.back().top.size() >= 2 &&
         chain.back().top.back() >= 2 * chain.back().top.front())
    chain.push_back(general_reduce(chain.back()));
  return chain;
}

}  // namespace meander
