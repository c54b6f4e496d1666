#include "meander/types.hpp"

#include <numeric>
#include <sstream>

namespace meander {

int MeanderType::total() const {
  return std::accumulate(top.begin(), top.end(), 0);
}

void validate(const MeanderType& t) {
  if (t.top.empty() || t.bottom.empty())
    throw std::invalid_argument("meander type needs at least one part on each side");
  long long ts = 0, bs = 0;
  for (int p : t.top) {
    if (p < 1) throw std::invalid_argument("top part " + std::to_string(p) + " is not positive");
    ts += p;
  }
  for (int p : t.bottom) {
    if (p < 1) throw std::invalid_argument("bottom part " + std::to_string(p) + " is not positive");
    bs += p;
  }
  if (ts != bs)
    throw std::invalid_argument("top sum " + std::to_string(ts) + " != bottom sum " +
                                std::to_string(bs));
  if (ts > 1'000'000'000)
    throw std::invalid_argument("total n = " + std::to_string(ts) + " is too large");
}

MeanderType make_type(std::vector<int> top, std::vector<int> bottom) {
  MeanderType t{std::move(top), std::move(bottom)};
  validate(t);
  return t;
}

MeanderType make_type(std::vector<int> top) {
  long long n = 0;
  for (int p : top) n += p;
  if (n < 1 || n > 1'000'000'000)
    throw std::invalid_argument("total n = " + std::to_string(n) + " is out of range");
  MeanderType t{std::move(top), {static_cast<int>(n)}};
  validate(t);
  return t;
}

namespace {

std::vector<int> parse_parts(const std::string& text, size_t begin, size_t end) {
  std::vector<int> parts;
  size_t pos = begin;
  while (true) {
    size_t bar = text.find('|', pos);
    size_t stop = (bar == std::string::npos || bar >= end) ? end : bar;
    const std::string token = text.substr(pos, stop - pos);
    if (token.empty()) throw ParseError("empty part in \"" + text + "\"");
    long long value = 0;
    for (char c : token) {
      if (c < '0' || c > '9')
        throw ParseError("bad token \"" + token + "\" in \"" + text + "\"");
      value = value * 10 + (c - '0');
      if (value > 1'000'000'000) throw ParseError("part \"" + token + "\" is too large");
    }
    if (value < 1) throw ParseError("part \"" + token + "\" must be >= 1");
    parts.push_back(static_cast<int>(value));
    if (stop == end) break;
    pos = stop + 1;
  }
  return parts;
}

}  // namespace

MeanderType parse_type(const std::string& text) {
  if (text.empty()) throw ParseError("empty type string");
  const size_t slash = text.find('/');
  MeanderType t;
  if (slash == std::string::npos) {
    t.top = parse_parts(text, 0, text.size());
    long long n = 0;
    for (int p : t.top) n += p;
    if (n > 1'000'000'000) throw ParseError("total n of \"" + text + "\" is too large");
    t.bottom = {static_cast<int>(n)};
  } else {
    if (text.find('/', slash + 1) != std::string::npos)
      throw ParseError("more than one '/' in \"" + text + "\"");
    t.top = parse_parts(text, 0, slash);
    t.bottom = parse_parts(text, slash + 1, text.size());
  }
  try {
    validate(t);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in \"" + text + "\"");
  }
  return t;
}

std::string format_type(const MeanderType& t) {
  std::ostringstream out;
  for (size_t i = 0; i < t.top.size(); ++i) {
    if (i) out << '|';
    out << t.top[i];
  }
  const bool full_bottom = t.bottom.size() == 1 && t.bottom[0] == t.total();
  if (!full_bottom) {
    out << '/';
    for (size_t i = 0; i < t.bottom.size(); ++i) {
      if (i) out << '|';
      out << t.bottom[i];
    }
  }
  return out.str();
}

}  // namespace meander
