#pragma once

#include <vector>

namespace meander {

// Calls fn(parts) for every composition of n into exactly `parts_count`
// positive parts, in lexicographically ascending order. The vector handed to
// fn is a shared buffer; copy it to keep it.
template <class F>
void for_each_composition(int n, int parts_count, F&& fn) {
  if (parts_count < 1 || n < parts_count) return;
  std::vector<int> buf(parts_count);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == parts_count - 1) {
      buf[pos] = remaining;
      fn(const_cast<const std::vector<int>&>(buf));
      return;
    }
    const int max_part = remaining - (parts_count - 1 - pos);
    for (int v = 1; v <= max_part; ++v) {
      buf[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, n);
}

// Every composition of n (any number of parts), first part varying slowest.
template <class F>
void for_each_composition(int n, F&& fn) {
  if (n < 1) return;
  std::vector<int> buf;
  buf.reserve(n);
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      fn(const_cast<const std::vector<int>&>(buf));
      return;
    }
    for (int v = 1; v <= remaining; ++v) {
      buf.push_back(v);
      self(self, remaining - v);
      buf.pop_back();
    }
  };
  rec(rec, n);
}

}  // namespace meander
