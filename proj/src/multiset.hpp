#pragma once

// Multiset helpers over sorted child lists. Internal to the library.

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "cos/structure.hpp"

namespace deep::detail {

struct Group {
  Structure value;
  std::size_t count;
};

inline std::vector<Group> group_sorted(std::span<const Structure> items) {
  std::vector<Group> groups;
  for (const auto& k : items) {
    if (!groups.empty() && groups.back().value == k) {
      ++groups.back().count;
    } else {
      groups.push_back({k, 1});
    }
  }
  return groups;
}

using SplitVisitor =
    std::function<bool(const std::vector<Structure>& selected, const std::vector<Structure>& rest)>;

/// Visits every sub-multiset (empty and full included) in a fixed order until
/// the visitor returns true. Returns whether it was stopped.
inline bool for_each_split(const std::vector<Group>& groups, const SplitVisitor& visit) {
  std::vector<std::size_t> take(groups.size(), 0);
  while (true) {
    std::vector<Structure> selected;
    std::vector<Structure> rest;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (std::size_t i = 0; i < groups[g].count; ++i) {
        (i < take[g] ? selected : rest).push_back(groups[g].value);
      }
    }
    if (visit(selected, rest)) return true;
    std::size_t g = 0;
    while (g < groups.size() && take[g] == groups[g].count) take[g++] = 0;
    if (g == groups.size()) return false;
    ++take[g];
  }
}

inline bool for_each_split(std::span<const Structure> sorted, const SplitVisitor& visit) {
  return for_each_split(group_sorted(sorted), visit);
}

/// Sorted multiset intersection and the two differences.
struct Overlap {
  std::vector<Structure> common;
  std::vector<Structure> only_left;
  std::vector<Structure> only_right;
};

inline Overlap overlap(std::vector<Structure> left, std::vector<Structure> right) {
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  Overlap o;
  std::size_t i = 0, j = 0;
  while (i < left.size() && j < right.size()) {
    if (left[i] == right[j]) {
      o.common.push_back(left[i]);
      ++i;
      ++j;
    } else if (left[i] < right[j]) {
      o.only_left.push_back(left[i++]);
    } else {
      o.only_right.push_back(right[j++]);
    }
  }
  o.only_left.insert(o.only_left.end(), left.begin() + static_cast<std::ptrdiff_t>(i), left.end());
  o.only_right.insert(o.only_right.end(), right.begin() + static_cast<std::ptrdiff_t>(j),
                      right.end());
  return o;
}

inline std::vector<Structure> concat(std::vector<Structure> a, const std::vector<Structure>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace deep::detail
