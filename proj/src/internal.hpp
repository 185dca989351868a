#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nonblock/automaton.hpp"

namespace nonblock::detail {

// FNV-1a over the raw id words. Good enough for hash-consing frontiers.
struct IdVecHash {
  size_t operator()(const std::vector<StateId>& v) const noexcept {
    uint64_t h = 1469598103934665603ull;
    for (StateId x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string subset_name(const std::vector<StateId>& subset) {
  std::string name = "{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) name += ',';
    name += std::to_string(subset[i]);
  }
  name += '}';
  return name;
}

}  // namespace nonblock::detail
