#ifndef BOHR_YOUNG_HPP
#define BOHR_YOUNG_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ostream>
#include <vector>

#include "bohr/errors.hpp"

namespace bohr {

/// Part sizes of a Young tableau Y(k, n): a non-increasing list of positive
/// integers summing to n. The flag index form 0 < i_1 < ... < i_k = n is the
/// sequence of partial sums.
struct PartitionType {
  std::vector<std::size_t> parts;

  std::size_t total() const {
    std::size_t s = 0;
    for (auto p : parts) s += p;
    return s;
  }

  bool valid() const {
    if (parts.empty()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] == 0) return false;
      if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
  }

  /// Partial sums i_1 < i_2 < ... < i_k = n.
  std::vector<std::size_t> flag_indices() const {
    std::vector<std::size_t> out;
    std::size_t s = 0;
    for (auto p : parts) out.push_back(s += p);
    return out;
  }

  friend bool operator==(const PartitionType&, const PartitionType&) = default;
  friend auto operator<=>(const PartitionType&, const PartitionType&) = default;

  friend std::ostream& operator<<(std::ostream& os, const PartitionType& t) {
    os << "(";
    for (std::size_t i = 0; i < t.parts.size(); ++i) os << (i ? "," : "") << t.parts[i];
    return os << ")";
  }
};

/// All partitions of n into exactly k parts, in decreasing lexicographic
/// order: Y(2,4) = {(3,1), (2,2)}.
inline std::vector<PartitionType> enumerate_young(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) throw DomainError("enumerate_young: need 1 <= k <= n");
  std::vector<PartitionType> out;
  std::vector<std::size_t> parts;
  // remaining: what is left to distribute; slots: parts still to place; cap: max part size
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t slots,
                                                                       std::size_t cap) {
    if (slots == 0) {
      if (remaining == 0) out.push_back({parts});
      return;
    }
    // each of the remaining slots needs at least 1 and at most `cap`
    const std::size_t hi = std::min(cap, remaining - (slots - 1));
    const std::size_t lo = (remaining + slots - 1) / slots;
    for (std::size_t p = hi; p >= lo && p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, slots - 1, p);
      parts.pop_back();
    }
  };
  rec(n, k, n);
  return out;
}

}  // namespace bohr

#endif  // BOHR_YOUNG_HPP
