// Copyright (c) cwrg contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cwrg {

using VarId = std::uint32_t;

inline constexpr std::size_t kMaxVars = 64;

// Set of program variables as a 64-bit mask.
class VarSet {
 public:
  constexpr VarSet() = default;

  static constexpr VarSet from_bits(std::uint64_t bits) {
    VarSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr VarSet all(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr VarSet single(VarId v) { return from_bits(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(VarId v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr void insert(VarId v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VarId v) { bits_ &= ~(std::uint64_t{1} << v); }

  /// Largest member; undefined on the empty set.
  constexpr VarId max() const { return static_cast<VarId>(63 - std::countl_zero(bits_)); }

  std::vector<VarId> members() const {
    std::vector<VarId> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<VarId>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr VarSet operator|(VarSet a, VarSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr VarSet operator&(VarSet a, VarSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr VarSet operator-(VarSet a, VarSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VarSet, VarSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Calls fn(subset) for every subset of `of` with size <= max_size, ordered by
/// increasing cardinality and lexicographically (by member index) within one
/// cardinality.
template <typename Fn>
void for_each_subset_by_size(VarSet of, std::size_t max_size, Fn&& fn) {
  const std::vector<VarId> members = of.members();
  const std::size_t n = members.size();
  if (max_size > n) max_size = n;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k <= max_size; ++k) {
    idx.resize(k);
    for (std::size_t j = 0; j < k; ++j) idx[j] = j;
    while (true) {
      VarSet s;
      for (std::size_t j : idx) s.insert(members[j]);
      fn(s);
      // Advance to the next k-combination.
      std::size_t j = k;
      while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
      if (j == 0) break;
      ++idx[j - 1];
      for (std::size_t m = j; m < k; ++m) idx[m] = idx[m - 1] + 1;
    }
  }
}

}  // namespace cwrg
