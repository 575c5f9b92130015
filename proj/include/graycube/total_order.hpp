#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graycube/util.hpp"

namespace graycube {

/// A total order on a finite set of directions (positive integers),
/// stored as the sequence of directions listed from least to greatest.
/// The empty sequence is the unique order on the empty set and doubles
/// as the identity 1-cell of a cube.
struct TotalOrder {
  std::vector<int> sequence;

  TotalOrder() = default;
  explicit TotalOrder(std::vector<int> seq) : sequence(std::move(seq)) {}

  bool empty() const { return sequence.empty(); }
  std::size_t size() const { return sequence.size(); }

  /// The directions ordered, sorted by the usual integer order.
  std::vector<int> underlying_set() const {
    std::vector<int> s = sequence;
    std::sort(s.begin(), s.end());
    return s;
  }

  /// Position of direction a in the sequence; throws if absent.
  std::size_t position(int a) const {
    for (std::size_t i = 0; i < sequence.size(); ++i)
      if (sequence[i] == a) return i;
    throw std::invalid_argument("direction " + std::to_string(a) +
                                " not in order " + to_string());
  }

  bool before(int a, int b) const { return position(a) <= position(b); }

  /// Entries must be positive and pairwise distinct.
  std::vector<std::string> check() const {
    std::vector<std::string> bad;
    std::vector<int> seen;
    for (int a : sequence) {
      if (a <= 0) bad.push_back("non-positive direction " + std::to_string(a));
      if (std::find(seen.begin(), seen.end(), a) != seen.end())
        bad.push_back("repeated direction " + std::to_string(a));
      seen.push_back(a);
    }
    return bad;
  }

  /// "3<1<2"; the empty order prints as "id".
  std::string to_string() const {
    if (sequence.empty()) return "id";
    std::vector<std::string> parts;
    parts.reserve(sequence.size());
    for (int a : sequence) parts.push_back(std::to_string(a));
    return join(parts.begin(), parts.end(), "<");
  }

  static TotalOrder from_string(const std::string& id) {
    if (id == "id") return TotalOrder{};
    std::vector<int> seq;
    for (const std::string& p : split(id, '<'))
      seq.push_back(parse_int(p, "direction"));
    return TotalOrder{std::move(seq)};
  }

  friend bool operator==(const TotalOrder& a, const TotalOrder& b) {
    return a.sequence == b.sequence;
  }
  friend bool operator!=(const TotalOrder& a, const TotalOrder& b) {
    return !(a == b);
  }
  friend bool operator<(const TotalOrder& a, const TotalOrder& b) {
    return a.sequence < b.sequence;
  }
};

/// Whether t1 is laxer than t2: every pair already in integer order
/// under t1 stays in integer order under t2. Defined only for orders on
/// the same direction set.
inline bool laxer_than(const TotalOrder& t1, const TotalOrder& t2) {
  if (t1.underlying_set() != t2.underlying_set())
    throw std::invalid_argument("laxer_than: orders " + t1.to_string() +
                                " and " + t2.to_string() +
                                " have different direction sets");
  const auto& s1 = t1.sequence;
  for (std::size_t i = 0; i < s1.size(); ++i)
    for (std::size_t j = i + 1; j < s1.size(); ++j)
      if (s1[i] <= s1[j] && !t2.before(s1[i], s1[j])) return false;
  return true;
}

/// Pairs (a,b) with a < b as integers but b listed first. Containment of
/// these sets characterises laxer_than with the inclusion reversed.
inline std::vector<std::pair<int, int>> inversion_pairs(const TotalOrder& t) {
  std::vector<std::pair<int, int>> inv;
  const auto& s = t.sequence;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) inv.emplace_back(s[j], s[i]);
  std::sort(inv.begin(), inv.end());
  return inv;
}

/// Inversion set packed into a bit mask relative to the sorted direction
/// set (bit index of pair (set[i], set[j]), i < j). Supports fast
/// comparisons inside hom posets for up to 11 directions.
inline std::uint64_t inversion_mask(const TotalOrder& t,
                                    const std::vector<int>& sorted_set) {
  std::vector<std::size_t> pos(sorted_set.size());
  for (std::size_t i = 0; i < sorted_set.size(); ++i)
    pos[i] = t.position(sorted_set[i]);
  std::uint64_t mask = 0;
  int bit = 0;
  for (std::size_t i = 0; i < sorted_set.size(); ++i)
    for (std::size_t j = i + 1; j < sorted_set.size(); ++j, ++bit)
      if (pos[i] > pos[j]) mask |= (std::uint64_t{1} << bit);
  return mask;
}

/// The orders covering t in the laxness order: swap one adjacent pair
/// listed against the integer order. Each swap removes exactly one
/// inversion, so these are precisely the covers.
inline std::vector<TotalOrder> covers_above(const TotalOrder& t) {
  std::vector<TotalOrder> out;
  for (std::size_t i = 0; i + 1 < t.sequence.size(); ++i) {
    if (t.sequence[i] > t.sequence[i + 1]) {
      TotalOrder u = t;
      std::swap(u.sequence[i], u.sequence[i + 1]);
      out.push_back(std::move(u));
    }
  }
  return out;
}

/// All total orders on the given set, in lexicographic sequence order.
inline std::vector<TotalOrder> all_orders(std::vector<int> set) {
  std::sort(set.begin(), set.end());
  std::vector<TotalOrder> out;
  if (set.empty()) {
    out.emplace_back();
    return out;
  }
  do {
    out.emplace_back(set);
  } while (std::next_permutation(set.begin(), set.end()));
  return out;
}

}  // namespace graycube
