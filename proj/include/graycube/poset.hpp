#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graycube/util.hpp"

namespace graycube {

/// A finite poset over opaque string ids. The relation is stored as a
/// dense matrix, which keeps the exhaustive checks cheap; copies share
/// the underlying data.
class FinitePoset {
 public:
  FinitePoset() : data_(shared_empty()) {}

  /// Trusted-builder constructor: the relation is taken from a predicate
  /// on element indices. Re-checked only when the audit flag is set.
  static FinitePoset build(std::vector<std::string> elements,
                           const std::function<bool(std::size_t, std::size_t)>& leq) {
    auto data = std::make_shared<Data>();
    data->elements = std::move(elements);
    index_elements(*data);
    const std::size_t n = data->elements.size();
    data->leq.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(i, j)) data->leq[i * n + j] = true;
    FinitePoset p(std::move(data));
    if (audit_enabled()) p.assert_valid();
    return p;
  }

  /// Untrusted constructor: the relation is exactly the listed pairs
  /// (expected to include the reflexive ones, as in the JSON shape).
  static FinitePoset from_pairs(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto data = std::make_shared<Data>();
    data->elements = std::move(elements);
    index_elements(*data);
    const std::size_t n = data->elements.size();
    data->leq.assign(n * n, false);
    for (const auto& [x, y] : pairs) {
      auto i = data->index.find(x);
      auto j = data->index.find(y);
      if (i == data->index.end() || j == data->index.end())
        throw std::invalid_argument("leq pair (" + x + "," + y +
                                    ") mentions an unknown element");
      data->leq[i->second * n + j->second] = true;
    }
    return FinitePoset(std::move(data));
  }

  std::size_t size() const { return data_->elements.size(); }
  bool is_empty() const { return size() == 0; }
  const std::vector<std::string>& elements() const { return data_->elements; }
  const std::string& element(std::size_t i) const { return data_->elements.at(i); }

  bool contains(const std::string& x) const {
    return data_->index.count(x) > 0;
  }

  std::size_t index_of(const std::string& x) const {
    auto it = data_->index.find(x);
    if (it == data_->index.end())
      throw std::invalid_argument("element '" + x + "' not in poset");
    return it->second;
  }

  bool leq(std::size_t i, std::size_t j) const {
    return data_->leq[i * size() + j];
  }

  bool leq(const std::string& x, const std::string& y) const {
    return leq(index_of(x), index_of(y));
  }

  /// Violations of the poset axioms; empty means valid.
  std::vector<std::string> check() const {
    std::vector<std::string> bad;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (element(i) == element(j))
          bad.push_back("duplicate element id '" + element(i) + "'");
    for (std::size_t i = 0; i < n; ++i)
      if (!leq(i, i)) bad.push_back("not reflexive at '" + element(i) + "'");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && leq(i, j) && leq(j, i))
          bad.push_back("not antisymmetric on '" + element(i) + "','" +
                        element(j) + "'");
        if (!leq(i, j)) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (leq(j, k) && !leq(i, k))
            bad.push_back("not transitive on '" + element(i) + "'<='" +
                          element(j) + "'<='" + element(k) + "'");
      }
    return bad;
  }

  void assert_valid() const {
    auto bad = check();
    if (!bad.empty())
      throw std::logic_error("poset invariant violated: " + bad.front());
  }

  /// The full relation, reflexive pairs included, in element order.
  std::vector<std::pair<std::string, std::string>> relation_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(i, j)) out.emplace_back(element(i), element(j));
    return out;
  }

  /// Covering pairs (x,y): x < y with nothing strictly between.
  std::vector<std::pair<std::string, std::string>> covering_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || !leq(i, j)) continue;
        bool covered = true;
        for (std::size_t k = 0; k < n && covered; ++k)
          if (k != i && k != j && leq(i, k) && leq(k, j)) covered = false;
        if (covered) out.emplace_back(element(i), element(j));
      }
    return out;
  }

  /// Equality as abstract posets over the same ids: element sets and
  /// relations coincide (listing order is irrelevant).
  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::string> ea = a.elements(), eb = b.elements();
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    if (ea != eb) return false;
    for (const auto& x : ea)
      for (const auto& y : ea)
        if (a.leq(x, y) != b.leq(x, y)) return false;
    return true;
  }
  friend bool operator!=(const FinitePoset& a, const FinitePoset& b) {
    return !(a == b);
  }

 private:
  struct Data {
    std::vector<std::string> elements;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<bool> leq;  // row-major size() x size()
  };

  explicit FinitePoset(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  // Empty posets are requested for every non-comparable object pair, so
  // they all share one allocation.
  static const std::shared_ptr<const Data>& shared_empty() {
    static const std::shared_ptr<const Data> instance =
        std::make_shared<const Data>();
    return instance;
  }

  static void index_elements(Data& d) {
    for (std::size_t i = 0; i < d.elements.size(); ++i)
      d.index.emplace(d.elements[i], i);
  }

  std::shared_ptr<const Data> data_;
};

/// The chain 0 < 1 < ... < q.
inline FinitePoset interval(int q) {
  if (q < 0) throw std::invalid_argument("interval: negative length");
  std::vector<std::string> elts;
  elts.reserve(static_cast<std::size_t>(q) + 1);
  for (int i = 0; i <= q; ++i) elts.push_back(std::to_string(i));
  return FinitePoset::build(std::move(elts),
                            [](std::size_t i, std::size_t j) { return i <= j; });
}

/// Componentwise product order; element ids are "(a,b)".
inline FinitePoset product(const FinitePoset& p, const FinitePoset& r) {
  std::vector<std::string> elts;
  elts.reserve(p.size() * r.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      elts.push_back("(" + p.element(i) + "," + r.element(j) + ")");
  const std::size_t nr = r.size();
  return FinitePoset::build(
      std::move(elts), [&p, &r, nr](std::size_t a, std::size_t b) {
        return p.leq(a / nr, b / nr) && r.leq(a % nr, b % nr);
      });
}

/// A candidate map of posets; monotonicity is a separate check.
struct MonotoneMap {
  FinitePoset source;
  FinitePoset target;
  std::unordered_map<std::string, std::string> assignment;

  const std::string& apply(const std::string& x) const {
    auto it = assignment.find(x);
    if (it == assignment.end())
      throw std::invalid_argument("assignment undefined on '" + x + "'");
    return it->second;
  }
};

inline bool is_monotone(const MonotoneMap& m) {
  const std::size_t n = m.source.size();
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i)
    image[i] = m.target.index_of(m.apply(m.source.element(i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.source.leq(i, j) && !m.target.leq(image[i], image[j])) return false;
  return true;
}

}  // namespace graycube
