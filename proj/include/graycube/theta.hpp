#pragma once

#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graycube/poset.hpp"
#include "graycube/twocat.hpp"
#include "graycube/util.hpp"

namespace graycube {

// ---------------------------------------------------------------------------
// Shapes [n; q_1, ..., q_n]: a string of n composable arrows where the
// k-th hom is the chain poset {0, ..., q_k}. Objects are "0" ... "n";
// a cell of hom(j,k) for j < k is a tuple with one entry per step,
// written "i_{j+1},...,i_k", and identities are written "id".
// ---------------------------------------------------------------------------

struct ThetaShape {
  int n = 0;
  std::vector<int> q;

  void check() const {
    if (n < 0) throw std::invalid_argument("shape has negative length");
    if (static_cast<int>(q.size()) != n)
      throw std::invalid_argument("shape lists " + std::to_string(q.size()) +
                                  " hom sizes for length " + std::to_string(n));
    for (int qk : q)
      if (qk < 0) throw std::invalid_argument("shape has a negative hom size");
  }

  /// Rank of the object k: how many cube directions the first k steps use.
  int rank(int k) const {
    if (k < 0 || k > n)
      throw std::invalid_argument("object " + std::to_string(k) +
                                  " out of range for shape of length " +
                                  std::to_string(n));
    return k + std::accumulate(q.begin(), q.begin() + k, 0);
  }

  /// Dimension of the cube this shape retracts from.
  int dim() const { return rank(n); }

  std::string to_string() const {
    std::string out = "[" + std::to_string(n) + ";";
    for (int k = 0; k < n; ++k) {
      if (k > 0) out += ",";
      out += std::to_string(q[k]);
    }
    return out + "]";
  }

  bool operator==(const ThetaShape& other) const {
    return n == other.n && q == other.q;
  }
};

/// Parses "[n;q1,...,qn]". Whitespace is tolerated; everything else is a
/// format error.
inline ThetaShape parse_shape(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("shape " + text + " is not of the form [n;q,...]");
  s = s.substr(1, s.size() - 2);
  const auto semi = s.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("shape " + text + " is missing the ';'");
  ThetaShape shape;
  shape.n = parse_int(s.substr(0, semi), "shape length");
  const std::string rest = s.substr(semi + 1);
  if (!rest.empty())
    for (const std::string& part : split(rest, ','))
      shape.q.push_back(parse_int(part, "hom size"));
  shape.check();
  return shape;
}

namespace detail {

inline std::string theta_object(int k) { return std::to_string(k); }

inline std::string tuple_to_elt(const std::vector<int>& tuple) {
  if (tuple.empty()) return "id";
  std::string out = std::to_string(tuple[0]);
  for (std::size_t i = 1; i < tuple.size(); ++i)
    out += "," + std::to_string(tuple[i]);
  return out;
}

inline std::vector<int> elt_to_tuple(const Elt& e) {
  if (e == "id") return {};
  std::vector<int> tuple;
  for (const std::string& part : split(e, ','))
    tuple.push_back(parse_int(part, "tuple entry"));
  return tuple;
}

}  // namespace detail

/// Hom poset of a shape: empty for j > k, a point for j = k, and
/// otherwise the product of the chains {0..q_m} for j < m <= k under the
/// componentwise order. Tuples are listed lexicographically.
inline FinitePoset theta_hom(const ThetaShape& shape, int j, int k) {
  shape.check();
  if (j < 0 || j > shape.n || k < 0 || k > shape.n)
    throw std::invalid_argument("hom endpoints out of range for shape " +
                                shape.to_string());
  if (j > k) return FinitePoset{};
  std::vector<std::vector<int>> tuples;
  std::vector<int> current(static_cast<std::size_t>(k - j), 0);
  while (true) {
    tuples.push_back(current);
    int pos = k - j - 1;
    while (pos >= 0 && current[pos] == shape.q[j + pos]) current[pos--] = 0;
    if (pos < 0) break;
    ++current[pos];
  }
  std::vector<std::string> names;
  names.reserve(tuples.size());
  for (const auto& t : tuples) names.push_back(detail::tuple_to_elt(t));
  auto leq = [tuples](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < tuples[a].size(); ++i)
      if (tuples[a][i] > tuples[b][i]) return false;
    return true;
  };
  return FinitePoset::build(std::move(names), leq);
}

/// Composition in a shape: tuple concatenation.
inline Elt compose_theta_cells(const ThetaShape& shape, const Obj& x,
                               const Obj& y, const Obj& z, const Elt& f,
                               const Elt& g) {
  const int j = parse_int(x, "object");
  const int k = parse_int(y, "object");
  const int l = parse_int(z, "object");
  std::vector<int> tf = detail::elt_to_tuple(f);
  const std::vector<int> tg = detail::elt_to_tuple(g);
  auto in_hom = [&shape](int a, int b, const std::vector<int>& t) {
    if (a > b || static_cast<int>(t.size()) != b - a) return false;
    for (int m = 0; m < b - a; ++m)
      if (t[m] < 0 || t[m] > shape.q[a + m]) return false;
    return true;
  };
  if (j < 0 || l > shape.n || !in_hom(j, k, tf))
    throw std::invalid_argument("cell " + f + " is not an element of hom(" + x +
                                "," + y + ")");
  if (!in_hom(k, l, tg))
    throw std::invalid_argument("cell " + g + " is not an element of hom(" + y +
                                "," + z + ")");
  tf.insert(tf.end(), tg.begin(), tg.end());
  return detail::tuple_to_elt(tf);
}

/// The free 2-category on a shape, with lazy memoised hom posets.
inline TwoCategory build_theta(const ThetaShape& shape) {
  shape.check();
  std::vector<Obj> objects;
  objects.reserve(static_cast<std::size_t>(shape.n) + 1);
  for (int k = 0; k <= shape.n; ++k) objects.push_back(detail::theta_object(k));
  auto hom = [shape](const Obj& x, const Obj& y) {
    return theta_hom(shape, parse_int(x, "object"), parse_int(y, "object"));
  };
  auto identity = [shape](const Obj& x) {
    const int k = parse_int(x, "object");
    if (k < 0 || k > shape.n)
      throw std::invalid_argument("object " + x + " out of range");
    return Elt("id");
  };
  auto compose = [shape](const Obj& x, const Obj& y, const Obj& z, const Elt& f,
                         const Elt& g) {
    return compose_theta_cells(shape, x, y, z, f, g);
  };
  // Hint: homs against the arrow direction are empty; anything that does
  // not parse falls through to theta_hom, which rejects it.
  auto nonempty = [](const Obj& x, const Obj& y) {
    try {
      return parse_int(x, "object") <= parse_int(y, "object");
    } catch (const std::invalid_argument&) {
      return true;
    }
  };
  return TwoCategory(std::move(objects), std::move(hom), std::move(identity),
                     std::move(compose), std::move(nonempty));
}

/// Every shape whose cube dimension is at most `dim_cap`, ordered by
/// dimension, then length, then hom sizes lexicographically. There are
/// 2^(m-1) shapes of dimension m > 0 and one of dimension 0.
inline std::vector<ThetaShape> enumerate_shapes(int dim_cap) {
  if (dim_cap < 0) throw std::invalid_argument("dimension cap must be nonnegative");
  std::vector<ThetaShape> out;
  out.push_back({0, {}});
  for (int m = 1; m <= dim_cap; ++m) {
    for (int n = 1; n <= m; ++n) {
      std::vector<int> q(static_cast<std::size_t>(n), 0);
      const std::function<void(int, int)> place = [&](int pos, int remaining) {
        if (pos == n - 1) {
          q[pos] = remaining;
          out.push_back({n, q});
          return;
        }
        for (int v = 0; v <= remaining; ++v) {
          q[pos] = v;
          place(pos + 1, remaining - v);
        }
      };
      place(0, m - n);
    }
  }
  return out;
}

}  // namespace graycube
