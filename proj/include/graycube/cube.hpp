#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graycube/poset.hpp"
#include "graycube/total_order.hpp"
#include "graycube/twocat.hpp"
#include "graycube/util.hpp"

namespace graycube {

// ---------------------------------------------------------------------------
// Objects of the d-cube are bit strings of length d, e.g. "010". Directions
// are 1-based bit positions: direction a reads the a-th character.
// ---------------------------------------------------------------------------

inline void check_cube_object(const Obj& eps, int d) {
  if (static_cast<int>(eps.size()) != d)
    throw std::invalid_argument("object " + eps + " does not have " +
                                std::to_string(d) + " bits");
  for (char c : eps)
    if (c != '0' && c != '1')
      throw std::invalid_argument("object " + eps + " has a character besides 0/1");
}

inline int cube_rank(const Obj& eps) {
  return static_cast<int>(std::count(eps.begin(), eps.end(), '1'));
}

inline bool bits_le(const Obj& src, const Obj& dst) {
  for (std::size_t i = 0; i < src.size(); ++i)
    if (src[i] == '1' && dst[i] == '0') return false;
  return true;
}

/// Directions switched on between src and dst, assuming src <= dst.
inline std::vector<int> direction_set(const Obj& src, const Obj& dst) {
  std::vector<int> dirs;
  for (std::size_t i = 0; i < src.size(); ++i)
    if (src[i] == '0' && dst[i] == '1') dirs.push_back(static_cast<int>(i) + 1);
  return dirs;
}

inline Obj flip_bit(Obj eps, int a) {
  if (a < 1 || a > static_cast<int>(eps.size()))
    throw std::invalid_argument("direction " + std::to_string(a) +
                                " out of range for " + eps);
  eps[a - 1] = eps[a - 1] == '0' ? '1' : '0';
  return eps;
}

inline Obj all_zeros(int d) { return Obj(static_cast<std::size_t>(d), '0'); }
inline Obj all_ones(int d) { return Obj(static_cast<std::size_t>(d), '1'); }

/// All objects of the d-cube in binary counting order: 000, 001, 010, ...
inline std::vector<Obj> cube_objects(int d) {
  std::vector<Obj> out;
  out.reserve(std::size_t{1} << d);
  for (std::size_t bits = 0; bits < (std::size_t{1} << d); ++bits) {
    Obj eps(static_cast<std::size_t>(d), '0');
    for (int a = 0; a < d; ++a)
      if (bits & (std::size_t{1} << (d - 1 - a))) eps[a] = '1';
    out.push_back(std::move(eps));
  }
  return out;
}

/// Hom poset of the d-cube: empty unless src <= dst bitwise, in which case
/// its elements are the total orders on the switched-on directions, under
/// the laxness order. Elements are listed lexicographically by sequence,
/// and the order relation is computed through inversion masks.
inline FinitePoset cube_hom(int d, const Obj& src, const Obj& dst) {
  check_cube_object(src, d);
  check_cube_object(dst, d);
  if (!bits_le(src, dst)) return FinitePoset{};

  const std::vector<int> dirs = direction_set(src, dst);
  const std::vector<TotalOrder> orders = all_orders(dirs);

  std::vector<std::uint64_t> masks;
  masks.reserve(orders.size());
  std::vector<std::string> names;
  names.reserve(orders.size());
  for (const auto& t : orders) {
    masks.push_back(inversion_mask(t, dirs));
    names.push_back(t.to_string());
  }
  // t1 is below t2 when every inversion of t2 is already an inversion of t1.
  auto leq = [masks](std::size_t i, std::size_t j) {
    return (masks[j] & ~masks[i]) == 0;
  };
  return FinitePoset::build(std::move(names), leq);
}

/// Horizontal composition in the cube: concatenation of direction
/// sequences. Validates the cells against their hom posets.
inline Elt compose_cube_cells(int d, const Obj& x, const Obj& y, const Obj& z,
                              const Elt& f, const Elt& g) {
  check_cube_object(x, d);
  check_cube_object(y, d);
  check_cube_object(z, d);
  const TotalOrder tf = TotalOrder::from_string(f);
  const TotalOrder tg = TotalOrder::from_string(g);
  if (tf.underlying_set() != direction_set(x, y))
    throw std::invalid_argument("cell " + f + " is not an element of hom(" + x +
                                "," + y + ")");
  if (tg.underlying_set() != direction_set(y, z))
    throw std::invalid_argument("cell " + g + " is not an element of hom(" + y +
                                "," + z + ")");
  TotalOrder out;
  out.sequence = tf.sequence;
  out.sequence.insert(out.sequence.end(), tg.sequence.begin(), tg.sequence.end());
  return out.to_string();
}

/// An indecomposable 1-cell of the cube: switches on one direction.
struct Atom {
  int direction = 0;
  Obj source;
  Obj target;

  Elt cell() const { return std::to_string(direction); }

  bool operator==(const Atom& other) const {
    return direction == other.direction && source == other.source &&
           target == other.target;
  }
};

/// Factors a 1-cell into its unique sequence of atoms, composition order.
inline std::vector<Atom> atomic_decompose(int d, const Obj& src, const Obj& dst,
                                          const Elt& cell) {
  check_cube_object(src, d);
  check_cube_object(dst, d);
  const TotalOrder t = TotalOrder::from_string(cell);
  if (!bits_le(src, dst) || t.underlying_set() != direction_set(src, dst))
    throw std::invalid_argument("cell " + cell + " is not an element of hom(" +
                                src + "," + dst + ")");
  std::vector<Atom> atoms;
  atoms.reserve(t.sequence.size());
  Obj at = src;
  for (int a : t.sequence) {
    Atom atom;
    atom.direction = a;
    atom.source = at;
    at = flip_bit(at, a);
    atom.target = at;
    atoms.push_back(std::move(atom));
  }
  return atoms;
}

/// The d-cube as a lazy 2-category. Hom posets are produced on demand and
/// memoised by TwoCategory; composition is sequence concatenation.
inline TwoCategory build_cube(int d) {
  if (d < 0) throw std::invalid_argument("cube dimension must be nonnegative");
  if (d > max_dim())
    throw std::invalid_argument("cube dimension " + std::to_string(d) +
                                " exceeds the configured cap " +
                                std::to_string(max_dim()));
  auto hom = [d](const Obj& x, const Obj& y) { return cube_hom(d, x, y); };
  auto identity = [d](const Obj& x) {
    check_cube_object(x, d);
    return Elt("id");
  };
  auto compose = [d](const Obj& x, const Obj& y, const Obj& z, const Elt& f,
                     const Elt& g) { return compose_cube_cells(d, x, y, z, f, g); };
  // Hint: most object pairs of a cube are incomparable; report them empty
  // without building posets. Malformed objects fall through to cube_hom,
  // which rejects them.
  auto nonempty = [d](const Obj& x, const Obj& y) {
    if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
      return true;
    return bits_le(x, y);
  };
  return TwoCategory(cube_objects(d), std::move(hom), std::move(identity),
                     std::move(compose), std::move(nonempty));
}

// ---------------------------------------------------------------------------
// Extension of atom data to a 2-functor out of the cube. The underlying
// 1-category of the cube is free on the atoms, so any assignment of atom
// images extends uniquely to a map of underlying 1-categories; what can
// fail is monotonicity on the hom posets. `covering` checks each covering
// pair of every hom (enough by transitivity), `full` checks every related
// pair. Failure is a logic error: it means the atom data is inconsistent.
// ---------------------------------------------------------------------------

enum class ExtendCheck { covering, full };

inline TwoFunctor extend_from_atoms(
    const TwoCategory& cube, int d, const TwoCategory& target,
    const std::map<Obj, Obj>& object_map,
    const std::function<Elt(const Atom&)>& atom_image,
    ExtendCheck mode = ExtendCheck::covering) {
  TwoFunctor f;
  f.source = cube;
  f.target = target;
  f.object_map = object_map;

  auto image_of = [&](const Obj& src, const Obj& dst, const Elt& cell) -> Elt {
    Elt acc = target.identity(f.obj(src));
    for (const Atom& atom : atomic_decompose(d, src, dst, cell))
      acc = target.compose(f.obj(src), f.obj(atom.source), f.obj(atom.target),
                           acc, atom_image(atom));
    return acc;
  };

  for (const Obj& x : cube.objects())
    for (const Obj& y : cube.objects()) {
      const FinitePoset& h = cube.hom(x, y);
      if (h.is_empty()) continue;
      auto& assign = f.hom_maps[{x, y}];
      for (const Elt& cell : h.elements()) assign[cell] = image_of(x, y, cell);

      const FinitePoset& th = target.hom(f.obj(x), f.obj(y));
      auto check_pair = [&](const Elt& lo, const Elt& hi) {
        const Elt& ilo = assign.at(lo);
        const Elt& ihi = assign.at(hi);
        if (!th.contains(ilo) || !th.contains(ihi) ||
            !th.leq(th.index_of(ilo), th.index_of(ihi)))
          throw std::logic_error(
              "atom data does not extend to a 2-functor: " + lo + " <= " + hi +
              " in hom(" + x + "," + y + ") but the images " + ilo + ", " + ihi +
              " are not so related in hom(" + f.obj(x) + "," + f.obj(y) + ")");
      };
      if (mode == ExtendCheck::covering) {
        for (const Elt& cell : h.elements())
          for (const TotalOrder& above : covers_above(TotalOrder::from_string(cell)))
            check_pair(cell, above.to_string());
      } else {
        for (std::size_t i = 0; i < h.size(); ++i)
          for (std::size_t j = 0; j < h.size(); ++j)
            if (h.leq(i, j)) check_pair(h.element(i), h.element(j));
      }
    }
  return f;
}

}  // namespace graycube
