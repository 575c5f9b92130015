#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "graycube/cube.hpp"
#include "graycube/theta.hpp"
#include "graycube/total_order.hpp"
#include "graycube/twocat.hpp"

namespace graycube {

// ---------------------------------------------------------------------------
// The splitting of a shape [n;q] off the cube of dimension
// d = n + q_1 + ... + q_n. The section S sends the object k to the bit
// string with rank(k) leading ones, and the i-th generator of the k-th
// hom to the order on {rank(k-1)+1, ..., rank(k)} that first ascends
// through i directions and then descends through the rest. The
// retraction R collapses each object to the last section object at or
// below its rank, and is induced by its values on atoms.
// ---------------------------------------------------------------------------

inline Obj section_object(const ThetaShape& shape, int k) {
  const int ones = shape.rank(k);
  Obj eps(static_cast<std::size_t>(shape.dim()), '0');
  std::fill(eps.begin(), eps.begin() + ones, '1');
  return eps;
}

inline TotalOrder section_generator_order(const ThetaShape& shape, int k, int i) {
  if (k < 1 || k > shape.n)
    throw std::invalid_argument("generator step " + std::to_string(k) +
                                " out of range for " + shape.to_string());
  if (i < 0 || i > shape.q[k - 1])
    throw std::invalid_argument("generator " + std::to_string(i) +
                                " out of range at step " + std::to_string(k));
  const int lo = shape.rank(k - 1);
  const int hi = shape.rank(k);
  TotalOrder t;
  t.sequence.reserve(static_cast<std::size_t>(hi - lo));
  for (int a = lo + 1; a <= lo + i; ++a) t.sequence.push_back(a);
  for (int a = hi; a > lo + i; --a) t.sequence.push_back(a);
  return t;
}

/// The section 2-functor S : [n;q] -> cube, tabulated on every cell. A
/// tuple maps to the composite of its generators' orders, which in the
/// cube is their concatenation.
inline TwoFunctor section(const TwoCategory& theta, const TwoCategory& cube,
                          const ThetaShape& shape) {
  shape.check();
  TwoFunctor s;
  s.source = theta;
  s.target = cube;
  for (int k = 0; k <= shape.n; ++k)
    s.object_map[detail::theta_object(k)] = section_object(shape, k);
  for (int j = 0; j <= shape.n; ++j)
    for (int k = j; k <= shape.n; ++k) {
      const Obj x = detail::theta_object(j);
      const Obj y = detail::theta_object(k);
      auto& assign = s.hom_maps[{x, y}];
      for (const Elt& e : theta.hom(x, y).elements()) {
        const std::vector<int> tuple = detail::elt_to_tuple(e);
        TotalOrder img;
        for (int m = j + 1; m <= k; ++m) {
          const TotalOrder part = section_generator_order(
              shape, m, tuple[static_cast<std::size_t>(m - j - 1)]);
          img.sequence.insert(img.sequence.end(), part.sequence.begin(),
                              part.sequence.end());
        }
        assign[e] = img.to_string();
      }
    }
  return s;
}

inline TwoFunctor section(const ThetaShape& shape) {
  return section(build_theta(shape), build_cube(shape.dim()), shape);
}

/// Object part of the retraction: the largest k whose rank fits under
/// the rank of eps.
inline int retraction_object(const ThetaShape& shape, const Obj& eps) {
  const int r = cube_rank(eps);
  int k = 0;
  while (k < shape.n && shape.rank(k + 1) <= r) ++k;
  return k;
}

/// Value of the retraction on one atom. Atoms whose target rank is not
/// the rank of any section object map to an identity; the rest land in
/// the single-step hom below their target, hitting the generator cut out
/// by the direction when the target is the section object itself and the
/// zeroth generator otherwise.
inline Elt retraction_atom_image(const ThetaShape& shape, const Atom& atom) {
  const int r = cube_rank(atom.target);
  for (int k = 1; k <= shape.n; ++k) {
    if (shape.rank(k) != r) continue;
    if (atom.target == section_object(shape, k) &&
        atom.direction > shape.rank(k - 1))
      return std::to_string(atom.direction - shape.rank(k - 1) - 1);
    return "0";
  }
  return "id";
}

/// The retraction 2-functor R : cube -> [n;q], extended from its atom
/// values. An extension failure would contradict the construction and
/// surfaces as a logic error with the witnessing pair.
inline TwoFunctor retraction(const TwoCategory& cube, const TwoCategory& theta,
                             const ThetaShape& shape,
                             ExtendCheck mode = ExtendCheck::covering) {
  shape.check();
  std::map<Obj, Obj> object_map;
  for (const Obj& eps : cube.objects())
    object_map[eps] = detail::theta_object(retraction_object(shape, eps));
  return extend_from_atoms(
      cube, shape.dim(), theta, object_map,
      [shape](const Atom& atom) { return retraction_atom_image(shape, atom); },
      mode);
}

inline TwoFunctor retraction(const ThetaShape& shape,
                             ExtendCheck mode = ExtendCheck::covering) {
  return retraction(build_cube(shape.dim()), build_theta(shape), shape, mode);
}

struct RetractReport {
  ThetaShape shape;
  int d = 0;
  bool section_ok = false;
  bool retraction_ok = false;
  bool composite_identity = false;
  bool idempotent_ok = false;
  std::vector<Violation> witnesses;
  TwoFunctor section_functor;
  TwoFunctor retraction_functor;

  bool ok() const {
    return section_ok && retraction_ok && composite_identity && idempotent_ok;
  }
};

/// Builds both functors over the shape's cube and verifies the whole
/// splitting: S and R are 2-functors, S;R is the identity of the shape,
/// and e = R;S is idempotent. Failures land in the report as witnesses.
inline RetractReport verify_retract(const ThetaShape& shape,
                                    ExtendCheck mode = ExtendCheck::covering) {
  shape.check();
  RetractReport rep;
  rep.shape = shape;
  rep.d = shape.dim();

  const TwoCategory theta = build_theta(shape);
  const TwoCategory cube = build_cube(rep.d);
  rep.section_functor = section(theta, cube, shape);
  rep.retraction_functor = retraction(cube, theta, shape, mode);

  const Report s_check = check_functor(rep.section_functor);
  rep.section_ok = s_check.ok();
  for (const auto& v : s_check.violations)
    rep.witnesses.push_back({"section " + v.kind, v.detail});

  const Report r_check = check_functor(rep.retraction_functor);
  rep.retraction_ok = r_check.ok();
  for (const auto& v : r_check.violations)
    rep.witnesses.push_back({"retraction " + v.kind, v.detail});

  const TwoFunctor round_trip =
      compose_functors(rep.section_functor, rep.retraction_functor);
  rep.composite_identity = true;
  for (const Obj& x : theta.objects()) {
    if (round_trip.obj(x) != x) {
      rep.composite_identity = false;
      rep.witnesses.push_back(
          {"composite", "object " + x + " returns as " + round_trip.obj(x)});
    }
    for (const Obj& y : theta.objects())
      for (const Elt& e : theta.hom(x, y).elements()) {
        const Elt back = round_trip.cell(x, y, e);
        if (back != e) {
          rep.composite_identity = false;
          rep.witnesses.push_back(
              {"composite", detail::cell_name(x, y, e) + " returns as " + back});
        }
      }
  }

  const TwoFunctor e =
      compose_functors(rep.retraction_functor, rep.section_functor);
  rep.idempotent_ok = equal_functors(compose_functors(e, e), e);
  if (!rep.idempotent_ok)
    rep.witnesses.push_back({"idempotent", "e;e differs from e on the cube"});

  return rep;
}

/// The idempotent e = R;S on the cube together with the pair (S, R)
/// splitting it. The image of e has one object per object of the shape.
struct IdempotentSplit {
  TwoFunctor e;
  TwoFunctor section_functor;
  TwoFunctor retraction_functor;

  std::size_t image_object_count() const {
    std::set<Obj> image;
    for (const auto& [x, ex] : e.object_map) image.insert(ex);
    return image.size();
  }
  std::vector<Obj> fixed_objects() const {
    std::vector<Obj> fixed;
    for (const auto& [x, ex] : e.object_map)
      if (x == ex) fixed.push_back(x);
    return fixed;
  }
};

inline IdempotentSplit idempotent_split(const ThetaShape& shape,
                                        ExtendCheck mode = ExtendCheck::covering) {
  shape.check();
  const TwoCategory theta = build_theta(shape);
  const TwoCategory cube = build_cube(shape.dim());
  IdempotentSplit split;
  split.section_functor = section(theta, cube, shape);
  split.retraction_functor = retraction(cube, theta, shape, mode);
  split.e = compose_functors(split.retraction_functor, split.section_functor);
  return split;
}

/// Runs verify_retract over every shape of dimension at most dim_cap, in
/// enumeration order (dimension, then length, then hom sizes).
inline std::vector<RetractReport> sweep_retracts(
    int dim_cap, ExtendCheck mode = ExtendCheck::covering) {
  if (dim_cap > max_dim())
    throw std::invalid_argument("sweep cap " + std::to_string(dim_cap) +
                                " exceeds the configured cap " +
                                std::to_string(max_dim()));
  std::vector<RetractReport> out;
  for (const ThetaShape& shape : enumerate_shapes(dim_cap))
    out.push_back(verify_retract(shape, mode));
  return out;
}

}  // namespace graycube
