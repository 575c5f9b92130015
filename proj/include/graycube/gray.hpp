#pragma once

#include <string>
#include <vector>

#include "graycube/cube.hpp"
#include "graycube/total_order.hpp"
#include "graycube/twocat.hpp"

namespace graycube {

// ---------------------------------------------------------------------------
// The cube of dimension m+n seen as the tensor of two blocks: directions
// 1..m come from the first factor, directions m+1..m+n are the second
// factor's directions shifted by m. The interchangers between the two
// blocks carry all the 2-dimensional structure of the tensor, and this
// module checks their defining relations inside the big cube.
// ---------------------------------------------------------------------------

struct BlockSplit {
  int m = 0;
  int n = 0;

  void check() const {
    if (m < 0 || n < 0)
      throw std::invalid_argument("block dimensions must be nonnegative");
  }
  int dim() const { return m + n; }
};

inline TotalOrder shift_order(const TotalOrder& t, int m) {
  TotalOrder out;
  out.sequence.reserve(t.sequence.size());
  for (int a : t.sequence) out.sequence.push_back(a + m);
  return out;
}

/// The embedding (-)zeta : cube(m) -> cube(m+n) at a fixed object zeta of
/// cube(n). Objects gain the suffix zeta; cells keep their directions.
inline TwoFunctor block_embedding_first(const BlockSplit& split,
                                        const TwoCategory& small,
                                        const TwoCategory& big, const Obj& zeta) {
  split.check();
  check_cube_object(zeta, split.n);
  TwoFunctor e;
  e.source = small;
  e.target = big;
  for (const Obj& eps : small.objects()) e.object_map[eps] = eps + zeta;
  for (const Obj& x : small.objects())
    for (const Obj& y : small.objects()) {
      const FinitePoset& h = small.hom(x, y);
      if (h.is_empty()) continue;
      auto& assign = e.hom_maps[{x, y}];
      for (const Elt& cell : h.elements()) assign[cell] = cell;
    }
  return e;
}

inline TwoFunctor block_embedding_first(const BlockSplit& split, const Obj& zeta) {
  return block_embedding_first(split, build_cube(split.m), build_cube(split.dim()),
                               zeta);
}

/// The embedding eps(-) : cube(n) -> cube(m+n) at a fixed object eps of
/// cube(m). Objects gain the prefix eps; directions shift by m.
inline TwoFunctor block_embedding_second(const BlockSplit& split,
                                         const TwoCategory& small,
                                         const TwoCategory& big, const Obj& eps) {
  split.check();
  check_cube_object(eps, split.m);
  TwoFunctor e;
  e.source = small;
  e.target = big;
  for (const Obj& zeta : small.objects()) e.object_map[zeta] = eps + zeta;
  for (const Obj& x : small.objects())
    for (const Obj& y : small.objects()) {
      const FinitePoset& h = small.hom(x, y);
      if (h.is_empty()) continue;
      auto& assign = e.hom_maps[{x, y}];
      for (const Elt& cell : h.elements())
        assign[cell] =
            shift_order(TotalOrder::from_string(cell), split.m).to_string();
    }
  return e;
}

inline TwoFunctor block_embedding_second(const BlockSplit& split, const Obj& eps) {
  return block_embedding_second(split, build_cube(split.n),
                                build_cube(split.dim()), eps);
}

/// A 2-cell of the cube presented as its boundary: the relation
/// laxer_than(from, to) in hom(src, dst).
struct Interchanger {
  Obj src;
  Obj dst;
  Elt from;
  Elt to;
};

/// The interchanger gamma_{f,g} of a 1-cell f of cube(m) and a 1-cell g
/// of cube(n): the 2-cell from "g then f" to "f then g" between the two
/// ways around the square of blocks.
inline Interchanger gamma(const BlockSplit& split, const OneCell& f,
                          const OneCell& g) {
  split.check();
  check_cube_object(f.src, split.m);
  check_cube_object(f.dst, split.m);
  check_cube_object(g.src, split.n);
  check_cube_object(g.dst, split.n);
  const TotalOrder tf = TotalOrder::from_string(f.cell);
  const TotalOrder tg = TotalOrder::from_string(g.cell);
  if (!bits_le(f.src, f.dst) || tf.underlying_set() != direction_set(f.src, f.dst))
    throw std::invalid_argument("cell " + f.cell + " is not an element of hom(" +
                                f.src + "," + f.dst + ")");
  if (!bits_le(g.src, g.dst) || tg.underlying_set() != direction_set(g.src, g.dst))
    throw std::invalid_argument("cell " + g.cell + " is not an element of hom(" +
                                g.src + "," + g.dst + ")");
  const TotalOrder sg = shift_order(tg, split.m);
  Interchanger out;
  out.src = f.src + g.src;
  out.dst = f.dst + g.dst;
  TotalOrder g_first, f_first;
  g_first.sequence = sg.sequence;
  g_first.sequence.insert(g_first.sequence.end(), tf.sequence.begin(),
                          tf.sequence.end());
  f_first.sequence = tf.sequence;
  f_first.sequence.insert(f_first.sequence.end(), sg.sequence.begin(),
                          sg.sequence.end());
  out.from = g_first.to_string();
  out.to = f_first.to_string();
  return out;
}

struct GrayCheck {
  std::string name;
  Report report;
};

struct GrayReport {
  int m = 0;
  int n = 0;
  std::vector<GrayCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.report.ok()) return false;
    return true;
  }
  std::size_t violation_count() const {
    std::size_t total = 0;
    for (const auto& c : checks) total += c.report.violations.size();
    return total;
  }
};

/// Machine-checks the interchange relations for the block split of
/// cube(m+n): both families of block embeddings are 2-functors, every
/// interchanger is a valid 2-cell, interchangers at identities collapse,
/// they paste along composition in either argument, and they are natural
/// in either argument. Equations between parallel 2-cells hold as soon
/// as the boundaries match and the laxness relations hold, the target
/// being locally posetal.
inline GrayReport verify_gray_relations(const BlockSplit& split) {
  split.check();
  GrayReport rep;
  rep.m = split.m;
  rep.n = split.n;
  const int m = split.m;

  const TwoCategory left = build_cube(split.m);
  const TwoCategory right = build_cube(split.n);
  const TwoCategory big = build_cube(split.dim());

  auto in_hom = [&big](const Obj& x, const Obj& y, const Elt& e) {
    return big.hom(x, y).contains(e);
  };
  auto leq_in_hom = [&big](const Obj& x, const Obj& y, const Elt& lo, const Elt& hi) {
    const FinitePoset& h = big.hom(x, y);
    return h.contains(lo) && h.contains(hi) &&
           h.leq(h.index_of(lo), h.index_of(hi));
  };

  {
    GrayCheck check{"first_embeddings", {}};
    for (const Obj& zeta : right.objects()) {
      const Report r =
          check_functor(block_embedding_first(split, left, big, zeta));
      for (const auto& v : r.violations)
        check.report.add(v.kind, "(-)" + zeta + ": " + v.detail);
    }
    rep.checks.push_back(std::move(check));
  }
  {
    GrayCheck check{"second_embeddings", {}};
    for (const Obj& eps : left.objects()) {
      const Report r =
          check_functor(block_embedding_second(split, right, big, eps));
      for (const auto& v : r.violations)
        check.report.add(v.kind, eps + "(-): " + v.detail);
    }
    rep.checks.push_back(std::move(check));
  }

  const std::vector<OneCell> f_cells = one_cells(left);
  const std::vector<OneCell> g_cells = one_cells(right);

  auto describe = [](const OneCell& f, const OneCell& g) {
    return "gamma(" + detail::cell_name(f.src, f.dst, f.cell) + " | " +
           detail::cell_name(g.src, g.dst, g.cell) + ")";
  };

  {
    // Interchangers are 2-cells, and those at an identity collapse.
    GrayCheck cells{"interchanger_cells", {}};
    GrayCheck deg_left{"degeneracy_left", {}};
    GrayCheck deg_right{"degeneracy_right", {}};
    for (const OneCell& f : f_cells)
      for (const OneCell& g : g_cells) {
        const Interchanger gm = gamma(split, f, g);
        if (!in_hom(gm.src, gm.dst, gm.from) || !in_hom(gm.src, gm.dst, gm.to) ||
            !leq_in_hom(gm.src, gm.dst, gm.from, gm.to))
          cells.report.add("interchanger",
                           describe(f, g) + ": " + gm.from + " and " + gm.to +
                               " are not related in hom(" + gm.src + "," +
                               gm.dst + ")");
        if (f.cell == "id" && gm.from != gm.to)
          deg_left.report.add("degeneracy",
                              describe(f, g) + " should collapse but has sides " +
                                  gm.from + " and " + gm.to);
        if (g.cell == "id" && gm.from != gm.to)
          deg_right.report.add("degeneracy",
                               describe(f, g) + " should collapse but has sides " +
                                   gm.from + " and " + gm.to);
      }
    rep.checks.push_back(std::move(cells));
    rep.checks.push_back(std::move(deg_left));
    rep.checks.push_back(std::move(deg_right));
  }

  {
    // Pasting along composition in the first argument: gamma(f1;f2, g)
    // is the composite of gamma(f1, g) whiskered with f2 and of f1
    // whiskered with gamma(f2, g).
    GrayCheck check{"composition_left", {}};
    for (const OneCell& f1 : f_cells)
      for (const OneCell& f2 : f_cells) {
        if (f1.dst != f2.src) continue;
        const Elt f12 = left.compose(f1.src, f1.dst, f2.dst, f1.cell, f2.cell);
        for (const OneCell& g : g_cells) {
          const Interchanger whole = gamma(split, {f1.src, f2.dst, f12}, g);
          const Interchanger first = gamma(split, f1, g);
          const Interchanger second = gamma(split, f2, g);
          // boundaries of the pasting: outer pair and the middle cell
          const Elt lower =
              big.compose(first.src, first.dst, whole.dst, first.from, f2.cell);
          const Elt mid_a =
              big.compose(first.src, first.dst, whole.dst, first.to, f2.cell);
          const Elt mid_b = big.compose(whole.src, second.src, second.dst,
                                        f1.cell, second.from);
          const Elt upper = big.compose(whole.src, second.src, second.dst,
                                        f1.cell, second.to);
          const std::string name = describe({f1.src, f2.dst, f12}, g) + " via " +
                                   f1.cell + " ; " + f2.cell;
          if (lower != whole.from || upper != whole.to || mid_a != mid_b)
            check.report.add("pasting-boundary",
                             name + ": pasting boundary " + lower + " => " +
                                 mid_a + " / " + mid_b + " => " + upper +
                                 " does not match " + whole.from + " => " +
                                 whole.to);
          else if (!leq_in_hom(whole.src, whole.dst, whole.from, mid_a) ||
                   !leq_in_hom(whole.src, whole.dst, mid_a, whole.to))
            check.report.add("pasting-order",
                             name + ": intermediate cell " + mid_a +
                                 " does not sit between " + whole.from + " and " +
                                 whole.to);
        }
      }
    rep.checks.push_back(std::move(check));
  }

  {
    // Pasting along composition in the second argument.
    GrayCheck check{"composition_right", {}};
    for (const OneCell& g1 : g_cells)
      for (const OneCell& g2 : g_cells) {
        if (g1.dst != g2.src) continue;
        const Elt g12 = right.compose(g1.src, g1.dst, g2.dst, g1.cell, g2.cell);
        for (const OneCell& f : f_cells) {
          const Interchanger whole = gamma(split, f, {g1.src, g2.dst, g12});
          const Interchanger first = gamma(split, f, g1);
          const Interchanger second = gamma(split, f, g2);
          const Elt sg1 =
              shift_order(TotalOrder::from_string(g1.cell), m).to_string();
          const Elt sg2 =
              shift_order(TotalOrder::from_string(g2.cell), m).to_string();
          const Elt lower =
              big.compose(whole.src, second.src, second.dst, sg1, second.from);
          const Elt mid_a =
              big.compose(whole.src, second.src, second.dst, sg1, second.to);
          const Elt mid_b =
              big.compose(first.src, first.dst, whole.dst, first.from, sg2);
          const Elt upper =
              big.compose(first.src, first.dst, whole.dst, first.to, sg2);
          const std::string name = describe(f, {g1.src, g2.dst, g12}) + " via " +
                                   g1.cell + " ; " + g2.cell;
          if (lower != whole.from || upper != whole.to || mid_a != mid_b)
            check.report.add("pasting-boundary",
                             name + ": pasting boundary " + lower + " => " +
                                 mid_a + " / " + mid_b + " => " + upper +
                                 " does not match " + whole.from + " => " +
                                 whole.to);
          else if (!leq_in_hom(whole.src, whole.dst, whole.from, mid_a) ||
                   !leq_in_hom(whole.src, whole.dst, mid_a, whole.to))
            check.report.add("pasting-order",
                             name + ": intermediate cell " + mid_a +
                                 " does not sit between " + whole.from + " and " +
                                 whole.to);
        }
      }
    rep.checks.push_back(std::move(check));
  }

  {
    // Naturality in the first argument: a 2-cell f => f' slots into the
    // interchanger square, which in a locally posetal target amounts to
    // four comparabilities.
    GrayCheck check{"naturality_left", {}};
    for (const Obj& x : left.objects())
      for (const Obj& y : left.objects()) {
        const FinitePoset& h = left.hom(x, y);
        for (std::size_t i = 0; i < h.size(); ++i)
          for (std::size_t j = 0; j < h.size(); ++j) {
            if (!h.leq(i, j)) continue;
            for (const OneCell& g : g_cells) {
              const Interchanger lo = gamma(split, {x, y, h.element(i)}, g);
              const Interchanger hi = gamma(split, {x, y, h.element(j)}, g);
              if (!leq_in_hom(lo.src, lo.dst, lo.from, hi.from) ||
                  !leq_in_hom(lo.src, lo.dst, lo.to, hi.to) ||
                  !leq_in_hom(lo.src, lo.dst, lo.from, lo.to) ||
                  !leq_in_hom(lo.src, lo.dst, hi.from, hi.to))
                check.report.add(
                    "naturality",
                    "square at " + h.element(i) + " <= " + h.element(j) +
                        " against " + detail::cell_name(g.src, g.dst, g.cell) +
                        " does not commute");
            }
          }
      }
    rep.checks.push_back(std::move(check));
  }

  {
    // Naturality in the second argument.
    GrayCheck check{"naturality_right", {}};
    for (const Obj& x : right.objects())
      for (const Obj& y : right.objects()) {
        const FinitePoset& h = right.hom(x, y);
        for (std::size_t i = 0; i < h.size(); ++i)
          for (std::size_t j = 0; j < h.size(); ++j) {
            if (!h.leq(i, j)) continue;
            for (const OneCell& f : f_cells) {
              const Interchanger lo = gamma(split, f, {x, y, h.element(i)});
              const Interchanger hi = gamma(split, f, {x, y, h.element(j)});
              if (!leq_in_hom(lo.src, lo.dst, lo.from, hi.from) ||
                  !leq_in_hom(lo.src, lo.dst, lo.to, hi.to) ||
                  !leq_in_hom(lo.src, lo.dst, lo.from, lo.to) ||
                  !leq_in_hom(lo.src, lo.dst, hi.from, hi.to))
                check.report.add(
                    "naturality",
                    "square at " + h.element(i) + " <= " + h.element(j) +
                        " against " + detail::cell_name(f.src, f.dst, f.cell) +
                        " does not commute");
            }
          }
      }
    rep.checks.push_back(std::move(check));
  }

  return rep;
}

inline GrayReport verify_gray_relations(int m, int n) {
  return verify_gray_relations(BlockSplit{m, n});
}

}  // namespace graycube
