#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "graycube/cube.hpp"
#include "graycube/gray.hpp"
#include "graycube/poset.hpp"
#include "graycube/retract.hpp"
#include "graycube/theta.hpp"
#include "graycube/twocat.hpp"

namespace graycube {

// ---------------------------------------------------------------------------
// Plain-text renderings shared by the command-line tool and the fixture
// tests. Every function returns the full table as one string; formats are
// deliberately stable, since fixtures pin them byte for byte.
// ---------------------------------------------------------------------------

namespace detail {
/// Dimension-0 cube objects are empty strings; show them as ().
inline std::string show_obj(const Obj& x) { return x.empty() ? "()" : x; }

inline std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }
}  // namespace detail

inline std::string render_hom_table(int d, const Obj& src, const Obj& dst,
                                    const FinitePoset& p) {
  std::string out = "hom " + detail::show_obj(src) + " -> " +
                    detail::show_obj(dst) + " in dimension " +
                    std::to_string(d) + "\n";
  out += "elements: " + std::to_string(p.size()) + "\n";
  for (const auto& e : p.elements()) out += "  " + e + "\n";
  const auto covers = p.covering_pairs();
  if (!covers.empty()) {
    out += "covers:\n";
    for (const auto& [lo, hi] : covers) out += "  " + lo + " -> " + hi + "\n";
  }
  return out;
}

inline std::string render_axioms_report(const std::string& what, const Report& r) {
  std::string out = "axioms for " + what + ": " + detail::pass_fail(r.ok()) + "\n";
  for (const auto& v : r.violations)
    out += "  - " + v.kind + ": " + v.detail + "\n";
  return out;
}

inline std::string render_theta(const ThetaShape& shape, const TwoCategory& theta,
                                const Report& axioms) {
  std::string out = "theta " + shape.to_string() + "\n";
  out += "objects:";
  for (const auto& x : theta.objects()) out += " " + x;
  out += "\n";
  for (int j = 0; j <= shape.n; ++j)
    for (int k = j + 1; k <= shape.n; ++k) {
      const FinitePoset& h =
          theta.hom(detail::theta_object(j), detail::theta_object(k));
      out += "hom(" + std::to_string(j) + "," + std::to_string(k) + "):";
      for (const auto& e : h.elements()) out += " " + e;
      out += "\n";
    }
  out += "axioms: " + detail::pass_fail(axioms.ok()) + "\n";
  for (const auto& v : axioms.violations)
    out += "  - " + v.kind + ": " + v.detail + "\n";
  return out;
}

/// The S/R tables of a splitting, as printed by `retract verify`: object
/// and generator images of S, rank classes and non-identity atom images
/// of R, then the four verdicts.
inline std::string render_retract_table(const RetractReport& rep) {
  const ThetaShape& shape = rep.shape;
  std::string out =
      "shape " + shape.to_string() + ", cube dimension " + std::to_string(rep.d) +
      "\n\n";

  out += "section S\n";
  for (int k = 0; k <= shape.n; ++k)
    out += "  S(" + std::to_string(k) + ") = " +
           detail::show_obj(section_object(shape, k)) + "\n";
  for (int k = 1; k <= shape.n; ++k)
    for (int i = 0; i <= shape.q[k - 1]; ++i)
      out += "  step " + std::to_string(k) + " generator " + std::to_string(i) +
             " -> " + section_generator_order(shape, k, i).to_string() + "\n";

  out += "\nretraction R\n";
  for (int k = 0; k <= shape.n; ++k) {
    const int lo = shape.rank(k);
    const int hi = k < shape.n ? shape.rank(k + 1) - 1 : shape.rank(shape.n);
    out += "  R = " + std::to_string(k) +
           (lo == hi ? " on rank " + std::to_string(lo)
                     : " on ranks " + std::to_string(lo) + ".." + std::to_string(hi)) +
           "\n";
  }
  for (const Obj& target : cube_objects(rep.d))
    for (int a = 1; a <= rep.d; ++a) {
      if (target[static_cast<std::size_t>(a) - 1] != '1') continue;
      const Obj source = flip_bit(target, a);
      const Elt image =
          rep.retraction_functor.cell(source, target, std::to_string(a));
      if (image == "id") continue;
      out += "  atom {" + std::to_string(a) + "}: " + detail::show_obj(source) +
             " -> " + detail::show_obj(target) + "  image " + image + "\n";
    }
  out += "  all other atoms map to identities\n";

  out += "\nchecks\n";
  out += "  section 2-functor: " + detail::pass_fail(rep.section_ok) + "\n";
  out += "  retraction 2-functor: " + detail::pass_fail(rep.retraction_ok) + "\n";
  out += "  composite S;R is the identity: " +
         detail::pass_fail(rep.composite_identity) + "\n";
  out += "  idempotent R;S squares to itself: " +
         detail::pass_fail(rep.idempotent_ok) + "\n";
  for (const auto& v : rep.witnesses)
    out += "  - " + v.kind + ": " + v.detail + "\n";
  return out;
}

inline std::string render_sweep(int dim_cap,
                                const std::vector<RetractReport>& reports) {
  std::string out = "retract sweep up to dimension " + std::to_string(dim_cap) + "\n";
  std::size_t width = 0;
  for (const auto& rep : reports)
    width = std::max(width, rep.shape.to_string().size());
  std::size_t passed = 0;
  for (const auto& rep : reports) {
    std::string name = rep.shape.to_string();
    name.resize(width, ' ');
    out += "  " + name + "  dim " + std::to_string(rep.d) + "  " +
           detail::pass_fail(rep.ok()) + "\n";
    if (rep.ok()) ++passed;
  }
  out += "checked " + std::to_string(reports.size()) + " shapes: " +
         std::to_string(passed) + " passed, " +
         std::to_string(reports.size() - passed) + " failed\n";
  return out;
}

inline std::string render_gray_report(const GrayReport& rep) {
  std::string out = "gray blocks (" + std::to_string(rep.m) + "," +
                    std::to_string(rep.n) + ") in dimension " +
                    std::to_string(rep.m + rep.n) + "\n";
  for (const auto& check : rep.checks) {
    out += "  " + check.name + ": " + detail::pass_fail(check.report.ok()) + "\n";
    for (const auto& v : check.report.violations)
      out += "    - " + v.kind + ": " + v.detail + "\n";
  }
  out += "result: " + detail::pass_fail(rep.ok()) + "\n";
  return out;
}

}  // namespace graycube
