#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graycube/poset.hpp"

namespace graycube {

using Obj = std::string;
using Elt = std::string;

/// A named witness of a broken axiom. Violations are data, not errors:
/// the checkers collect them and leave acting on them to the caller.
struct Violation {
  std::string kind;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string kind, std::string detail) {
    violations.push_back({std::move(kind), std::move(detail)});
  }
};

/// A finite poset-enriched 2-category. Hom posets, identities and
/// composition are supplied as closures so that large instances (cubes)
/// can stay lazy; hom posets are memoised per instance. Values are
/// immutable and cheap to copy.
class TwoCategory {
 public:
  using HomFn = std::function<FinitePoset(const Obj&, const Obj&)>;
  using IdFn = std::function<Elt(const Obj&)>;
  using ComposeFn =
      std::function<Elt(const Obj&, const Obj&, const Obj&, const Elt&, const Elt&)>;
  // Optional fast path: definitely-empty homs can be reported without
  // building (or caching) a poset. Pairs where the hint returns true
  // fall through to the real hom function.
  using NonemptyHintFn = std::function<bool(const Obj&, const Obj&)>;

  TwoCategory() : data_(std::make_shared<Data>()) {}

  TwoCategory(std::vector<Obj> objects, HomFn hom, IdFn identity, ComposeFn compose,
              NonemptyHintFn nonempty_hint = nullptr)
      : data_(std::make_shared<Data>()) {
    data_->objects = std::move(objects);
    data_->hom = std::move(hom);
    data_->identity = std::move(identity);
    data_->compose = std::move(compose);
    data_->nonempty_hint = std::move(nonempty_hint);
  }

  /// Table-backed construction, used by the JSON importer and by tests
  /// that need to corrupt a category.
  struct Tables {
    std::vector<Obj> objects;
    std::map<std::pair<Obj, Obj>, FinitePoset> homs;
    std::map<Obj, Elt> identities;
    // (x,y,z) -> (f,g) -> f;g
    std::map<std::tuple<Obj, Obj, Obj>, std::map<std::pair<Elt, Elt>, Elt>> compose;
  };

  static TwoCategory from_tables(Tables t) {
    auto tables = std::make_shared<const Tables>(std::move(t));
    // Reject structurally incomplete tables up front (totality of the
    // identity and composition data); whether the data satisfies the
    // axioms is check_axioms' business.
    auto hom_of = [&tables](const Obj& x, const Obj& y) -> const FinitePoset* {
      auto it = tables->homs.find({x, y});
      return it == tables->homs.end() ? nullptr : &it->second;
    };
    for (const Obj& x : tables->objects) {
      auto it = tables->identities.find(x);
      if (it == tables->identities.end())
        throw std::invalid_argument("no identity recorded for object " + x);
      const FinitePoset* diag = hom_of(x, x);
      if (diag == nullptr || !diag->contains(it->second))
        throw std::invalid_argument("identity " + it->second + " of " + x +
                                    " is not an element of hom(" + x + "," + x +
                                    ")");
    }
    // An entirely absent composition table is allowed (hom-only view, as
    // produced by the JSON form without "compose"); a partial one is not.
    if (!tables->compose.empty()) {
      for (const Obj& x : tables->objects)
        for (const Obj& y : tables->objects) {
          const FinitePoset* fs = hom_of(x, y);
          if (fs == nullptr || fs->is_empty()) continue;
          for (const Obj& z : tables->objects) {
            const FinitePoset* gs = hom_of(y, z);
            if (gs == nullptr || gs->is_empty()) continue;
            auto ct = tables->compose.find({x, y, z});
            for (const auto& f : fs->elements())
              for (const auto& g : gs->elements())
                if (ct == tables->compose.end() || !ct->second.count({f, g}))
                  throw std::invalid_argument("no composite recorded for (" +
                                              f + "," + g + ") over (" + x +
                                              "," + y + "," + z + ")");
          }
        }
    }
    std::vector<Obj> objects = tables->objects;
    HomFn hom = [tables](const Obj& x, const Obj& y) {
      auto it = tables->homs.find({x, y});
      return it == tables->homs.end() ? FinitePoset{} : it->second;
    };
    IdFn identity = [tables](const Obj& x) {
      auto it = tables->identities.find(x);
      if (it == tables->identities.end())
        throw std::invalid_argument("no identity recorded for object " + x);
      return it->second;
    };
    ComposeFn compose = [tables](const Obj& x, const Obj& y, const Obj& z,
                                 const Elt& f, const Elt& g) {
      auto it = tables->compose.find({x, y, z});
      if (it == tables->compose.end())
        throw std::invalid_argument("no composition table for (" + x + "," + y +
                                    "," + z + ")");
      auto jt = it->second.find({f, g});
      if (jt == it->second.end())
        throw std::invalid_argument("no composite recorded for (" + f + "," + g +
                                    ") over (" + x + "," + y + "," + z + ")");
      return jt->second;
    };
    return TwoCategory(std::move(objects), std::move(hom), std::move(identity),
                       std::move(compose));
  }

  const std::vector<Obj>& objects() const { return data_->objects; }

  const FinitePoset& hom(const Obj& x, const Obj& y) const {
    if (data_->nonempty_hint && !data_->nonempty_hint(x, y)) return empty_hom();
    std::lock_guard<std::mutex> lock(data_->cache_mutex);
    auto key = std::make_pair(x, y);
    auto it = data_->hom_cache.find(key);
    if (it == data_->hom_cache.end())
      it = data_->hom_cache.emplace(key, data_->hom(x, y)).first;
    return it->second;
  }

  Elt identity(const Obj& x) const { return data_->identity(x); }

  Elt compose(const Obj& x, const Obj& y, const Obj& z, const Elt& f,
              const Elt& g) const {
    return data_->compose(x, y, z, f, g);
  }

  /// Same shared data: used as a cheap sanity check for "same category".
  bool same_instance(const TwoCategory& other) const {
    return data_ == other.data_;
  }

 private:
  struct Data {
    std::vector<Obj> objects;
    HomFn hom;
    IdFn identity;
    ComposeFn compose;
    NonemptyHintFn nonempty_hint;
    mutable std::map<std::pair<Obj, Obj>, FinitePoset> hom_cache;
    mutable std::mutex cache_mutex;
  };

  static const FinitePoset& empty_hom() {
    static const FinitePoset empty;
    return empty;
  }

  std::shared_ptr<Data> data_;
};

/// A 2-functor between poset-enriched 2-categories, stored explicitly:
/// an object map plus one per-hom assignment.
struct TwoFunctor {
  TwoCategory source;
  TwoCategory target;
  std::map<Obj, Obj> object_map;
  std::map<std::pair<Obj, Obj>, std::map<Elt, Elt>> hom_maps;

  const Obj& obj(const Obj& x) const {
    auto it = object_map.find(x);
    if (it == object_map.end())
      throw std::invalid_argument("object map undefined on " + x);
    return it->second;
  }

  const Elt& cell(const Obj& x, const Obj& y, const Elt& f) const {
    auto it = hom_maps.find({x, y});
    if (it == hom_maps.end())
      throw std::invalid_argument("hom map undefined on pair (" + x + "," + y + ")");
    auto jt = it->second.find(f);
    if (jt == it->second.end())
      throw std::invalid_argument("hom map on (" + x + "," + y +
                                  ") undefined at element " + f);
    return jt->second;
  }
};

namespace detail {
inline std::string cell_name(const Obj& x, const Obj& y, const Elt& f) {
  return f + " : " + x + " -> " + y;
}
}  // namespace detail

/// A 1-cell with its endpoints spelled out.
struct OneCell {
  Obj src;
  Obj dst;
  Elt cell;
  bool operator==(const OneCell& other) const {
    return src == other.src && dst == other.dst && cell == other.cell;
  }
};

inline std::vector<OneCell> one_cells(const TwoCategory& c) {
  std::vector<OneCell> out;
  for (const auto& x : c.objects())
    for (const auto& y : c.objects())
      for (const auto& e : c.hom(x, y).elements()) out.push_back({x, y, e});
  return out;
}

/// Checks the 2-category axioms by enumeration: hom-poset validity,
/// well-typed identities and composites, monotonicity of composition in
/// each argument, associativity, and unitality. Every violation carries
/// the witnessing cells.
inline Report check_axioms(const TwoCategory& c) {
  Report report;
  const auto& obs = c.objects();

  for (const auto& x : obs)
    for (const auto& y : obs)
      for (const auto& msg : c.hom(x, y).check())
        report.add("hom-poset", "hom(" + x + "," + y + "): " + msg);

  for (const auto& x : obs) {
    const Elt id = c.identity(x);
    if (!c.hom(x, x).contains(id))
      report.add("identity", "identity " + id + " of " + x +
                                 " is not an element of hom(" + x + "," + x + ")");
  }

  for (const auto& x : obs) {
    for (const auto& y : obs) {
      const FinitePoset& hxy = c.hom(x, y);
      if (hxy.is_empty()) continue;
      for (const auto& z : obs) {
        const FinitePoset& hyz = c.hom(y, z);
        if (hyz.is_empty()) continue;
        const FinitePoset& hxz = c.hom(x, z);

        // well-typedness and monotonicity in each argument
        for (std::size_t i = 0; i < hxy.size(); ++i) {
          for (std::size_t j = 0; j < hyz.size(); ++j) {
            Elt fg;
            try {
              fg = c.compose(x, y, z, hxy.element(i), hyz.element(j));
            } catch (const std::invalid_argument& e) {
              report.add("composition", e.what());
              continue;
            }
            if (!hxz.contains(fg)) {
              report.add("composition",
                         "composite " + fg + " of " +
                             detail::cell_name(x, y, hxy.element(i)) + " and " +
                             detail::cell_name(y, z, hyz.element(j)) +
                             " is not an element of hom(" + x + "," + z + ")");
              continue;
            }
            const std::size_t cij = hxz.index_of(fg);
            for (std::size_t i2 = 0; i2 < hxy.size(); ++i2) {
              if (!hxy.leq(i, i2)) continue;
              Elt fg2;
              try {
                fg2 = c.compose(x, y, z, hxy.element(i2), hyz.element(j));
              } catch (const std::invalid_argument&) {
                continue;  // the typedness pass visits (i2, j) itself
              }
              if (hxz.contains(fg2) && !hxz.leq(cij, hxz.index_of(fg2)))
                report.add("monotonicity",
                           "left whiskering not monotone: " + hxy.element(i) +
                               " <= " + hxy.element(i2) + " in hom(" + x + "," +
                               y + ") but " + fg + " !<= " + fg2 + " after " +
                               detail::cell_name(y, z, hyz.element(j)));
            }
            for (std::size_t j2 = 0; j2 < hyz.size(); ++j2) {
              if (!hyz.leq(j, j2)) continue;
              Elt fg2;
              try {
                fg2 = c.compose(x, y, z, hxy.element(i), hyz.element(j2));
              } catch (const std::invalid_argument&) {
                continue;  // the typedness pass visits (i, j2) itself
              }
              if (hxz.contains(fg2) && !hxz.leq(cij, hxz.index_of(fg2)))
                report.add("monotonicity",
                           "right whiskering not monotone: " + hyz.element(j) +
                               " <= " + hyz.element(j2) + " in hom(" + y + "," +
                               z + ") but " + fg + " !<= " + fg2 + " before " +
                               detail::cell_name(x, y, hxy.element(i)));
            }
          }
        }

        // associativity
        for (const auto& w : obs) {
          const FinitePoset& hzw = c.hom(z, w);
          if (hzw.is_empty()) continue;
          for (std::size_t i = 0; i < hxy.size(); ++i)
            for (std::size_t j = 0; j < hyz.size(); ++j)
              for (std::size_t k = 0; k < hzw.size(); ++k) {
                const Elt f = hxy.element(i), g = hyz.element(j), h = hzw.element(k);
                Elt left, right;
                try {
                  left = c.compose(x, z, w, c.compose(x, y, z, f, g), h);
                  right = c.compose(x, y, w, f, c.compose(y, z, w, g, h));
                } catch (const std::invalid_argument& e) {
                  report.add("composition",
                             "associativity of " + f + ";" + g + ";" + h +
                                 " over " + x + "," + y + "," + z + "," + w +
                                 " could not be evaluated: " + e.what());
                  continue;
                }
                if (left != right)
                  report.add("associativity",
                             "(" + f + ";" + g + ");" + h + " = " + left +
                                 " but " + f + ";(" + g + ";" + h + ") = " +
                                 right + " over " + x + "," + y + "," + z + "," + w);
              }
        }
      }

      // unit laws
      for (std::size_t i = 0; i < hxy.size(); ++i) {
        const Elt f = hxy.element(i);
        try {
          const Elt lf = c.compose(x, x, y, c.identity(x), f);
          if (lf != f)
            report.add("unit", "id(" + x + ");" + f + " = " + lf + " != " + f);
          const Elt fr = c.compose(x, y, y, f, c.identity(y));
          if (fr != f)
            report.add("unit", f + ";id(" + y + ") = " + fr + " != " + f);
        } catch (const std::invalid_argument& e) {
          report.add("unit", "unit laws for " + detail::cell_name(x, y, f) +
                                 " could not be evaluated: " + e.what());
        }
      }
    }
  }
  return report;
}

/// Checks 2-functoriality of an explicitly tabulated functor: totality,
/// well-typed images, monotonicity on each hom, preservation of
/// identities and of all binary composites.
inline Report check_functor(const TwoFunctor& f) {
  Report report;
  const auto& src = f.source;
  const auto& tgt = f.target;

  for (const auto& x : src.objects()) {
    auto it = f.object_map.find(x);
    if (it == f.object_map.end()) {
      report.add("totality", "object map undefined on " + x);
      continue;
    }
    const auto& tobs = tgt.objects();
    if (std::find(tobs.begin(), tobs.end(), it->second) == tobs.end())
      report.add("totality", "object map sends " + x + " outside the target");
  }
  if (!report.ok()) return report;

  for (const auto& x : src.objects()) {
    for (const auto& y : src.objects()) {
      const FinitePoset& h = src.hom(x, y);
      if (h.is_empty()) continue;
      const FinitePoset& th = tgt.hom(f.obj(x), f.obj(y));

      std::vector<std::size_t> image(h.size());
      bool total = true;
      for (std::size_t i = 0; i < h.size(); ++i) {
        Elt img;
        try {
          img = f.cell(x, y, h.element(i));
        } catch (const std::invalid_argument& e) {
          report.add("totality", e.what());
          total = false;
          continue;
        }
        if (!th.contains(img)) {
          report.add("typing", "image " + img + " of " +
                                   detail::cell_name(x, y, h.element(i)) +
                                   " is not an element of hom(" + f.obj(x) + "," +
                                   f.obj(y) + ")");
          total = false;
          continue;
        }
        image[i] = th.index_of(img);
      }
      if (!total) continue;

      for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j)
          if (h.leq(i, j) && !th.leq(image[i], image[j]))
            report.add("monotonicity",
                       "2-cell " + h.element(i) + " <= " + h.element(j) +
                           " in hom(" + x + "," + y + ") maps to " +
                           th.element(image[i]) + " !<= " + th.element(image[j]));
    }

    const Elt idx = src.identity(x);
    try {
      const Elt img = f.cell(x, x, idx);
      if (img != tgt.identity(f.obj(x)))
        report.add("identity", "identity of " + x + " maps to " + img +
                                   " instead of " + tgt.identity(f.obj(x)));
    } catch (const std::invalid_argument& e) {
      report.add("identity",
                 "identity of " + x + " could not be checked: " + e.what());
    }
  }

  for (const auto& x : src.objects())
    for (const auto& y : src.objects()) {
      const FinitePoset& hxy = src.hom(x, y);
      if (hxy.is_empty()) continue;
      for (const auto& z : src.objects()) {
        const FinitePoset& hyz = src.hom(y, z);
        if (hyz.is_empty()) continue;
        for (std::size_t i = 0; i < hxy.size(); ++i)
          for (std::size_t j = 0; j < hyz.size(); ++j) {
            const Elt g1 = hxy.element(i), g2 = hyz.element(j);
            try {
              const Elt via_src = f.cell(x, z, src.compose(x, y, z, g1, g2));
              const Elt via_tgt = tgt.compose(f.obj(x), f.obj(y), f.obj(z),
                                              f.cell(x, y, g1), f.cell(y, z, g2));
              if (via_src != via_tgt)
                report.add("composition",
                           "F(" + g1 + ";" + g2 + ") = " + via_src +
                               " but F(" + g1 + ");F(" + g2 + ") = " + via_tgt +
                               " over " + x + "," + y + "," + z);
            } catch (const std::invalid_argument& e) {
              report.add("composition",
                         "image of " + g1 + ";" + g2 + " over " + x + "," + y +
                             "," + z + " could not be checked: " + e.what());
            }
          }
      }
    }
  return report;
}

/// Diagrammatic composite: first f, then g.
inline TwoFunctor compose_functors(const TwoFunctor& f, const TwoFunctor& g) {
  if (f.target.objects() != g.source.objects())
    throw std::invalid_argument(
        "compose_functors: middle categories do not match");
  TwoFunctor out;
  out.source = f.source;
  out.target = g.target;
  for (const auto& [x, fx] : f.object_map) out.object_map[x] = g.obj(fx);
  for (const auto& [pair, assign] : f.hom_maps) {
    const auto& [x, y] = pair;
    std::map<Elt, Elt> composed;
    for (const auto& [e, fe] : assign)
      composed[e] = g.cell(f.obj(x), f.obj(y), fe);
    out.hom_maps[pair] = std::move(composed);
  }
  return out;
}

inline TwoFunctor identity_functor(const TwoCategory& c) {
  TwoFunctor f;
  f.source = c;
  f.target = c;
  for (const auto& x : c.objects()) {
    f.object_map[x] = x;
    for (const auto& y : c.objects()) {
      const FinitePoset& h = c.hom(x, y);
      if (h.is_empty()) continue;
      auto& assign = f.hom_maps[{x, y}];
      for (const auto& e : h.elements()) assign[e] = e;
    }
  }
  return f;
}

/// Elementwise equality of object maps and hom assignments. Callers are
/// responsible for only comparing functors with common endpoints.
inline bool equal_functors(const TwoFunctor& f, const TwoFunctor& g) {
  if (f.source.objects() != g.source.objects()) return false;
  if (f.object_map != g.object_map) return false;
  for (const auto& x : f.source.objects())
    for (const auto& y : f.source.objects()) {
      const FinitePoset& h = f.source.hom(x, y);
      for (const auto& e : h.elements())
        if (f.cell(x, y, e) != g.cell(x, y, e)) return false;
    }
  return true;
}

/// Forces every hom poset and every composite into explicit tables.
/// Factorial growth makes this sensible only for small categories; the
/// JSON exporter is the main consumer.
inline TwoCategory::Tables materialize(const TwoCategory& c,
                                       bool include_compose = true) {
  TwoCategory::Tables t;
  t.objects = c.objects();
  for (const auto& x : t.objects) {
    t.identities[x] = c.identity(x);
    for (const auto& y : t.objects) t.homs[{x, y}] = c.hom(x, y);
  }
  if (include_compose) {
    for (const auto& x : t.objects)
      for (const auto& y : t.objects) {
        const FinitePoset& hxy = t.homs[{x, y}];
        if (hxy.is_empty()) continue;
        for (const auto& z : t.objects) {
          const FinitePoset& hyz = t.homs[{y, z}];
          if (hyz.is_empty()) continue;
          auto& table = t.compose[{x, y, z}];
          for (const auto& e1 : hxy.elements())
            for (const auto& e2 : hyz.elements())
              table[{e1, e2}] = c.compose(x, y, z, e1, e2);
        }
      }
  }
  return t;
}

/// Structural equality through materialization.
inline bool equal_categories(const TwoCategory& a, const TwoCategory& b) {
  if (a.objects() != b.objects()) return false;
  for (const auto& x : a.objects()) {
    if (a.identity(x) != b.identity(x)) return false;
    for (const auto& y : a.objects())
      if (a.hom(x, y) != b.hom(x, y)) return false;
  }
  for (const auto& x : a.objects())
    for (const auto& y : a.objects()) {
      const FinitePoset& hxy = a.hom(x, y);
      if (hxy.is_empty()) continue;
      for (const auto& z : a.objects()) {
        const FinitePoset& hyz = a.hom(y, z);
        if (hyz.is_empty()) continue;
        for (const auto& e1 : hxy.elements())
          for (const auto& e2 : hyz.elements())
            if (a.compose(x, y, z, e1, e2) != b.compose(x, y, z, e1, e2))
              return false;
      }
    }
  return true;
}

}  // namespace graycube
