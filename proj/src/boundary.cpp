#include "kgr/boundary.hpp"

#include <algorithm>
#include <functional>

namespace kgr {

std::optional<BasicSet> make_basic(const KGraph& g, PathId base, std::vector<PathId> avoid) {
  int s = g.source_of(base);
  for (PathId nu : avoid) {
    if (g.range_of(nu) != s)
      throw Error(Errc::range_mismatch,
                  "avoidance member " + g.path_str(nu) + " is not in s(" + g.path_str(base) + ")Lambda");
    if (g.degree(nu).is_zero()) return std::nullopt;  // D_lam \ D_lam = empty
  }
  std::sort(avoid.begin(), avoid.end(), [&](PathId a, PathId b) { return g.path_less(a, b); });
  avoid.erase(std::unique(avoid.begin(), avoid.end()), avoid.end());
  return BasicSet{base, std::move(avoid)};
}

BasicSet require_basic(const KGraph& g, PathId base, std::vector<PathId> avoid) {
  auto b = make_basic(g, base, std::move(avoid));
  if (!b) throw Error(Errc::bad_argument, "basic set normalizes to the empty set");
  return *b;
}

bool basic_less(const KGraph& g, const BasicSet& a, const BasicSet& b) {
  if (a.base != b.base) return g.path_less(a.base, b.base);
  size_t n = std::min(a.avoid.size(), b.avoid.size());
  for (size_t i = 0; i < n; ++i)
    if (a.avoid[i] != b.avoid[i]) return g.path_less(a.avoid[i], b.avoid[i]);
  return a.avoid.size() < b.avoid.size();
}

CylinderSet as_cylinder(const KGraph& g, std::vector<BasicSet> parts) {
  std::sort(parts.begin(), parts.end(),
            [&](const BasicSet& a, const BasicSet& b) { return basic_less(g, a, b); });
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return CylinderSet{std::move(parts)};
}

CylinderSet singleton(const KGraph& g, const BasicSet& a) { return as_cylinder(g, {a}); }

bool in_A_n(const KGraph& g, const BasicSet& a, const DegreeVector& n) {
  return leq(n, g.degree(a.base));
}

std::string basic_str(const KGraph& g, const BasicSet& a) {
  std::string s = "[" + g.path_str(a.base);
  if (!a.avoid.empty()) {
    s += " - ";
    for (size_t i = 0; i < a.avoid.size(); ++i) {
      if (i) s += ',';
      s += g.path_str(a.avoid[i]);
    }
  }
  return s + "]";
}

std::string set_str(const KGraph& g, const CylinderSet& x) {
  if (x.parts.empty()) return "{}";
  std::string s = "{";
  for (size_t i = 0; i < x.parts.size(); ++i) {
    if (i) s += " | ";
    s += basic_str(g, x.parts[i]);
  }
  return s + "}";
}

std::vector<PathId> mce_firsts(const KGraph& g, PathId lam, PathId mu) {
  std::vector<PathId> out;
  for (const auto& [alpha, beta] : g.lambda_min_or_empty(lam, mu)) {
    (void)beta;
    out.push_back(alpha);
  }
  return out;
}

CylinderSet intersect_basic(const KGraph& g, const BasicSet& a, const BasicSet& b) {
  std::vector<BasicSet> parts;
  for (const auto& [alpha, beta] : g.lambda_min_or_empty(a.base, b.base)) {
    (void)beta;
    PathId la = g.compose(a.base, alpha);
    std::vector<PathId> f;
    for (PathId nu : a.avoid) {
      auto fs = mce_firsts(g, la, g.compose(a.base, nu));
      f.insert(f.end(), fs.begin(), fs.end());
    }
    for (PathId xi : b.avoid) {
      auto fs = mce_firsts(g, la, g.compose(b.base, xi));
      f.insert(f.end(), fs.begin(), fs.end());
    }
    if (auto part = make_basic(g, la, std::move(f))) parts.push_back(std::move(*part));
  }
  return as_cylinder(g, std::move(parts));
}

CylinderSet intersect(const KGraph& g, const CylinderSet& x, const CylinderSet& y) {
  std::vector<BasicSet> parts;
  for (const auto& a : x.parts)
    for (const auto& b : y.parts) {
      auto piece = intersect_basic(g, a, b);
      parts.insert(parts.end(), piece.parts.begin(), piece.parts.end());
    }
  return as_cylinder(g, std::move(parts));
}

namespace {

// D_{mu G} as a disjoint union of basic sets: peel the members in canonical order
std::vector<BasicSet> disjointify_union(const KGraph& g, PathId mu, const std::vector<PathId>& G) {
  std::vector<BasicSet> out;
  for (size_t j = 0; j < G.size(); ++j) {
    PathId mj = g.compose(mu, G[j]);
    std::vector<PathId> f;
    for (size_t i = 0; i < j; ++i) {
      auto fs = mce_firsts(g, mj, g.compose(mu, G[i]));
      f.insert(f.end(), fs.begin(), fs.end());
    }
    if (auto part = make_basic(g, mj, std::move(f))) out.push_back(std::move(*part));
  }
  return out;
}

}  // namespace

CylinderSet difference_basic(const KGraph& g, const BasicSet& a, const BasicSet& b) {
  std::vector<BasicSet> parts;
  // a minus all of D_mu
  std::vector<PathId> f = a.avoid;
  auto fs = mce_firsts(g, a.base, b.base);
  f.insert(f.end(), fs.begin(), fs.end());
  if (auto away = make_basic(g, a.base, std::move(f))) parts.push_back(std::move(*away));
  // plus the slice of a inside D_{mu G}
  for (const auto& piece : disjointify_union(g, b.base, b.avoid)) {
    auto hit = intersect_basic(g, a, piece);
    parts.insert(parts.end(), hit.parts.begin(), hit.parts.end());
  }
  return as_cylinder(g, std::move(parts));
}

CylinderSet difference(const KGraph& g, const CylinderSet& x, const CylinderSet& y) {
  std::vector<BasicSet> acc;
  for (const auto& a : x.parts) {
    std::vector<BasicSet> cur{a};
    for (const auto& b : y.parts) {
      std::vector<BasicSet> next;
      for (const auto& p : cur) {
        auto d = difference_basic(g, p, b);
        next.insert(next.end(), d.parts.begin(), d.parts.end());
      }
      cur = std::move(next);
    }
    acc.insert(acc.end(), cur.begin(), cur.end());
  }
  return as_cylinder(g, std::move(acc));
}

CylinderSet unite(const KGraph& g, const CylinderSet& x, const CylinderSet& y) {
  auto rest = difference(g, y, x);
  std::vector<BasicSet> parts = x.parts;
  parts.insert(parts.end(), rest.parts.begin(), rest.parts.end());
  return as_cylinder(g, std::move(parts));
}

CylinderSet symmetric_difference(const KGraph& g, const CylinderSet& x, const CylinderSet& y) {
  auto a = difference(g, x, y);
  auto b = difference(g, y, x);
  a.parts.insert(a.parts.end(), b.parts.begin(), b.parts.end());
  return as_cylinder(g, std::move(a.parts));
}

CylinderSet complement_within(const KGraph& g, const CylinderSet& x, const BasicSet& ambient,
                              std::optional<DegreeVector> bound) {
  if (!is_empty(g, difference(g, x, singleton(g, ambient)), bound))
    throw Error(Errc::not_contained, "set is not contained in the ambient basic set");
  return difference(g, singleton(g, ambient), x);
}

Emptiness emptiness(const KGraph& g, const BasicSet& a, std::optional<DegreeVector> bound) {
  auto res = g.is_exhaustive(g.source_of(a.base), a.avoid, bound);
  return Emptiness{res.exhaustive, res.bound};
}

bool is_empty(const KGraph& g, const BasicSet& a, std::optional<DegreeVector> bound) {
  return emptiness(g, a, bound).empty;
}

bool is_empty(const KGraph& g, const CylinderSet& x, std::optional<DegreeVector> bound) {
  for (const auto& a : x.parts)
    if (!is_empty(g, a, bound)) return false;
  return true;
}

bool sets_equal(const KGraph& g, const CylinderSet& x, const CylinderSet& y,
                std::optional<DegreeVector> bound) {
  return is_empty(g, symmetric_difference(g, x, y), bound);
}

bool basic_subset_D(const KGraph& g, PathId mu, PathId nu, std::optional<DegreeVector> bound) {
  if (g.range_of(mu) != g.range_of(nu)) return false;
  auto diff = make_basic(g, mu, mce_firsts(g, mu, nu));
  if (!diff) return true;  // mu extends nu
  return is_empty(g, *diff, bound);
}

bool condition_K(const KGraph& g, const BasicSet& a, int color, std::optional<DegreeVector> bound) {
  if (color < 1 || color > g.rank()) throw Error(Errc::invalid_color, "color out of range");
  int s = g.source_of(a.base);
  // checking edges suffices: longer paths factor through their e_i prefix
  for (int e : g.edges_with_range(s, color)) {
    PathId mu = g.path_from_edges(std::vector<int>{e});
    bool covered = false;
    for (PathId nu : a.avoid)
      if (basic_subset_D(g, mu, nu, bound)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

CylinderSet slice_cylinder(const KGraph& g, const DegreeVector& n) {
  std::vector<BasicSet> parts;
  for (PathId lam : g.all_paths_of_degree(n)) parts.push_back(BasicSet{lam, {}});
  return as_cylinder(g, std::move(parts));
}

bool contained_in_slice(const KGraph& g, const CylinderSet& x, const DegreeVector& n,
                        std::optional<DegreeVector> bound) {
  return is_empty(g, difference(g, x, slice_cylinder(g, n)), bound);
}

bool avoids_slice_k(const KGraph& g, const BasicSet& a, int color, std::optional<DegreeVector> bound) {
  if (g.degree(a.base)[color - 1] != 0) return false;
  return condition_K(g, a, color, bound);
}

bool avoids_slice_extensional(const KGraph& g, const BasicSet& a, int color,
                              std::optional<DegreeVector> bound) {
  auto hit = intersect(g, singleton(g, a), slice_cylinder(g, g.basis(color)));
  return is_empty(g, hit, bound);
}

CylinderSet refine_to_slice(const KGraph& g, const BasicSet& a, const DegreeVector& n,
                            std::optional<DegreeVector> bound) {
  if (!contained_in_slice(g, singleton(g, a), n, bound))
    throw Error(Errc::not_in_slice, basic_str(g, a) + " is not contained in the degree-" + n.str() + " slice");
  DegreeVector d = g.degree(a.base);
  DegreeVector rest = join(d, n) - d;
  std::vector<BasicSet> parts;
  for (PathId mu : g.paths_from(g.source_of(a.base), rest)) {
    if (auto part = make_basic(g, g.compose(a.base, mu), g.ext(mu, a.avoid)))
      parts.push_back(std::move(*part));
  }
  return as_cylinder(g, std::move(parts));
}

BasicSet sigma_image(const KGraph& g, const BasicSet& a, const DegreeVector& n) {
  if (!leq(n, g.degree(a.base)))
    throw Error(Errc::degree_too_small, "shift by " + n.str() + " exceeds d(" + g.path_str(a.base) + ")");
  return BasicSet{g.suffix(a.base, n), a.avoid};
}

CylinderSet sigma_preimage(const KGraph& g, const BasicSet& a, const DegreeVector& n) {
  std::vector<BasicSet> parts;
  for (PathId tau : g.paths_into(g.range_of(a.base), n))
    parts.push_back(BasicSet{g.compose(tau, a.base), a.avoid});
  return as_cylinder(g, std::move(parts));
}

std::vector<BasicSet> enumerate_basics(const KGraph& g, const DegreeVector& dcap,
                                       const DegreeVector& ecap, size_t fmax) {
  std::vector<BasicSet> out;
  for (PathId lam : g.all_paths_upto(dcap)) {
    std::vector<PathId> cands;
    if (leq(g.degree(lam), ecap)) {
      for (const auto& q : degrees_upto(ecap - g.degree(lam))) {
        if (q.is_zero()) continue;
        const auto& ps = g.paths_from(g.source_of(lam), q);
        cands.insert(cands.end(), ps.begin(), ps.end());
      }
      g.sort_paths(cands);
    }
    size_t maxsize = std::min(cands.size(), fmax);
    if (maxsize > 20)
      throw Error(Errc::bad_argument, "basic-set family too large; lower the caps or fmax");
    std::vector<size_t> idx;
    auto emit = [&] {
      std::vector<PathId> f;
      for (size_t i : idx) f.push_back(cands[i]);
      if (auto b = make_basic(g, lam, std::move(f))) out.push_back(std::move(*b));
    };
    emit();
    std::function<void(size_t)> rec = [&](size_t from) {
      if (idx.size() == maxsize) return;
      for (size_t i = from; i < cands.size(); ++i) {
        idx.push_back(i);
        emit();
        rec(i + 1);
        idx.pop_back();
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end(),
            [&](const BasicSet& a, const BasicSet& b) { return basic_less(g, a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BasicSet reduce_redundant(const KGraph& g, const BasicSet& a, std::optional<DegreeVector> bound) {
  std::vector<PathId> kept;
  for (PathId nu : a.avoid) {
    bool drop = false;
    for (PathId other : a.avoid) {
      if (other == nu) continue;
      if (!basic_subset_D(g, nu, other, bound)) continue;
      // nu ⊆ other: drop nu unless they are extensionally equal and nu is canonical
      if (basic_subset_D(g, other, nu, bound) && g.path_less(nu, other)) continue;
      drop = true;
      break;
    }
    if (!drop) kept.push_back(nu);
  }
  return require_basic(g, a.base, std::move(kept));
}

}  // namespace kgr
