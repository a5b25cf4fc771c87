#include "kgr/oracle.hpp"

#include <map>

#include "kgr/exel.hpp"

namespace kgr {

bool has_sources(const KGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int c = 1; c <= g.rank(); ++c)
      if (g.edges_with_range(v, c).empty()) return true;
  return false;
}

PrefixUniverse build_universe(const KGraph& g, const DegreeVector& m) {
  if (has_sources(g))
    throw Error(Errc::source_present, "prefix oracle is only sound on graphs with no sources");
  return PrefixUniverse{m, g.all_paths_of_degree(m)};
}

namespace {

void check_degree(const KGraph& g, PathId p, const DegreeVector& need) {
  if (!leq(need, g.degree(p)))
    throw Error(Errc::insufficient_degree,
                "prefix degree " + g.degree(p).str() + " does not dominate " + need.str());
}

}  // namespace

bool oracle_membership(const KGraph& g, PathId p, const BasicSet& a) {
  check_degree(g, p, g.degree(a.base));
  if (!g.extends(p, a.base)) return false;
  for (PathId nu : a.avoid) {
    PathId ln = g.compose(a.base, nu);
    check_degree(g, p, g.degree(ln));
    if (g.extends(p, ln)) return false;
  }
  return true;
}

bool oracle_member_of(const KGraph& g, PathId p, const CylinderSet& x) {
  for (const auto& a : x.parts)
    if (oracle_membership(g, p, a)) return true;
  return false;
}

Rational oracle_value(const KGraph& g, PathId p, const CylinderFunction& f) {
  Rational out(0);
  for (const auto& [a, c] : f.terms)
    if (oracle_membership(g, p, a)) out += c;
  return out;
}

std::optional<PathId> oracle_set_equal(const KGraph& g, const CylinderSet& x, const CylinderSet& y,
                                       const DegreeVector& m) {
  for (PathId p : build_universe(g, m).paths)
    if (oracle_member_of(g, p, x) != oracle_member_of(g, p, y)) return p;
  return std::nullopt;
}

std::optional<PathId> oracle_function_equal(const KGraph& g, const CylinderFunction& f,
                                            const CylinderFunction& h, const DegreeVector& m) {
  for (PathId p : build_universe(g, m).paths)
    if (oracle_value(g, p, f) != oracle_value(g, p, h)) return p;
  return std::nullopt;
}

Rational oracle_inner_value(const KGraph& g, PathId p, const DegreeVector& n,
                            const CylinderFunction& f, const CylinderFunction& h) {
  Rational out(0);
  for (PathId tau : g.paths_into(g.range_of(p), n)) {
    PathId y = g.compose(tau, p);
    out += oracle_value(g, y, f) * oracle_value(g, y, h);
  }
  return out;
}

namespace {

// memoized membership signatures keyed by the canonical rendering
class SignatureTable {
 public:
  SignatureTable(const KGraph& g, const PrefixUniverse& u) : g_(g), u_(u) {}

  const std::vector<char>& of(const BasicSet& a) {
    auto key = basic_str(g_, a);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    std::vector<char> sig(u_.paths.size());
    for (size_t i = 0; i < u_.paths.size(); ++i)
      sig[i] = oracle_membership(g_, u_.paths[i], a) ? 1 : 0;
    return table_[key] = std::move(sig);
  }

  std::vector<char> of(const CylinderSet& x) {
    std::vector<char> sig(u_.paths.size(), 0);
    for (const auto& part : x.parts) {
      const auto& s = of(part);
      for (size_t i = 0; i < sig.size(); ++i) sig[i] = sig[i] || s[i];
    }
    return sig;
  }

  bool disjoint_parts(const CylinderSet& x) {
    std::vector<int> hits(u_.paths.size(), 0);
    for (const auto& part : x.parts) {
      const auto& s = of(part);
      for (size_t i = 0; i < hits.size(); ++i) {
        hits[i] += s[i];
        if (hits[i] > 1) return false;
      }
    }
    return true;
  }

  std::string prefix_name(size_t i) const { return g_.path_str(u_.paths[i]); }

 private:
  const KGraph& g_;
  const PrefixUniverse& u_;
  std::map<std::string, std::vector<char>> table_;
};

}  // namespace

Report oracle_suite(const KGraph& g, const DegreeVector& m, const DegreeVector& cap, size_t fmax) {
  Report rep;
  auto universe = build_universe(g, m);
  SignatureTable sig(g, universe);
  auto basics = enumerate_basics(g, cap, cap, fmax);

  // intersections
  {
    bool ok = true;
    std::string witness;
    size_t count = 0;
    for (const auto& a : basics) {
      const auto& sa = sig.of(a);
      for (const auto& b : basics) {
        ++count;
        auto engine = intersect_basic(g, a, b);
        if (!sig.disjoint_parts(engine)) {
          ok = false;
          witness = "overlapping parts for " + basic_str(g, a) + " ∩ " + basic_str(g, b);
          break;
        }
        auto se = sig.of(engine);
        const auto& sb = sig.of(b);
        for (size_t i = 0; i < se.size(); ++i)
          if (se[i] != (sa[i] && sb[i])) {
            ok = false;
            witness = basic_str(g, a) + " ∩ " + basic_str(g, b) + " at " + sig.prefix_name(i);
            break;
          }
        if (!ok) break;
      }
      if (!ok) break;
    }
    rep.add("oracle-intersect", "pairs=" + std::to_string(count), ok, witness);
  }

  // slice refinements
  {
    bool ok = true;
    std::string witness;
    size_t count = 0;
    for (const auto& a : basics) {
      const auto& sa = sig.of(a);
      for (const auto& n : degrees_upto(cap)) {
        CylinderSet ref;
        try {
          ref = refine_to_slice(g, a, n);
        } catch (const Error& e) {
          if (e.code() == Errc::not_in_slice) continue;
          throw;
        }
        ++count;
        bool in_slice = true;
        for (const auto& part : ref.parts) in_slice = in_slice && in_A_n(g, part, n);
        auto se = sig.of(ref);
        if (!in_slice || !sig.disjoint_parts(ref) || se != sa) {
          ok = false;
          witness = basic_str(g, a) + " at slice " + n.str();
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("oracle-refine", "instances=" + std::to_string(count), ok, witness);
  }

  // boolean operations
  {
    bool ok = true;
    std::string witness;
    size_t count = 0;
    for (const auto& a : basics) {
      const auto& sa = sig.of(a);
      for (const auto& b : basics) {
        ++count;
        auto x = singleton(g, a);
        auto y = singleton(g, b);
        const auto& sb = sig.of(b);
        auto su = sig.of(unite(g, x, y));
        auto sd = sig.of(difference(g, x, y));
        auto ss = sig.of(symmetric_difference(g, x, y));
        for (size_t i = 0; i < su.size(); ++i) {
          if (su[i] != (sa[i] || sb[i]) || sd[i] != (sa[i] && !sb[i]) ||
              ss[i] != (sa[i] != sb[i])) {
            ok = false;
            witness = basic_str(g, a) + " vs " + basic_str(g, b) + " at " + sig.prefix_name(i);
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    rep.add("oracle-boolean", "pairs=" + std::to_string(count), ok, witness);
  }

  // shift images and preimages
  {
    bool ok = true;
    std::string witness;
    size_t count = 0;
    for (const auto& a : basics) {
      for (const auto& n : degrees_upto(meet(g.degree(a.base), cap))) {
        ++count;
        auto img = sigma_image(g, a, n);
        PathId head = g.prefix(a.base, n);
        const auto& si = sig.of(img);
        for (size_t i = 0; i < si.size(); ++i) {
          PathId p = universe.paths[i];
          bool want = g.range_of(p) == g.source_of(head) &&
                      oracle_membership(g, g.compose(head, p), a);
          if (si[i] != want) {
            ok = false;
            witness = "image of " + basic_str(g, a) + " by " + n.str();
            break;
          }
        }
        if (!ok) break;
        if (!leq(n, m)) continue;
        auto pre = sigma_preimage(g, a, n);
        auto sp = sig.of(pre);
        for (size_t i = 0; i < sp.size(); ++i) {
          PathId p = universe.paths[i];
          bool want = oracle_membership(g, g.suffix(p, n), a);
          if (sp[i] != want) {
            ok = false;
            witness = "preimage of " + basic_str(g, a) + " by " + n.str();
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    rep.add("oracle-shift", "instances=" + std::to_string(count), ok, witness);
  }

  // inner products and products on spanning indicators
  {
    bool ok = true;
    std::string witness;
    size_t count = 0;
    for (const auto& n : degrees_upto(cap)) {
      auto fam = spanning_X(g, n, cap, fmax);
      for (const auto& fb : fam) {
        auto f = indicator(g, n, fb);
        for (const auto& hb : fam) {
          ++count;
          auto h = indicator(g, n, hb);
          auto ip = inner_product(g, f, h);
          for (PathId p : universe.paths)
            if (oracle_value(g, p, ip) != oracle_inner_value(g, p, n, f, h)) {
              ok = false;
              witness = "inner product " + basic_str(g, fb) + "," + basic_str(g, hb);
              break;
            }
          if (!ok) break;
        }
        if (!ok) break;
        if (!leq(n, m)) continue;
        for (const auto& q : degrees_upto(cap)) {
          if (!leq(q, m - n)) continue;
          for (const auto& hb : spanning_X(g, q, cap, fmax)) {
            ++count;
            auto h = indicator(g, q, hb);
            auto prod = multiply(g, f, h);
            for (PathId p : universe.paths) {
              Rational want = oracle_value(g, p, f) * oracle_value(g, g.suffix(p, n), h);
              if (oracle_value(g, p, prod) != want) {
                ok = false;
                witness = "product " + basic_str(g, fb) + "·" + basic_str(g, hb);
                break;
              }
            }
            if (!ok) break;
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    rep.add("oracle-module", "instances=" + std::to_string(count), ok, witness);
  }

  // weighted transfers
  {
    bool ok = true;
    std::string witness;
    size_t count = 0;
    std::vector<Weight> kinds{uniform_weight(), normalized_weight()};
    if (detect_regularity(g)) kinds.push_back(regular_weight(g));
    for (const auto& n : degrees_upto(cap)) {
      for (const auto& w : kinds) {
        for (const auto& fb : spanning_X(g, n, cap, fmax)) {
          ++count;
          auto f = indicator(g, n, fb);
          auto lf = transfer(g, n, f, w);
          for (PathId p : universe.paths) {
            Rational direct(0);
            for (PathId tau : g.paths_into(g.range_of(p), n))
              direct += weight_value(g, w, n, g.range_of(p)) * oracle_value(g, g.compose(tau, p), f);
            if (oracle_value(g, p, lf) != direct) {
              ok = false;
              witness = "transfer of " + basic_str(g, fb) + " at degree " + n.str();
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    rep.add("oracle-transfer", "instances=" + std::to_string(count), ok, witness);
  }

  return rep;
}

}  // namespace kgr
