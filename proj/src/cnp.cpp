#include "kgr/cnp.hpp"

#include <algorithm>

namespace kgr {

CylinderFunction apply_S(const KGraph& g, PathId lam, const CylinderFunction& f) {
  if (f.slice != g.zero()) throw Error(Errc::slice_mismatch, "S acts on slice-0 functions");
  auto lifted = multiply(g, indicator(g, g.degree(lam), BasicSet{lam, {}}), f);
  return as_slice(g, lifted, g.zero());
}

CylinderFunction apply_S_star(const KGraph& g, PathId lam, const CylinderFunction& f) {
  if (f.slice != g.zero()) throw Error(Errc::slice_mismatch, "S* acts on slice-0 functions");
  const DegreeVector d = g.degree(lam);
  BasicSet dom{lam, {}};
  std::vector<std::pair<BasicSet, Rational>> terms;
  for (const auto& [a, c] : f.terms)
    for (const auto& p : intersect_basic(g, a, dom).parts)
      terms.emplace_back(sigma_image(g, p, d), c);
  return cylfun(g, g.zero(), std::move(terms));
}

FEWitness certify_exhaustive(const KGraph& g, int v, std::vector<PathId> members,
                             std::optional<DegreeVector> bound) {
  g.sort_paths(members);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  DegreeVector joined = g.zero();
  for (PathId lam : members) {
    if (g.range_of(lam) != v)
      throw Error(Errc::range_mismatch, g.path_str(lam) + " is not in v-Lambda");
    joined = join(joined, g.degree(lam));
  }
  DegreeVector b = bound ? join(*bound, joined) : joined;
  FEWitness fe;
  fe.vertex = v;
  fe.members = members;
  fe.bound = b;
  for (const auto& p : degrees_upto(b)) {
    for (PathId mu : g.paths_from(v, p)) {
      PathId hit = -1;
      for (PathId lam : members)
        if (!g.lambda_min(lam, mu).empty()) {
          hit = lam;
          break;
        }
      if (hit < 0)
        throw Error(Errc::not_exhaustive,
                    "set misses " + g.path_str(mu) + " at bound " + b.str());
      fe.pairing.emplace_back(mu, hit);
    }
  }
  return fe;
}

std::vector<std::vector<PathId>> enumerate_fe_sets(const KGraph& g, int v, const DegreeVector& cap,
                                                   std::optional<DegreeVector> bound) {
  auto cands = g.paths_from_upto(v, cap);
  if (cands.size() > 16)
    throw Error(Errc::bad_argument, "too many candidate members; lower the cap");
  std::vector<std::vector<PathId>> out;
  for (std::uint32_t mask = 1; mask < (1u << cands.size()); ++mask) {
    std::vector<PathId> members;
    for (size_t i = 0; i < cands.size(); ++i)
      if (mask & (1u << i)) members.push_back(cands[i]);
    try {
      certify_exhaustive(g, v, members, bound);
      out.push_back(std::move(members));
    } catch (const Error& e) {
      if (e.code() != Errc::not_exhaustive) throw;
    }
  }
  return out;
}

std::vector<PathId> lambda_min_of_set(const KGraph& g, int v, const std::vector<PathId>& members) {
  DegreeVector jd = g.zero();
  for (PathId mu : members) jd = join(jd, g.degree(mu));
  std::vector<PathId> out;
  for (PathId lam : g.paths_from(v, jd)) {
    bool all = true;
    for (PathId mu : members)
      if (!g.extends(lam, mu)) {
        all = false;
        break;
      }
    if (all) out.push_back(lam);
  }
  return out;
}

namespace {

std::string set_instance(const KGraph& g, int v, const std::vector<PathId>& members) {
  std::string s = "v=" + g.vertex_name(v) + ",E={";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) s += ',';
    s += g.path_str(members[i]);
  }
  return s + "}";
}

}  // namespace

Report check_partial_isometry(const KGraph& g, const CheckOptions& opt) {
  Report rep;
  auto vectors = spanning_X(g, g.zero(), opt.cap, opt.fmax, opt.bound);
  for (PathId lam : g.all_paths_upto(opt.cap)) {
    bool ok = true;
    std::string witness;
    for (const auto& vb : vectors) {
      auto f = indicator(g, g.zero(), vb);
      auto sf = apply_S(g, lam, f);
      auto back = apply_S(g, lam, apply_S_star(g, lam, sf));
      if (!func_equal(g, back, sf, opt.bound)) {
        ok = false;
        witness = "on " + basic_str(g, vb);
        break;
      }
    }
    rep.add("partial-isometry", "lambda=" + g.path_str(lam), ok, witness);
  }
  return rep;
}

Report check_ck1(const KGraph& g, const CheckOptions& opt) {
  Report rep;
  auto vectors = spanning_X(g, g.zero(), opt.cap, opt.fmax, opt.bound);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = 0; v < g.vertex_count(); ++v) {
      bool ok = true;
      std::string witness;
      for (const auto& vb : vectors) {
        auto f = indicator(g, g.zero(), vb);
        auto lhs = apply_S(g, g.vertex_path(u), apply_S(g, g.vertex_path(v), f));
        auto rhs = u == v ? apply_S(g, g.vertex_path(v), f) : zero_fun(g, g.zero());
        if (!func_equal(g, lhs, rhs, opt.bound)) {
          ok = false;
          witness = "on " + basic_str(g, vb);
          break;
        }
      }
      rep.add("CK1", "u=" + g.vertex_name(u) + ",v=" + g.vertex_name(v), ok, witness);
    }
  return rep;
}

Report check_ck2(const KGraph& g, const CheckOptions& opt) {
  Report rep;
  auto vectors = spanning_X(g, g.zero(), opt.cap, opt.fmax, opt.bound);
  auto paths = g.all_paths_upto(opt.cap);
  for (PathId lam : paths)
    for (PathId mu : paths) {
      bool composable = g.source_of(lam) == g.range_of(mu);
      bool ok = true;
      std::string witness;
      for (const auto& vb : vectors) {
        auto f = indicator(g, g.zero(), vb);
        auto lhs = apply_S(g, lam, apply_S(g, mu, f));
        auto rhs = composable ? apply_S(g, g.compose(lam, mu), f) : zero_fun(g, g.zero());
        if (!func_equal(g, lhs, rhs, opt.bound)) {
          ok = false;
          witness = "on " + basic_str(g, vb);
          break;
        }
      }
      rep.add("CK2", "lambda=" + g.path_str(lam) + ",mu=" + g.path_str(mu), ok, witness);
    }
  return rep;
}

Report check_ck3(const KGraph& g, const CheckOptions& opt) {
  Report rep;
  auto vectors = spanning_X(g, g.zero(), opt.cap, opt.fmax, opt.bound);
  auto paths = g.all_paths_upto(opt.cap);
  for (PathId lam : paths)
    for (PathId mu : paths) {
      auto pairs = g.lambda_min_or_empty(lam, mu);
      bool ok = true;
      std::string witness;
      for (const auto& vb : vectors) {
        auto f = indicator(g, g.zero(), vb);
        auto lhs = apply_S_star(g, lam, apply_S(g, mu, f));
        auto rhs = zero_fun(g, g.zero());
        for (const auto& [alpha, beta] : pairs)
          rhs = add(g, rhs, apply_S(g, alpha, apply_S_star(g, beta, f)));
        if (!func_equal(g, lhs, rhs, opt.bound)) {
          ok = false;
          witness = "on " + basic_str(g, vb);
          break;
        }
      }
      rep.add("CK3", "lambda=" + g.path_str(lam) + ",mu=" + g.path_str(mu), ok, witness);
    }
  return rep;
}

namespace {

// the direct-sum families recur across many exhaustive sets; cache per (t, s)
class SpanningCache {
 public:
  SpanningCache(const KGraph& g, const CheckOptions& opt) : g_(g), opt_(opt) {}

  const std::vector<BasicSet>& xi(const DegreeVector& t, const DegreeVector& s) {
    auto key = t.str() + "|" + s.str();
    auto it = xi_.find(key);
    if (it != xi_.end()) return it->second;
    return xi_[key] = spanning_XI(g_, t, s, s, opt_.fmax, opt_.bound);
  }

  const std::vector<BasicSet>& x(const DegreeVector& n, const DegreeVector& cap) {
    auto key = n.str() + "|" + cap.str();
    auto it = x_.find(key);
    if (it != x_.end()) return it->second;
    return x_[key] = spanning_X(g_, n, cap, opt_.fmax, opt_.bound);
  }

 private:
  const KGraph& g_;
  CheckOptions opt_;
  std::map<std::string, std::vector<BasicSet>> xi_;
  std::map<std::string, std::vector<BasicSet>> x_;
};

Report ck4_xtilde(const KGraph& g, const FEWitness& fe, const CheckOptions& opt,
                  const char* identity, SpanningCache& cache) {
  Report rep;
  DegreeVector joined = g.zero();
  for (PathId mu : fe.members) joined = join(joined, g.degree(mu));
  DegreeVector r = join(opt.cap, joined);
  DegreeVector extent(std::vector<int>(g.rank(), opt.s_extent));
  auto theta_v = theta(g, g.zero(), BasicSet{g.vertex_path(fe.vertex), {}},
                       BasicSet{g.vertex_path(fe.vertex), {}});
  for (const auto& step : degrees_upto(extent)) {
    DegreeVector s = r + step;
    bool ok = true;
    std::string witness;
    for (const auto& t : degrees_upto(s)) {
      for (const auto& gen : cache.xi(t, s)) {
        TupleElement x = tuple_single(g, s, t, indicator(g, t, gen));
        for (PathId mu : fe.members) {
          auto mu_op = theta(g, g.degree(mu), BasicSet{mu, {}}, BasicSet{mu, {}});
          x = tuple_sub(g, iota_tilde(g, theta_v, x), iota_tilde(g, mu_op, x));
        }
        if (!tuple_is_zero(g, x, opt.bound)) {
          ok = false;
          witness = "component t=" + t.str() + " from " + basic_str(g, gen);
          break;
        }
      }
      if (!ok) break;
    }
    rep.add(identity, set_instance(g, fe.vertex, fe.members) + ",s=" + s.str(), ok, witness);
  }
  return rep;
}

}  // namespace

namespace {

Report check_ck4_cached(const KGraph& g, const FEWitness& fe, const CheckOptions& opt,
                        SpanningCache& cache, const std::vector<BasicSet>& vectors) {
  Report rep;
  if (fe.members.size() > 16)
    throw Error(Errc::bad_argument, "exhaustive set too large for the subset expansion");
  PathId vpath = g.vertex_path(fe.vertex);

  // all nonempty G subset of E with their minimal common extensions
  std::vector<std::pair<int, std::vector<PathId>>> subsets;  // (|G|, Lambda^min(G))
  size_t nmem = fe.members.size();
  for (std::uint32_t mask = 1; mask < (1u << nmem); ++mask) {
    std::vector<PathId> sel;
    for (size_t i = 0; i < nmem; ++i)
      if (mask & (1u << i)) sel.push_back(fe.members[i]);
    subsets.emplace_back(static_cast<int>(sel.size()), lambda_min_of_set(g, fe.vertex, sel));
  }

  bool ok = true;
  std::string witness;
  for (const auto& vb : vectors) {
    auto f = indicator(g, g.zero(), vb);
    // sequential product of the factors (S_v - S_mu S_mu^*)
    auto seq = f;
    for (PathId mu : fe.members)
      seq = sub(g, apply_S(g, vpath, seq), apply_S(g, mu, apply_S_star(g, mu, seq)));
    // expansion through repeated CK3
    auto expanded = apply_S(g, vpath, f);
    for (const auto& [size, exts] : subsets) {
      Rational sign = (size % 2 == 0) ? Rational(1) : Rational(-1);
      for (PathId lam : exts)
        expanded = add(g, expanded, scale(g, sign, apply_S(g, lam, apply_S_star(g, lam, f))));
    }
    if (!is_zero(g, seq, opt.bound)) {
      ok = false;
      witness = "sequential product nonzero on " + basic_str(g, vb);
      break;
    }
    if (!is_zero(g, expanded, opt.bound)) {
      ok = false;
      witness = "CK3 expansion nonzero on " + basic_str(g, vb);
      break;
    }
  }
  rep.add("CK4", set_instance(g, fe.vertex, fe.members), ok, witness);
  rep.append(ck4_xtilde(g, fe, opt, "CK4-xtilde", cache));
  return rep;
}

}  // namespace

Report check_ck4(const KGraph& g, const FEWitness& fe, const CheckOptions& opt) {
  SpanningCache cache(g, opt);
  auto vectors = spanning_X(g, g.zero(), opt.cap, opt.fmax, opt.bound);
  return check_ck4_cached(g, fe, opt, cache, vectors);
}

Report check_ck_suite(const KGraph& g, const CheckOptions& opt) {
  Report rep;
  rep.append(check_partial_isometry(g, opt));
  rep.append(check_ck1(g, opt));
  rep.append(check_ck2(g, opt));
  rep.append(check_ck3(g, opt));
  SpanningCache cache(g, opt);
  auto vectors = spanning_X(g, g.zero(), opt.cap, opt.fmax, opt.bound);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (auto& members : enumerate_fe_sets(g, v, opt.cap, opt.bound)) {
      auto fe = certify_exhaustive(g, v, members, opt.bound);
      rep.append(check_ck4_cached(g, fe, opt, cache, vectors));
    }
  return rep;
}

Report check_nica(const KGraph& g, const CheckOptions& opt) {
  Report rep;
  SpanningCache cache(g, opt);
  auto vectors0 = spanning_X(g, g.zero(), opt.cap, opt.fmax, opt.bound);
  auto paths = g.all_paths_upto(opt.cap);
  for (PathId lam : paths)
    for (PathId mu : paths) {
      auto pairs = g.lambda_min_or_empty(lam, mu);
      std::string inst = "lambda=" + g.path_str(lam) + ",mu=" + g.path_str(mu);
      // operator route
      DegreeVector big = join(g.degree(lam), g.degree(mu));
      auto s = theta(g, g.degree(lam), BasicSet{lam, {}}, BasicSet{lam, {}});
      auto t = theta(g, g.degree(mu), BasicSet{mu, {}}, BasicSet{mu, {}});
      auto aligned = compact_align(g, s, t);
      bool ok = true;
      std::string witness;
      for (const auto& vb : cache.x(big, join(big, opt.cap))) {
        auto f = indicator(g, big, vb);
        auto sequential = iota(g, s, big, iota(g, t, big, f));
        if (!func_equal(g, apply_compact(g, aligned, f), sequential, opt.bound)) {
          ok = false;
          witness = "align vs iota on " + basic_str(g, vb);
          break;
        }
      }
      rep.add("nica-align", inst, ok, witness);
      // partial-isometry route
      ok = true;
      witness = "";
      for (const auto& vb : vectors0) {
        auto f = indicator(g, g.zero(), vb);
        auto lhs = apply_S(g, lam, apply_S_star(g, lam, apply_S(g, mu, apply_S_star(g, mu, f))));
        auto rhs = zero_fun(g, g.zero());
        for (const auto& [alpha, beta] : pairs)
          rhs = add(g, rhs,
                    apply_S(g, g.compose(lam, alpha),
                            apply_S_star(g, g.compose(mu, beta), f)));
        if (!func_equal(g, lhs, rhs, opt.bound)) {
          ok = false;
          witness = "on " + basic_str(g, vb);
          break;
        }
      }
      rep.add("nica-isometry", inst, ok, witness);
    }
  return rep;
}

Report check_extension_lemma(const KGraph& g, const FEWitness& fe, const DegreeVector& m,
                             const DegreeVector& n, const CheckOptions& opt) {
  DegreeVector joined = g.zero();
  for (PathId mu : fe.members) joined = join(joined, g.degree(mu));
  if (!leq(joined, n)) throw Error(Errc::bad_argument, "need n >= join of member degrees");
  if (!leq(m, n)) throw Error(Errc::degree_order, "need m <= n");
  Report rep;
  bool ok = true;
  std::string witness;
  int checked = 0;
  for (const auto& gen : spanning_XI(g, m, n, join(opt.cap, n), opt.fmax, opt.bound)) {
    if (g.range_of(gen.base) != fe.vertex) continue;
    ++checked;
    bool extends_some = false;
    for (PathId eta : fe.members)
      if (g.extends(gen.base, eta)) {
        extends_some = true;
        break;
      }
    if (!extends_some) {
      ok = false;
      witness = basic_str(g, gen) + " extends no member";
      break;
    }
  }
  rep.add("extension-lemma",
          set_instance(g, fe.vertex, fe.members) + ",m=" + m.str() + ",n=" + n.str() +
              ",checked=" + std::to_string(checked),
          ok, witness);
  return rep;
}

Report check_cp(const KGraph& g, const CheckOptions& opt) {
  Report rep;
  SpanningCache cache(g, opt);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (auto& members : enumerate_fe_sets(g, v, opt.cap, opt.bound)) {
      auto fe = certify_exhaustive(g, v, members, opt.bound);
      rep.append(ck4_xtilde(g, fe, opt, "CP", cache));
    }
  return rep;
}

Report check_compact_align(const KGraph& g, const CheckOptions& opt) {
  Report rep;
  SpanningCache cache(g, opt);
  auto degrees = degrees_upto(opt.cap);
  for (const auto& m : degrees) {
    const auto& sfam = cache.x(m, opt.cap);
    for (const auto& n : degrees) {
      const auto& tfam = cache.x(n, opt.cap);
      DegreeVector big = join(m, n);
      const auto& vectors = cache.x(big, join(big, opt.cap));
      for (const auto& k1 : sfam)
        for (const auto& k2 : sfam) {
          auto s = theta(g, m, k1, k2);
          for (const auto& b1 : tfam)
            for (const auto& b2 : tfam) {
              auto t = theta(g, n, b1, b2);
              auto aligned = compact_align(g, s, t);
              bool ok = true;
              std::string witness;
              for (const auto& vb : vectors) {
                auto f = indicator(g, big, vb);
                auto sequential = iota(g, s, big, iota(g, t, big, f));
                if (!func_equal(g, apply_compact(g, aligned, f), sequential, opt.bound)) {
                  ok = false;
                  witness = "on " + basic_str(g, vb);
                  break;
                }
              }
              rep.add("compact-align",
                      "S=" + op_str(g, s) + ",T=" + op_str(g, t), ok, witness);
            }
        }
    }
  }
  return rep;
}

}  // namespace kgr
