#include "kgr/product.hpp"

#include <algorithm>
#include <functional>

namespace kgr {

namespace {

void check_slice(const KGraph& g, const CylinderFunction& f, const DegreeVector& want,
                 const char* what) {
  (void)g;
  if (f.slice != want)
    throw Error(Errc::slice_mismatch, std::string(what) + ": expected slice " + want.str() +
                                           ", got " + f.slice.str());
}

std::vector<std::pair<BasicSet, Rational>> merge_terms(
    const KGraph& g, std::vector<std::pair<BasicSet, Rational>> terms) {
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return basic_less(g, a.first, b.first);
  });
  std::vector<std::pair<BasicSet, Rational>> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.second == Rational(0); }),
            out.end());
  return out;
}

}  // namespace

CylinderFunction cylfun(const KGraph& g, const DegreeVector& slice,
                        std::vector<std::pair<BasicSet, Rational>> terms) {
  for (const auto& [a, c] : terms) {
    (void)c;
    if (!in_A_n(g, a, slice))
      throw Error(Errc::slice_mismatch,
                  basic_str(g, a) + " has degree below the slice " + slice.str());
  }
  return CylinderFunction{slice, merge_terms(g, std::move(terms))};
}

CylinderFunction zero_fun(const KGraph& g, const DegreeVector& slice) {
  (void)g;
  return CylinderFunction{slice, {}};
}

CylinderFunction indicator(const KGraph& g, const DegreeVector& slice, const BasicSet& a) {
  return cylfun(g, slice, {{a, Rational(1)}});
}

CylinderFunction add(const KGraph& g, const CylinderFunction& f, const CylinderFunction& h) {
  check_slice(g, h, f.slice, "add");
  auto terms = f.terms;
  terms.insert(terms.end(), h.terms.begin(), h.terms.end());
  return CylinderFunction{f.slice, merge_terms(g, std::move(terms))};
}

CylinderFunction scale(const KGraph& g, const Rational& c, const CylinderFunction& f) {
  (void)g;
  if (c == Rational(0)) return CylinderFunction{f.slice, {}};
  auto terms = f.terms;
  for (auto& t : terms) t.second *= c;
  return CylinderFunction{f.slice, std::move(terms)};
}

CylinderFunction sub(const KGraph& g, const CylinderFunction& f, const CylinderFunction& h) {
  return add(g, f, scale(g, Rational(-1), h));
}

CylinderFunction as_slice(const KGraph& g, const CylinderFunction& f, const DegreeVector& n) {
  return cylfun(g, n, f.terms);
}

CylinderFunction disjointify(const KGraph& g, const CylinderFunction& f) {
  std::vector<std::pair<BasicSet, Rational>> acc;  // pairwise disjoint supports
  for (const auto& [b, c] : f.terms) {
    std::vector<BasicSet> pieces{b};  // parts of b not yet allotted
    std::vector<std::pair<BasicSet, Rational>> next;
    for (const auto& [a, ca] : acc) {
      std::vector<BasicSet> hit;
      for (const auto& p : pieces) {
        auto i = intersect_basic(g, a, p);
        hit.insert(hit.end(), i.parts.begin(), i.parts.end());
      }
      std::vector<BasicSet> rem{a};
      for (const auto& p : pieces) {
        std::vector<BasicSet> rem2;
        for (const auto& r : rem) {
          auto d = difference_basic(g, r, p);
          rem2.insert(rem2.end(), d.parts.begin(), d.parts.end());
        }
        rem = std::move(rem2);
      }
      std::vector<BasicSet> pieces2;
      for (const auto& p : pieces) {
        auto d = difference_basic(g, p, a);
        pieces2.insert(pieces2.end(), d.parts.begin(), d.parts.end());
      }
      pieces = std::move(pieces2);
      for (const auto& r : rem) next.emplace_back(r, ca);
      for (const auto& i : hit) next.emplace_back(i, ca + c);
    }
    for (const auto& p : pieces) next.emplace_back(p, c);
    acc = std::move(next);
  }
  acc.erase(std::remove_if(acc.begin(), acc.end(),
                           [](const auto& t) { return t.second == Rational(0); }),
            acc.end());
  return CylinderFunction{f.slice, merge_terms(g, std::move(acc))};
}

bool is_zero(const KGraph& g, const CylinderFunction& f, std::optional<DegreeVector> bound) {
  auto d = disjointify(g, f);
  for (const auto& [a, c] : d.terms) {
    (void)c;
    if (!is_empty(g, a, bound)) return false;
  }
  return true;
}

bool func_equal(const KGraph& g, const CylinderFunction& f, const CylinderFunction& h,
                std::optional<DegreeVector> bound) {
  if (f.slice != h.slice) return false;
  return is_zero(g, sub(g, f, h), bound);
}

Rational sup_norm(const KGraph& g, const CylinderFunction& f, std::optional<DegreeVector> bound) {
  Rational best(0);
  for (const auto& [a, c] : disjointify(g, f).terms)
    if (!is_empty(g, a, bound) && boost::abs(c) > best) best = boost::abs(c);
  return best;
}

std::string fun_str(const KGraph& g, const CylinderFunction& f) {
  if (f.terms.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < f.terms.size(); ++i) {
    if (i) s += " + ";
    if (f.terms[i].second != Rational(1)) s += rational_str(f.terms[i].second) + "*";
    s += basic_str(g, f.terms[i].first);
  }
  return s + " @" + f.slice.str();
}

namespace {

std::vector<std::pair<BasicSet, Rational>> pointwise_terms(const KGraph& g,
                                                           const CylinderFunction& f,
                                                           const CylinderFunction& h) {
  std::vector<std::pair<BasicSet, Rational>> terms;
  for (const auto& [a, ca] : f.terms)
    for (const auto& [b, cb] : h.terms)
      for (const auto& p : intersect_basic(g, a, b).parts) terms.emplace_back(p, ca * cb);
  return terms;
}

}  // namespace

CylinderFunction pointwise(const KGraph& g, const CylinderFunction& f, const CylinderFunction& h) {
  check_slice(g, h, f.slice, "pointwise");
  return cylfun(g, f.slice, pointwise_terms(g, f, h));
}

CylinderFunction left_action(const KGraph& g, const CylinderFunction& a, const CylinderFunction& f) {
  check_slice(g, a, g.zero(), "left_action");
  return cylfun(g, f.slice, pointwise_terms(g, a, f));
}

CylinderFunction right_action(const KGraph& g, const CylinderFunction& f, const CylinderFunction& a) {
  check_slice(g, a, g.zero(), "right_action");
  std::vector<std::pair<BasicSet, Rational>> terms;
  for (const auto& [b, cb] : f.terms)
    for (const auto& [x, cx] : a.terms)
      for (const auto& pre : sigma_preimage(g, x, f.slice).parts)
        for (const auto& p : intersect_basic(g, b, pre).parts) terms.emplace_back(p, cb * cx);
  return cylfun(g, f.slice, std::move(terms));
}

CylinderFunction inner_product(const KGraph& g, const CylinderFunction& f, const CylinderFunction& h) {
  check_slice(g, h, f.slice, "inner_product");
  // real rational scalars: conjugation is the identity
  std::vector<std::pair<BasicSet, Rational>> terms;
  for (const auto& [a, ca] : f.terms)
    for (const auto& [b, cb] : h.terms)
      for (const auto& p : intersect_basic(g, a, b).parts)
        terms.emplace_back(sigma_image(g, p, f.slice), ca * cb);
  return cylfun(g, g.zero(), std::move(terms));
}

CylinderFunction multiply(const KGraph& g, const CylinderFunction& f, const CylinderFunction& h) {
  std::vector<std::pair<BasicSet, Rational>> terms;
  for (const auto& [a, ca] : f.terms)
    for (const auto& [b, cb] : h.terms)
      for (const auto& pre : sigma_preimage(g, b, f.slice).parts)
        for (const auto& p : intersect_basic(g, a, pre).parts) terms.emplace_back(p, ca * cb);
  return cylfun(g, f.slice + h.slice, std::move(terms));
}

namespace {

// all candidate avoidance members nu with d(nu) != 0 and d(lambda nu) <= cap
std::vector<PathId> avoid_candidates(const KGraph& g, PathId lam, const DegreeVector& cap) {
  std::vector<PathId> out;
  DegreeVector room = cap - g.degree(lam);
  for (const auto& q : degrees_upto(room)) {
    if (q.is_zero()) continue;
    const auto& ps = g.paths_from(g.source_of(lam), q);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  g.sort_paths(out);
  return out;
}

void for_each_subset(size_t n, size_t fmax,
                     const std::function<void(const std::vector<size_t>&)>& fn) {
  size_t maxsize = std::min(n, fmax);
  if (maxsize > 20)
    throw Error(Errc::bad_argument,
                "avoidance-set family is too large; lower the degree cap or pass fmax");
  std::vector<size_t> idx;
  fn(idx);
  std::function<void(size_t)> rec = [&](size_t from) {
    if (idx.size() == maxsize) return;
    for (size_t i = from; i < n; ++i) {
      idx.push_back(i);
      fn(idx);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<BasicSet> spanning_X(const KGraph& g, const DegreeVector& n, const DegreeVector& cap,
                                 size_t fmax, std::optional<DegreeVector> bound) {
  if (!leq(n, cap)) throw Error(Errc::bad_argument, "spanning cap below the slice degree");
  std::vector<BasicSet> out;
  for (const auto& d : degrees_upto(cap)) {
    if (!leq(n, d)) continue;
    for (PathId lam : g.all_paths_of_degree(d)) {
      auto cands = avoid_candidates(g, lam, cap);
      for_each_subset(cands.size(), fmax, [&](const std::vector<size_t>& idx) {
        std::vector<PathId> f;
        for (size_t i : idx) f.push_back(cands[i]);
        auto basic = make_basic(g, lam, std::move(f));
        if (basic && !is_empty(g, *basic, bound)) out.push_back(std::move(*basic));
      });
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const BasicSet& a, const BasicSet& b) { return basic_less(g, a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool tail_in_I(const KGraph& g, const BasicSet& tail, const DegreeVector& n,
               std::optional<DegreeVector> bound) {
  DegreeVector d = g.degree(tail.base);
  for (int i = 1; i <= g.rank(); ++i) {
    if (n[i - 1] == 0) continue;
    if (d[i - 1] != 0) return false;
    if (!condition_K(g, tail, i, bound)) return false;
  }
  return true;
}

}  // namespace

std::vector<BasicSet> spanning_I(const KGraph& g, const DegreeVector& n, const DegreeVector& cap,
                                 size_t fmax, std::optional<DegreeVector> bound) {
  std::vector<BasicSet> out;
  for (const BasicSet& a : spanning_X(g, g.zero(), cap, fmax, bound))
    if (tail_in_I(g, a, n, bound)) out.push_back(a);
  return out;
}

std::vector<BasicSet> spanning_XI(const KGraph& g, const DegreeVector& m, const DegreeVector& n,
                                  const DegreeVector& cap, size_t fmax,
                                  std::optional<DegreeVector> bound) {
  if (!leq(m, n)) throw Error(Errc::degree_order, "need m <= n");
  std::vector<BasicSet> out;
  for (const BasicSet& a : spanning_X(g, m, cap, fmax, bound)) {
    BasicSet tail{g.suffix(a.base, m), a.avoid};
    if (tail_in_I(g, tail, n - m, bound)) out.push_back(a);
  }
  return out;
}

CompactOp compact_op(const KGraph& g, const DegreeVector& slice, std::vector<CompactOp::Term> terms) {
  for (const auto& t : terms) {
    if (!in_A_n(g, t.ket, slice) || !in_A_n(g, t.bra, slice))
      throw Error(Errc::slice_mismatch, "operator term outside A^" + slice.str());
  }
  std::sort(terms.begin(), terms.end(), [&](const CompactOp::Term& a, const CompactOp::Term& b) {
    if (!(a.ket == b.ket)) return basic_less(g, a.ket, b.ket);
    return basic_less(g, a.bra, b.bra);
  });
  std::vector<CompactOp::Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().ket == t.ket && merged.back().bra == t.bra)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const CompactOp::Term& t) { return t.coeff == Rational(0); }),
               merged.end());
  return CompactOp{slice, std::move(merged)};
}

CompactOp theta(const KGraph& g, const DegreeVector& slice, const BasicSet& ket, const BasicSet& bra) {
  return compact_op(g, slice, {{Rational(1), ket, bra}});
}

CompactOp op_add(const KGraph& g, const CompactOp& s, const CompactOp& t) {
  if (s.slice != t.slice) throw Error(Errc::slice_mismatch, "operator slices differ");
  auto terms = s.terms;
  terms.insert(terms.end(), t.terms.begin(), t.terms.end());
  return compact_op(g, s.slice, std::move(terms));
}

CompactOp op_scale(const KGraph& g, const Rational& c, const CompactOp& s) {
  auto terms = s.terms;
  for (auto& t : terms) t.coeff *= c;
  return compact_op(g, s.slice, std::move(terms));
}

std::string op_str(const KGraph& g, const CompactOp& s) {
  if (s.terms.empty()) return "0";
  auto paren = [&](const BasicSet& a) {
    std::string t = "(" + g.path_str(a.base);
    if (!a.avoid.empty()) {
      t += " - ";
      for (size_t i = 0; i < a.avoid.size(); ++i) {
        if (i) t += ',';
        t += g.path_str(a.avoid[i]);
      }
    }
    return t + ")";
  };
  std::string out;
  for (size_t i = 0; i < s.terms.size(); ++i) {
    if (i) out += " + ";
    if (s.terms[i].coeff != Rational(1)) out += rational_str(s.terms[i].coeff) + "*";
    out += "Θ[" + paren(s.terms[i].ket) + "," + paren(s.terms[i].bra) + "]";
  }
  return out + " @" + s.slice.str();
}

CylinderFunction apply_compact(const KGraph& g, const CompactOp& t, const CylinderFunction& f) {
  check_slice(g, f, t.slice, "apply_compact");
  CylinderFunction out = zero_fun(g, t.slice);
  for (const auto& term : t.terms) {
    auto braf = inner_product(g, indicator(g, t.slice, term.bra), f);
    auto contrib = right_action(g, indicator(g, t.slice, term.ket), braf);
    out = add(g, out, scale(g, term.coeff, contrib));
  }
  return out;
}

CylinderFunction iota(const KGraph& g, const CompactOp& s, const DegreeVector& q,
                      const CylinderFunction& f) {
  check_slice(g, f, q, "iota");
  if (!leq(s.slice, q)) return zero_fun(g, q);
  const DegreeVector& p = s.slice;
  CylinderFunction out = zero_fun(g, q);
  for (const auto& [b, c] : f.terms) {
    BasicSet head{g.prefix(b.base, p), {}};
    BasicSet tail{g.suffix(b.base, p), b.avoid};
    auto shead = apply_compact(g, s, indicator(g, p, head));
    auto piece = multiply(g, shead, indicator(g, q - p, tail));
    out = add(g, out, scale(g, c, piece));
  }
  return out;
}

namespace {

void append_firsts(const KGraph& g, PathId lam, PathId mu, std::vector<PathId>& into) {
  auto fs = mce_firsts(g, lam, mu);
  into.insert(into.end(), fs.begin(), fs.end());
}

}  // namespace

CompactOp compact_align(const KGraph& g, const CompactOp& s, const CompactOp& t) {
  const DegreeVector m = s.slice;
  const DegreeVector n = t.slice;
  const DegreeVector big = join(m, n);
  std::vector<CompactOp::Term> out;
  for (const auto& st : s.terms) {
    for (const auto& tt : t.terms) {
      const BasicSet& k1 = st.ket;  // (lambda_1, F_1)
      const BasicSet& k2 = st.bra;  // (lambda_2, F_2)
      const BasicSet& m1 = tt.ket;  // (mu_1, G_1)
      const BasicSet& m2 = tt.bra;  // (mu_2, G_2)
      PathId tail1 = g.suffix(k1.base, m);
      PathId tail2 = g.suffix(k2.base, m);
      PathId mtail1 = g.suffix(m1.base, n);
      PathId mtail2 = g.suffix(m2.base, n);
      for (const auto& [alpha, beta] : g.lambda_min_or_empty(k2.base, m1.base)) {
        PathId tail2_alpha = g.compose(tail2, alpha);
        PathId mu1_beta = g.compose(m1.base, beta);
        // kets: (lambda_1 gamma, H_{gamma,alpha})
        std::vector<BasicSet> kets;
        for (const auto& [gamma, delta] : g.lambda_min_or_empty(tail1, tail2_alpha)) {
          PathId kappa = g.compose(k1.base, gamma);
          std::vector<PathId> H;
          for (PathId nu : k1.avoid) append_firsts(g, kappa, g.compose(k1.base, nu), H);
          PathId t2ad = g.compose(tail2_alpha, delta);
          for (PathId zeta : k2.avoid) append_firsts(g, t2ad, g.compose(tail2, zeta), H);
          PathId m1bd = g.compose(mu1_beta, delta);
          for (PathId eta : m1.avoid) append_firsts(g, m1bd, g.compose(m1.base, eta), H);
          if (auto ket = make_basic(g, kappa, std::move(H))) kets.push_back(std::move(*ket));
        }
        // bras: (mu_2 rho, J_{rho,beta})
        std::vector<BasicSet> bras;
        PathId mtail1_beta = g.compose(mtail1, beta);
        for (const auto& [rho, tau] : g.lambda_min_or_empty(mtail2, mtail1_beta)) {
          PathId omega = g.compose(m2.base, rho);
          std::vector<PathId> J;
          for (PathId xi : m2.avoid) append_firsts(g, omega, g.compose(m2.base, xi), J);
          PathId m1bt = g.compose(mtail1_beta, tau);
          for (PathId eta : m1.avoid) append_firsts(g, m1bt, g.compose(mtail1, eta), J);
          PathId l2at = g.compose(g.compose(k2.base, alpha), tau);
          for (PathId zeta : k2.avoid) append_firsts(g, l2at, g.compose(k2.base, zeta), J);
          if (auto bra = make_basic(g, omega, std::move(J))) bras.push_back(std::move(*bra));
        }
        for (const auto& ket : kets)
          for (const auto& bra : bras) out.push_back({st.coeff * tt.coeff, ket, bra});
      }
    }
  }
  return compact_op(g, big, std::move(out));
}

std::optional<BasicSet> ops_differ_on(const KGraph& g, const CompactOp& s, const CompactOp& t,
                                      const std::vector<BasicSet>& vectors,
                                      std::optional<DegreeVector> bound) {
  for (const auto& v : vectors) {
    auto f = indicator(g, s.slice, v);
    if (!func_equal(g, apply_compact(g, s, f), apply_compact(g, t, f), bound)) return v;
  }
  return std::nullopt;
}

TupleElement tuple_single(const KGraph& g, const DegreeVector& q, const DegreeVector& r,
                          const CylinderFunction& f) {
  if (!leq(r, q)) throw Error(Errc::degree_order, "tuple component above the bound");
  check_slice(g, f, r, "tuple_single");
  TupleElement x;
  x.bound = q;
  x.components.emplace(r, f);
  return x;
}

TupleElement iota_tilde(const KGraph& g, const CompactOp& s, const TupleElement& x) {
  TupleElement out;
  out.bound = x.bound;
  for (const auto& [r, f] : x.components) out.components.emplace(r, iota(g, s, r, f));
  return out;
}

TupleElement tuple_sub(const KGraph& g, const TupleElement& x, const TupleElement& y) {
  TupleElement out = x;
  for (const auto& [r, f] : y.components) {
    auto it = out.components.find(r);
    if (it == out.components.end())
      out.components.emplace(r, scale(g, Rational(-1), f));
    else
      it->second = sub(g, it->second, f);
  }
  return out;
}

bool tuple_is_zero(const KGraph& g, const TupleElement& x, std::optional<DegreeVector> bound) {
  for (const auto& [r, f] : x.components) {
    (void)r;
    if (!is_zero(g, f, bound)) return false;
  }
  return true;
}

}  // namespace kgr
