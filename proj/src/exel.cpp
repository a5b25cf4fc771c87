#include "kgr/exel.hpp"

namespace kgr {

Weight uniform_weight() { return Weight{Weight::Kind::uniform, {}}; }
Weight normalized_weight() { return Weight{Weight::Kind::normalized, {}}; }

Weight regular_weight(const KGraph& g) {
  auto m = detect_regularity(g);
  if (!m) throw Error(Errc::regularity_required, "graph is not regular");
  return Weight{Weight::Kind::regular, *m};
}

std::optional<std::vector<long long>> detect_regularity(const KGraph& g) {
  // no sources: every vertex emits an edge of every color
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int c = 1; c <= g.rank(); ++c)
      if (g.edges_with_range(v, c).empty()) return std::nullopt;
  std::vector<long long> m(g.rank());
  for (int c = 1; c <= g.rank(); ++c) {
    long long count = static_cast<long long>(g.edges_with_source(0, c).size());
    for (int v = 1; v < g.vertex_count(); ++v)
      if (static_cast<long long>(g.edges_with_source(v, c).size()) != count) return std::nullopt;
    if (count == 0) return std::nullopt;
    m[c - 1] = count;
  }
  return m;
}

long long preimage_count(const KGraph& g, const DegreeVector& n, int v) {
  return static_cast<long long>(g.paths_into(v, n).size());
}

Rational weight_value(const KGraph& g, const Weight& w, const DegreeVector& n, int v) {
  switch (w.kind) {
    case Weight::Kind::uniform: return Rational(1);
    case Weight::Kind::normalized: {
      long long c = preimage_count(g, n, v);
      if (c == 0) return Rational(0);  // off the shift image
      return Rational(1, c);
    }
    case Weight::Kind::regular: {
      if (w.M.empty()) throw Error(Errc::regularity_required, "regular weight without counts");
      Rational r(1);
      for (int i = 0; i < n.size(); ++i)
        for (int t = 0; t < n[i]; ++t) r /= Rational(w.M[i]);
      return r;
    }
  }
  return Rational(1);
}

CylinderFunction alpha(const KGraph& g, const DegreeVector& n, const CylinderFunction& f) {
  if (f.slice != g.zero()) throw Error(Errc::slice_mismatch, "alpha acts on slice-0 functions");
  std::vector<std::pair<BasicSet, Rational>> terms;
  for (const auto& [a, c] : f.terms)
    for (const auto& p : sigma_preimage(g, a, n).parts) terms.emplace_back(p, c);
  return cylfun(g, n, std::move(terms));
}

CylinderFunction transfer(const KGraph& g, const DegreeVector& n, const CylinderFunction& f,
                          const Weight& w) {
  if (f.slice != n) throw Error(Errc::slice_mismatch, "transfer expects a slice-n function");
  if (w.kind == Weight::Kind::regular && !detect_regularity(g))
    throw Error(Errc::regularity_required, "regular weights need a regular graph");
  std::vector<std::pair<BasicSet, Rational>> terms;
  for (const auto& [a, c] : f.terms) {
    BasicSet img = sigma_image(g, a, n);
    terms.emplace_back(img, c * weight_value(g, w, n, g.range_of(img.base)));
  }
  return cylfun(g, g.zero(), std::move(terms));
}

CylinderSet shift_image(const KGraph& g, const DegreeVector& n) {
  std::vector<BasicSet> parts;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (preimage_count(g, n, v) > 0) parts.push_back(BasicSet{g.vertex_path(v), {}});
  return as_cylinder(g, std::move(parts));
}

Report check_transfer_identity(const KGraph& g, const DegreeVector& n, const Weight& w,
                               const CheckOptionsLite& opt) {
  Report rep;
  DegreeVector cap = join(opt.cap, n);
  auto fs = spanning_X(g, g.zero(), opt.cap, opt.fmax, opt.bound);
  auto gs = spanning_X(g, n, cap, opt.fmax, opt.bound);
  bool ok = true;
  std::string witness;
  size_t pairs = 0;
  for (const auto& fb : fs) {
    auto f = indicator(g, g.zero(), fb);
    for (const auto& gb : gs) {
      ++pairs;
      auto gfun = indicator(g, n, gb);
      auto lhs = transfer(g, n, pointwise(g, alpha(g, n, f), gfun), w);
      auto rhs = pointwise(g, f, transfer(g, n, gfun, w));
      if (!func_equal(g, lhs, rhs, opt.bound)) {
        ok = false;
        witness = "f=" + basic_str(g, fb) + ",g=" + basic_str(g, gb);
        break;
      }
    }
    if (!ok) break;
  }
  rep.add("transfer-identity", "n=" + n.str() + ",pairs=" + std::to_string(pairs), ok, witness);
  return rep;
}

Report check_omega(const KGraph& g, const DegreeVector& cap) {
  auto m = detect_regularity(g);
  if (!m) throw Error(Errc::regularity_required, "omega checks need a regular graph");
  Weight w{Weight::Kind::regular, *m};
  Report rep;
  for (const auto& n : degrees_upto(cap)) {
    bool ok = true;
    std::string witness;
    for (int v = 0; v < g.vertex_count(); ++v) {
      long long count = preimage_count(g, n, v);
      Rational total = Rational(count) * weight_value(g, w, n, v);
      if (total != Rational(1)) {
        ok = false;
        witness = "v=" + g.vertex_name(v) + " sums to " + rational_str(total);
        break;
      }
    }
    rep.add("omega-normalization", "n=" + n.str(), ok, witness);
  }
  for (const auto& a : degrees_upto(cap))
    for (const auto& b : degrees_upto(cap)) {
      bool ok = weight_value(g, w, a + b, 0) == weight_value(g, w, a, 0) * weight_value(g, w, b, 0);
      // counting form of the cocycle: preimages of degree a+b factor through degree b
      for (int v = 0; v < g.vertex_count() && ok; ++v) {
        long long total = preimage_count(g, a + b, v);
        long long stepped = 0;
        for (PathId tau : g.paths_into(v, b)) stepped += preimage_count(g, a, g.range_of(tau));
        ok = total == stepped;
      }
      rep.add("omega-cocycle", "m=" + a.str() + ",n=" + b.str(), ok,
              ok ? "" : "count factorization fails");
    }
  return rep;
}

Report check_exel_consistency(const KGraph& g, const DegreeVector& n, const CheckOptionsLite& opt) {
  Report rep;
  DegreeVector cap = join(opt.cap, n);
  auto fam = spanning_X(g, n, cap, opt.fmax, opt.bound);
  bool ok = true;
  std::string witness;
  for (const auto& fb : fam) {
    auto f = indicator(g, n, fb);
    for (const auto& gb : fam) {
      auto h = indicator(g, n, gb);
      auto ip = inner_product(g, f, h);
      auto tr = transfer(g, n, pointwise(g, f, h), uniform_weight());
      if (!func_equal(g, ip, tr, opt.bound)) {
        ok = false;
        witness = "f=" + basic_str(g, fb) + ",g=" + basic_str(g, gb);
        break;
      }
    }
    if (!ok) break;
  }
  rep.add("inner-product-is-uniform-transfer", "n=" + n.str(), ok, witness);

  ok = true;
  witness = "";
  auto image = shift_image(g, n);
  std::vector<std::pair<BasicSet, Rational>> image_terms;
  for (const auto& p : image.parts) image_terms.emplace_back(p, Rational(1));
  auto image_fun = cylfun(g, g.zero(), std::move(image_terms));
  for (const auto& fb : spanning_X(g, g.zero(), opt.cap, opt.fmax, opt.bound)) {
    auto f = indicator(g, g.zero(), fb);
    auto roundtrip = transfer(g, n, alpha(g, n, f), normalized_weight());
    auto restricted = pointwise(g, f, image_fun);
    if (!func_equal(g, roundtrip, restricted, opt.bound)) {
      ok = false;
      witness = "f=" + basic_str(g, fb);
      break;
    }
  }
  rep.add("normalized-transfer-inverts-alpha", "n=" + n.str(), ok, witness);
  return rep;
}

Report check_exel(const KGraph& g, const DegreeVector& n, const Weight& w,
                  const CheckOptionsLite& opt) {
  Report rep;
  rep.append(check_transfer_identity(g, n, w, opt));
  rep.append(check_exel_consistency(g, n, opt));
  if (w.kind == Weight::Kind::regular) rep.append(check_omega(g, opt.cap));
  return rep;
}

}  // namespace kgr
