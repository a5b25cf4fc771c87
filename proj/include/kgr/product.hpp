#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kgr/boundary.hpp"
#include "kgr/rational.hpp"

namespace kgr {

// Locally constant element of C_c(partial-Lambda^{>= n}) with exact rational
// coefficients: a finite combination of basic-set indicators, every base path
// of degree >= n. Terms need not be disjoint; disjointify() refines them.
struct CylinderFunction {
  DegreeVector slice;
  std::vector<std::pair<BasicSet, Rational>> terms;  // sorted by basic, coefficients merged
  bool operator==(const CylinderFunction&) const = default;
};

CylinderFunction cylfun(const KGraph& g, const DegreeVector& slice,
                        std::vector<std::pair<BasicSet, Rational>> terms);
CylinderFunction zero_fun(const KGraph& g, const DegreeVector& slice);
CylinderFunction indicator(const KGraph& g, const DegreeVector& slice, const BasicSet& a);

CylinderFunction add(const KGraph& g, const CylinderFunction& f, const CylinderFunction& h);
CylinderFunction sub(const KGraph& g, const CylinderFunction& f, const CylinderFunction& h);
CylinderFunction scale(const KGraph& g, const Rational& c, const CylinderFunction& f);
// retags the slice; every term must have degree >= n
CylinderFunction as_slice(const KGraph& g, const CylinderFunction& f, const DegreeVector& n);

CylinderFunction disjointify(const KGraph& g, const CylinderFunction& f);
bool is_zero(const KGraph& g, const CylinderFunction& f, std::optional<DegreeVector> bound = {});
bool func_equal(const KGraph& g, const CylinderFunction& f, const CylinderFunction& h,
                std::optional<DegreeVector> bound = {});
Rational sup_norm(const KGraph& g, const CylinderFunction& f,
                  std::optional<DegreeVector> bound = {});
std::string fun_str(const KGraph& g, const CylinderFunction& f);

// (a.f)(x) = a(x) f(x), a in slice 0
CylinderFunction left_action(const KGraph& g, const CylinderFunction& a, const CylinderFunction& f);
// (f.a)(x) = f(x) a(sigma_n(x)), a in slice 0
CylinderFunction right_action(const KGraph& g, const CylinderFunction& f, const CylinderFunction& a);
// <f,g>_n(x) = sum over sigma_n(y)=x of f(y) g(y); lands in slice 0
CylinderFunction inner_product(const KGraph& g, const CylinderFunction& f, const CylinderFunction& h);
// product-system multiplication (fg)(x) = f(x) g(sigma_m(x)); slice m+n
CylinderFunction multiply(const KGraph& g, const CylinderFunction& f, const CylinderFunction& h);
// pointwise product within one slice
CylinderFunction pointwise(const KGraph& g, const CylinderFunction& f, const CylinderFunction& h);

// Spanning families. Degrees are capped by `cap` (both d(lambda) and
// d(lambda nu)), avoidance sets by `fmax`; only nonempty sets are returned.
std::vector<BasicSet> spanning_X(const KGraph& g, const DegreeVector& n, const DegreeVector& cap,
                                 size_t fmax = SIZE_MAX, std::optional<DegreeVector> bound = {});
std::vector<BasicSet> spanning_I(const KGraph& g, const DegreeVector& n, const DegreeVector& cap,
                                 size_t fmax = SIZE_MAX, std::optional<DegreeVector> bound = {});
std::vector<BasicSet> spanning_XI(const KGraph& g, const DegreeVector& m, const DegreeVector& n,
                                  const DegreeVector& cap, size_t fmax = SIZE_MAX,
                                  std::optional<DegreeVector> bound = {});

// Finite rational combination of rank-one operators Theta_{(lam,F),(mu,G)} on
// the slice-n module.
struct CompactOp {
  DegreeVector slice;
  struct Term {
    Rational coeff;
    BasicSet ket, bra;
    bool operator==(const Term&) const = default;
  };
  std::vector<Term> terms;
  bool operator==(const CompactOp&) const = default;
};

CompactOp compact_op(const KGraph& g, const DegreeVector& slice, std::vector<CompactOp::Term> terms);
CompactOp theta(const KGraph& g, const DegreeVector& slice, const BasicSet& ket, const BasicSet& bra);
CompactOp op_add(const KGraph& g, const CompactOp& s, const CompactOp& t);
CompactOp op_scale(const KGraph& g, const Rational& c, const CompactOp& s);
std::string op_str(const KGraph& g, const CompactOp& s);

// T(f) = sum of c ket.<bra, f>
CylinderFunction apply_compact(const KGraph& g, const CompactOp& t, const CylinderFunction& f);

// iota_p^q(S) applied to f in slice q; zero when p is not <= q. Each term of f
// is factored as head.tail with head of degree p, and (S head) tail is summed.
CylinderFunction iota(const KGraph& g, const CompactOp& s, const DegreeVector& q,
                      const CylinderFunction& f);

// The compact-alignment expansion: the operator iota_m^{m∨n}(S) iota_n^{m∨n}(T)
// as an explicit combination of Theta terms with the transported index sets.
CompactOp compact_align(const KGraph& g, const CompactOp& s, const CompactOp& t);

// first spanning vector on which the two operators differ, if any
std::optional<BasicSet> ops_differ_on(const KGraph& g, const CompactOp& s, const CompactOp& t,
                                      const std::vector<BasicSet>& vectors,
                                      std::optional<DegreeVector> bound = {});

// Element of the direct sum over r <= q of X_r . I_{r^{-1} q}: finitely many
// slice-r components.
struct TupleElement {
  DegreeVector bound;
  std::map<DegreeVector, CylinderFunction, DegreeLexLess> components;
};

TupleElement tuple_single(const KGraph& g, const DegreeVector& q, const DegreeVector& r,
                          const CylinderFunction& f);
TupleElement iota_tilde(const KGraph& g, const CompactOp& s, const TupleElement& x);
TupleElement tuple_sub(const KGraph& g, const TupleElement& x, const TupleElement& y);
bool tuple_is_zero(const KGraph& g, const TupleElement& x, std::optional<DegreeVector> bound = {});

}  // namespace kgr
