#pragma once

#include <optional>

#include "kgr/product.hpp"
#include "kgr/report.hpp"

namespace kgr {

// Brute-force semantics for graphs with no sources, where the boundary-path
// space is the infinite-path space and membership in any tested set is decided
// by a long enough finite prefix.
struct PrefixUniverse {
  DegreeVector degree;
  std::vector<PathId> paths;  // all paths of that degree, every range vertex
};

bool has_sources(const KGraph& g);
PrefixUniverse build_universe(const KGraph& g, const DegreeVector& m);  // throws source_present

// prefix test: p(0,d(lam)) = lam and p(0,d(lam nu)) != lam nu for all nu;
// requires d(p) to dominate every degree involved.
bool oracle_membership(const KGraph& g, PathId p, const BasicSet& a);
bool oracle_member_of(const KGraph& g, PathId p, const CylinderSet& x);
Rational oracle_value(const KGraph& g, PathId p, const CylinderFunction& f);

// nullopt when equal; otherwise the first witness prefix
std::optional<PathId> oracle_set_equal(const KGraph& g, const CylinderSet& x, const CylinderSet& y,
                                       const DegreeVector& m);
std::optional<PathId> oracle_function_equal(const KGraph& g, const CylinderFunction& f,
                                            const CylinderFunction& h, const DegreeVector& m);

// oracle evaluation of <f,g>_n and of the weighted transfer at a prefix:
// sums f(tau p) g(tau p) over tau in Lambda^n r(p)
Rational oracle_inner_value(const KGraph& g, PathId p, const DegreeVector& n,
                            const CylinderFunction& f, const CylinderFunction& h);

// Full cross-check of the set algebra and module operations against prefix
// semantics at degree m: intersections, refinements, boolean operations,
// shift images/preimages, inner products, products, and transfers.
Report oracle_suite(const KGraph& g, const DegreeVector& m, const DegreeVector& cap, size_t fmax);

}  // namespace kgr
