#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgr/kgraph.hpp"

namespace kgr {

// The pair (lambda, F), denoting the cylinder set D_lambda \ D_{lambda F}.
// Every member of F lies in s(lambda)Lambda and has nonzero degree; a pair
// whose F contains a vertex denotes the empty set and is normalized away at
// construction.
struct BasicSet {
  PathId base = -1;
  std::vector<PathId> avoid;  // sorted, deduplicated
  bool operator==(const BasicSet&) const = default;
};

// Finite disjoint union of basic sets in canonical order.
struct CylinderSet {
  std::vector<BasicSet> parts;
  bool operator==(const CylinderSet&) const = default;
  bool syntactically_empty() const { return parts.empty(); }
};

struct Emptiness {
  bool empty = false;
  DegreeVector bound;  // exhaustiveness bound the answer was computed at
};

std::optional<BasicSet> make_basic(const KGraph& g, PathId base, std::vector<PathId> avoid);
BasicSet require_basic(const KGraph& g, PathId base, std::vector<PathId> avoid);

bool basic_less(const KGraph& g, const BasicSet& a, const BasicSet& b);
CylinderSet as_cylinder(const KGraph& g, std::vector<BasicSet> parts);
CylinderSet singleton(const KGraph& g, const BasicSet& a);

bool in_A_n(const KGraph& g, const BasicSet& a, const DegreeVector& n);

std::string basic_str(const KGraph& g, const BasicSet& a);
std::string set_str(const KGraph& g, const CylinderSet& x);

// Ext(lambda; {mu}) when the ranges agree, empty otherwise.
std::vector<PathId> mce_firsts(const KGraph& g, PathId lam, PathId mu);

// (D_lam \ D_{lam F}) ∩ (D_mu \ D_{mu G}) as the disjoint union over
// Lambda^min(lam, mu) with the transported avoidance sets F_alpha.
CylinderSet intersect_basic(const KGraph& g, const BasicSet& a, const BasicSet& b);

CylinderSet intersect(const KGraph& g, const CylinderSet& x, const CylinderSet& y);
CylinderSet difference_basic(const KGraph& g, const BasicSet& a, const BasicSet& b);
CylinderSet difference(const KGraph& g, const CylinderSet& x, const CylinderSet& y);
CylinderSet unite(const KGraph& g, const CylinderSet& x, const CylinderSet& y);
CylinderSet symmetric_difference(const KGraph& g, const CylinderSet& x, const CylinderSet& y);
// ambient \ x; requires x ⊆ ambient
CylinderSet complement_within(const KGraph& g, const CylinderSet& x, const BasicSet& ambient,
                              std::optional<DegreeVector> bound = {});

Emptiness emptiness(const KGraph& g, const BasicSet& a, std::optional<DegreeVector> bound = {});
bool is_empty(const KGraph& g, const BasicSet& a, std::optional<DegreeVector> bound = {});
bool is_empty(const KGraph& g, const CylinderSet& x, std::optional<DegreeVector> bound = {});
bool sets_equal(const KGraph& g, const CylinderSet& x, const CylinderSet& y,
                std::optional<DegreeVector> bound = {});

// D_mu ⊆ D_nu, decided as emptiness of the difference
bool basic_subset_D(const KGraph& g, PathId mu, PathId nu, std::optional<DegreeVector> bound = {});

// every color-i edge out of s(lambda) is absorbed by F
bool condition_K(const KGraph& g, const BasicSet& a, int color,
                 std::optional<DegreeVector> bound = {});

// partial-Lambda^{>= n} as a cylinder set: all (lambda, {}) with d(lambda) = n
CylinderSet slice_cylinder(const KGraph& g, const DegreeVector& n);

// A ⊆ partial-Lambda^{>= n}, decided extensionally via refinement/emptiness
bool contained_in_slice(const KGraph& g, const CylinderSet& x, const DegreeVector& n,
                        std::optional<DegreeVector> bound = {});
// A ⊆ partial-Lambda^{not >= e_i}: the kernel criterion d(lambda)_i = 0 plus K(i)
bool avoids_slice_k(const KGraph& g, const BasicSet& a, int color,
                    std::optional<DegreeVector> bound = {});
// the same containment decided extensionally; the two routes are compared in tests
bool avoids_slice_extensional(const KGraph& g, const BasicSet& a, int color,
                              std::optional<DegreeVector> bound = {});

// D_lam \ D_{lam F} = disjoint union over mu in s(lam)Lambda^{(d∨n)-d} of
// (lam mu, Ext(mu; F)); requires containment in the slice
CylinderSet refine_to_slice(const KGraph& g, const BasicSet& a, const DegreeVector& n,
                            std::optional<DegreeVector> bound = {});

// image of the injective shift on D_lam: (lam(n, d), F)
BasicSet sigma_image(const KGraph& g, const BasicSet& a, const DegreeVector& n);
// full shift preimage: disjoint union over tau in Lambda^n r(lam) of (tau lam, F)
CylinderSet sigma_preimage(const KGraph& g, const BasicSet& a, const DegreeVector& n);

// drops members of F whose cylinder is contained in another member's
BasicSet reduce_redundant(const KGraph& g, const BasicSet& a,
                          std::optional<DegreeVector> bound = {});

// every (lambda, F) with d(lambda) <= dcap, d(lambda nu) <= ecap, |F| <= fmax,
// in canonical order; empty sets are normalized away but no emptiness pruning
std::vector<BasicSet> enumerate_basics(const KGraph& g, const DegreeVector& dcap,
                                       const DegreeVector& ecap, size_t fmax);

}  // namespace kgr
