#pragma once

#include "kgr/product.hpp"
#include "kgr/report.hpp"

namespace kgr {

// The boundary-path partial isometries S_lambda acting on slice-0 cylinder
// functions: S_lambda prepends lambda, S_lambda^* cuts to D_lambda and shifts.
CylinderFunction apply_S(const KGraph& g, PathId lam, const CylinderFunction& f);
CylinderFunction apply_S_star(const KGraph& g, PathId lam, const CylinderFunction& f);

// Certificate that E is a finite exhaustive set at v: each scanned path is
// paired with a member it has a common extension with.
struct FEWitness {
  int vertex = -1;
  std::vector<PathId> members;
  std::vector<std::pair<PathId, PathId>> pairing;  // (mu, member) over the scan
  DegreeVector bound;
};

// throws not_exhaustive (with the witness path in the message) when E fails
FEWitness certify_exhaustive(const KGraph& g, int v, std::vector<PathId> members,
                             std::optional<DegreeVector> bound = {});

// all exhaustive subsets of {mu in vLambda : d(mu) <= cap}, canonical order
std::vector<std::vector<PathId>> enumerate_fe_sets(const KGraph& g, int v, const DegreeVector& cap,
                                                   std::optional<DegreeVector> bound = {});

// Lambda^min(G) = paths of degree join d(G) extending every member
std::vector<PathId> lambda_min_of_set(const KGraph& g, int v, const std::vector<PathId>& G);

struct CheckOptions {
  DegreeVector cap;      // degree cap for test families
  size_t fmax = 1;       // avoidance-set size cap for test families
  int s_extent = 1;      // CK4 scans s in r .. r + s_extent*(1,..,1)
  std::optional<DegreeVector> bound;  // emptiness/exhaustiveness bound
};

Report check_partial_isometry(const KGraph& g, const CheckOptions& opt);
Report check_ck1(const KGraph& g, const CheckOptions& opt);
Report check_ck2(const KGraph& g, const CheckOptions& opt);
Report check_ck3(const KGraph& g, const CheckOptions& opt);
// operator-level product expansion plus the direct-sum level computation
Report check_ck4(const KGraph& g, const FEWitness& fe, const CheckOptions& opt);
// CK1-CK4 over all auto-enumerated finite exhaustive sets with degrees <= cap
Report check_ck_suite(const KGraph& g, const CheckOptions& opt);

// Nica covariance: compact_align against sequential iota application, plus the
// partial-isometry route through S-operators on indicator projections.
Report check_nica(const KGraph& g, const CheckOptions& opt);

// the appendix expansion against sequential iota application, over all
// generator operator pairs drawn from the spanning families
Report check_compact_align(const KGraph& g, const CheckOptions& opt);

// every generator of X_m . I_{n-m} rooted at v extends a member of the set
Report check_extension_lemma(const KGraph& g, const FEWitness& fe, const DegreeVector& m,
                             const DegreeVector& n, const CheckOptions& opt);

// Cuntz-Pimsner ingredient: the CK4 direct-sum annihilation across all
// auto-enumerated finite exhaustive sets
Report check_cp(const KGraph& g, const CheckOptions& opt);

}  // namespace kgr
