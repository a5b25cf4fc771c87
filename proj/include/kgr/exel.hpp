#pragma once

#include "kgr/product.hpp"
#include "kgr/report.hpp"

namespace kgr {

// Weighting of the transfer sum over shift preimages.
struct Weight {
  enum class Kind { uniform, normalized, regular };
  Kind kind = Kind::uniform;
  std::vector<long long> M;  // color-wise preimage counts, regular kind only
};

Weight uniform_weight();
Weight normalized_weight();
Weight regular_weight(const KGraph& g);  // throws regularity_required

// (M_1..M_k) when the graph is row-finite with no sources and the color-wise
// counts |Lambda^{e_i} v| are constant in v; nullopt otherwise
std::optional<std::vector<long long>> detect_regularity(const KGraph& g);

// number of degree-n shift preimages of a point whose range vertex is v
long long preimage_count(const KGraph& g, const DegreeVector& n, int v);
// weight applied to a preimage whose image lies at range vertex v
Rational weight_value(const KGraph& g, const Weight& w, const DegreeVector& n, int v);

// alpha_n(f) = f after the shift, realized by the preimage expansion; slice n
CylinderFunction alpha(const KGraph& g, const DegreeVector& n, const CylinderFunction& f);
// L_n(f): weighted pushforward along the shift; slice 0, zero off the image
CylinderFunction transfer(const KGraph& g, const DegreeVector& n, const CylinderFunction& f,
                          const Weight& w);

// sigma_n(boundary space) as a cylinder set: the reachable range vertices
CylinderSet shift_image(const KGraph& g, const DegreeVector& n);

struct CheckOptionsLite {
  DegreeVector cap;
  size_t fmax = 1;
  std::optional<DegreeVector> bound;
};

Report check_transfer_identity(const KGraph& g, const DegreeVector& n, const Weight& w,
                               const CheckOptionsLite& opt);

// omega normalization, the cocycle identity, and the preimage-count product law
Report check_omega(const KGraph& g, const DegreeVector& cap);
// inner product = uniform transfer of the pointwise product; normalized
// transfer inverts alpha on the shift image
Report check_exel_consistency(const KGraph& g, const DegreeVector& n, const CheckOptionsLite& opt);

Report check_exel(const KGraph& g, const DegreeVector& n, const Weight& w,
                  const CheckOptionsLite& opt);

}  // namespace kgr
