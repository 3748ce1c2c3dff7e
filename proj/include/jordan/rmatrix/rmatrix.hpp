#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "jordan/report.hpp"
#include "jordan/rmatrix/labels.hpp"
#include "jordan/sl2/reps.hpp"

namespace jordan {

enum class Provenance { contracted, direct_universal, twist_conjugated };
std::string_view to_string(Provenance p);

struct RMatrix {
  PolyMatrix body;
  PairLabels labels;
  Provenance provenance{};
};

// Conjugation order used for the coloured matrices: R_{h,a} = Finv R_h Finv
// with Finv = T^{-a z2} (x) T^{a z1}.
inline constexpr std::string_view kColouredConvention = "R = Finv R_h Finv, Finv = T^(-alpha z2) (x) T^(alpha z1)";

// M = E_q(eta J+) through t^order. The eta override exists for negative tests.
SeriesMatrix build_M(Spin j, int order);
SeriesMatrix build_M(Spin j, int order, const LaurentScalar& eta);

// q^{J0 (x) J0 / 2} exp_{q^-2}((1 - q^-2) q^{J0/2} J+ (x) q^{-J0/2} J-) on V_{j1} (x) V_{j2}.
SeriesMatrix eval_universal_Rq(Spin j1, Spin j2, int order);

// Diagonal lambda^{-(J0 (x) Z - Z (x) J0)/2} with lambda = q^alpha, as one
// factor per sector: the pair (q^{-alpha z2 J0/2}, q^{alpha z1 J0/2}).
std::pair<SeriesMatrix, SeriesMatrix> twist_hat_inverse_factors(Spin j1, const MultiPoly& z1, Spin j2,
                                                                const MultiPoly& z2, int order);
SeriesMatrix twist_hat_inverse(Spin j1, const MultiPoly& z1, Spin j2, const MultiPoly& z2, int order);

struct ContractionOptions {
  std::optional<int> trunc;      // starting order instead of the adaptive default
  bool full_product = false;     // conjugate the assembled matrices instead of factorising
  std::function<LaurentScalar(int)> eta;  // replaces h/(q-1) at a given order; negative tests only
  bool confirm = true;           // re-run at N+2 and require agreement
};

struct ContractionResult {
  PolyMatrix body;
  int order = 0;  // truncation order that was accepted
};

// lim_{q->1} (M1^-1 (x) M2^-1) A(N) (M1 (x) M2) with the adaptive order rule.
// A(N) must be a q-side matrix on V_{j1} (x) V_{j2} known through t^N.
ContractionResult contract_pair(Spin j1, Spin j2, const std::function<SeriesMatrix(int)>& build,
                                const ContractionOptions& opts = {});
// lim M^-1 A(N) M on a single factor.
ContractionResult contract_single(Spin j, const std::function<SeriesMatrix(int)>& build,
                                  const ContractionOptions& opts = {});

// Limit of the contracted twist: lim (M^-1 (x) M^-1) Fhat^-1 (M (x) M).
PolyMatrix contract_twist_hat(const PairLabels& labels, const ContractionOptions& opts = {});

RMatrix contract_R(const PairLabels& labels, const ContractionOptions& opts = {});

// exp(-h X (x) TH) exp(h TH (x) X); coloured labels use the three-exponential form.
RMatrix eval_universal_Rh(const PairLabels& labels);
// Finv R_h Finv built from the uncoloured universal matrix.
RMatrix twist_conjugated_R(const PairLabels& labels);
// T^{-a z2} (x) T^{a z1}.
PolyMatrix twist_inverse(const PairLabels& labels);

// Jordanian coproducts on V1 (x) V2 of the generator named X, Y, H or Z.
PolyMatrix coproduct(const PairLabels& labels, std::string_view generator);

enum class RSource { contracted, direct, twist };
RMatrix build_R(const PairLabels& labels, RSource source);
RSource parse_r_source(std::string_view text);

Report check_contract_equals_direct(const PairLabels& labels, const ContractionOptions& opts = {});
Report check_twist_contraction(const PairLabels& labels);
Report check_coloured_routes(const PairLabels& labels);
Report check_YBE(const Sector& s1, const Sector& s2, const Sector& s3, RSource source = RSource::direct);
Report check_triangularity(const PairLabels& labels, RSource source = RSource::direct);
Report check_exchange_symmetry(const PairLabels& labels, RSource source = RSource::direct);
Report check_intertwiner(const PairLabels& labels, RSource source = RSource::direct);
// Re-runs a contraction at N+2 and compares; also the negative test with a wrong eta.
Report check_truncation_stability(const PairLabels& labels);

// h -> -h on every entry.
PolyMatrix negate_h(const PolyMatrix& m);

}  // namespace jordan
