#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homcurv/homogeneous_space.hpp"
#include "homcurv/isotypic.hpp"

namespace homcurv {

enum class MetricProvenance { Normal, DiagonalByComponent, Sampled, Explicit };

std::string_view to_string(MetricProvenance p);
MetricProvenance metric_provenance_from_string(std::string_view name);

/// Invariant metric <x, y> = Q(Gx, y) on p, stored as G in the p basis.
struct MetricEndo {
  Mat matrix;
  MetricProvenance provenance = MetricProvenance::Explicit;
  std::uint64_t seed = 0;  // meaningful for Sampled only
  std::string space_label;

  /// "normal", "diagonal-by-component", "sampled(42)" or "explicit".
  std::string provenance_string() const;
};

struct MetricResiduals {
  double symmetry = 0.0;
  double min_eigenvalue = 0.0;
  double equivariance = 0.0;
};

MetricResiduals metric_residuals(const HomogeneousSpace& space, const Mat& g);

/// Throws VerificationError if G is not symmetric (1e-12), not positive
/// definite, or does not commute with the isotropy action (1e-9).
void verify_metric(const HomogeneousSpace& space, const Mat& g);

/// Symmetric part of the commutant of the isotropy action.
struct CommutantBasis {
  std::vector<Mat> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

CommutantBasis commutant_basis(const HomogeneousSpace& space);

/// Sum over isotypic classes of m(m+1)/2, m^2 or m(2m-1) for real, complex
/// and quaternionic type.
int expected_commutant_dimension(const IsotypicDecomposition& dec);

MetricEndo normal_metric(const HomogeneousSpace& space);

/// G = scale_i on component i. Components need not come from
/// decompose_isotypic; a splitting that is not invariant is rejected with the
/// pair of components coupled by the isotropy action.
MetricEndo diagonal_metric(const HomogeneousSpace& space, const IsotypicDecomposition& dec,
                           std::span<const double> scales);

/// Standard normal coefficients over the commutant basis, shifted by
/// (|lambda_min| + 0.1) Id.
MetricEndo sample_metric(const HomogeneousSpace& space, const CommutantBasis& commutant,
                         std::uint64_t seed);

MetricEndo explicit_metric(const HomogeneousSpace& space, const Mat& g);

/// G_b = Ad_b G Ad_b^{-1} on p. Requires b to normalize h and preserve p.
MetricEndo conjugate_metric(const HomogeneousSpace& space, const MetricEndo& g,
                            const GroupElement& b);

}  // namespace homcurv
