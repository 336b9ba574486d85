#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "homcurv/curvature.hpp"

namespace homcurv {

struct CertifyConfig {
  int starts = 64;
  int max_iters = 500;
  double grad_tol = 1e-10;
  std::uint64_t seed = 0;
  double zero_tol = 1e-9;

  /// Throws InvalidArgument unless every field is positive.
  void validate() const;
};

enum class Verdict { PositiveFoundMin, NonpositiveWitness, Inconclusive };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view name);

/// Upper end of the inconclusive band (zero_tol, kInconclusiveTol].
inline constexpr double kInconclusiveTol = 1e-6;

inline constexpr std::string_view kCertifyDisclaimer =
    "positive-found-min reports the smallest sectional curvature found by a seeded multistart "
    "local search; it is numerical evidence, not a proof of positive curvature";

struct CertifyReport {
  std::string space_label;
  std::string metric_provenance;
  CertifyConfig config;
  double min_sectional = 0.0;
  Plane argmin;  // G-orthonormal frame in p coordinates
  std::vector<double> per_start_minima;
  std::vector<int> per_start_iterations;
  Verdict verdict = Verdict::Inconclusive;
  std::string disclaimer{kCertifyDisclaimer};
  double wall_time = 0.0;  // seconds
};

Verdict classify(double min_sectional, double zero_tol);

/// Minimizes the sectional curvature over 2-planes of p by projected gradient
/// descent on G-orthonormal frames from config.starts seeded random frames.
/// Deterministic given (space, G, config); starts run concurrently.
CertifyReport min_sectional(const HomogeneousSpace& space, const MetricEndo& g,
                            const CertifyConfig& config = {});

struct GridResult {
  std::vector<double> scales;
  CertifyReport report;
};

/// One report per scale tuple of diagonal_metric(space, dec, scales), in grid order.
std::vector<GridResult> metric_grid_search(const HomogeneousSpace& space,
                                           const IsotypicDecomposition& dec,
                                           const std::vector<std::vector<double>>& grid,
                                           const CertifyConfig& config = {});

}  // namespace homcurv
