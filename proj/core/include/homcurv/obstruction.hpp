#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homcurv/curvature.hpp"

namespace homcurv {

enum class WitnessKind { CommutingEigenvectors, LemmaB, NumericMin };

std::string_view to_string(WitnessKind kind);
WitnessKind witness_kind_from_string(std::string_view name);

/// A plane of nonpositive curvature together with the data that produced it.
struct Witness {
  WitnessKind kind = WitnessKind::NumericMin;
  Plane plane;
  CurvatureValue value;
  std::vector<double> eigenvalues;  // eigenvalues of G attached to the plane vectors
  double bracket_residual = 0.0;    // ||[x, z]||_Q on unit vectors
  double eigen_residual = 0.0;      // max ||G v - lambda v|| over the eigenvectors used
};

struct SearchOutcome {
  std::optional<Witness> witness;
  double best_residual = 0.0;  // smallest bracket norm seen
  bool gray_zone = false;      // best residual in (1e-9, 1e-6]
  int starts = 0;
  std::string note;
};

inline constexpr double kWitnessAcceptTol = 1e-9;
inline constexpr double kWitnessRejectTol = 1e-6;

/// Searches for linearly independent eigenvectors x, y of G with [x, y] = 0.
/// Pairs of 1-dimensional eigenspaces are tested directly; otherwise ||[x, y]||
/// is minimized over unit vectors by alternating smallest singular vectors,
/// from `starts` seeded starts per eigenspace pair.
SearchOutcome find_commuting_eigenvectors(const HomogeneousSpace& space, const MetricEndo& g,
                                          std::uint64_t seed = 0, int starts = 32);

/// Looks for x in the smallest eigenspace of G and z in p, independent of x,
/// with [x, z] = 0; on success returns the plane (x, G^-1 z).
SearchOutcome lemma_b_witness(const HomogeneousSpace& space, const MetricEndo& g,
                              std::uint64_t seed = 0, int draws = 64);

struct RankReport {
  int rank_k = 0;
  int rank_h = 0;
  int dim_p = 0;
  bool parity_consistent = false;
};

RankReport berger_rank_check(const HomogeneousSpace& space);

/// Result of conjugating a metric on Sp(2)/S^1(3,1) by b = diag(e^{i psi}, e^{i psi})
/// so that it commutes with Ad_a, a = diag(j, j).
struct Sp2Symmetrization {
  double psi = 0.0;
  MetricEndo g_b;
  double residual_before = 0.0;  // ||[G, Ad_a|p]||
  double residual = 0.0;         // ||[G_b, Ad_a|p]||
  double det_ad_a = 0.0;         // det(Ad_a|p)
  Eigen::Matrix2cd block_before;  // hermitian matrix of G on p_2 in the basis of W
  Eigen::Matrix2cd block_after;
};

/// Ad_a restricted to p for a = diag(j, j) in Sp(2).
Mat sp2_ad_a(const HomogeneousSpace& space);

/// Requires the catalog space sp2circle with (p, q) = (3, 1).
Sp2Symmetrization symmetrize_sp2_31(const HomogeneousSpace& space, const MetricEndo& g);

}  // namespace homcurv
