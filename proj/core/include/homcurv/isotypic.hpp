#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "homcurv/homogeneous_space.hpp"

namespace homcurv {

enum class DivisionType { Real, Complex, Quaternionic };

std::string_view to_string(DivisionType type);
DivisionType division_type_from_string(std::string_view name);

/// One isotypic component of p: `multiplicity` equivalent irreducibles of
/// dimension irreducible_dim. All bases are orthonormal columns in p coordinates.
struct IsotypicComponent {
  Mat basis;
  std::vector<Mat> irreducibles;
  int class_id = 0;
  int multiplicity = 1;
  DivisionType division = DivisionType::Real;
  /// |weights| of the reference circle on this component; empty without one.
  std::vector<int> weights;

  int dim() const { return static_cast<int>(basis.cols()); }
  int irreducible_dim() const { return multiplicity ? dim() / multiplicity : 0; }
};

struct IsotypicDecomposition {
  std::string space_label;
  std::uint64_t seed = 0;
  std::vector<IsotypicComponent> components;

  std::vector<int> dims() const;
};

/// Basis of {T : [T, A] = 0 for all A in actions}, orthonormal in the
/// Frobenius inner product. With symmetric_only, T is also required to be symmetric.
std::vector<Mat> commutant(const std::vector<Mat>& actions, Eigen::Index n, bool symmetric_only);

/// Splits p into isotypic components. Irreducibles are the eigenspaces of a
/// random symmetric commutant element (drawn from `seed`); equivalence is read
/// off the off-diagonal blocks of the full commutant. Components are ordered
/// by smallest weight, then dimension, then position in the p basis.
///
/// Throws VerificationError if the random element has eigenvalue gaps too
/// close to the clustering tolerance (re-run with another seed).
IsotypicDecomposition decompose_isotypic(const HomogeneousSpace& space, std::uint64_t seed = 0);

/// Largest ||[P P^T, A_v]|| over components and isotropy actions.
double invariance_residual(const HomogeneousSpace& space, const IsotypicDecomposition& dec);

}  // namespace homcurv
