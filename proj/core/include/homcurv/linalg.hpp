#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace homcurv {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

namespace linalg {

/// Orthonormal basis (columns) of ker(a). Singular values <= abs_tol count as zero.
Mat null_space(const Mat& a, double abs_tol);

/// Modified Gram-Schmidt with one re-orthogonalization pass. Columns whose
/// residual norm falls below drop_tol are discarded; order is preserved.
Mat orthonormalize(const Mat& columns, double drop_tol = 1e-10);

/// Orthonormal basis of span(basis)^perp in R^n, built by projecting e_0, e_1, ...
/// in order. `basis` must have orthonormal columns.
Mat orthogonal_complement(const Mat& basis, Eigen::Index n);

/// Groups indices of an ascending sequence: consecutive values closer than
/// rel_tol * scale share a group, where scale = max(1, max |v|).
std::vector<std::vector<int>> cluster_sorted(const Vec& ascending, double rel_tol);

/// Largest principal-angle sine between two subspaces with orthonormal columns.
double subspace_distance(const Mat& a, const Mat& b);

/// Deterministic stream for (seed, index); index separates starts/samples.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index = 0);

/// Vector of iid standard normal entries.
Vec gaussian_vector(std::mt19937_64& rng, Eigen::Index n);

/// Unit vector uniformly distributed on the sphere.
Vec random_unit_vector(std::mt19937_64& rng, Eigen::Index n);

}  // namespace linalg
}  // namespace homcurv
