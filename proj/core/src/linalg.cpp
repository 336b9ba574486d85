#include "homcurv/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace homcurv::linalg {

Mat null_space(const Mat& a, double abs_tol) {
  const Eigen::Index n = a.cols();
  if (n == 0) return Mat(0, 0);
  if (a.rows() == 0) return Mat::Identity(n, n);
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeFullV);
  const Vec& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > abs_tol) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

Mat orthonormalize(const Mat& columns, double drop_tol) {
  Mat out(columns.rows(), columns.cols());
  Eigen::Index kept = 0;
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    Vec v = columns.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index k = 0; k < kept; ++k) v -= out.col(k).dot(v) * out.col(k);
    }
    const double norm = v.norm();
    if (norm > drop_tol) out.col(kept++) = v / norm;
  }
  return out.leftCols(kept);
}

Mat orthogonal_complement(const Mat& basis, Eigen::Index n) {
  Mat candidates = Mat::Identity(n, n);
  if (basis.cols() > 0) candidates -= basis * (basis.transpose() * candidates);
  Mat comp = orthonormalize(candidates, 1e-8);
  // Project out the given span once more: the first pass only approximates it.
  if (basis.cols() > 0) {
    comp -= basis * (basis.transpose() * comp);
    comp = orthonormalize(comp, 1e-8);
  }
  return comp.leftCols(std::min<Eigen::Index>(comp.cols(), n - basis.cols()));
}

std::vector<std::vector<int>> cluster_sorted(const Vec& ascending, double rel_tol) {
  std::vector<std::vector<int>> groups;
  if (ascending.size() == 0) return groups;
  const double scale = std::max(1.0, ascending.cwiseAbs().maxCoeff());
  groups.push_back({0});
  for (Eigen::Index i = 1; i < ascending.size(); ++i) {
    if (ascending(i) - ascending(i - 1) <= rel_tol * scale) {
      groups.back().push_back(static_cast<int>(i));
    } else {
      groups.push_back({static_cast<int>(i)});
    }
  }
  return groups;
}

double subspace_distance(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) return 1.0;
  if (a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(a.transpose() * b);
  const double smallest_cos = std::clamp(svd.singularValues().minCoeff(), 0.0, 1.0);
  return std::sqrt(std::max(0.0, 1.0 - smallest_cos * smallest_cos));
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Vec gaussian_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

Vec random_unit_vector(std::mt19937_64& rng, Eigen::Index n) {
  Vec v = gaussian_vector(rng, n);
  while (v.norm() < 1e-12) v = gaussian_vector(rng, n);
  return v / v.norm();
}

}  // namespace homcurv::linalg
