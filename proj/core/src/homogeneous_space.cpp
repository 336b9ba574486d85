#include "homcurv/homogeneous_space.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "homcurv/error.hpp"

namespace homcurv {

HomogeneousSpace::HomogeneousSpace(LieAlgebra ambient, const Mat& h_basis, std::string label,
                                   std::vector<int> params, CatalogMetadata metadata,
                                   std::optional<Vec> reference_torus)
    : ambient_(std::move(ambient)),
      h_basis_(h_basis.cols() ? linalg::orthonormalize(h_basis, 1e-9) : Mat(h_basis.rows(), 0)),
      label_(std::move(label)),
      params_(std::move(params)),
      metadata_(std::move(metadata)),
      reference_torus_(std::move(reference_torus)) {
  if (h_basis.rows() != ambient_.dim())
    throw InvalidArgument("h basis rows do not match the ambient dimension");
  p_basis_ = linalg::orthogonal_complement(h_basis_, ambient_.dim());
  verify();
}

HomogeneousSpace::HomogeneousSpace(LieAlgebra ambient, Mat h_basis, Mat p_basis,
                                   std::string label, std::vector<int> params,
                                   CatalogMetadata metadata, std::optional<Vec> reference_torus)
    : ambient_(std::move(ambient)),
      h_basis_(std::move(h_basis)),
      p_basis_(std::move(p_basis)),
      label_(std::move(label)),
      params_(std::move(params)),
      metadata_(std::move(metadata)),
      reference_torus_(std::move(reference_torus)) {
  verify();
}

double HomogeneousSpace::invariance_residual() const {
  double worst = 0.0;
  for (Eigen::Index a = 0; a < h_basis_.cols(); ++a) {
    const Mat leak = h_basis_.transpose() * ambient_.ad(h_basis_.col(a)) * p_basis_;
    if (leak.size()) worst = std::max(worst, leak.cwiseAbs().maxCoeff());
  }
  return worst;
}

double HomogeneousSpace::subalgebra_residual() const {
  double worst = 0.0;
  for (Eigen::Index a = 0; a < h_basis_.cols(); ++a) {
    const Mat leak = p_basis_.transpose() * ambient_.ad(h_basis_.col(a)) * h_basis_;
    if (leak.size()) worst = std::max(worst, leak.cwiseAbs().maxCoeff());
  }
  return worst;
}

void HomogeneousSpace::verify() const {
  const int d = ambient_.dim();
  if (h_basis_.rows() != d || p_basis_.rows() != d)
    throw InvalidArgument(label_ + ": basis rows do not match the ambient dimension");
  if (h_basis_.cols() + p_basis_.cols() != d)
    throw VerificationError(label_ + ": dim h + dim p != dim k");
  Mat all(d, d);
  all << h_basis_, p_basis_;
  if ((all.transpose() * all - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-9)
    throw VerificationError(label_ + ": h and p bases are not jointly orthonormal");
  if (subalgebra_residual() > 1e-9)
    throw VerificationError(label_ + ": h is not closed under the bracket");
  if (invariance_residual() > 1e-9)
    throw VerificationError(label_ + ": p is not Ad_H-invariant");
  if (reference_torus_) {
    const Vec& t = *reference_torus_;
    if (t.size() != d || (t - h_basis_ * (h_basis_.transpose() * t)).norm() > 1e-9)
      throw VerificationError(label_ + ": reference torus does not lie in h");
  }
}

std::vector<Mat> isotropy_actions(const HomogeneousSpace& space) {
  std::vector<Mat> out;
  const Mat& p = space.p_basis();
  for (Eigen::Index a = 0; a < space.h_basis().cols(); ++a) {
    out.push_back(p.transpose() * space.ambient().ad(space.h_basis().col(a)) * p);
  }
  return out;
}

Mat restricted_adjoint(const HomogeneousSpace& space, const GroupElement& g) {
  const Mat& p = space.p_basis();
  const Mat image = g.ad_operator() * p;
  const Mat r = p.transpose() * image;
  if ((image - p * r).cwiseAbs().maxCoeff() > 1e-9)
    throw InvalidArgument(space.label() + ": Ad_g does not preserve p");
  return r;
}

FixedSubalgebra fixed_subalgebra_in_h(const HomogeneousSpace& space, const GroupElement& g) {
  const Mat& h = space.h_basis();
  const Mat image = g.ad_operator() * h;
  if (h.cols() && (image - h * (h.transpose() * image)).cwiseAbs().maxCoeff() > 1e-9)
    throw InvalidArgument(space.label() + ": g does not normalize h");
  FixedSubalgebra out;
  if (h.cols()) {
    const Mat restricted = h.transpose() * image - Mat::Identity(h.cols(), h.cols());
    out.basis = h * linalg::null_space(restricted, 1e-9);
  } else {
    out.basis = Mat(space.ambient().dim(), 0);
  }
  out.centralizer_dim = static_cast<int>(centralizer_subalgebra(space.ambient(), g).cols());
  out.fixed_component_dim = out.centralizer_dim - static_cast<int>(out.basis.cols());
  return out;
}

HomogeneousSpace space_from_matrices(const LieAlgebra& ambient, const std::vector<CMat>& h_matrices,
                                     std::string label) {
  Mat h(ambient.dim(), static_cast<Eigen::Index>(h_matrices.size()));
  for (std::size_t i = 0; i < h_matrices.size(); ++i) {
    if (ambient.span_residual(h_matrices[i]) > 1e-9)
      throw InvalidArgument(label + ": subalgebra generator " + std::to_string(i) +
                            " is not in the ambient algebra");
    h.col(static_cast<Eigen::Index>(i)) = ambient.coordinates(h_matrices[i]);
  }
  return HomogeneousSpace(ambient, h, std::move(label));
}

}  // namespace homcurv
