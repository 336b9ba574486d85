#include "homcurv/metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "homcurv/error.hpp"

namespace homcurv {

std::string_view to_string(MetricProvenance p) {
  switch (p) {
    case MetricProvenance::Normal: return "normal";
    case MetricProvenance::DiagonalByComponent: return "diagonal-by-component";
    case MetricProvenance::Sampled: return "sampled";
    case MetricProvenance::Explicit: return "explicit";
  }
  return "explicit";
}

MetricProvenance metric_provenance_from_string(std::string_view name) {
  if (name == "normal") return MetricProvenance::Normal;
  if (name == "diagonal-by-component") return MetricProvenance::DiagonalByComponent;
  if (name == "sampled") return MetricProvenance::Sampled;
  if (name == "explicit") return MetricProvenance::Explicit;
  throw InvalidArgument("unknown metric provenance '" + std::string(name) + "'");
}

std::string MetricEndo::provenance_string() const {
  if (provenance == MetricProvenance::Sampled) return "sampled(" + std::to_string(seed) + ")";
  return std::string(to_string(provenance));
}

MetricResiduals metric_residuals(const HomogeneousSpace& space, const Mat& g) {
  const Eigen::Index n = space.dim_p();
  if (g.rows() != n || g.cols() != n)
    throw InvalidArgument("metric matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  MetricResiduals r;
  r.symmetry = n ? (g - g.transpose()).cwiseAbs().maxCoeff() : 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (g + g.transpose()), Eigen::EigenvaluesOnly);
  r.min_eigenvalue = n ? eig.eigenvalues()(0) : 1.0;
  for (const Mat& a : isotropy_actions(space))
    r.equivariance = std::max(r.equivariance, (g * a - a * g).norm());
  return r;
}

void verify_metric(const HomogeneousSpace& space, const Mat& g) {
  const MetricResiduals r = metric_residuals(space, g);
  if (r.symmetry > 1e-12)
    throw VerificationError("metric is not symmetric (residual " + std::to_string(r.symmetry) + ")");
  if (!(r.min_eigenvalue > 0.0))
    throw VerificationError("metric is not positive definite (smallest eigenvalue " +
                            std::to_string(r.min_eigenvalue) + ")");
  if (r.equivariance > 1e-9) {
    std::ostringstream msg;
    msg << "metric does not commute with the isotropy action (residual " << r.equivariance << ")";
    throw VerificationError(msg.str());
  }
}

CommutantBasis commutant_basis(const HomogeneousSpace& space) {
  return {commutant(isotropy_actions(space), space.dim_p(), true)};
}

int expected_commutant_dimension(const IsotypicDecomposition& dec) {
  int total = 0;
  for (const auto& c : dec.components) {
    const int m = c.multiplicity;
    switch (c.division) {
      case DivisionType::Real: total += m * (m + 1) / 2; break;
      case DivisionType::Complex: total += m * m; break;
      case DivisionType::Quaternionic: total += m * (2 * m - 1); break;
    }
  }
  return total;
}

MetricEndo normal_metric(const HomogeneousSpace& space) {
  const Eigen::Index n = space.dim_p();
  return {Mat::Identity(n, n), MetricProvenance::Normal, 0, space.label()};
}

MetricEndo diagonal_metric(const HomogeneousSpace& space, const IsotypicDecomposition& dec,
                           std::span<const double> scales) {
  const Eigen::Index n = space.dim_p();
  if (scales.size() != dec.components.size())
    throw InvalidArgument("diagonal metric needs " + std::to_string(dec.components.size()) +
                          " scales, got " + std::to_string(scales.size()));
  Mat g = Mat::Zero(n, n);
  Mat cover = Mat::Zero(n, n);
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0))
      throw InvalidArgument("scale " + std::to_string(i) + " must be positive");
    const Mat& b = dec.components[i].basis;
    if (b.rows() != n) throw InvalidArgument("component basis does not live in p");
    g += scales[i] * b * b.transpose();
    cover += b * b.transpose();
  }
  if ((cover - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-9)
    throw InvalidArgument("components are not an orthogonal splitting of p");
  g = 0.5 * (g + g.transpose());

  const auto actions = isotropy_actions(space);
  double residual = 0.0;
  for (const Mat& a : actions) residual = std::max(residual, (g * a - a * g).norm());
  if (residual > 1e-9) {
    for (std::size_t i = 0; i < scales.size(); ++i) {
      for (std::size_t j = i + 1; j < scales.size(); ++j) {
        if (scales[i] == scales[j]) continue;
        const Mat& bi = dec.components[i].basis;
        const Mat& bj = dec.components[j].basis;
        for (const Mat& a : actions) {
          if ((bi.transpose() * a * bj).norm() > 1e-9)
            throw VerificationError("diagonal metric breaks equivariance: components " +
                                    std::to_string(i) + " and " + std::to_string(j) +
                                    " are coupled by the isotropy action");
        }
      }
    }
    throw VerificationError("diagonal metric breaks equivariance");
  }
  MetricEndo out{std::move(g), MetricProvenance::DiagonalByComponent, 0, space.label()};
  verify_metric(space, out.matrix);
  return out;
}

MetricEndo sample_metric(const HomogeneousSpace& space, const CommutantBasis& commutant,
                         std::uint64_t seed) {
  const Eigen::Index n = space.dim_p();
  auto rng = linalg::make_stream(seed);
  const Vec c = linalg::gaussian_vector(rng, commutant.dim());
  Mat g = Mat::Zero(n, n);
  for (int i = 0; i < commutant.dim(); ++i) g += c(i) * commutant.basis[i];
  g = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> eig(g, Eigen::EigenvaluesOnly);
  const double shift = std::abs(eig.eigenvalues()(0)) + 0.1;
  g += shift * Mat::Identity(n, n);
  MetricEndo out{std::move(g), MetricProvenance::Sampled, seed, space.label()};
  verify_metric(space, out.matrix);
  return out;
}

MetricEndo explicit_metric(const HomogeneousSpace& space, const Mat& g) {
  verify_metric(space, g);
  return {g, MetricProvenance::Explicit, 0, space.label()};
}

MetricEndo conjugate_metric(const HomogeneousSpace& space, const MetricEndo& g,
                            const GroupElement& b) {
  const Mat& h = space.h_basis();
  const Mat image = b.ad_operator() * h;
  if (h.cols() && (image - h * (h.transpose() * image)).cwiseAbs().maxCoeff() > 1e-9)
    throw InvalidArgument("conjugating element does not normalize h");
  const Mat r = restricted_adjoint(space, b);
  Mat gb = r * g.matrix * r.transpose();
  gb = 0.5 * (gb + gb.transpose());
  verify_metric(space, gb);
  return {std::move(gb), MetricProvenance::Explicit, 0, space.label()};
}

}  // namespace homcurv
