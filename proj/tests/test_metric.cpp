#include <doctest.h>

#include "homcurv/error.hpp"
#include "homcurv/metric.hpp"

using namespace homcurv;

TEST_CASE("sampled metrics are valid and reproducible") {
  for (const char* label : {"stiefel", "sp2circle", "wallach6", "s3s3circle"}) {
    CAPTURE(label);
    const HomogeneousSpace s = catalog_build(label);
    const CommutantBasis cb = commutant_basis(s);
    const MetricEndo g = sample_metric(s, cb, 42);
    CHECK_NOTHROW(verify_metric(s, g.matrix));
    const MetricResiduals r = metric_residuals(s, g.matrix);
    CHECK(r.min_eigenvalue >= 0.1 - 1e-12);
    CHECK(r.equivariance < 1e-9);
    CHECK(g.provenance_string() == "sampled(42)");
    CHECK(sample_metric(s, cb, 42).matrix == g.matrix);
    CHECK(sample_metric(s, cb, 43).matrix != g.matrix);
  }
}

TEST_CASE("normal and diagonal metrics") {
  const HomogeneousSpace s = catalog_build("sp2circle", {3, 1});
  const IsotypicDecomposition d = decompose_isotypic(s);
  const std::vector<double> scales = {1.0, 2.0, 3.0, 4.0};
  const MetricEndo g = diagonal_metric(s, d, scales);
  for (std::size_t i = 0; i < scales.size(); ++i) {
    const Mat& b = d.components[i].basis;
    CHECK((g.matrix * b - scales[i] * b).norm() < 1e-12);
  }
  CHECK(normal_metric(s).matrix == Mat::Identity(9, 9));
  const std::vector<double> short_list = {1.0, 2.0};
  CHECK_THROWS_AS(diagonal_metric(s, d, short_list), InvalidArgument);
  const std::vector<double> negative = {1.0, -2.0, 3.0, 4.0};
  CHECK_THROWS_AS(diagonal_metric(s, d, negative), InvalidArgument);
}

TEST_CASE("a non-invariant splitting names the coupled components") {
  const HomogeneousSpace s = catalog_build("stiefel");
  const IsotypicDecomposition d = decompose_isotypic(s);
  // Split the 6-dimensional class into its first irreducible and the rest.
  IsotypicDecomposition split;
  split.components.push_back(d.components[0]);
  const Mat& six = d.components[1].basis;
  Mat mixed = six;
  mixed.col(0) = (six.col(0) + six.col(2)) / std::sqrt(2.0);
  mixed.col(2) = (six.col(0) - six.col(2)) / std::sqrt(2.0);
  IsotypicComponent a, b;
  a.basis = mixed.leftCols(1);
  b.basis = mixed.rightCols(5);
  split.components.push_back(a);
  split.components.push_back(b);
  const std::vector<double> scales = {1.0, 1.0, 2.0};
  try {
    diagonal_metric(s, split, scales);
    FAIL("expected a verification error");
  } catch (const VerificationError& e) {
    CHECK(std::string(e.what()).find("components 1 and 2") != std::string::npos);
  }
}

TEST_CASE("explicit metrics are checked") {
  const HomogeneousSpace s = catalog_build("wallach6");
  Mat asym = Mat::Identity(6, 6);
  asym(0, 1) = 0.1;
  CHECK_THROWS_AS(explicit_metric(s, asym), VerificationError);
  Mat indefinite = Mat::Identity(6, 6);
  indefinite(3, 3) = -1.0;
  CHECK_THROWS_AS(explicit_metric(s, indefinite), VerificationError);
  Mat not_equivariant = Mat::Identity(6, 6);
  not_equivariant(0, 0) = 2.0;
  CHECK_THROWS_AS(explicit_metric(s, not_equivariant), VerificationError);
  CHECK_THROWS_AS(explicit_metric(s, Mat::Identity(5, 5)), InvalidArgument);
}

TEST_CASE("conjugating by the normalizer keeps the metric invariant") {
  const HomogeneousSpace s = catalog_build("sp2circle", {3, 1});
  const MetricEndo g = sample_metric(s, commutant_basis(s), 5);
  CMat x = CMat::Zero(2, 2);
  x(0, 0) = std::complex<double>(0, 0.3);
  x(1, 1) = std::complex<double>(0, -0.7);
  const GroupElement b =
      GroupElement::exp(s.ambient(), AlgebraElement{s.ambient().coordinates(quaternionic(x, CMat::Zero(2, 2)))});
  const MetricEndo gb = conjugate_metric(s, g, b);
  CHECK_NOTHROW(verify_metric(s, gb.matrix));
  Eigen::SelfAdjointEigenSolver<Mat> e1(g.matrix), e2(gb.matrix);
  CHECK((e1.eigenvalues() - e2.eigenvalues()).norm() < 1e-10);
}
