#include <doctest.h>

#include "homcurv/error.hpp"
#include "homcurv/obstruction.hpp"
#include "oracles.hpp"

using namespace homcurv;

namespace {

void check_commuting_witness(const HomogeneousSpace& s, const MetricEndo& g, const Witness& w) {
  CHECK(w.kind == WitnessKind::CommutingEigenvectors);
  const Vec& x = w.plane.x;
  const Vec& y = w.plane.y;
  CHECK((g.matrix * x - w.eigenvalues.at(0) * x).norm() < 1e-8);
  CHECK((g.matrix * y - w.eigenvalues.at(1) * y).norm() < 1e-8);
  CHECK(oracle::matrix_bracket(s.ambient(), s.to_ambient(x), s.to_ambient(y)).norm() < 1e-9);
  CHECK(std::abs(curvature(s, g, w.plane).unnormalized) < 1e-9);
  CHECK(std::abs(x.dot(y)) < 1e-8);
}

}  // namespace

TEST_CASE("commuting eigenvectors on (S^3 x S^3)/S^1") {
  const HomogeneousSpace s = catalog_build("s3s3circle", {2, 1});
  const CommutantBasis cb = commutant_basis(s);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MetricEndo g = sample_metric(s, cb, seed);
    const SearchOutcome o = find_commuting_eigenvectors(s, g, seed);
    REQUIRE(o.witness);
    check_commuting_witness(s, g, *o.witness);
    // the plane is spanned by one vector from each factor
    const Vec ax = s.to_ambient(o.witness->plane.x);
    const Vec ay = s.to_ambient(o.witness->plane.y);
    const double x_first = ax.head(3).norm(), y_first = ay.head(3).norm();
    CHECK(std::min(x_first, y_first) < 1e-8);
    CHECK(std::max(x_first, y_first) > 1.0 - 1e-8);
  }
}

TEST_CASE("distinct weights give commuting eigenvectors on Sp(2)/S^1(5,3)") {
  const HomogeneousSpace s = catalog_build("sp2circle", {5, 3});
  const IsotypicDecomposition d = decompose_isotypic(s);
  const std::vector<double> scales = {1.0, 1.3, 0.7, 1.9, 1.1};
  const MetricEndo g = diagonal_metric(s, d, scales);
  const SearchOutcome o = find_commuting_eigenvectors(s, g);
  REQUIRE(o.witness);
  check_commuting_witness(s, g, *o.witness);
}

TEST_CASE("round sphere has no commuting eigenvectors") {
  const HomogeneousSpace s = catalog_build("sphere-so", {4});
  const SearchOutcome o = find_commuting_eigenvectors(s, normal_metric(s));
  CHECK_FALSE(o.witness);
  CHECK_FALSE(o.gray_zone);
  CHECK(o.best_residual > 0.1);
  CHECK(o.note.find("not found at 32 starts") != std::string::npos);
}

TEST_CASE("lemma b on Sp(2)/dS^1") {
  const HomogeneousSpace s = catalog_build("stiefel");
  const CommutantBasis cb = commutant_basis(s);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const MetricEndo g = sample_metric(s, cb, seed);
    const SearchOutcome o = lemma_b_witness(s, g, seed);
    REQUIRE(o.witness);
    const Witness& w = *o.witness;
    CHECK(w.kind == WitnessKind::LemmaB);
    CHECK(w.value.unnormalized <= 1e-10);
    Eigen::SelfAdjointEigenSolver<Mat> eig(g.matrix);
    CHECK(w.eigenvalues.at(0) == doctest::Approx(eig.eigenvalues()(0)));
    CHECK(w.eigen_residual < 1e-8);
  }
}

TEST_CASE("lemma b with the normal metric of a rank two quotient") {
  const HomogeneousSpace s = catalog_build("stiefel");
  const SearchOutcome o = lemma_b_witness(s, normal_metric(s));
  REQUIRE(o.witness);
  CHECK(std::abs(o.witness->value.unnormalized) < 1e-12);
}

TEST_CASE("positively curved spheres have no lemma b witness") {
  for (const char* label : {"sphere-sp", "sphere-so"}) {
    CAPTURE(label);
    const HomogeneousSpace s = catalog_build(label);
    const SearchOutcome o = lemma_b_witness(s, normal_metric(s));
    CHECK_FALSE(o.witness);
    CHECK(o.best_residual > 1e-3);
    CHECK(o.starts == 64);
  }
}

TEST_CASE("rank parity") {
  const RankReport w6 = berger_rank_check(catalog_build("wallach6"));
  CHECK(w6.rank_k == 2);
  CHECK(w6.rank_h == 2);
  CHECK(w6.dim_p == 6);
  CHECK(w6.parity_consistent);
  const RankReport b13 = berger_rank_check(catalog_build("berger13"));
  CHECK(b13.rank_k == 4);
  CHECK(b13.rank_h == 3);
  CHECK(b13.dim_p == 13);
  CHECK(b13.parity_consistent);
  for (const CatalogEntry& e : catalog_entries()) {
    CAPTURE(e.label);
    CHECK(berger_rank_check(catalog_build(e.label)).parity_consistent);
  }

  const LieAlgebra so7 = build_algebra(Family::so, 7);
  CMat t = CMat::Zero(7, 7);
  t(0, 1) = 1.0;
  t(1, 0) = -1.0;
  const RankReport bad = berger_rank_check(space_from_matrices(so7, {t}, "so7/so2"));
  CHECK(bad.rank_k == 3);
  CHECK(bad.rank_h == 1);
  CHECK(bad.dim_p == 20);
  CHECK_FALSE(bad.parity_consistent);
}

TEST_CASE("symmetrization on Sp(2)/S^1(3,1)") {
  const HomogeneousSpace s = catalog_build("sp2circle", {3, 1});
  const CommutantBasis cb = commutant_basis(s);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MetricEndo g = sample_metric(s, cb, seed);
    const Sp2Symmetrization r = symmetrize_sp2_31(s, g);
    CHECK(r.det_ad_a == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(r.residual < 1e-8);
    if (r.residual_before > 1e-8) CHECK(r.residual < r.residual_before);
    CHECK(std::abs(r.block_after(0, 1).imag()) < 1e-10);
    CHECK((r.block_before - r.block_before.adjoint()).norm() < 1e-12);
    // already symmetrized input needs no rotation
    const Sp2Symmetrization again = symmetrize_sp2_31(s, r.g_b);
    CHECK(std::abs(again.psi) < 1e-10);
    CHECK(again.residual < 1e-10);
  }
  CHECK_THROWS_AS(symmetrize_sp2_31(catalog_build("sp2circle", {5, 3}),
                                    normal_metric(catalog_build("sp2circle", {5, 3}))),
                  InvalidArgument);
  Mat bad = Mat::Identity(9, 9);
  bad(0, 0) = 3.0;
  bad(1, 1) = 2.0;
  CHECK_THROWS_AS(symmetrize_sp2_31(s, MetricEndo{bad}), VerificationError);
}
