#include <doctest.h>

#include "homcurv/certify.hpp"
#include "homcurv/error.hpp"
#include "homcurv/obstruction.hpp"

using namespace homcurv;

TEST_CASE("round sphere minimum is 1/2") {
  const HomogeneousSpace s = catalog_build("sphere-so", {4});
  CertifyConfig cfg;
  cfg.starts = 8;
  const CertifyReport r = min_sectional(s, normal_metric(s), cfg);
  CHECK(r.min_sectional == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(r.verdict == Verdict::PositiveFoundMin);
  CHECK(r.per_start_minima.size() == 8);
  CHECK(!r.disclaimer.empty());
}

TEST_CASE("sampled metrics on Sp(2)/dS^1 are not positive") {
  const HomogeneousSpace s = catalog_build("stiefel");
  const CommutantBasis cb = commutant_basis(s);
  for (std::uint64_t seed : {1u, 42u}) {
    const MetricEndo g = sample_metric(s, cb, seed);
    CertifyConfig cfg;
    cfg.seed = seed;
    const CertifyReport r = min_sectional(s, g, cfg);
    CHECK(r.verdict == Verdict::NonpositiveWitness);
    // the argmin plane re-evaluates on its own
    const CurvatureValue v = curvature(s, g, r.argmin);
    CHECK(v.sectional == doctest::Approx(r.min_sectional).epsilon(1e-10).scale(1.0));
    CHECK(v.sectional <= cfg.zero_tol);
  }
}

TEST_CASE("normal homogeneous Berger space is positive") {
  const HomogeneousSpace s = catalog_build("berger7");
  CertifyConfig cfg;
  cfg.starts = 16;
  const CertifyReport r = min_sectional(s, normal_metric(s), cfg);
  CHECK(r.verdict == Verdict::PositiveFoundMin);
  CHECK(r.min_sectional > 0.0);
}

TEST_CASE("determinism and monotonicity in the number of starts") {
  const HomogeneousSpace s = catalog_build("wallach6");
  const IsotypicDecomposition d = decompose_isotypic(s);
  const std::vector<double> scales = {1.0, 1.1, 1.3};
  const MetricEndo g = diagonal_metric(s, d, scales);
  CertifyConfig cfg;
  cfg.seed = 17;
  cfg.starts = 6;
  const CertifyReport a = min_sectional(s, g, cfg);
  const CertifyReport b = min_sectional(s, g, cfg);
  CHECK(a.per_start_minima == b.per_start_minima);
  CHECK(a.argmin.x == b.argmin.x);
  double prev = a.min_sectional;
  for (int starts : {12, 24}) {
    cfg.starts = starts;
    const CertifyReport c = min_sectional(s, g, cfg);
    CHECK(c.min_sectional <= prev);
    CHECK(std::equal(a.per_start_minima.begin(), a.per_start_minima.end(),
                     c.per_start_minima.begin()));
    prev = c.min_sectional;
  }
}

TEST_CASE("aloff-wallach grid search") {
  const HomogeneousSpace s = catalog_build("aloffwallach-su3", {1, 1});
  const IsotypicDecomposition d = decompose_isotypic(s);
  CertifyConfig cfg;
  cfg.starts = 16;
  const auto results = metric_grid_search(s, d, {{0.5, 1.0}, {1.0, 1.0}}, cfg);
  REQUIRE(results.size() == 2);
  CHECK(results[0].scales == std::vector<double>{0.5, 1.0});
  CHECK(results[0].report.verdict == Verdict::PositiveFoundMin);
  CHECK(results[1].report.verdict == Verdict::NonpositiveWitness);
  CHECK_THROWS_AS(metric_grid_search(s, d, {{1.0, -1.0}}, cfg), InvalidArgument);
  CHECK_THROWS_AS(metric_grid_search(s, d, {{1.0}}, cfg), InvalidArgument);
}

TEST_CASE("certifier agrees with obstruction witnesses") {
  const HomogeneousSpace s = catalog_build("s3s3circle", {2, 1});
  const CommutantBasis cb = commutant_basis(s);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const MetricEndo g = sample_metric(s, cb, seed);
    REQUIRE(find_commuting_eigenvectors(s, g, seed).witness);
    CertifyConfig cfg;
    cfg.seed = seed;
    CHECK(min_sectional(s, g, cfg).verdict == Verdict::NonpositiveWitness);
  }
}

TEST_CASE("verdict bands and configuration checks") {
  CHECK(classify(-1.0, 1e-9) == Verdict::NonpositiveWitness);
  CHECK(classify(1e-9, 1e-9) == Verdict::NonpositiveWitness);
  CHECK(classify(1e-7, 1e-9) == Verdict::Inconclusive);
  CHECK(classify(1e-3, 1e-9) == Verdict::PositiveFoundMin);
  CertifyConfig bad;
  bad.starts = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = {};
  bad.zero_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  const HomogeneousSpace circle = space_from_matrices(build_algebra(Family::u, 1), {}, "u1");
  REQUIRE(circle.dim_p() == 1);
  CHECK_THROWS_AS(min_sectional(circle, normal_metric(circle)), InvalidArgument);
}
