#include <doctest.h>

#include "homcurv/error.hpp"
#include "homcurv/homogeneous_space.hpp"

using namespace homcurv;

TEST_CASE("every catalog entry builds and verifies") {
  for (const CatalogEntry& e : catalog_entries()) {
    CAPTURE(e.label);
    const HomogeneousSpace s = catalog_build(e.label);
    CHECK(s.dim_h() + s.dim_p() == s.ambient().dim());
    CHECK(s.subalgebra_residual() < 1e-10);
    CHECK(s.invariance_residual() < 1e-9);
    const Mat joint = (Mat(s.ambient().dim(), s.ambient().dim()) << s.h_basis(), s.p_basis()).finished();
    CHECK((joint.transpose() * joint - Mat::Identity(joint.cols(), joint.cols())).norm() < 1e-10);
  }
}

TEST_CASE("manifold dimensions") {
  const std::vector<std::pair<std::string, int>> expected = {
      {"sphere-so", 4},     {"sphere-su", 5},     {"sphere-u", 5},       {"sphere-sp", 7},
      {"sphere-spsp1", 7},  {"sphere-spu1", 7},   {"cpn", 4},            {"hpn", 4},
      {"cp2n1", 6},         {"berger13", 13},     {"berger7", 7},        {"w11", 7},
      {"wallach6", 6},      {"wallach12", 12},    {"aloffwallach-su3", 7},
      {"aloffwallach-u3", 7}, {"stiefel", 9},     {"sp2circle", 9},      {"su3circle", 7},
      {"s3s3circle", 5},    {"sp3mix", 15}};
  CHECK(expected.size() == catalog_entries().size());
  for (const auto& [label, dim] : expected) {
    CAPTURE(label);
    CHECK(catalog_build(label).dim_p() == dim);
  }
}

TEST_CASE("parameterized families") {
  CHECK(catalog_build("sphere-so", {6}).dim_p() == 6);
  CHECK(catalog_build("cpn", {3}).dim_p() == 6);
  CHECK(catalog_build("hpn", {2}).dim_p() == 8);
  CHECK(catalog_build("aloffwallach-su3", {2, 1}).dim_p() == 7);
  CHECK(catalog_build("sp2circle", {1, 0}).dim_p() == 9);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(catalog_build("sp2circle", {2, 2}), InvalidArgument);
  CHECK_THROWS_AS(catalog_build("aloffwallach-su3", {1, 0}), InvalidArgument);
  CHECK_THROWS_AS(catalog_build("s3s3circle", {1, 2}), InvalidArgument);
  CHECK_THROWS_AS(catalog_build("sphere-so", {0}), InvalidArgument);
  CHECK_THROWS_AS(catalog_build("nonexistent"), InvalidArgument);
}

TEST_CASE("reference tori lie in h") {
  for (const char* label : {"stiefel", "sp2circle", "aloffwallach-su3", "s3s3circle", "su3circle"}) {
    CAPTURE(label);
    const HomogeneousSpace s = catalog_build(label);
    REQUIRE(s.reference_torus());
    const Vec& t = *s.reference_torus();
    CHECK((t - s.h_basis() * s.h_part(t)).norm() < 1e-12);
  }
}

TEST_CASE("non-subalgebra is rejected") {
  const LieAlgebra so4 = build_algebra(Family::so, 4);
  CMat a = CMat::Zero(4, 4);
  a(0, 1) = 1.0;
  a(1, 0) = -1.0;
  CMat b = CMat::Zero(4, 4);
  b(1, 2) = 1.0;
  b(2, 1) = -1.0;
  CHECK_THROWS(space_from_matrices(so4, {a, b}, "bad"));
}

TEST_CASE("restricted adjoint and fixed subalgebra") {
  const HomogeneousSpace s = catalog_build("sp2circle", {3, 1});
  const CMat a = quaternionic(CMat::Zero(2, 2), CMat::Identity(2, 2));
  const GroupElement g = GroupElement::from_matrix(s.ambient(), a);
  const Mat r = restricted_adjoint(s, g);
  CHECK((r.transpose() * r - Mat::Identity(s.dim_p(), s.dim_p())).norm() < 1e-12);
  const FixedSubalgebra f = fixed_subalgebra_in_h(s, g);
  CHECK(f.basis.cols() == 0);  // Ad_a inverts the circle
}
