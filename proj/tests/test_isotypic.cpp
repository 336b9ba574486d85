#include <doctest.h>

#include <algorithm>

#include "homcurv/error.hpp"
#include "homcurv/metric.hpp"
#include "oracles.hpp"

using namespace homcurv;

TEST_CASE("isotypic dimensions") {
  CHECK(decompose_isotypic(catalog_build("sp2circle", {3, 1})).dims() == std::vector<int>{1, 4, 2, 2});
  CHECK(decompose_isotypic(catalog_build("sp2circle", {5, 3})).dims() ==
        std::vector<int>{1, 2, 2, 2, 2});
  const IsotypicDecomposition st = decompose_isotypic(catalog_build("stiefel"));
  REQUIRE(st.dims() == std::vector<int>{3, 6});
  CHECK(st.components[0].multiplicity == 3);
  CHECK(st.components[0].division == DivisionType::Real);
  CHECK(st.components[1].multiplicity == 3);
  CHECK(st.components[1].irreducible_dim() == 2);
  CHECK(st.components[1].division == DivisionType::Complex);
}

TEST_CASE("weights of the reference circle") {
  const IsotypicDecomposition d = decompose_isotypic(catalog_build("sp2circle", {5, 3}));
  std::vector<int> w;
  for (const auto& c : d.components) w.push_back(c.weights.at(0));
  CHECK(w == std::vector<int>{0, 2, 6, 8, 10});
}

TEST_CASE("irreducible isotropy has a one-dimensional symmetric commutant") {
  for (const char* label : {"sphere-so", "cpn", "hpn", "berger7"}) {
    CAPTURE(std::string(label));
    const HomogeneousSpace s = catalog_build(label);
    const IsotypicDecomposition d = decompose_isotypic(s);
    CHECK(d.components.size() == 1);
    CHECK(commutant_basis(s).dim() == 1);
  }
}

TEST_CASE("commutant dimension against a brute-force Kronecker solve") {
  for (const char* label : {"stiefel", "sp2circle", "wallach6", "aloffwallach-su3", "s3s3circle",
                            "w11", "cp2n1", "sphere-u"}) {
    CAPTURE(label);
    const HomogeneousSpace s = catalog_build(label);
    const auto actions = isotropy_actions(s);
    const int sym = oracle::commutant_dimension(actions, s.dim_p(), true);
    const int full = oracle::commutant_dimension(actions, s.dim_p(), false);
    CHECK(commutant_basis(s).dim() == sym);
    CHECK(static_cast<int>(commutant(actions, s.dim_p(), false).size()) == full);
    CHECK(expected_commutant_dimension(decompose_isotypic(s)) == sym);
  }
  CHECK(commutant_basis(catalog_build("stiefel")).dim() == 15);
}

TEST_CASE("components are invariant and orthogonal") {
  for (const char* label : {"stiefel", "sp2circle", "wallach12", "sp3mix"}) {
    CAPTURE(label);
    const HomogeneousSpace s = catalog_build(label);
    const IsotypicDecomposition d = decompose_isotypic(s, 7);
    CHECK(invariance_residual(s, d) < 1e-9);
    Mat all(s.dim_p(), 0);
    for (const auto& c : d.components) {
      Mat next(s.dim_p(), all.cols() + c.dim());
      next << all, c.basis;
      all = next;
    }
    REQUIRE(all.cols() == s.dim_p());
    CHECK((all.transpose() * all - Mat::Identity(s.dim_p(), s.dim_p())).norm() < 1e-9);
  }
}

TEST_CASE("decomposition does not depend on the seed") {
  const HomogeneousSpace s = catalog_build("stiefel");
  const auto a = decompose_isotypic(s, 1);
  const auto b = decompose_isotypic(s, 99);
  REQUIRE(a.dims() == b.dims());
  for (std::size_t i = 0; i < a.components.size(); ++i)
    CHECK(linalg::subspace_distance(a.components[i].basis, b.components[i].basis) < 1e-6);
}

TEST_CASE("berger 13 space splits into two inequivalent summands") {
  const HomogeneousSpace s = catalog_build("berger13");
  const IsotypicDecomposition d = decompose_isotypic(s);
  std::vector<int> dims = d.dims();
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{5, 8});
  CHECK(commutant_basis(s).dim() == 2);
}
