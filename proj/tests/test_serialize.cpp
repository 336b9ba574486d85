#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "homcurv/error.hpp"
#include "homcurv/serialize.hpp"
#include "oracles.hpp"

using namespace homcurv;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "homcurv_test_serialize";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("lie algebra round trip is bit exact") {
  for (const LieAlgebra& alg : {build_algebra(Family::so, 7), build_algebra(Family::sp, 2),
                                build_algebra(Family::u, 3)}) {
    CAPTURE(alg.name());
    const Json j = to_json(alg);
    CHECK(j.at("schema_version") == kSchemaVersion);
    CHECK(j.at("kind") == "lie_algebra");
    const LieAlgebra back = lie_algebra_from_json(Json::parse(j.dump()));
    CHECK(back.name() == alg.name());
    CHECK(back.dim() == alg.dim());
    CHECK(back.factors() == alg.factors());
    CHECK(back.structure_constants() == alg.structure_constants());
    REQUIRE(back.realization().basis.size() == alg.realization().basis.size());
    for (std::size_t i = 0; i < alg.realization().basis.size(); ++i)
      CHECK(back.realization().basis[i] == alg.realization().basis[i]);
  }
}

TEST_CASE("homogeneous space round trip is bit exact") {
  for (const CatalogEntry& e : catalog_entries()) {
    CAPTURE(e.label);
    const HomogeneousSpace s = catalog_build(e.label);
    const HomogeneousSpace back = homogeneous_space_from_json(Json::parse(to_json(s).dump()));
    CHECK(back.label() == s.label());
    CHECK(back.params() == s.params());
    CHECK(back.h_basis() == s.h_basis());
    CHECK(back.p_basis() == s.p_basis());
    CHECK(back.ambient().structure_constants() == s.ambient().structure_constants());
    CHECK(back.reference_torus().has_value() == s.reference_torus().has_value());
    if (s.reference_torus()) CHECK(*back.reference_torus() == *s.reference_torus());
  }
}

TEST_CASE("metric, decomposition and plane round trips") {
  const HomogeneousSpace s = catalog_build("sp2circle", {5, 3});
  const IsotypicDecomposition d = decompose_isotypic(s, 3);
  const IsotypicDecomposition d2 = isotypic_decomposition_from_json(Json::parse(to_json(d).dump()));
  CHECK(d2.dims() == d.dims());
  CHECK(d2.seed == d.seed);
  REQUIRE(d2.components.size() == d.components.size());
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    CHECK(d2.components[i].basis == d.components[i].basis);
    CHECK(d2.components[i].weights == d.components[i].weights);
    CHECK(d2.components[i].multiplicity == d.components[i].multiplicity);
    CHECK(d2.components[i].division == d.components[i].division);
  }

  const MetricEndo g = sample_metric(s, commutant_basis(s), 11);
  const MetricEndo g2 = metric_from_json(Json::parse(to_json(g).dump()));
  CHECK(g2.matrix == g.matrix);
  CHECK(g2.provenance == MetricProvenance::Sampled);
  CHECK(g2.seed == 11);
  CHECK(g2.provenance_string() == "sampled(11)");

  std::mt19937_64 rng(5);
  const Plane p{oracle::gaussian(rng, s.dim_p()), oracle::gaussian(rng, s.dim_p())};
  const Plane p2 = plane_from_json(Json::parse(to_json(p).dump()));
  CHECK(p2.x == p.x);
  CHECK(p2.y == p.y);
}

TEST_CASE("document checks") {
  const HomogeneousSpace s = catalog_build("wallach6");
  Json j = to_json(s);
  CHECK_NOTHROW(check_document(j, "homogeneous_space"));
  CHECK_THROWS_AS(check_document(j, "metric"), InvalidArgument);
  j["schema_version"] = 2;
  CHECK_THROWS_AS(homogeneous_space_from_json(j), InvalidArgument);
  j.erase("schema_version");
  CHECK_THROWS_AS(homogeneous_space_from_json(j), InvalidArgument);

  Json tampered = to_json(s);
  tampered["p_basis"][0][0] = tampered["p_basis"][0][0].get<double>() + 0.25;
  CHECK_THROWS(homogeneous_space_from_json(tampered));
}

TEST_CASE("atomic file writes") {
  const fs::path path = temp_dir() / "space.json";
  const HomogeneousSpace s = catalog_build("berger7");
  write_json_file_atomic(path, to_json(s));
  CHECK_FALSE(fs::exists(path.string() + ".tmp"));
  CHECK(homogeneous_space_from_json(read_json_file(path)).p_basis() == s.p_basis());
  write_json_file_atomic(path, to_json(normal_metric(s)));
  CHECK(read_json_file(path).at("kind") == "metric");
  CHECK_THROWS_AS(read_json_file(temp_dir() / "missing.json"), InvalidArgument);
  std::ofstream(temp_dir() / "broken.json") << "{ not json";
  CHECK_THROWS_AS(read_json_file(temp_dir() / "broken.json"), InvalidArgument);
}
