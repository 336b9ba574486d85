#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "homcurv/serialize.hpp"
#include "homcurv_cli/cli.hpp"

using namespace homcurv;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Invocation r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path work_dir() {
  fs::path dir = fs::temp_directory_path() / "homcurv_test_cli";
  fs::create_directories(dir);
  return dir;
}

std::string path_of(const char* name) { return (work_dir() / name).string(); }

Json error_json(const Invocation& r) {
  const auto pos = r.err.find("{\"error\"");
  REQUIRE(pos != std::string::npos);
  const auto end = r.err.find('\n', pos);
  return Json::parse(r.err.substr(pos, end == std::string::npos ? std::string::npos : end - pos));
}

}  // namespace

TEST_CASE("build, decompose, metric, curvature pipeline") {
  const std::string space = path_of("aw.json");
  Invocation r = invoke({"build", "--space", "aloffwallach-su3", "--p", "1", "--q", "1", "--out", space});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.err.find("homcurv 0.1.0 seed 0") != std::string::npos);
  CHECK(read_json_file(space).at("dim_p") == 7);

  r = invoke({"decompose", space});
  REQUIRE(r.code == cli::kSuccess);
  const IsotypicDecomposition d = isotypic_decomposition_from_json(Json::parse(r.out));
  CHECK(d.dims() == std::vector<int>{3, 4});

  const std::string metric = path_of("aw_metric.json");
  r = invoke({"metric", space, "--metric", "diag:0.5,1", "--out", metric});
  REQUIRE(r.code == cli::kSuccess);
  const MetricEndo g = metric_from_json(read_json_file(metric));
  CHECK(g.provenance_string() == "diagonal-by-component");

  r = invoke({"curvature", space, "--metric", "file:" + metric, "--plane", "random:3"});
  REQUIRE(r.code == cli::kSuccess);
  const Json cv = Json::parse(r.out);
  CHECK(cv.at("sectional").get<double>() > 0.0);

  // the same plane through the library
  const HomogeneousSpace s = homogeneous_space_from_json(read_json_file(space));
  const Plane plane = cli::parse_plane_spec(s, "random:3");
  CHECK(curvature(s, g, plane).sectional ==
        doctest::Approx(cv.at("sectional").get<double>()).epsilon(1e-12));
}

TEST_CASE("obstruct and certify") {
  const std::string space = path_of("stiefel.json");
  REQUIRE(invoke({"build", "--space", "stiefel", "--out", space}).code == 0);

  Invocation r = invoke({"obstruct", space, "--metric", "sample:42"});
  REQUIRE(r.code == cli::kSuccess);
  Json j = Json::parse(r.out);
  CHECK(j.at("kind") == "obstruction_report");
  CHECK(j.at("samples_with_witness") == 1);

  r = invoke({"certify", space, "--metric", "sample:42", "--starts", "8", "--seed", "5"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(r.err.find("seed 5") != std::string::npos);
  j = Json::parse(r.out);
  CHECK(j.at("kind") == "certify_report");
  CHECK(j.at("verdict") == "nonpositive-witness");
  CHECK(j.at("per_start_minima").size() == 8);
}

TEST_CASE("catalog listing") {
  Invocation r = invoke({"catalog", "--json"});
  REQUIRE(r.code == cli::kSuccess);
  const Json j = Json::parse(r.out);
  CHECK(j.dump().find("wallach6") != std::string::npos);
  r = invoke({"catalog"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("berger13") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{}, {"frobnicate"}, {"build", "--space", "nope"},
        {"build", "--space", "sp2circle", "--p", "4", "--q", "2"},
        {"catalog", "--bogus"}, {"certify", path_of("stiefel.json"), "--starts", "0"}}) {
    CAPTURE(args.size());
    const Invocation r = invoke(args);
    CHECK(r.code == cli::kUsageError);
    const Json e = error_json(r);
    CHECK(e.at("error").contains("type"));
    CHECK(!e.at("error").at("message").get<std::string>().empty());
  }
}

TEST_CASE("verification failures exit with code 1") {
  const std::string space = path_of("wallach6.json");
  REQUIRE(invoke({"build", "--space", "wallach6", "--out", space}).code == 0);
  Json j = read_json_file(space);
  j["p_basis"][0][0] = j["p_basis"][0][0].get<double>() + 0.3;
  const std::string broken = path_of("wallach6_broken.json");
  write_json_file_atomic(broken, j);
  const Invocation r = invoke({"decompose", broken});
  CHECK(r.code == cli::kVerificationFailure);
  CHECK(error_json(r).at("error").at("type") == "VerificationError");
}

TEST_CASE("HOMCURV_SEED sets the default seed") {
  ::setenv("HOMCURV_SEED", "77", 1);
  CHECK(cli::default_seed() == 77);
  const Invocation r = invoke({"catalog"});
  CHECK(r.err.find("seed 77") != std::string::npos);
  ::setenv("HOMCURV_SEED", "abc", 1);
  CHECK(invoke({"catalog"}).code == cli::kUsageError);
  ::unsetenv("HOMCURV_SEED");
  CHECK(cli::default_seed() == 0);
}
