#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "homcurv/certify.hpp"
#include "homcurv/obstruction.hpp"

namespace homcurv {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Vec& v);
Json to_json(const Mat& m);  // list of rows
Vec vec_from_json(const Json& j);
Mat mat_from_json(const Json& j);
/// Columns of m as a list of vectors.
Json columns_to_json(const Mat& m);
Mat columns_from_json(const Json& j, Eigen::Index rows);

Json to_json(const LieAlgebra& alg);
LieAlgebra lie_algebra_from_json(const Json& j);

Json to_json(const HomogeneousSpace& space);
HomogeneousSpace homogeneous_space_from_json(const Json& j);

Json to_json(const IsotypicDecomposition& dec);
IsotypicDecomposition isotypic_decomposition_from_json(const Json& j);

Json to_json(const MetricEndo& g);
MetricEndo metric_from_json(const Json& j);

Json to_json(const Plane& plane);
Plane plane_from_json(const Json& j);

Json to_json(const CurvatureValue& v);
Json to_json(const Witness& w);
Json to_json(const SearchOutcome& s);
Json to_json(const RankReport& r);
Json to_json(const CertifyConfig& c);
Json to_json(const CertifyReport& r);
Json to_json(const Sp2Symmetrization& s);

/// Throws InvalidArgument unless j carries schema_version 1 and the given kind.
void check_document(const Json& j, std::string_view kind);

Json read_json_file(const std::filesystem::path& path);
/// Writes to a temporary file in the same directory, then renames it into place.
void write_json_file_atomic(const std::filesystem::path& path, const Json& j);

}  // namespace homcurv
