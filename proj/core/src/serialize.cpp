#include "homcurv/serialize.hpp"

#include <fstream>
#include <sstream>

#include "homcurv/error.hpp"

namespace homcurv {
namespace {

Json document(std::string_view kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("bad field '") + key + "': " + e.what());
  }
}

const Json& sub(const Json& j, const char* key) {
  if (!j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json complex_matrix_to_json(const CMat& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back({m(r, c).real(), m(r, c).imag()});
  return out;
}

CMat complex_matrix_from_json(const Json& j, int n) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n) * n)
    throw InvalidArgument("basis matrix must hold matrix_size^2 complex entries");
  CMat m(n, n);
  std::size_t k = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c, ++k) m(r, c) = {j[k].at(0).get<double>(), j[k].at(1).get<double>()};
  return m;
}

}  // namespace

Json to_json(const Vec& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a numeric array");
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Vec>(values.data(), static_cast<Eigen::Index>(values.size()));
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(Vec(m.row(r).transpose())));
  return out;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a list of rows");
  if (j.empty()) return Mat(0, 0);
  const std::size_t cols = j[0].size();
  Mat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Vec row = vec_from_json(j[r]);
    if (static_cast<std::size_t>(row.size()) != cols) throw InvalidArgument("ragged matrix rows");
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

Json columns_to_json(const Mat& m) {
  Json out = Json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(to_json(Vec(m.col(c))));
  return out;
}

Mat columns_from_json(const Json& j, Eigen::Index rows) {
  if (!j.is_array()) throw InvalidArgument("expected a list of vectors");
  Mat m(rows, static_cast<Eigen::Index>(j.size()));
  for (std::size_t c = 0; c < j.size(); ++c) {
    const Vec v = vec_from_json(j[c]);
    if (v.size() != rows) throw InvalidArgument("basis vector has the wrong length");
    m.col(static_cast<Eigen::Index>(c)) = v;
  }
  return m;
}

void check_document(const Json& j, std::string_view kind) {
  if (!j.is_object()) throw InvalidArgument("expected a JSON object");
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    throw InvalidArgument("unsupported or missing schema_version (expected 1)");
  if (!j.contains("kind") || j["kind"] != kind)
    throw InvalidArgument("expected a document of kind '" + std::string(kind) + "'");
}

// -- Lie algebras --------------------------------------------------------------

Json to_json(const LieAlgebra& alg) {
  Json j = document("lie_algebra");
  const MatrixRealization& real = alg.realization();
  j["name"] = alg.name();
  j["dim"] = alg.dim();
  j["matrix_size"] = real.matrix_size;
  j["field_tag"] = to_string(real.field_tag);
  Json basis = Json::array();
  for (const CMat& b : real.basis) basis.push_back(complex_matrix_to_json(b));
  j["basis"] = std::move(basis);
  Json triplets = Json::array();
  const int d = alg.dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        if (const double v = alg.structure_constant(a, b, c); v != 0.0)
          triplets.push_back({a, b, c, v});
  j["structure_constants"] = std::move(triplets);
  Json factors = Json::array();
  for (const FactorRange& f : alg.factors()) factors.push_back({f.begin, f.end});
  j["factors"] = std::move(factors);
  return j;
}

LieAlgebra lie_algebra_from_json(const Json& j) {
  check_document(j, "lie_algebra");
  const int d = field<int>(j, "dim");
  const int n = field<int>(j, "matrix_size");
  if (d <= 0 || n <= 0) throw InvalidArgument("dim and matrix_size must be positive");
  MatrixRealization real;
  real.matrix_size = n;
  real.field_tag = field_tag_from_string(field<std::string>(j, "field_tag"));
  const Json& basis = sub(j, "basis");
  if (!basis.is_array() || basis.size() != static_cast<std::size_t>(d))
    throw InvalidArgument("basis must hold dim matrices");
  for (const Json& b : basis) real.basis.push_back(complex_matrix_from_json(b, n));

  std::vector<double> constants(static_cast<std::size_t>(d) * d * d, 0.0);
  for (const Json& t : sub(j, "structure_constants")) {
    if (!t.is_array() || t.size() != 4) throw InvalidArgument("structure constant triplet must be [i,j,k,v]");
    const int a = t[0].get<int>(), b = t[1].get<int>(), c = t[2].get<int>();
    if (a < 0 || b < 0 || c < 0 || a >= d || b >= d || c >= d)
      throw InvalidArgument("structure constant index out of range");
    constants[(static_cast<std::size_t>(a) * d + b) * d + c] = t[3].get<double>();
  }
  std::vector<FactorRange> factors;
  for (const Json& f : sub(j, "factors")) factors.push_back({f.at(0).get<int>(), f.at(1).get<int>()});
  return LieAlgebra(field<std::string>(j, "name"), std::move(real), std::move(factors),
                    std::move(constants));
}

// -- homogeneous spaces ----------------------------------------------------------

Json to_json(const HomogeneousSpace& space) {
  Json j = document("homogeneous_space");
  j["label"] = space.label();
  j["params"] = space.params();
  j["dim_h"] = space.dim_h();
  j["dim_p"] = space.dim_p();
  const CatalogMetadata& m = space.metadata();
  j["metadata"] = {{"family", m.family},
                   {"manifold", m.manifold},
                   {"kernel", m.kernel},
                   {"normalizer", m.normalizer},
                   {"positively_curved", m.positively_curved}};
  j["ambient"] = to_json(space.ambient());
  j["h_basis"] = columns_to_json(space.h_basis());
  j["p_basis"] = columns_to_json(space.p_basis());
  j["reference_torus"] = space.reference_torus() ? to_json(*space.reference_torus()) : Json(nullptr);
  return j;
}

HomogeneousSpace homogeneous_space_from_json(const Json& j) {
  check_document(j, "homogeneous_space");
  LieAlgebra ambient = lie_algebra_from_json(sub(j, "ambient"));
  const Eigen::Index d = ambient.dim();
  Mat h = columns_from_json(sub(j, "h_basis"), d);
  Mat p = columns_from_json(sub(j, "p_basis"), d);
  CatalogMetadata meta;
  if (j.contains("metadata")) {
    const Json& m = j["metadata"];
    meta.family = m.value("family", "");
    meta.manifold = m.value("manifold", "");
    meta.kernel = m.value("kernel", "");
    meta.normalizer = m.value("normalizer", "");
    meta.positively_curved = m.value("positively_curved", false);
  }
  std::optional<Vec> torus;
  if (j.contains("reference_torus") && !j["reference_torus"].is_null())
    torus = vec_from_json(j["reference_torus"]);
  return HomogeneousSpace(std::move(ambient), std::move(h), std::move(p),
                          field<std::string>(j, "label"), j.value("params", std::vector<int>{}),
                          std::move(meta), std::move(torus));
}

// -- isotypic decomposition -----------------------------------------------------

Json to_json(const IsotypicDecomposition& dec) {
  Json j = document("isotypic_decomposition");
  j["space_label"] = dec.space_label;
  j["seed"] = dec.seed;
  j["dims"] = dec.dims();
  Json comps = Json::array();
  for (const IsotypicComponent& c : dec.components) {
    Json irr = Json::array();
    for (const Mat& b : c.irreducibles) irr.push_back(columns_to_json(b));
    comps.push_back({{"class_id", c.class_id},
                     {"dim", c.dim()},
                     {"multiplicity", c.multiplicity},
                     {"irreducible_dim", c.irreducible_dim()},
                     {"division", to_string(c.division)},
                     {"weights", c.weights},
                     {"basis", columns_to_json(c.basis)},
                     {"irreducibles", std::move(irr)}});
  }
  j["components"] = std::move(comps);
  return j;
}

IsotypicDecomposition isotypic_decomposition_from_json(const Json& j) {
  check_document(j, "isotypic_decomposition");
  IsotypicDecomposition dec;
  dec.space_label = field<std::string>(j, "space_label");
  dec.seed = j.value("seed", std::uint64_t{0});
  for (const Json& c : sub(j, "components")) {
    IsotypicComponent comp;
    const Json& basis = sub(c, "basis");
    const Eigen::Index rows =
        basis.empty() ? 0 : static_cast<Eigen::Index>(basis.at(0).size());
    comp.basis = columns_from_json(basis, rows);
    if (c.contains("irreducibles")) {
      for (const Json& b : c["irreducibles"]) comp.irreducibles.push_back(columns_from_json(b, rows));
    }
    if (comp.irreducibles.empty()) comp.irreducibles.push_back(comp.basis);
    comp.class_id = c.value("class_id", 0);
    comp.multiplicity = c.value("multiplicity", static_cast<int>(comp.irreducibles.size()));
    comp.division = division_type_from_string(c.value("division", std::string("real")));
    comp.weights = c.value("weights", std::vector<int>{});
    dec.components.push_back(std::move(comp));
  }
  return dec;
}

// -- metrics and curvature --------------------------------------------------------

Json to_json(const MetricEndo& g) {
  Json j = document("metric");
  j["provenance"] = g.provenance_string();
  j["seed"] = g.seed;
  j["space_label"] = g.space_label;
  j["matrix"] = to_json(g.matrix);
  return j;
}

MetricEndo metric_from_json(const Json& j) {
  check_document(j, "metric");
  MetricEndo g;
  std::string prov = field<std::string>(j, "provenance");
  if (const auto paren = prov.find('('); paren != std::string::npos) prov.resize(paren);
  g.provenance = metric_provenance_from_string(prov);
  g.seed = j.value("seed", std::uint64_t{0});
  g.space_label = j.value("space_label", "");
  g.matrix = mat_from_json(sub(j, "matrix"));
  return g;
}

Json to_json(const Plane& plane) { return {{"x", to_json(plane.x)}, {"y", to_json(plane.y)}}; }

Plane plane_from_json(const Json& j) {
  const Json& body = j.contains("plane") ? j["plane"] : j;
  return {vec_from_json(sub(body, "x")), vec_from_json(sub(body, "y"))};
}

Json to_json(const CurvatureValue& v) {
  return {{"unnormalized", v.unnormalized}, {"sectional", v.sectional}};
}

Json to_json(const Witness& w) {
  return {{"kind", to_string(w.kind)},
          {"plane", to_json(w.plane)},
          {"value", to_json(w.value)},
          {"eigenvalues", w.eigenvalues},
          {"bracket_residual", w.bracket_residual},
          {"eigen_residual", w.eigen_residual}};
}

Json to_json(const SearchOutcome& s) {
  return {{"witness", s.witness ? to_json(*s.witness) : Json(nullptr)},
          {"best_residual", s.best_residual},
          {"gray_zone", s.gray_zone},
          {"starts", s.starts},
          {"note", s.note}};
}

Json to_json(const RankReport& r) {
  return {{"rank_k", r.rank_k},
          {"rank_h", r.rank_h},
          {"dim_p", r.dim_p},
          {"parity_consistent", r.parity_consistent}};
}

Json to_json(const CertifyConfig& c) {
  return {{"starts", c.starts},
          {"max_iters", c.max_iters},
          {"grad_tol", c.grad_tol},
          {"seed", c.seed},
          {"zero_tol", c.zero_tol}};
}

Json to_json(const CertifyReport& r) {
  Json j = document("certify_report");
  j["space_label"] = r.space_label;
  j["metric_provenance"] = r.metric_provenance;
  j["config"] = to_json(r.config);
  j["min_sectional"] = r.min_sectional;
  j["argmin"] = to_json(r.argmin);
  j["per_start_minima"] = r.per_start_minima;
  j["per_start_iterations"] = r.per_start_iterations;
  j["verdict"] = to_string(r.verdict);
  j["disclaimer"] = r.disclaimer;
  j["wall_time"] = r.wall_time;
  return j;
}

Json to_json(const Sp2Symmetrization& s) {
  const auto block = [](const Eigen::Matrix2cd& m) {
    Json out = Json::array();
    for (int r = 0; r < 2; ++r) {
      Json row = Json::array();
      for (int c = 0; c < 2; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
      out.push_back(std::move(row));
    }
    return out;
  };
  return {{"psi", s.psi},
          {"residual_before", s.residual_before},
          {"residual", s.residual},
          {"det_ad_a", s.det_ad_a},
          {"block_before", block(s.block_before)},
          {"block_after", block(s.block_after)},
          {"g_b", to_json(s.g_b)}};
}

// -- files ---------------------------------------------------------------------

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file_atomic(const std::filesystem::path& path, const Json& j) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write '" + tmp.string() + "'");
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) throw InvalidArgument("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace homcurv
