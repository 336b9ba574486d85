#include "homcurv_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "homcurv/error.hpp"
#include "homcurv/serialize.hpp"
#include "homcurv/suite.hpp"

namespace homcurv::cli {
namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty())
    throw InvalidArgument(std::string(what) + " must be a non-negative integer, got '" +
                          std::string(text) + "'");
  return v;
}

std::vector<double> parse_doubles(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item(text.substr(start, comma - start));
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad number '" + item + "' in scale list");
    }
    start = comma + 1;
  }
  return out;
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file_atomic(path, j);
  }
}

HomogeneousSpace load_space(const std::string& path) {
  return homogeneous_space_from_json(read_json_file(path));
}

void error_json(std::ostream& err, std::string_view type, std::string_view message) {
  err << Json{{"error", {{"type", type}, {"message", message}}}}.dump() << '\n';
}

struct Options {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string file;
  std::string metric = "normal";
  // build
  std::string space;
  std::optional<int> n, p, q;
  // curvature
  std::string plane;
  // obstruct
  int samples = 1;
  // certify
  CertifyConfig certify;
  // catalog / suite
  bool json = false;
  std::vector<int> only;
};

std::uint64_t resolved(const Options& o) { return o.seed ? *o.seed : default_seed(); }

int cmd_catalog(const Options& o, std::ostream& out) {
  Json list = Json::array();
  for (const CatalogEntry& e : catalog_entries()) {
    const HomogeneousSpace s = catalog_build(e.label);
    list.push_back({{"label", e.label},
                    {"quotient", e.quotient},
                    {"param_names", e.param_names},
                    {"default_params", e.default_params},
                    {"dim_k", s.ambient().dim()},
                    {"dim_h", s.dim_h()},
                    {"dim_p", s.dim_p()},
                    {"family", e.metadata.family},
                    {"manifold", e.metadata.manifold},
                    {"kernel", e.metadata.kernel},
                    {"normalizer", e.metadata.normalizer},
                    {"positively_curved", e.metadata.positively_curved}});
  }
  if (o.json) {
    Json doc = {{"schema_version", kSchemaVersion}, {"kind", "catalog"}, {"entries", list}};
    emit(doc, o.out, out);
    return kSuccess;
  }
  out << std::left << std::setw(18) << "label" << std::setw(34) << "quotient" << std::setw(6)
      << "dim" << std::setw(13) << "family"
      << "manifold\n";
  for (const Json& e : list) {
    out << std::setw(18) << e["label"].get<std::string>() << std::setw(34)
        << e["quotient"].get<std::string>() << std::setw(6) << e["dim_p"].get<int>()
        << std::setw(13) << e["family"].get<std::string>() << e["manifold"].get<std::string>()
        << '\n';
  }
  return kSuccess;
}

int cmd_build(const Options& o, std::ostream& out) {
  const CatalogEntry& entry = catalog_entry(o.space);
  std::vector<int> params = entry.default_params;
  const auto set = [&](std::string_view name, const std::optional<int>& v) {
    if (!v) return;
    const auto it = std::find(entry.param_names.begin(), entry.param_names.end(), name);
    if (it == entry.param_names.end())
      throw InvalidArgument("space '" + o.space + "' has no parameter --" + std::string(name));
    params[static_cast<std::size_t>(it - entry.param_names.begin())] = *v;
  };
  set("n", o.n);
  set("p", o.p);
  set("q", o.q);
  emit(to_json(catalog_build(o.space, params)), o.out, out);
  return kSuccess;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const HomogeneousSpace s = load_space(o.file);
  emit(to_json(decompose_isotypic(s, resolved(o))), o.out, out);
  return kSuccess;
}

int cmd_metric(const Options& o, std::ostream& out) {
  const HomogeneousSpace s = load_space(o.file);
  emit(to_json(parse_metric_spec(s, o.metric, resolved(o))), o.out, out);
  return kSuccess;
}

int cmd_curvature(const Options& o, std::ostream& out) {
  const HomogeneousSpace s = load_space(o.file);
  const MetricEndo g = parse_metric_spec(s, o.metric, resolved(o));
  const Plane plane = parse_plane_spec(s, o.plane);
  const CurvatureValue v = curvature(s, g, plane);
  Json j = {{"schema_version", kSchemaVersion},
            {"kind", "curvature_value"},
            {"space_label", s.label()},
            {"metric_provenance", g.provenance_string()},
            {"plane", to_json(plane)},
            {"unnormalized", v.unnormalized},
            {"sectional", v.sectional}};
  emit(j, o.out, out);
  return kSuccess;
}

int cmd_obstruct(const Options& o, std::ostream& out) {
  if (o.samples < 1) throw InvalidArgument("--samples must be positive");
  const HomogeneousSpace s = load_space(o.file);
  const std::uint64_t seed = resolved(o);
  const bool sampled = o.metric.rfind("sample:", 0) == 0;
  const std::uint64_t base = sampled ? parse_u64(o.metric.substr(7), "sample seed") : 0;
  Json samples = Json::array();
  int found = 0;
  for (int k = 0; k < o.samples; ++k) {
    const std::uint64_t offset = static_cast<std::uint64_t>(k);
    const MetricEndo g = sampled ? sample_metric(s, commutant_basis(s), base + offset)
                                 : parse_metric_spec(s, o.metric, seed);
    const SearchOutcome ce = find_commuting_eigenvectors(s, g, seed + offset);
    const SearchOutcome lb = lemma_b_witness(s, g, seed + offset);
    if (ce.witness || lb.witness) ++found;
    samples.push_back({{"metric_provenance", g.provenance_string()},
                       {"commuting_eigenvectors", to_json(ce)},
                       {"lemma_b", to_json(lb)}});
  }
  Json j = {{"schema_version", kSchemaVersion},
            {"kind", "obstruction_report"},
            {"space_label", s.label()},
            {"seed", seed},
            {"rank", to_json(berger_rank_check(s))},
            {"samples_with_witness", found},
            {"samples", samples}};
  emit(j, o.out, out);
  return kSuccess;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const HomogeneousSpace s = load_space(o.file);
  CertifyConfig cfg = o.certify;
  cfg.seed = resolved(o);
  const MetricEndo g = parse_metric_spec(s, o.metric, cfg.seed);
  emit(to_json(min_sectional(s, g, cfg)), o.out, out);
  return kSuccess;
}

int cmd_suite(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.seed = resolved(o);
  so.only = o.only;
  so.on_result = [&out](const CriterionResult& r) { out << format_result(r) << std::endl; };
  const auto results = run_suite(so);
  const auto passed = std::count_if(results.begin(), results.end(),
                                    [](const CriterionResult& r) { return r.passed; });
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<long>(results.size()) ? kSuccess : kVerificationFailure;
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("HOMCURV_SEED");
  if (!env || !*env) return 0;
  return parse_u64(env, "HOMCURV_SEED");
}

MetricEndo parse_metric_spec(const HomogeneousSpace& space, std::string_view spec,
                             std::uint64_t decomposition_seed) {
  if (spec == "normal") return normal_metric(space);
  if (spec.rfind("diag:", 0) == 0) {
    const std::vector<double> scales = parse_doubles(spec.substr(5));
    return diagonal_metric(space, decompose_isotypic(space, decomposition_seed), scales);
  }
  if (spec.rfind("sample:", 0) == 0)
    return sample_metric(space, commutant_basis(space), parse_u64(spec.substr(7), "sample seed"));
  if (spec.rfind("file:", 0) == 0) {
    MetricEndo g = metric_from_json(read_json_file(std::string(spec.substr(5))));
    if (!g.space_label.empty() && g.space_label != space.label())
      throw InvalidArgument("metric belongs to space '" + g.space_label + "', not '" +
                            space.label() + "'");
    verify_metric(space, g.matrix);
    return g;
  }
  throw InvalidArgument("metric spec must be normal | diag:t0,t1,... | sample:SEED | file:PATH");
}

Plane parse_plane_spec(const HomogeneousSpace& space, std::string_view spec) {
  if (spec.empty()) throw InvalidArgument("--plane is required (FILE or random:SEED)");
  if (spec.rfind("random:", 0) == 0) {
    auto rng = linalg::make_stream(parse_u64(spec.substr(7), "plane seed"));
    Plane plane{linalg::gaussian_vector(rng, space.dim_p()),
                linalg::gaussian_vector(rng, space.dim_p())};
    return plane;
  }
  return plane_from_json(read_json_file(std::string(spec)));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical laboratory for invariant metrics on compact homogeneous spaces",
               "homcurv"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  const auto add_seed = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed (default: HOMCURV_SEED or 0)");
  };
  const auto add_out = [&o](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output file (default: stdout)");
  };
  const auto add_file = [&o](CLI::App* sub) {
    sub->add_option("file", o.file, "HomogeneousSpace JSON")->required()->check(CLI::ExistingFile);
  };
  const auto add_metric = [&o](CLI::App* sub) {
    sub->add_option("--metric", o.metric, "normal | diag:t0,t1,... | sample:SEED | file:PATH");
  };

  CLI::App* catalog = app.add_subcommand("catalog", "List catalog spaces");
  catalog->add_flag("--json", o.json, "Emit JSON");
  add_out(catalog);

  CLI::App* build = app.add_subcommand("build", "Build a catalog space");
  build->add_option("--space", o.space, "Catalog label")->required();
  build->add_option("--n", o.n, "Dimension parameter n");
  build->add_option("--p", o.p, "Weight p");
  build->add_option("--q", o.q, "Weight q");
  add_out(build);

  CLI::App* decompose = app.add_subcommand("decompose", "Isotypic decomposition of p");
  add_file(decompose);
  add_seed(decompose);
  add_out(decompose);

  CLI::App* metric = app.add_subcommand("metric", "Construct an invariant metric");
  add_file(metric);
  add_metric(metric);
  add_seed(metric);
  add_out(metric);

  CLI::App* curv = app.add_subcommand("curvature", "Sectional curvature of one plane");
  add_file(curv);
  add_metric(curv);
  curv->add_option("--plane", o.plane, "FILE | random:SEED")->required();
  add_seed(curv);
  add_out(curv);

  CLI::App* obstruct = app.add_subcommand("obstruct", "Run the obstruction searches");
  add_file(obstruct);
  add_metric(obstruct);
  obstruct->add_option("--samples", o.samples, "Number of metric samples");
  add_seed(obstruct);
  add_out(obstruct);

  CLI::App* certify = app.add_subcommand("certify", "Multistart minimization of sectional curvature");
  add_file(certify);
  add_metric(certify);
  certify->add_option("--starts", o.certify.starts, "Random starts");
  certify->add_option("--max-iters", o.certify.max_iters, "Iterations per start");
  certify->add_option("--grad-tol", o.certify.grad_tol, "Gradient norm stopping tolerance");
  certify->add_option("--zero-tol", o.certify.zero_tol, "Nonpositive threshold");
  add_seed(certify);
  add_out(certify);

  CLI::App* suite = app.add_subcommand("suite", "Run the acceptance battery");
  suite->add_option("--only", o.only, "Criterion ids")->delimiter(',');
  add_seed(suite);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    error_json(err, "ParseError", e.what());
    return kUsageError;
  }

  try {
    err << "homcurv " << kVersion << " seed " << resolved(o) << '\n';
    if (*catalog) return cmd_catalog(o, out);
    if (*build) return cmd_build(o, out);
    if (*decompose) return cmd_decompose(o, out);
    if (*metric) return cmd_metric(o, out);
    if (*curv) return cmd_curvature(o, out);
    if (*obstruct) return cmd_obstruct(o, out);
    if (*certify) return cmd_certify(o, out);
    if (*suite) return cmd_suite(o, out);
  } catch (const InvalidArgument& e) {
    error_json(err, "InvalidArgument", e.what());
    return kUsageError;
  } catch (const VerificationError& e) {
    error_json(err, "VerificationError", e.what());
    return kVerificationFailure;
  } catch (const std::exception& e) {
    error_json(err, "InternalError", e.what());
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace homcurv::cli
