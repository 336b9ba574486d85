#include "homcurv/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "homcurv/error.hpp"
#include "homcurv/parallel.hpp"

namespace homcurv {
namespace {

constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-18;

/// G-orthonormalizes the frame in place; returns false if it degenerates.
bool orthonormalize_frame(const Mat& g, Vec& x, Vec& y) {
  const double nx = std::sqrt(x.dot(g * x));
  if (!(nx > 1e-300)) return false;
  x /= nx;
  y -= x.dot(g * y) * x;
  const double ny = std::sqrt(y.dot(g * y));
  if (!(ny > 1e-12)) return false;
  y /= ny;
  return true;
}

struct StartResult {
  double value = std::numeric_limits<double>::infinity();
  Plane plane;
  int iterations = 0;
};

StartResult descend(const CurvatureEvaluator& ev, const CertifyConfig& cfg, std::uint64_t start) {
  const Mat& g = ev.metric();
  const Eigen::Index n = g.rows();
  auto rng = linalg::make_stream(cfg.seed, start);
  Vec x = linalg::gaussian_vector(rng, n);
  Vec y = linalg::gaussian_vector(rng, n);
  while (!orthonormalize_frame(g, x, y)) {
    x = linalg::gaussian_vector(rng, n);
    y = linalg::gaussian_vector(rng, n);
  }

  StartResult out;
  double s = 0.0;
  PlaneGradient grad = ev.sectional_gradient(x, y, &s);
  double step = 1.0;
  Vec prev_x, prev_y, prev_gx, prev_gy;
  int it = 0;
  for (; it < cfg.max_iters; ++it) {
    const double gnorm2 = grad.dx.squaredNorm() + grad.dy.squaredNorm();
    if (std::sqrt(gnorm2) < cfg.grad_tol) break;
    if (it > 0) {
      const double sx = (x - prev_x).squaredNorm() + (y - prev_y).squaredNorm();
      const double sy = (x - prev_x).dot(grad.dx - prev_gx) + (y - prev_y).dot(grad.dy - prev_gy);
      step = sy > 0.0 ? sx / sy : 2.0 * step;
    } else {
      step = 1.0 / std::max(1.0, std::sqrt(gnorm2));
    }
    step = std::clamp(step, 1e-12, 1e3);

    bool accepted = false;
    Vec nx, ny;
    double ns = 0.0;
    while (step > kMinStep) {
      nx = x - step * grad.dx;
      ny = y - step * grad.dy;
      if (orthonormalize_frame(g, nx, ny)) {
        ns = ev.evaluate(nx, ny).sectional;
        if (ns <= s - kArmijo * step * gnorm2) {
          accepted = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!accepted) break;
    prev_x = x;
    prev_y = y;
    prev_gx = grad.dx;
    prev_gy = grad.dy;
    x = nx;
    y = ny;
    grad = ev.sectional_gradient(x, y, &s);
  }
  out.value = ev.evaluate(x, y).sectional;
  out.plane = {x, y};
  out.iterations = it;
  return out;
}

CertifyReport run_certify(const HomogeneousSpace& space, const MetricEndo& g,
                          const CertifyConfig& config, bool parallel) {
  config.validate();
  if (space.dim_p() < 2) throw InvalidArgument("certification needs dim p >= 2");
  verify_metric(space, g.matrix);
  const auto t0 = std::chrono::steady_clock::now();
  const CurvatureEvaluator ev(space, g.matrix);

  std::vector<StartResult> results(static_cast<std::size_t>(config.starts));
  const auto one = [&](std::size_t i) { results[i] = descend(ev, config, i); };
  if (parallel) {
    parallel_for(results.size(), one);
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) one(i);
  }

  CertifyReport report;
  report.space_label = space.label();
  report.metric_provenance = g.provenance_string();
  report.config = config;
  std::size_t best = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    report.per_start_minima.push_back(results[i].value);
    report.per_start_iterations.push_back(results[i].iterations);
    if (results[i].value < results[best].value) best = i;
  }
  report.min_sectional = results[best].value;
  report.argmin = results[best].plane;
  report.verdict = classify(report.min_sectional, config.zero_tol);
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace

void CertifyConfig::validate() const {
  if (starts <= 0) throw InvalidArgument("starts must be positive");
  if (max_iters <= 0) throw InvalidArgument("max_iters must be positive");
  if (!(grad_tol > 0.0)) throw InvalidArgument("grad_tol must be positive");
  if (!(zero_tol > 0.0)) throw InvalidArgument("zero_tol must be positive");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::PositiveFoundMin: return "positive-found-min";
    case Verdict::NonpositiveWitness: return "nonpositive-witness";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict_from_string(std::string_view name) {
  if (name == "positive-found-min") return Verdict::PositiveFoundMin;
  if (name == "nonpositive-witness") return Verdict::NonpositiveWitness;
  if (name == "inconclusive") return Verdict::Inconclusive;
  throw InvalidArgument("unknown verdict '" + std::string(name) + "'");
}

Verdict classify(double min_sectional, double zero_tol) {
  if (min_sectional <= zero_tol) return Verdict::NonpositiveWitness;
  if (min_sectional <= kInconclusiveTol) return Verdict::Inconclusive;
  return Verdict::PositiveFoundMin;
}

CertifyReport min_sectional(const HomogeneousSpace& space, const MetricEndo& g,
                            const CertifyConfig& config) {
  return run_certify(space, g, config, true);
}

std::vector<GridResult> metric_grid_search(const HomogeneousSpace& space,
                                           const IsotypicDecomposition& dec,
                                           const std::vector<std::vector<double>>& grid,
                                           const CertifyConfig& config) {
  config.validate();
  std::vector<MetricEndo> metrics;
  for (const auto& scales : grid) {
    try {
      metrics.push_back(diagonal_metric(space, dec, scales));
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "grid point (";
      for (std::size_t i = 0; i < scales.size(); ++i) msg << (i ? ", " : "") << scales[i];
      msg << "): " << e.what();
      if (dynamic_cast<const VerificationError*>(&e)) throw VerificationError(msg.str());
      throw InvalidArgument(msg.str());
    }
  }
  std::vector<GridResult> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    out[i] = {grid[i], run_certify(space, metrics[i], config, false)};
  });
  return out;
}

}  // namespace homcurv
