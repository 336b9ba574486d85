#include "homcurv/obstruction.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "homcurv/error.hpp"

namespace homcurv {
namespace {

constexpr double kEigenClusterTol = 1e-8;
constexpr int kMaxAlternations = 500;

struct Eigenspace {
  double lambda = 0.0;
  Mat basis;  // p coordinates
};

std::vector<Eigenspace> eigenspaces(const Mat& g) {
  Eigen::SelfAdjointEigenSolver<Mat> eig(g);
  std::vector<Eigenspace> out;
  for (const auto& group : linalg::cluster_sorted(eig.eigenvalues(), kEigenClusterTol)) {
    Eigenspace e;
    e.basis = Mat(g.rows(), static_cast<Eigen::Index>(group.size()));
    double sum = 0.0;
    for (std::size_t c = 0; c < group.size(); ++c) {
      e.basis.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(group[c]);
      sum += eig.eigenvalues()(group[c]);
    }
    e.lambda = sum / static_cast<double>(group.size());
    out.push_back(std::move(e));
  }
  return out;
}

/// Unit v minimizing ||m v||; returns ||m v|| through *residual.
Vec smallest_right_singular(const Mat& m, double* residual) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const Vec v = svd.matrixV().col(m.cols() - 1);
  *residual = (m * v).norm();
  return v;
}

class BracketContext {
 public:
  explicit BracketContext(const HomogeneousSpace& space)
      : p_(space.p_basis()), alg_(space.ambient()) {}

  /// [P u, P w] restricted map: w -> [P u, P basis w] as a matrix on basis coordinates.
  Mat left_map(const Vec& u, const Mat& basis) const { return alg_.ad(p_ * u) * (p_ * basis); }
  double bracket_norm(const Vec& u, const Vec& w) const {
    return alg_.bracket(p_ * u, p_ * w).norm();
  }

 private:
  const Mat& p_;
  const LieAlgebra& alg_;
};

struct PairResult {
  double residual = std::numeric_limits<double>::infinity();
  Vec x;
  Vec y;
};

/// min ||[E_i a, E_j b]|| over unit a, b by alternating exact minimization.
PairResult minimize_cross(const BracketContext& ctx, const Mat& ei, const Mat& ej,
                          std::uint64_t seed, std::uint64_t stream, int starts) {
  PairResult best;
  if (ei.cols() == 1 && ej.cols() == 1) {
    best.x = ei.col(0);
    best.y = ej.col(0);
    best.residual = ctx.bracket_norm(best.x, best.y);
    return best;
  }
  for (int s = 0; s < starts; ++s) {
    auto rng = linalg::make_stream(seed, stream + static_cast<std::uint64_t>(s));
    Vec a = linalg::random_unit_vector(rng, ei.cols());
    Vec b;
    double r = std::numeric_limits<double>::infinity();
    for (int it = 0; it < kMaxAlternations; ++it) {
      double rb = 0.0, ra = 0.0;
      b = smallest_right_singular(ctx.left_map(ei * a, ej), &rb);
      a = smallest_right_singular(ctx.left_map(ej * b, ei), &ra);
      const double prev = r;
      r = ra;
      if (r < 1e-14 || (std::isfinite(prev) && prev - r <= 1e-12 * prev)) break;
    }
    if (r < best.residual) best = {r, ei * a, ej * b};
    if (best.residual < 1e-13) break;
  }
  return best;
}

/// min ||[E a, E b]|| over orthonormal a, b in one eigenspace.
PairResult minimize_within(const BracketContext& ctx, const Mat& e, std::uint64_t seed,
                           std::uint64_t stream, int starts) {
  PairResult best;
  const Eigen::Index k = e.cols();
  for (int s = 0; s < starts; ++s) {
    auto rng = linalg::make_stream(seed, stream + static_cast<std::uint64_t>(s));
    Vec a = linalg::random_unit_vector(rng, k);
    Vec b;
    double r = std::numeric_limits<double>::infinity();
    for (int it = 0; it < kMaxAlternations; ++it) {
      double rr = 0.0;
      const Mat za = linalg::orthogonal_complement(a, k);
      b = za * smallest_right_singular(ctx.left_map(e * a, e * za), &rr);
      const Mat zb = linalg::orthogonal_complement(b, k);
      a = zb * smallest_right_singular(ctx.left_map(e * b, e * zb), &rr);
      const double prev = r;
      r = rr;
      if (r < 1e-14 || (std::isfinite(prev) && prev - r <= 1e-12 * prev)) break;
    }
    if (r < best.residual) best = {r, e * a, e * b};
    if (best.residual < 1e-13) break;
  }
  return best;
}

void finish_outcome(SearchOutcome& out, const std::string& what) {
  std::ostringstream note;
  if (out.witness) {
    note << what << " found (bracket residual " << out.best_residual << ")";
  } else if (out.best_residual <= kWitnessRejectTol) {
    out.gray_zone = true;
    note << "warning: best bracket residual " << out.best_residual
         << " lies between the accept and reject thresholds; no decision at " << out.starts
         << " starts";
  } else {
    note << what << " not found at " << out.starts << " starts (best bracket residual "
         << out.best_residual << ")";
  }
  out.note = note.str();
}

double eigen_residual(const Mat& g, const Vec& v, double lambda) {
  return (g * v - lambda * v).norm() / v.norm();
}

}  // namespace

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::CommutingEigenvectors: return "commuting-eigenvectors";
    case WitnessKind::LemmaB: return "lemma-b";
    case WitnessKind::NumericMin: return "numeric-min";
  }
  return "numeric-min";
}

WitnessKind witness_kind_from_string(std::string_view name) {
  if (name == "commuting-eigenvectors") return WitnessKind::CommutingEigenvectors;
  if (name == "lemma-b") return WitnessKind::LemmaB;
  if (name == "numeric-min") return WitnessKind::NumericMin;
  throw InvalidArgument("unknown witness kind '" + std::string(name) + "'");
}

SearchOutcome find_commuting_eigenvectors(const HomogeneousSpace& space, const MetricEndo& g,
                                          std::uint64_t seed, int starts) {
  verify_metric(space, g.matrix);
  if (starts < 1) throw InvalidArgument("starts must be positive");
  SearchOutcome out;
  out.starts = starts;
  out.best_residual = std::numeric_limits<double>::infinity();
  if (space.dim_p() < 2) {
    finish_outcome(out, "commuting eigenvectors");
    return out;
  }
  const BracketContext ctx(space);
  const std::vector<Eigenspace> spaces = eigenspaces(g.matrix);
  const CurvatureEvaluator ev(space, g.matrix);

  std::uint64_t stream = 0;
  const auto consider = [&](const PairResult& r, double li, double lj) {
    out.best_residual = std::min(out.best_residual, r.residual);
    if (r.residual >= kWitnessAcceptTol) return false;
    Witness w;
    w.kind = WitnessKind::CommutingEigenvectors;
    w.plane = {r.x, r.y};
    w.value = ev.evaluate(r.x, r.y);
    w.eigenvalues = {li, lj};
    w.bracket_residual = r.residual;
    w.eigen_residual =
        std::max(eigen_residual(g.matrix, r.x, li), eigen_residual(g.matrix, r.y, lj));
    out.witness = std::move(w);
    return true;
  };

  for (std::size_t i = 0; i < spaces.size() && !out.witness; ++i) {
    if (spaces[i].basis.cols() >= 2) {
      const PairResult r = minimize_within(ctx, spaces[i].basis, seed, stream, starts);
      stream += static_cast<std::uint64_t>(starts);
      if (consider(r, spaces[i].lambda, spaces[i].lambda)) break;
    }
    for (std::size_t j = i + 1; j < spaces.size(); ++j) {
      const PairResult r =
          minimize_cross(ctx, spaces[i].basis, spaces[j].basis, seed, stream, starts);
      stream += static_cast<std::uint64_t>(starts);
      if (consider(r, spaces[i].lambda, spaces[j].lambda)) break;
    }
  }
  finish_outcome(out, "commuting eigenvectors");
  return out;
}

SearchOutcome lemma_b_witness(const HomogeneousSpace& space, const MetricEndo& g,
                              std::uint64_t seed, int draws) {
  verify_metric(space, g.matrix);
  if (draws < 1) throw InvalidArgument("draws must be positive");
  SearchOutcome out;
  out.best_residual = std::numeric_limits<double>::infinity();
  const Eigen::Index n = space.dim_p();
  if (n < 2) {
    finish_outcome(out, "lemma b witness");
    return out;
  }
  const BracketContext ctx(space);
  const Eigenspace low = eigenspaces(g.matrix).front();
  const Mat& e = low.basis;
  const Eigen::Index k = e.cols();
  const CurvatureEvaluator ev(space, g.matrix);

  for (int s = 0; s < draws; ++s) {
    ++out.starts;
    auto rng = linalg::make_stream(seed, static_cast<std::uint64_t>(s));
    Vec x = e * linalg::random_unit_vector(rng, k);
    Vec z;
    double r = std::numeric_limits<double>::infinity();
    for (int it = 0; it < kMaxAlternations; ++it) {
      double rz = 0.0;
      const Mat zx = linalg::orthogonal_complement(x, n);
      z = zx * smallest_right_singular(ctx.left_map(x, zx), &rz);
      const double prev = r;
      r = rz;
      if (r < 1e-14 || (std::isfinite(prev) && prev - r <= 1e-12 * prev)) break;
      if (k > 1) {
        const Mat f = linalg::orthonormalize(e - z * (z.transpose() * e));
        if (f.cols() == 0) break;
        double rx = 0.0;
        x = f * smallest_right_singular(ctx.left_map(z, f), &rx);
      }
    }
    out.best_residual = std::min(out.best_residual, r);
    if (r < kWitnessAcceptTol) {
      Witness w;
      w.kind = WitnessKind::LemmaB;
      const Vec y = ev.metric().llt().solve(z);
      w.plane = {x, y};
      w.value = ev.evaluate(x, y);
      w.eigenvalues = {low.lambda};
      w.bracket_residual = r;
      w.eigen_residual = eigen_residual(g.matrix, x, low.lambda);
      out.witness = std::move(w);
      break;
    }
  }
  finish_outcome(out, "lemma b witness");
  return out;
}

RankReport berger_rank_check(const HomogeneousSpace& space) {
  RankReport r;
  r.rank_k = rank(space.ambient());
  r.rank_h = space.dim_h() ? subalgebra_rank(space.ambient(), space.h_basis()) : 0;
  r.dim_p = space.dim_p();
  const int diff = r.rank_k - r.rank_h;
  r.parity_consistent = (diff == 0 || diff == 1) && diff == r.dim_p % 2;
  return r;
}

Mat sp2_ad_a(const HomogeneousSpace& space) {
  const CMat a = quaternionic(CMat::Zero(2, 2), CMat::Identity(2, 2));
  return restricted_adjoint(space, GroupElement::from_matrix(space.ambient(), a));
}

Sp2Symmetrization symmetrize_sp2_31(const HomogeneousSpace& space, const MetricEndo& g) {
  if (space.label() != "sp2circle" || space.params() != std::vector<int>{3, 1})
    throw InvalidArgument("symmetrization applies to sp2circle with (p, q) = (3, 1) only");
  verify_metric(space, g.matrix);
  const LieAlgebra& alg = space.ambient();
  const Mat& p = space.p_basis();
  const Mat t = p.transpose() * alg.ad(*space.reference_torus()) * p;
  const Mat ad_a = sp2_ad_a(space);

  // W = {[[0, delta], [-delta, beta j]]} spans p_2 over C with J = ad_T / 2.
  CMat beta = CMat::Zero(2, 2);
  beta(1, 1) = 1.0;
  CMat delta = CMat::Zero(2, 2);
  delta(0, 1) = 1.0;
  delta(1, 0) = -1.0;
  Vec eb = space.p_part(alg.coordinates(quaternionic(CMat::Zero(2, 2), beta)));
  Vec ed = space.p_part(alg.coordinates(quaternionic(delta, CMat::Zero(2, 2))));
  eb.normalize();
  ed.normalize();
  const Mat j = 0.5 * t;
  if ((j * (j * eb) + eb).norm() > 1e-10 || (j * (j * ed) + ed).norm() > 1e-10 ||
      (ad_a * eb - eb).norm() > 1e-10 || (ad_a * ed - ed).norm() > 1e-10)
    throw VerificationError("basis of W is not fixed by Ad_a inside the weight-2 component");

  const auto block = [&](const Mat& gm) {
    const Vec* basis[2] = {&eb, &ed};
    Eigen::Matrix2cd h;
    for (int k = 0; k < 2; ++k) {
      for (int l = 0; l < 2; ++l) {
        const Vec gv = gm * *basis[l];
        h(k, l) = {basis[k]->dot(gv), (j * *basis[k]).dot(gv)};
      }
    }
    return h;
  };

  Sp2Symmetrization out;
  out.block_before = block(g.matrix);
  out.det_ad_a = ad_a.determinant();
  out.residual_before = (g.matrix * ad_a - ad_a * g.matrix).norm();

  const CMat xb_mat = quaternionic(CMat(std::complex<double>(0, 1) * CMat::Identity(2, 2)),
                                   CMat::Zero(2, 2));
  const Vec xb = alg.coordinates(xb_mat);
  const Mat ad_xb = p.transpose() * alg.ad(xb) * p;
  const double sigma = (j * eb).dot(ad_xb * eb) / 2.0;
  if (std::abs(std::abs(sigma) - 1.0) > 1e-10)
    throw VerificationError("conjugating circle does not rotate W with weight 2");

  const std::complex<double> off = out.block_before(0, 1);
  double phase = 0.0;
  if (std::abs(off.imag()) > 0.0)
    phase = off.real() != 0.0 ? std::atan(off.imag() / off.real()) : std::numbers::pi / 2.0;
  out.psi = -sigma * phase / 2.0;

  const GroupElement b = GroupElement::exp(alg, AlgebraElement{out.psi * xb});
  out.g_b = conjugate_metric(space, g, b);
  out.block_after = block(out.g_b.matrix);
  out.residual = (out.g_b.matrix * ad_a - ad_a * out.g_b.matrix).norm();
  return out;
}

}  // namespace homcurv
