#include "homcurv/isotypic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "homcurv/error.hpp"

namespace homcurv {
namespace {

constexpr double kClusterTol = 1e-8;
constexpr double kAmbiguousTol = 1e-5;
constexpr double kBlockTol = 1e-6;

/// Symmetric basis matrices S_ab (a <= b), orthonormal under Frobenius.
std::vector<Mat> symmetric_unit_basis(Eigen::Index n) {
  std::vector<Mat> out;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a; b < n; ++b) {
      Mat s = Mat::Zero(n, n);
      if (a == b) {
        s(a, a) = 1.0;
      } else {
        s(a, b) = s(b, a) = 1.0 / std::sqrt(2.0);
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Mat> full_unit_basis(Eigen::Index n) {
  std::vector<Mat> out;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      Mat s = Mat::Zero(n, n);
      s(a, b) = 1.0;
      out.push_back(std::move(s));
    }
  }
  return out;
}

int span_rank(const std::vector<Mat>& mats, double tol) {
  if (mats.empty()) return 0;
  const Eigen::Index len = mats.front().size();
  Mat stacked(len, static_cast<Eigen::Index>(mats.size()));
  for (std::size_t i = 0; i < mats.size(); ++i)
    stacked.col(static_cast<Eigen::Index>(i)) = mats[i].reshaped();
  Eigen::JacobiSVD<Mat> svd(stacked);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

std::vector<int> circle_weights(const Mat& torus_action, const Mat& basis) {
  const Mat m = basis.transpose() * torus_action * basis;
  Eigen::JacobiSVD<Mat> svd(m);
  std::vector<int> out;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double s = svd.singularValues()(i);
    const double r = std::round(s);
    if (std::abs(s - r) > 1e-6) return {};
    out.push_back(static_cast<int>(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int first_support_row(const Mat& basis) {
  const Vec diag = (basis * basis.transpose()).diagonal();
  for (Eigen::Index i = 0; i < diag.size(); ++i)
    if (diag(i) > 1e-6) return static_cast<int>(i);
  return static_cast<int>(diag.size());
}

}  // namespace

std::string_view to_string(DivisionType type) {
  switch (type) {
    case DivisionType::Real: return "real";
    case DivisionType::Complex: return "complex";
    case DivisionType::Quaternionic: return "quaternionic";
  }
  return "real";
}

DivisionType division_type_from_string(std::string_view name) {
  if (name == "real") return DivisionType::Real;
  if (name == "complex") return DivisionType::Complex;
  if (name == "quaternionic") return DivisionType::Quaternionic;
  throw InvalidArgument("unknown division type '" + std::string(name) + "'");
}

std::vector<int> IsotypicDecomposition::dims() const {
  std::vector<int> out;
  for (const auto& c : components) out.push_back(c.dim());
  return out;
}

std::vector<Mat> commutant(const std::vector<Mat>& actions, Eigen::Index n, bool symmetric_only) {
  const std::vector<Mat> units = symmetric_only ? symmetric_unit_basis(n) : full_unit_basis(n);
  const auto unknowns = static_cast<Eigen::Index>(units.size());
  const auto blocks = static_cast<Eigen::Index>(actions.size());
  Mat system(n * n * blocks, unknowns);
  for (Eigen::Index u = 0; u < unknowns; ++u) {
    for (Eigen::Index v = 0; v < blocks; ++v) {
      const Mat& a = actions[v];
      const Mat c = units[u] * a - a * units[u];
      system.block(v * n * n, u, n * n, 1) = c.reshaped();
    }
  }
  double scale = 1.0;
  for (const Mat& a : actions) scale = std::max(scale, a.cwiseAbs().maxCoeff());
  const Mat kernel = linalg::null_space(system, 1e-8 * scale);
  std::vector<Mat> out;
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
    Mat t = Mat::Zero(n, n);
    for (Eigen::Index u = 0; u < unknowns; ++u) t += kernel(u, k) * units[u];
    out.push_back(std::move(t));
  }
  return out;
}

IsotypicDecomposition decompose_isotypic(const HomogeneousSpace& space, std::uint64_t seed) {
  const Eigen::Index n = space.dim_p();
  const std::vector<Mat> actions = isotropy_actions(space);
  const std::vector<Mat> sym = commutant(actions, n, true);
  const std::vector<Mat> full = commutant(actions, n, false);

  auto rng = linalg::make_stream(seed);
  const Vec coeffs = linalg::gaussian_vector(rng, static_cast<Eigen::Index>(sym.size()));
  Mat t = Mat::Zero(n, n);
  for (std::size_t i = 0; i < sym.size(); ++i) t += coeffs(static_cast<Eigen::Index>(i)) * sym[i];
  t = 0.5 * (t + t.transpose());

  Eigen::SelfAdjointEigenSolver<Mat> eig(t);
  const Vec& values = eig.eigenvalues();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 1; i < values.size(); ++i) {
    const double gap = (values(i) - values(i - 1)) / scale;
    if (gap > kClusterTol && gap < kAmbiguousTol)
      throw VerificationError(space.label() + ": ambiguous eigenvalue cluster (relative gap " +
                              std::to_string(gap) + "); re-run with a different seed");
  }
  std::vector<Mat> irreducibles;
  for (const auto& group : linalg::cluster_sorted(values, kClusterTol)) {
    Mat b(n, static_cast<Eigen::Index>(group.size()));
    for (std::size_t c = 0; c < group.size(); ++c)
      b.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(group[c]);
    irreducibles.push_back(std::move(b));
  }

  // Union irreducibles linked by a nonzero intertwining block.
  const int count = static_cast<int>(irreducibles.size());
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if (irreducibles[i].cols() != irreducibles[j].cols()) continue;
      for (const Mat& f : full) {
        if ((irreducibles[i].transpose() * f * irreducibles[j]).norm() > kBlockTol) {
          parent[find(j)] = find(i);
          break;
        }
      }
    }
  }

  std::optional<Mat> torus_action;
  if (space.reference_torus()) {
    torus_action = space.p_basis().transpose() * space.ambient().ad(*space.reference_torus()) *
                   space.p_basis();
  }

  IsotypicDecomposition dec;
  dec.space_label = space.label();
  dec.seed = seed;
  for (int root = 0; root < count; ++root) {
    if (find(root) != root) continue;
    IsotypicComponent comp;
    Eigen::Index total = 0;
    for (int i = 0; i < count; ++i) {
      if (find(i) != root) continue;
      comp.irreducibles.push_back(irreducibles[i]);
      total += irreducibles[i].cols();
    }
    comp.basis = Mat(n, total);
    Eigen::Index col = 0;
    for (const Mat& b : comp.irreducibles) {
      comp.basis.middleCols(col, b.cols()) = b;
      col += b.cols();
    }
    comp.multiplicity = static_cast<int>(comp.irreducibles.size());

    const Mat& first = comp.irreducibles.front();
    std::vector<Mat> self_blocks;
    for (const Mat& f : full) self_blocks.push_back(first.transpose() * f * first);
    switch (span_rank(self_blocks, kBlockTol)) {
      case 1: comp.division = DivisionType::Real; break;
      case 2: comp.division = DivisionType::Complex; break;
      case 4: comp.division = DivisionType::Quaternionic; break;
      default:
        throw VerificationError(space.label() + ": irreducible with endomorphism algebra of "
                                "unexpected dimension");
    }
    if (torus_action) comp.weights = circle_weights(*torus_action, comp.basis);
    dec.components.push_back(std::move(comp));
  }

  std::stable_sort(dec.components.begin(), dec.components.end(),
                   [](const IsotypicComponent& a, const IsotypicComponent& b) {
                     const int wa = a.weights.empty() ? 0 : a.weights.front();
                     const int wb = b.weights.empty() ? 0 : b.weights.front();
                     if (wa != wb) return wa < wb;
                     if (a.dim() != b.dim()) return a.dim() < b.dim();
                     return first_support_row(a.basis) < first_support_row(b.basis);
                   });
  for (std::size_t i = 0; i < dec.components.size(); ++i)
    dec.components[i].class_id = static_cast<int>(i);
  return dec;
}

double invariance_residual(const HomogeneousSpace& space, const IsotypicDecomposition& dec) {
  double worst = 0.0;
  const auto actions = isotropy_actions(space);
  for (const auto& comp : dec.components) {
    const Mat proj = comp.basis * comp.basis.transpose();
    for (const Mat& a : actions) worst = std::max(worst, (proj * a - a * proj).norm());
    for (const Mat& irr : comp.irreducibles) {
      const Mat pi = irr * irr.transpose();
      for (const Mat& a : actions) worst = std::max(worst, (pi * a - a * pi).norm());
    }
  }
  return worst;
}

}  // namespace homcurv
