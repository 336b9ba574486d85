#include "homcurv/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include <unsupported/Eigen/MatrixFunctions>

#include "homcurv/error.hpp"

namespace homcurv {
namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};
constexpr double kZeroConstant = 1e-13;
constexpr std::uint64_t kRankSeed = 0x9e3779b97f4a7c15ULL;

CMat unit(int m, int r, int c) {
  CMat e = CMat::Zero(m, m);
  e(r, c) = 1.0;
  return e;
}

std::vector<CMat> gram_schmidt(const std::vector<CMat>& seeds) {
  std::vector<CMat> out;
  for (const CMat& s : seeds) {
    CMat v = s;
    for (int pass = 0; pass < 2; ++pass) {
      for (const CMat& e : out) v -= q_inner(v, e) * e;
    }
    const double norm2 = q_inner(v, v);
    if (norm2 > 1e-20) out.push_back(v / std::sqrt(norm2));
  }
  return out;
}

void append_offdiagonal_pairs(int n, std::vector<CMat>& seeds) {
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      seeds.push_back(unit(n, i, j) - unit(n, j, i));
      seeds.push_back(kI * (unit(n, i, j) + unit(n, j, i)));
    }
  }
}

std::vector<CMat> so_seeds(int n) {
  std::vector<CMat> seeds;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) seeds.push_back(unit(n, i, j) - unit(n, j, i));
  return seeds;
}

std::vector<CMat> su_seeds(int n) {
  std::vector<CMat> seeds;
  for (int k = 0; k + 1 < n; ++k) seeds.push_back(kI * (unit(n, k, k) - unit(n, k + 1, k + 1)));
  append_offdiagonal_pairs(n, seeds);
  return seeds;
}

std::vector<CMat> u_seeds(int n) {
  std::vector<CMat> seeds;
  for (int k = 0; k < n; ++k) seeds.push_back(kI * unit(n, k, k));
  append_offdiagonal_pairs(n, seeds);
  return seeds;
}

std::vector<CMat> sp_seeds(int n) {
  std::vector<CMat> seeds;
  const CMat zero = CMat::Zero(n, n);
  for (int k = 0; k < n; ++k) seeds.push_back(quaternionic(kI * unit(n, k, k), zero));
  std::vector<CMat> a_part;
  append_offdiagonal_pairs(n, a_part);
  for (const CMat& a : a_part) seeds.push_back(quaternionic(a, zero));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      CMat s = unit(n, i, j);
      if (i != j) s += unit(n, j, i);
      seeds.push_back(quaternionic(zero, s));
      seeds.push_back(quaternionic(zero, kI * s));
    }
  }
  return seeds;
}

void check_realization(const MatrixRealization& r) {
  const int m = r.matrix_size;
  const CMat j = r.field_tag == FieldTag::SymplecticUnitary ? symplectic_form(m / 2) : CMat();
  for (std::size_t a = 0; a < r.basis.size(); ++a) {
    const CMat& x = r.basis[a];
    if (x.rows() != m || x.cols() != m)
      throw InvalidArgument("basis matrix " + std::to_string(a) + " has the wrong size");
    if ((x + x.adjoint()).norm() > 1e-10)
      throw InvalidArgument("basis matrix " + std::to_string(a) + " is not anti-Hermitian");
    if (r.field_tag == FieldTag::SymplecticUnitary && (x.transpose() * j + j * x).norm() > 1e-10)
      throw InvalidArgument("basis matrix " + std::to_string(a) + " is not symplectic");
    for (std::size_t b = 0; b <= a; ++b) {
      const double expected = a == b ? 1.0 : 0.0;
      if (std::abs(q_inner(x, r.basis[b]) - expected) > 1e-10)
        throw InvalidArgument("basis is not Q-orthonormal");
    }
  }
}

}  // namespace

std::string_view to_string(FieldTag tag) {
  switch (tag) {
    case FieldTag::RealOrthogonal: return "real-orthogonal";
    case FieldTag::Unitary: return "unitary";
    case FieldTag::SymplecticUnitary: return "symplectic-unitary";
    case FieldTag::Product: return "product";
  }
  return "unitary";
}

FieldTag field_tag_from_string(std::string_view name) {
  if (name == "real-orthogonal") return FieldTag::RealOrthogonal;
  if (name == "unitary") return FieldTag::Unitary;
  if (name == "symplectic-unitary") return FieldTag::SymplecticUnitary;
  if (name == "product") return FieldTag::Product;
  throw InvalidArgument("unknown field tag '" + std::string(name) + "'");
}

Family family_from_string(std::string_view name) {
  if (name == "so") return Family::so;
  if (name == "su") return Family::su;
  if (name == "sp") return Family::sp;
  if (name == "u") return Family::u;
  throw InvalidArgument("unknown Lie algebra family '" + std::string(name) + "'");
}

double q_inner(const CMat& x, const CMat& y) { return -(x * y).trace().real(); }

CMat symplectic_form(int n) {
  CMat j = CMat::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = CMat::Identity(n, n);
  j.bottomLeftCorner(n, n) = -CMat::Identity(n, n);
  return j;
}

CMat quaternionic(const CMat& a, const CMat& b) {
  const auto n = a.rows();
  CMat m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = a;
  m.topRightCorner(n, n) = b;
  m.bottomLeftCorner(n, n) = -b.conjugate();
  m.bottomRightCorner(n, n) = a.conjugate();
  return m;
}

LieAlgebra::LieAlgebra(std::string name, MatrixRealization realization,
                       std::vector<FactorRange> factors)
    : name_(std::move(name)),
      dim_(static_cast<int>(realization.basis.size())),
      realization_(std::move(realization)),
      factors_(std::move(factors)) {
  check_realization(realization_);
  const int d = dim_;
  const auto idx = [d](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * d + j) * d + k;
  };
  // raw(i, j, k) = Q([e_i, e_j], e_k) for i < j.
  std::vector<double> raw(static_cast<std::size_t>(d) * d * d, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const CMat& a = realization_.basis[i];
      const CMat& b = realization_.basis[j];
      const CMat c = a * b - b * a;
      if (span_residual(c) > 1e-9)
        throw InvalidArgument("basis of '" + name_ + "' is not closed under the bracket");
      const Vec coords = coordinates(c);
      for (int k = 0; k < d; ++k) {
        raw[idx(i, j, k)] = coords(k);
        raw[idx(j, i, k)] = -coords(k);
      }
    }
  }
  constants_.assign(raw.size(), 0.0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        double v = (raw[idx(i, j, k)] + raw[idx(j, k, i)] + raw[idx(k, i, j)]) / 3.0;
        if (std::abs(v) < kZeroConstant) v = 0.0;
        constants_[idx(i, j, k)] = v;
        constants_[idx(j, k, i)] = v;
        constants_[idx(k, i, j)] = v;
        constants_[idx(j, i, k)] = -v;
        constants_[idx(i, k, j)] = -v;
        constants_[idx(k, j, i)] = -v;
      }
    }
  }
  build_ad_cache();
}

LieAlgebra::LieAlgebra(std::string name, MatrixRealization realization,
                       std::vector<FactorRange> factors, std::vector<double> structure_constants)
    : name_(std::move(name)),
      dim_(static_cast<int>(realization.basis.size())),
      realization_(std::move(realization)),
      factors_(std::move(factors)),
      constants_(std::move(structure_constants)) {
  check_realization(realization_);
  if (constants_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_)
    throw InvalidArgument("structure constant tensor has the wrong size");
  build_ad_cache();
}

void LieAlgebra::build_ad_cache() {
  ad_basis_.assign(dim_, Mat::Zero(dim_, dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) ad_basis_[i](k, j) = structure_constant(i, j, k);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const { return ad(x) * y; }

Mat LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim_) throw InvalidArgument("dimension mismatch in ad/bracket");
  Mat out = Mat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) != 0.0) out += x(i) * ad_basis_[i];
  }
  return out;
}

CMat LieAlgebra::to_matrix(const Vec& coords) const {
  if (coords.size() != dim_) throw InvalidArgument("dimension mismatch in to_matrix");
  const int m = realization_.matrix_size;
  CMat out = CMat::Zero(m, m);
  for (int i = 0; i < dim_; ++i) out += coords(i) * realization_.basis[i];
  return out;
}

Vec LieAlgebra::coordinates(const CMat& m) const {
  Vec c(dim_);
  for (int i = 0; i < dim_; ++i) c(i) = q_inner(m, realization_.basis[i]);
  return c;
}

double LieAlgebra::span_residual(const CMat& m) const {
  return (m - to_matrix(coordinates(m))).norm();
}

LieAlgebra build_algebra(Family family, int n) {
  if (n < 1) throw InvalidArgument("algebra size n must be >= 1");
  MatrixRealization r;
  std::string name;
  switch (family) {
    case Family::so:
      if (n < 2) throw InvalidArgument("so(n) needs n >= 2");
      r = {n, gram_schmidt(so_seeds(n)), FieldTag::RealOrthogonal};
      name = "so(" + std::to_string(n) + ")";
      break;
    case Family::su:
      if (n < 2) throw InvalidArgument("su(n) needs n >= 2");
      r = {n, gram_schmidt(su_seeds(n)), FieldTag::Unitary};
      name = "su(" + std::to_string(n) + ")";
      break;
    case Family::u:
      r = {n, gram_schmidt(u_seeds(n)), FieldTag::Unitary};
      name = "u(" + std::to_string(n) + ")";
      break;
    case Family::sp:
      r = {2 * n, gram_schmidt(sp_seeds(n)), FieldTag::SymplecticUnitary};
      name = "sp(" + std::to_string(n) + ")";
      break;
  }
  const int d = static_cast<int>(r.basis.size());
  return LieAlgebra(std::move(name), std::move(r), {FactorRange{0, d}});
}

LieAlgebra build_algebra(std::string_view family, int n) {
  return build_algebra(family_from_string(family), n);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int ma = a.realization().matrix_size;
  const int mb = b.realization().matrix_size;
  MatrixRealization r;
  r.matrix_size = ma + mb;
  r.field_tag = FieldTag::Product;
  for (const CMat& x : a.realization().basis) {
    CMat m = CMat::Zero(ma + mb, ma + mb);
    m.topLeftCorner(ma, ma) = x;
    r.basis.push_back(std::move(m));
  }
  for (const CMat& x : b.realization().basis) {
    CMat m = CMat::Zero(ma + mb, ma + mb);
    m.bottomRightCorner(mb, mb) = x;
    r.basis.push_back(std::move(m));
  }
  std::vector<FactorRange> factors = a.factors();
  for (FactorRange f : b.factors()) factors.push_back({f.begin + a.dim(), f.end + a.dim()});
  return LieAlgebra(a.name() + "+" + b.name(), std::move(r), std::move(factors));
}

AlgebraElement bracket(const LieAlgebra& alg, const AlgebraElement& x, const AlgebraElement& y) {
  if (x.coords.size() != alg.dim() || y.coords.size() != alg.dim())
    throw InvalidArgument("bracket: coordinate length does not match dim " +
                          std::to_string(alg.dim()));
  return {alg.bracket(x.coords, y.coords)};
}

Mat ad_operator(const LieAlgebra& alg, const AlgebraElement& x) { return alg.ad(x.coords); }

namespace {

int kernel_dimension(const Mat& m) {
  if (m.size() == 0) return static_cast<int>(m.cols());
  Eigen::JacobiSVD<Mat> svd(m);
  const Vec& sv = svd.singularValues();
  const double tol = 1e-9 * std::max(1.0, sv.maxCoeff());
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  return static_cast<int>(m.cols()) - rank;
}

}  // namespace

int rank(const LieAlgebra& alg) {
  return subalgebra_rank(alg, Mat::Identity(alg.dim(), alg.dim()));
}

int subalgebra_rank(const LieAlgebra& alg, const Mat& basis) {
  const auto k = basis.cols();
  if (k == 0) return 0;
  auto rng = linalg::make_stream(kRankSeed);
  int best = static_cast<int>(k);
  for (int trial = 0; trial < 8; ++trial) {
    const Vec x = basis * linalg::gaussian_vector(rng, k);
    const Mat restricted = basis.transpose() * alg.ad(x) * basis;
    best = std::min(best, kernel_dimension(restricted));
  }
  return best;
}

GroupElement GroupElement::from_matrix(const LieAlgebra& alg, const CMat& g) {
  const int m = alg.realization().matrix_size;
  if (g.rows() != m || g.cols() != m)
    throw InvalidArgument("group element has the wrong matrix size");
  if ((g * g.adjoint() - CMat::Identity(m, m)).norm() > 1e-10)
    throw InvalidArgument("group element is not unitary");
  const int d = alg.dim();
  Mat ad(d, d);
  for (int j = 0; j < d; ++j) {
    const CMat conj = g * alg.realization().basis[j] * g.adjoint();
    if (alg.span_residual(conj) > 1e-9)
      throw InvalidArgument("conjugation by the group element leaves the algebra");
    ad.col(j) = alg.coordinates(conj);
  }
  GroupElement out(g, std::move(ad));
  if (out.orthogonality_residual() > 1e-10)
    throw VerificationError("Ad_g is not orthogonal");
  return out;
}

GroupElement GroupElement::exp(const LieAlgebra& alg, const AlgebraElement& x) {
  const CMat m = alg.to_matrix(x.coords);
  return from_matrix(alg, m.exp());
}

GroupElement GroupElement::identity(const LieAlgebra& alg) {
  const int m = alg.realization().matrix_size;
  return GroupElement(CMat::Identity(m, m), Mat::Identity(alg.dim(), alg.dim()));
}

double GroupElement::orthogonality_residual() const {
  return (ad_.transpose() * ad_ - Mat::Identity(ad_.rows(), ad_.cols())).cwiseAbs().maxCoeff();
}

double GroupElement::homomorphism_residual(const LieAlgebra& alg) const {
  double worst = 0.0;
  const int d = alg.dim();
  for (int i = 0; i < d; ++i) {
    // Ad_g ad(e_i) Ad_g^T = ad(Ad_g e_i)
    const Mat lhs = ad_ * alg.ad_basis(i) * ad_.transpose();
    const Mat rhs = alg.ad(ad_.col(i));
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

Mat centralizer_subalgebra(const LieAlgebra& alg, const GroupElement& g) {
  const Mat a = g.ad_operator() - Mat::Identity(alg.dim(), alg.dim());
  return linalg::null_space(a, 1e-9);
}

double jacobi_residual(const LieAlgebra& alg, int i, int j, int k) {
  const int d = alg.dim();
  double worst = 0.0;
  for (int l = 0; l < d; ++l) {
    double s = 0.0;
    for (int m = 0; m < d; ++m) {
      s += alg.structure_constant(i, j, m) * alg.structure_constant(m, k, l) +
           alg.structure_constant(j, k, m) * alg.structure_constant(m, i, l) +
           alg.structure_constant(k, i, m) * alg.structure_constant(m, j, l);
    }
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace homcurv
