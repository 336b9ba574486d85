#pragma once

#include <random>

#include "homcurv/homogeneous_space.hpp"

namespace oracle {

using homcurv::CMat;
using homcurv::Mat;
using homcurv::Vec;

/// [u, v] computed from matrix commutators and trace-form projection.
inline Vec matrix_bracket(const homcurv::LieAlgebra& alg, const Vec& u, const Vec& v) {
  const CMat a = alg.to_matrix(u);
  const CMat b = alg.to_matrix(v);
  const CMat c = a * b - b * a;
  const auto& basis = alg.realization().basis;
  Vec out(alg.dim());
  for (int k = 0; k < alg.dim(); ++k) out(k) = -(c * basis[k]).trace().real();
  return out;
}

/// Unnormalized curvature of K/H for the metric G on p, computed on K with the
/// left-invariant metric G (+) t Q|h by the Koszul formula, then lifted to the
/// quotient through the O'Neill term 3/4 |[x,y]_h|^2.
inline double koszul_oneill(const homcurv::HomogeneousSpace& s, const Mat& g, const Vec& x,
                            const Vec& y, double t) {
  const auto& alg = s.ambient();
  const Mat& p = s.p_basis();
  const Mat& h = s.h_basis();
  const Mat m = p * g * p.transpose() + t * h * h.transpose();
  const Mat m_inv = m.inverse();
  const auto br = [&](const Vec& a, const Vec& b) { return matrix_bracket(alg, a, b); };
  const int d = alg.dim();
  const auto nabla = [&](const Vec& u, const Vec& v) {
    Vec rhs(d);
    const Vec uv = br(u, v);
    for (int k = 0; k < d; ++k) {
      const Vec w = Vec::Unit(d, k);
      rhs(k) = 0.5 * (uv.dot(m * w) - br(v, w).dot(m * u) + br(w, u).dot(m * v));
    }
    return Vec(m_inv * rhs);
  };
  const Vec u = p * x;
  const Vec v = p * y;
  const Vec r = nabla(u, nabla(v, v)) - nabla(v, nabla(u, v)) - nabla(br(u, v), v);
  const Vec vert = h.transpose() * br(u, v);
  return r.dot(m * u) + 0.75 * t * vert.squaredNorm();
}

/// Dimension of {T : TA = AT for all A} (optionally symmetric T), by SVD of the
/// Kronecker system.
inline int commutant_dimension(const std::vector<Mat>& actions, int n, bool symmetric) {
  const int n2 = n * n;
  const int blocks = static_cast<int>(actions.size()) + (symmetric ? 1 : 0);
  Mat sys = Mat::Zero(blocks * n2, n2);
  for (std::size_t a = 0; a < actions.size(); ++a) {
    const Mat& A = actions[a];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            // (TA - AT)_{ij} as a linear function of T_{kl}, column-major vec
            double coef = 0.0;
            if (i == k) coef += A(l, j);
            if (j == l) coef -= A(i, k);
            sys(static_cast<int>(a) * n2 + i + j * n, k + l * n) = coef;
          }
  }
  if (symmetric) {
    const int base = static_cast<int>(actions.size()) * n2;
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        sys(base + k + l * n, k + l * n) += 1.0;
        sys(base + k + l * n, l + k * n) -= 1.0;
      }
  }
  Eigen::JacobiSVD<Mat> svd(sys);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-8 * std::max(1.0, sv(0))) ++rank;
  return n2 - rank;
}

inline Vec gaussian(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> nd;
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = nd(rng);
  return v;
}

}  // namespace oracle
