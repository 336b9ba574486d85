#pragma once

#include <vector>

#include "homcurv/homogeneous_space.hpp"
#include "homcurv/metric.hpp"

namespace homcurv {

/// Two vectors of p in p coordinates.
struct Plane {
  Vec x;
  Vec y;
};

struct CurvatureValue {
  double unnormalized = 0.0;  // <R(x,y)y,x>
  double sectional = 0.0;     // divided by <x,x><y,y> - <x,y>^2 in the G-metric
};

struct PlaneGradient {
  Vec dx;
  Vec dy;
};

/// Curvature of K/H with the metric Q(G., .) on p:
///
///   <R(x,y)y,x> = Q(B-(x,y), [x,y]) - 3/4 Q(G[x,y]_p, [x,y]_p)
///               + Q(B+(x,y), G^-1 B+(x,y)) - Q(B+(x,x), G^-1 B+(y,y)),
///   B+-(x,y) = 1/2 ([x,Gy] -+ [Gx,y]).
///
/// Binds one (space, G) pair. Const after construction, so a single
/// evaluator can serve concurrent callers.
class CurvatureEvaluator {
 public:
  CurvatureEvaluator(const HomogeneousSpace& space, const Mat& g);

  int dim_p() const { return static_cast<int>(p_.cols()); }
  const Mat& metric() const { return g_; }

  /// Ambient coordinates of B+(x, y) and B-(x, y) for x, y in p coordinates.
  Vec b_plus(const Vec& x, const Vec& y) const;
  Vec b_minus(const Vec& x, const Vec& y) const;

  double unnormalized(const Vec& x, const Vec& y) const;
  /// G-metric area element <x,x><y,y> - <x,y>^2.
  double area(const Vec& x, const Vec& y) const;
  CurvatureValue evaluate(const Vec& x, const Vec& y) const;

  /// Gradient of the unnormalized value in (x, y).
  PlaneGradient unnormalized_gradient(const Vec& x, const Vec& y) const;
  /// Gradient of the sectional value in (x, y). Writes the value to *value if non-null.
  PlaneGradient sectional_gradient(const Vec& x, const Vec& y, double* value = nullptr) const;

 private:
  Mat ad_of(const Vec& p_coords) const;
  Vec gradient_first(const Vec& x, const Vec& y) const;

  Mat p_;
  Mat h_;
  Mat g_;
  Eigen::LLT<Mat> g_llt_;
  std::vector<Mat> ad_p_;  // ad of each p-basis vector, d x d
};

/// Ambient element checks for the free-function interface: x, y must lie in p.
AlgebraElement b_plus(const HomogeneousSpace& space, const MetricEndo& g, const AlgebraElement& x,
                      const AlgebraElement& y);
AlgebraElement b_minus(const HomogeneousSpace& space, const MetricEndo& g, const AlgebraElement& x,
                       const AlgebraElement& y);

/// Throws InvalidArgument for a degenerate plane (Q-Gram determinant of the
/// normalized vectors below 1e-14).
CurvatureValue curvature(const HomogeneousSpace& space, const MetricEndo& g, const Plane& plane);
PlaneGradient curvature_gradient(const HomogeneousSpace& space, const MetricEndo& g,
                                 const Plane& plane);

/// Zero-curvature declaration threshold on unit-Q vectors.
inline constexpr double kZeroCurvatureTol = 1e-9;

void check_plane(const Plane& plane, Eigen::Index dim_p);

}  // namespace homcurv
