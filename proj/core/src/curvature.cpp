#include "homcurv/curvature.hpp"

#include <cmath>

#include "homcurv/error.hpp"

namespace homcurv {

CurvatureEvaluator::CurvatureEvaluator(const HomogeneousSpace& space, const Mat& g)
    : p_(space.p_basis()), h_(space.h_basis()), g_(g), g_llt_(g) {
  if (g.rows() != p_.cols() || g.cols() != p_.cols())
    throw InvalidArgument("metric size does not match dim p");
  if (g_llt_.info() != Eigen::Success) throw VerificationError("metric is not positive definite");
  ad_p_.reserve(p_.cols());
  for (Eigen::Index a = 0; a < p_.cols(); ++a) ad_p_.push_back(space.ambient().ad(p_.col(a)));
}

Mat CurvatureEvaluator::ad_of(const Vec& u) const {
  const Eigen::Index d = p_.rows();
  Mat out = Mat::Zero(d, d);
  for (Eigen::Index a = 0; a < u.size(); ++a) out += u(a) * ad_p_[a];
  return out;
}

Vec CurvatureEvaluator::b_plus(const Vec& x, const Vec& y) const {
  const Vec gx = p_ * (g_ * x);
  const Vec gy = p_ * (g_ * y);
  return 0.5 * (ad_of(x) * gy - ad_of(g_ * x) * (p_ * y)) + 0.0 * gx;
}

Vec CurvatureEvaluator::b_minus(const Vec& x, const Vec& y) const {
  const Vec gy = p_ * (g_ * y);
  return 0.5 * (ad_of(x) * gy + ad_of(g_ * x) * (p_ * y));
}

double CurvatureEvaluator::unnormalized(const Vec& x, const Vec& y) const {
  const Vec gx = g_ * x;
  const Vec gy = g_ * y;
  const Mat ax = ad_of(x);
  const Mat agx = ad_of(gx);
  const Mat ay = ad_of(y);
  const Vec X = p_ * x, Y = p_ * y, GX = p_ * gx, GY = p_ * gy;

  const Vec c = ax * Y;
  const Vec cp = p_.transpose() * c;
  const Vec x_gy = ax * GY;
  const Vec gx_y = agx * Y;
  const Vec bm = 0.5 * (x_gy + gx_y);
  const Vec bxy = p_.transpose() * (0.5 * (x_gy - gx_y));
  const Vec bxx = p_.transpose() * (ax * GX);
  const Vec byy = p_.transpose() * (ay * GY);

  return bm.dot(c) - 0.75 * cp.dot(g_ * cp) + bxy.dot(g_llt_.solve(bxy)) -
         bxx.dot(g_llt_.solve(byy));
}

double CurvatureEvaluator::area(const Vec& x, const Vec& y) const {
  const double xx = x.dot(g_ * x);
  const double yy = y.dot(g_ * y);
  const double xy = x.dot(g_ * y);
  return xx * yy - xy * xy;
}

CurvatureValue CurvatureEvaluator::evaluate(const Vec& x, const Vec& y) const {
  CurvatureValue v;
  v.unnormalized = unnormalized(x, y);
  v.sectional = v.unnormalized / area(x, y);
  return v;
}

// Gradient in the first slot; the formula is symmetric under x <-> y.
Vec CurvatureEvaluator::gradient_first(const Vec& x, const Vec& y) const {
  const Vec gx = g_ * x;
  const Vec gy = g_ * y;
  const Mat ax = ad_of(x);
  const Mat ay = ad_of(y);
  const Mat agx = ad_of(gx);
  const Mat agy = ad_of(gy);
  const Mat pt = p_.transpose();
  const Vec Y = p_ * y, GX = p_ * gx, GY = p_ * gy;

  const Vec c = ax * Y;
  const Vec cp = pt * c;
  const Vec x_gy = ax * GY;
  const Vec gx_y = agx * Y;
  const Vec bm = 0.5 * (x_gy + gx_y);
  const Vec bxy = pt * (0.5 * (x_gy - gx_y));
  const Vec byy = pt * (ay * GY);
  const Vec w = p_ * g_llt_.solve(bxy);
  const Vec u = p_ * g_llt_.solve(byy);

  Vec grad = 0.5 * (pt * (agy * c) + g_ * (pt * (ay * c)));  // Q(B-, [x,y]), B- slot
  grad += pt * (ay * bm);                                   // Q(B-, [x,y]), bracket slot
  grad -= 1.5 * (pt * (ay * (p_ * (g_ * cp))));             // -3/4 Q(G[x,y]_p, [x,y]_p)
  grad += pt * (agy * w) - g_ * (pt * (ay * w));            // Q(B+, G^-1 B+)
  grad += -(pt * (agx * u)) + g_ * (pt * (ax * u));         // -Q(B+(x,x), G^-1 B+(y,y))
  return grad;
}

PlaneGradient CurvatureEvaluator::unnormalized_gradient(const Vec& x, const Vec& y) const {
  return {gradient_first(x, y), gradient_first(y, x)};
}

PlaneGradient CurvatureEvaluator::sectional_gradient(const Vec& x, const Vec& y,
                                                     double* value) const {
  const double f = unnormalized(x, y);
  const Vec gx = g_ * x;
  const Vec gy = g_ * y;
  const double xx = x.dot(gx), yy = y.dot(gy), xy = x.dot(gy);
  const double d = xx * yy - xy * xy;
  const double s = f / d;
  const PlaneGradient df = unnormalized_gradient(x, y);
  const Vec dd_x = 2.0 * yy * gx - 2.0 * xy * gy;
  const Vec dd_y = 2.0 * xx * gy - 2.0 * xy * gx;
  if (value) *value = s;
  return {(df.dx - s * dd_x) / d, (df.dy - s * dd_y) / d};
}

void check_plane(const Plane& plane, Eigen::Index dim_p) {
  if (plane.x.size() != dim_p || plane.y.size() != dim_p)
    throw InvalidArgument("plane vectors must have length dim p = " + std::to_string(dim_p));
  const double nx = plane.x.norm(), ny = plane.y.norm();
  if (nx == 0.0 || ny == 0.0) throw InvalidArgument("degenerate plane: zero vector");
  const double c = plane.x.dot(plane.y) / (nx * ny);
  if (1.0 - c * c <= 1e-14) throw InvalidArgument("degenerate plane: vectors are dependent");
}

namespace {

Vec p_coords_of(const HomogeneousSpace& space, const AlgebraElement& v) {
  if (v.coords.size() != space.ambient().dim())
    throw InvalidArgument("element length does not match dim k");
  const Vec hpart = space.h_part(v.coords);
  if (hpart.norm() > 1e-12 * std::max(1.0, v.coords.norm()))
    throw InvalidArgument("element is not in p (h-component " + std::to_string(hpart.norm()) + ")");
  return space.p_part(v.coords);
}

}  // namespace

AlgebraElement b_plus(const HomogeneousSpace& space, const MetricEndo& g, const AlgebraElement& x,
                      const AlgebraElement& y) {
  const CurvatureEvaluator ev(space, g.matrix);
  return {ev.b_plus(p_coords_of(space, x), p_coords_of(space, y))};
}

AlgebraElement b_minus(const HomogeneousSpace& space, const MetricEndo& g, const AlgebraElement& x,
                       const AlgebraElement& y) {
  const CurvatureEvaluator ev(space, g.matrix);
  return {ev.b_minus(p_coords_of(space, x), p_coords_of(space, y))};
}

CurvatureValue curvature(const HomogeneousSpace& space, const MetricEndo& g, const Plane& plane) {
  check_plane(plane, space.dim_p());
  return CurvatureEvaluator(space, g.matrix).evaluate(plane.x, plane.y);
}

PlaneGradient curvature_gradient(const HomogeneousSpace& space, const MetricEndo& g,
                                 const Plane& plane) {
  check_plane(plane, space.dim_p());
  return CurvatureEvaluator(space, g.matrix).sectional_gradient(plane.x, plane.y);
}

}  // namespace homcurv
