#pragma once

#include <cmath>

namespace pidn {

/// Shared hyperbolic tangent used by every network path. Both the scalar
/// and the vectorized kernels evaluate the same exp-based expression so the
/// two implementations agree to rounding.
inline double net_tanh(double x) { return 1.0 - 2.0 / (std::exp(2.0 * x) + 1.0); }

/// Truncated second-order jet in (x, y, t): value, the three first
/// derivatives, and the two pure second space derivatives. Mixed seconds
/// never appear in the residual, so they are not carried.
struct Jet2 {
  double v = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  double dt = 0.0;
  double dxx = 0.0;
  double dyy = 0.0;

  static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.v + b.v,   a.dx + b.dx,   a.dy + b.dy,
          a.dt + b.dt, a.dxx + b.dxx, a.dyy + b.dyy};
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.v - b.v,   a.dx - b.dx,   a.dy - b.dy,
          a.dt - b.dt, a.dxx - b.dxx, a.dyy - b.dyy};
}

inline Jet2 operator*(double s, const Jet2& a) {
  return {s * a.v, s * a.dx, s * a.dy, s * a.dt, s * a.dxx, s * a.dyy};
}

/// Leibniz rule including the pure second derivatives:
/// (ab)'' = a'' b + 2 a' b' + a b''.
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.v = a.v * b.v;
  r.dx = a.dx * b.v + a.v * b.dx;
  r.dy = a.dy * b.v + a.v * b.dy;
  r.dt = a.dt * b.v + a.v * b.dt;
  r.dxx = a.dxx * b.v + 2.0 * a.dx * b.dx + a.v * b.dxx;
  r.dyy = a.dyy * b.v + 2.0 * a.dy * b.dy + a.v * b.dyy;
  return r;
}

/// tanh lifted to the jet: with y = tanh(u), phi' = 1 - y^2 and
/// phi'' = -2 y phi', so f'' composes as phi'' u'^2 + phi' u''.
inline Jet2 tanh_jet(const Jet2& u) {
  const double y = net_tanh(u.v);
  const double s = 1.0 - y * y;
  const double s2 = -2.0 * y * s;
  Jet2 r;
  r.v = y;
  r.dx = s * u.dx;
  r.dy = s * u.dy;
  r.dt = s * u.dt;
  r.dxx = s * u.dxx + s2 * u.dx * u.dx;
  r.dyy = s * u.dyy + s2 * u.dy * u.dy;
  return r;
}

}  // namespace pidn
