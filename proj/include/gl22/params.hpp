#pragma once

// Scalar and 2x2-matrix kinematics: global deformation parameters, per-site
// spectral data (x, gamma) -> (z, q, a, b, c, d), the torsion matrix W, the
// derivation connection (U, V), classical limits of the quantum-side charges,
// and the algebraic y-reparametrisation.
//
// Everything is templated on the real base type so tests can run the same
// formulas in long double as an independent oracle.

#include "gl22/superlinalg.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace gl22 {

template <class Real>
using Mat2T = Eigen::Matrix<std::complex<Real>, 2, 2>;

template <class Real>
struct GlobalParamsT {
  std::complex<Real> h;      // deformation parameter
  std::complex<Real> hp;     // h' with h^2 + h'^2 = 1
  std::complex<Real> alpha;  // supercharge normalisation
  std::complex<Real> k;      // h + i h', a root of k^2 - 2hk + 1 = 0
};

using GlobalParams = GlobalParamsT<double>;

// branch selects the sign of the principal square root for h'.
template <class Real>
GlobalParamsT<Real> make_global(std::complex<Real> h, std::complex<Real> alpha,
                                int branch = +1) {
  const std::complex<Real> one(1);
  if (std::abs(one - h * h) < Real(1e-14))
    throw std::domain_error("make_global: h^2 = 1, branch of h' is ambiguous");
  const std::complex<Real> hp = Real(branch) * std::sqrt(one - h * h);
  return {h, hp, alpha, h + std::complex<Real>(0, 1) * hp};
}

inline GlobalParams make_global(cplx h, cplx alpha, int branch = +1) {
  return make_global<double>(h, alpha, branch);
}

template <class Real>
struct KinematicsT {
  std::complex<Real> x, gamma;
  std::complex<Real> z, q;           // spectral parameter and site charge
  std::complex<Real> a, b, c, d;     // supercharge representation labels, ad - bc = 1
  Mat2T<Real> T;                     // [[a, -b], [-c, d]], det T = 1
  Mat2T<Real> W;                     // traceless torsion matrix, T M = q W T
  Mat2T<Real> U;                     // derivation connection, z dT/dz = U T + gauge
  std::complex<Real> V;              // derivation acts on q as (z/q) dq/dz = V
  bool affine_valid = true;          // false where U, V are singular (z + 1/z = 2 - 4h^2)
};

using Kinematics = KinematicsT<double>;

template <class Real>
KinematicsT<Real> derive_kinematics(const GlobalParamsT<Real>& gp, std::complex<Real> x,
                                    std::complex<Real> gamma) {
  using C = std::complex<Real>;
  const C i(0, 1);
  const Real tol(1e-8);
  if (std::abs(x - C(1)) < tol || std::abs(x + C(1)) < tol)
    throw std::domain_error("derive_kinematics: x at a branch point x = +-1");
  if (std::abs(x - i * gp.h / gp.hp) < tol)
    throw std::domain_error("derive_kinematics: x at the pole x = i h / h'");
  if (std::abs(gp.h) > tol && std::abs(x + i * gp.hp / gp.h) < tol)
    throw std::domain_error("derive_kinematics: x at the pole x = -i h' / h");

  KinematicsT<Real> kn;
  kn.x = x;
  kn.gamma = gamma;
  const C p = (gp.hp * x - i * gp.h) * (gp.h * x + i * gp.hp);
  const C x2m1 = x * x - C(1);
  kn.z = i * x / p;
  kn.q = -p / (gp.hp * x2m1);
  kn.a = gamma;
  kn.b = -gp.alpha * p / (gamma * gp.hp * x2m1);
  kn.c = i * gamma / (gp.alpha * (gp.hp * x - i * gp.h));
  kn.d = x * (gp.hp * x - i * gp.h) / (gamma * gp.hp * x2m1);
  kn.T << kn.a, -kn.b, -kn.c, kn.d;
  // (z - 1)/h written so the h -> 0 limit (z -> 1) stays finite.
  const C w11 = (Real(2) * i * gp.h * x - gp.hp * (x * x + C(1))) / p;
  kn.W << w11, Real(2) * gp.alpha, Real(2) * kn.z / gp.alpha, -w11;
  const C den = kn.z + C(1) / kn.z - C(2) + Real(4) * gp.h * gp.h;
  if (std::abs(den) < Real(1e-12)) {
    kn.affine_valid = false;
    kn.U.setZero();
    kn.V = C(0);
  } else {
    kn.U << -gp.h * gp.h, gp.h * gp.alpha, -gp.h / gp.alpha, gp.h * gp.h;
    kn.U /= den;
    kn.V = -(kn.z - C(1) + Real(2) * gp.h * gp.h) / den;
  }
  return kn;
}

inline Kinematics derive_kinematics(const GlobalParams& gp, cplx x, cplx gamma) {
  return derive_kinematics<double>(gp, x, gamma);
}

// Gauge choice that removes the pure-gauge part of the derivation connection.
template <class Real>
std::complex<Real> preferred_gamma(const GlobalParamsT<Real>& gp, std::complex<Real> x) {
  const std::complex<Real> i(0, 1);
  return (gp.hp * x - i * gp.h) / (gp.hp * std::sqrt(x * x - std::complex<Real>(1)));
}

struct SelfDualPoints {
  cplx z_plus, z_minus;  // (ih + h')^2 and (ih - h')^2; product 1, sum 2 - 4h^2
  cplx x_plus, x_minus;  // the x = +-1 branch points
};

inline SelfDualPoints selfdual_points(const GlobalParams& gp) {
  const cplx i(0, 1);
  return {(i * gp.h + gp.hp) * (i * gp.h + gp.hp), (i * gp.h - gp.hp) * (i * gp.h - gp.hp),
          cplx(1), cplx(-1)};
}

// Moebius-invariant cross ratio of the four distinguished points; (ih + h')^4.
inline cplx crossratio(const GlobalParams& gp) {
  const cplx f = (cplx(0, 1) * gp.h + gp.hp);
  return f * f * f * f;
}

// Analytic x-derivatives of the kinematic data in the preferred gauge.
struct KinematicsDerivative {
  cplx da, db, dc, dd;  // d/dx of (a, b, c, d) at gamma = preferred_gamma
  cplx dzdx, dqdx;
  Mat2 dTdx;
  Mat2 dWdz;  // constant: [[1/h, 0], [2/alpha, -1/h]]
};

inline KinematicsDerivative kinematics_derivative(const GlobalParams& gp, cplx x) {
  const cplx i(0, 1);
  if (std::abs(gp.h) < 1e-8)
    throw std::domain_error("kinematics_derivative: dW/dz singular at h = 0");
  KinematicsDerivative kd;
  const cplx s = std::sqrt(x * x - cplx(1));
  const cplx s3 = s * s * s;
  kd.da = (i * gp.h * x - gp.hp) / (gp.hp * s3);
  kd.db = gp.alpha * (gp.h + i * gp.hp * x) / s3;
  kd.dc = -i * x / (gp.alpha * gp.hp * s3);
  kd.dd = cplx(-1) / s3;
  kd.dTdx << kd.da, -kd.db, -kd.dc, kd.dd;
  const cplx p = (gp.hp * x - i * gp.h) * (gp.h * x + i * gp.hp);
  kd.dzdx = i * gp.h * gp.hp * (cplx(1) - x * x) / (p * p);
  kd.dqdx = (4.0 * gp.h * gp.hp * x + i * (gp.hp * gp.hp - gp.h * gp.h) * (x * x + cplx(1))) /
            (gp.hp * (x * x - cplx(1)) * (x * x - cplx(1)));
  kd.dWdz << cplx(1) / gp.h, cplx(0), cplx(2) / gp.alpha, cplx(-1) / gp.h;
  return kd;
}

// Classical expansion of the quantum spectral pair at coupling g.
struct ClassicalXpm {
  cplx xplus, xminus;
  cplx qdef;  // 1 + h/(2g)
};

inline ClassicalXpm xpm_classical(const GlobalParams& gp, cplx x, double g, int order = 1) {
  const cplx i(0, 1);
  const cplx pref = gp.hp * x - i * gp.h;
  if (order <= 0) return {pref, pref, cplx(1) + gp.h / (2.0 * g)};
  const cplx corr = x * (gp.h * x + i * gp.hp) / ((x * x - cplx(1)) * (2.0 * g));
  return {pref * (cplx(1) + corr), pref * (cplx(1) - corr), cplx(1) + gp.h / (2.0 * g)};
}

// Residual of the quadratic constraint tying x+, x-, q and g together.
inline cplx constraint_residual(cplx xp, cplx xm, cplx q, double g) {
  const cplx i(0, 1);
  return xp / q + q / xp - q * xm - cplx(1) / (q * xm) +
         i * g * (q - cplx(1) / q) * (xp / (q * xm) - q * xm / xp) - i / g;
}

struct QuantumSideData {
  cplx q2C;      // first closed form
  cplx q2C_alt;  // second closed form; equal on the constraint surface
  cplx q2D;
  cplx P, K;     // central charge eigenvalues
  double form_gap;  // |q2C - q2C_alt|, a diagnostic for constraint violation
};

inline QuantumSideData quantum_charges(cplx xp, cplx xm, cplx q, double g, cplx alpha) {
  const cplx i(0, 1);
  QuantumSideData qs;
  qs.q2D = xp / (q * xm);
  qs.q2C = q * ((q - cplx(1) / q) / xp - i / g) / ((q - cplx(1) / q) / xm - i / g);
  qs.q2C_alt = (cplx(1) / q) * ((q - cplx(1) / q) * xp + i / g) / ((q - cplx(1) / q) * xm + i / g);
  qs.P = g * alpha * (cplx(1) - qs.q2C * qs.q2D);
  qs.K = g / alpha * (cplx(1) / qs.q2C - cplx(1) / qs.q2D);
  qs.form_gap = std::abs(qs.q2C - qs.q2C_alt);
  return qs;
}

// Algebraic parametrisation of the spectral curve by y; rational in (y, k).
struct YParams {
  GlobalParams gp;
  cplx x, gamma;
  cplx z, q, a, b, c, d;
  Mat2 R;       // frame rotation: T_tilde = R T is rational in y
  Mat2 Ttilde;  // [[eta y, kappa y / eta], [-eta/(2 kappa y), 1/(2 eta y)]]
};

inline YParams y_parametrisation(cplx y, cplx k, cplx eta, cplx kappa) {
  const cplx y2 = y * y, y4 = y2 * y2, k2 = k * k, k4 = k2 * k2;
  if (std::abs(y4 - cplx(1)) < 1e-8)
    throw std::domain_error("y_parametrisation: y at a z = 0 point (y^4 = 1)");
  if (std::abs(y4 - k4) < 1e-8)
    throw std::domain_error("y_parametrisation: y at a pole (y^4 = k^4)");
  const cplx i(0, 1);
  const cplx kk = k - cplx(1) / k;
  YParams yp;
  yp.gp.h = 0.5 * (k + cplx(1) / k);
  yp.gp.hp = -0.5 * i * kk;
  yp.gp.alpha = 0.5 * kk * kappa;
  yp.gp.k = k;
  yp.x = -(y2 - cplx(1)) / (y2 + cplx(1));
  yp.gamma = (y2 + k2) * eta / (2.0 * k * y);
  yp.z = -k2 * (y4 - cplx(1)) / (y4 - k4);
  yp.q = -(y4 - k4) / (2.0 * k2 * kk * y2);
  yp.a = eta * (y2 + k2) / (2.0 * k * y);
  yp.b = -kappa * (y2 - k2) / (2.0 * k * eta * y);
  yp.c = -eta * (y2 + cplx(1)) / (kappa * kk * y);
  yp.d = (y2 - cplx(1)) / (eta * kk * y);
  yp.R << -2.0 / kk, kappa * k, -1.0 / (kappa * kk), 0.5 / k;
  yp.Ttilde << eta * y, kappa * y / eta, -0.5 * eta / (kappa * y), 0.5 / (eta * y);
  return yp;
}

}  // namespace gl22
