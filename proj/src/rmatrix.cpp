#include "gl22/rmatrix.hpp"

#include <Eigen/SVD>

#include <stdexcept>
#include <utility>

namespace gl22 {

namespace {

double eps0(int i, int j) { return kEps[i][j]; }  // 0-based

// s12 = R12(x)R12 - R22(x)R11 - L12(x)L12 + L22(x)L11
//       - eps_{ag} eps_{bd} Q^{ab}(x)S^{gd} - A(x)B.
// When perturbed, every S factor picks up the z of its own site.
Mat s12_op(const Kinematics& kA, const Kinematics& kB, bool perturb) {
  const GradedSpace& leg = GradedSpace::fundamental();
  auto site = [&](Gen kind, int i, int j, const Kinematics& kn) -> Mat {
    Mat m = represent_site(GenId{kind, i, j}, kn);
    if (perturb && kind == Gen::S) m *= kn.z;
    return m;
  };
  auto kg = [&](const Mat& a, const Mat& b, int parity_b) {
    return kron_graded(a, b, parity_b, leg);
  };
  Mat r = kg(site(Gen::R, 1, 2, kA), site(Gen::R, 1, 2, kB), 0) -
          kg(site(Gen::R, 2, 2, kA), site(Gen::R, 1, 1, kB), 0) -
          kg(site(Gen::L, 1, 2, kA), site(Gen::L, 1, 2, kB), 0) +
          kg(site(Gen::L, 2, 2, kA), site(Gen::L, 1, 1, kB), 0);
  for (int a = 0; a < 2; ++a)
    for (int g = 0; g < 2; ++g)
      for (int b = 0; b < 2; ++b)
        for (int d = 0; d < 2; ++d) {
          const double w = eps0(a, g) * eps0(b, d);
          if (w == 0.0) continue;
          r -= w * kg(site(Gen::Q, a + 1, b + 1, kA), site(Gen::S, g + 1, d + 1, kB), 1);
        }
  r -= kg(site(Gen::A, 1, 1, kA), site(Gen::B, 1, 1, kB), 0);
  return r;
}

Mat table_impl(const CoefficientSet& co, double cf, double shift) {
  Mat r = Mat::Zero(16, 16);
  const cplx A = co.A, B = co.B, C = co.C, D = co.D, E = co.E;
  const cplx F = co.F, G = co.G, H = co.H, K = co.K, L = co.L;
  r(st(0, 0), st(0, 0)) = A;
  r(st(1, 1), st(1, 1)) = A;
  r(st(1, 0), st(0, 1)) += 0.5 * (A + B + shift);
  r(st(0, 1), st(0, 1)) += 0.5 * (A - B);
  r(st(1, 0), st(1, 0)) += 0.5 * (A - B);
  r(st(0, 1), st(1, 0)) += 0.5 * (A + B - shift);
  r(st(2, 2), st(2, 2)) = -D;
  r(st(3, 3), st(3, 3)) = -D;
  r(st(3, 2), st(2, 3)) += -0.5 * (D + E + shift);
  r(st(2, 3), st(2, 3)) += -0.5 * (D - E);
  r(st(3, 2), st(3, 2)) += -0.5 * (D - E);
  r(st(2, 3), st(3, 2)) += -0.5 * (D + E - shift);
  // boson->fermion (C) and fermion->boson (F) channels carry the eps pattern
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int g = 0; g < 2; ++g)
        for (int d = 0; d < 2; ++d) {
          const double w = eps0(a, b) * eps0(g, d);
          if (w == 0.0) continue;
          r(st(2 + g, 2 + d), st(a, b)) += cf * w * C;
          r(st(a, b), st(2 + g, 2 + d)) += -cf * w * F;
        }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      r(st(a, 2 + b), st(a, 2 + b)) += G;
      r(st(2 + b, a), st(a, 2 + b)) += H;
      r(st(a, 2 + b), st(2 + b, a)) += K;
      r(st(2 + b, a), st(2 + b, a)) += L;
    }
  return r;
}

}  // namespace

CoefficientSet table_coefficients(cplx z1, cplx q1, cplx a1, cplx b1, cplx c1, cplx d1,
                                  cplx z2, cplx q2, cplx a2, cplx b2, cplx c2, cplx d2) {
  const cplx dz = z1 - z2;
  if (std::abs(dz) < 1e-10)
    throw std::domain_error("table_coefficients: spectral parameter collision z1 = z2");
  CoefficientSet co;
  co.A = (z1 / 4.0 + z2 / 4.0 + z1 * q1 / (4.0 * q2) + z2 * q2 / (4.0 * q1)) / dz;
  co.B = 2.0 * z1 / dz - 1.0 - co.A;
  co.C = (z1 * a1 * c2 - z2 * a2 * c1) / dz;
  co.F = (z1 * b1 * d2 - z2 * b2 * d1) / dz;
  co.G = (-z1 * q1 / (4.0 * q2) + z2 * q2 / (4.0 * q1)) / dz;
  co.H = (z1 * a1 * d2 - z2 * b2 * c1) / dz;
  co.K = (-z1 * b1 * c2 + z2 * a2 * d1) / dz;
  co.D = co.A;
  co.E = co.B;
  co.L = -co.G;
  return co;
}

CoefficientSet rational_coefficients(cplx s1, cplx q1, cplx a1, cplx b1, cplx c1, cplx d1,
                                     cplx s2, cplx q2, cplx a2, cplx b2, cplx c2, cplx d2) {
  const cplx ds = s1 - s2;
  if (std::abs(ds) < 1e-10)
    throw std::domain_error("rational_coefficients: spectral parameter collision s1 = s2");
  CoefficientSet co;
  co.A = 0.25 * (2.0 + q1 / q2 + q2 / q1) / ds;
  co.B = 2.0 / ds - co.A;
  co.C = (a1 * c2 - a2 * c1) / ds;
  co.F = (b1 * d2 - b2 * d1) / ds;
  co.G = 0.25 * (-q1 / q2 + q2 / q1) / ds;
  co.H = (a1 * d2 - b2 * c1) / ds;
  co.K = (-b1 * c2 + a2 * d1) / ds;
  co.D = co.A;
  co.E = co.B;
  co.L = -co.G;
  return co;
}

CoefficientSet coefficients(const Kinematics& k1, const Kinematics& k2) {
  return table_coefficients(k1.z, k1.q, k1.a, k1.b, k1.c, k1.d,
                            k2.z, k2.q, k2.a, k2.b, k2.c, k2.d);
}

Mat table_op(const CoefficientSet& co) { return table_impl(co, 1.0, 1.0); }

Mat rational_op(const CoefficientSet& co) { return table_impl(co, 1.0, 0.0); }

RMatrix r_fund_table(const Kinematics& k1, const Kinematics& k2) {
  CoefficientSet co = coefficients(k1, k2);
  return RMatrix{table_op(co), k1, k2, co};
}

const Mat& p16() {
  static const Mat p = graded_swap(GradedSpace::fundamental(), GradedSpace::fundamental());
  return p;
}

const GradedSpace& two_site_space() {
  static const GradedSpace sp =
      GradedSpace::fundamental().tensor(GradedSpace::fundamental());
  return sp;
}

STSplit st_split(const Kinematics& k1, const Kinematics& k2) {
  STSplit out;
  out.s12 = s12_op(k1, k2, false);
  out.s21 = p16() * s12_op(k2, k1, false) * p16();
  out.t12 = out.s12 + out.s21;
  return out;
}

Mat r_fund_universal(const Kinematics& k1, const Kinematics& k2) {
  const cplx dz = k1.z - k2.z;
  if (std::abs(dz) < 1e-10)
    throw std::domain_error("r_fund_universal: spectral parameter collision z1 = z2");
  STSplit s = st_split(k1, k2);
  return (k1.z * s.s12 + k2.z * s.s21) / dz;
}

double cybe_bracket_residual(const Mat& r12, const Mat& r13, const Mat& r23) {
  Mat c = r12 * r13 - r13 * r12 + r12 * r23 - r23 * r12 + r13 * r23 - r23 * r13;
  return max_abs(c);
}

double cybe_residual(const Kinematics& k1, const Kinematics& k2, const Kinematics& k3,
                     bool perturb) {
  auto r_of = [&](const Kinematics& ka, const Kinematics& kb) -> Mat {
    const cplx dz = ka.z - kb.z;
    Mat s12 = s12_op(ka, kb, perturb);
    Mat s21 = p16() * s12_op(kb, ka, perturb) * p16();
    return (ka.z * s12 + kb.z * s21) / dz;
  };
  const GradedSpace& leg = GradedSpace::fundamental();
  Mat r12 = embed_legs(r_of(k1, k2), 0, 1, 3, leg);
  Mat r13 = embed_legs(r_of(k1, k3), 0, 2, 3, leg);
  Mat r23 = embed_legs(r_of(k2, k3), 1, 2, 3, leg);
  return cybe_bracket_residual(r12, r13, r23);
}

double antisymmetry_residual(const Kinematics& k1, const Kinematics& k2) {
  Mat r12 = r_fund_universal(k1, k2);
  Mat r21 = r_fund_universal(k2, k1);
  return max_abs(Mat(r12 + p16() * r21 * p16()));
}

CoefficientSet shift_coefficients(const CoefficientSet& co, cplx lambda) {
  CoefficientSet s = co;
  s.A += lambda;
  s.B -= lambda;
  s.D -= lambda;
  s.E += lambda;
  s.G += lambda;
  s.L += lambda;
  return s;
}

std::vector<NamedResidual> coefficient_identities(const CoefficientSet& co, cplx z1, cplx z2) {
  const cplx dz = z1 - z2;
  const cplx cfhk = co.C * co.F + co.H * co.K;
  std::vector<NamedResidual> out;
  out.push_back({"gauge A = D", std::abs(co.A - co.D)});
  out.push_back({"gauge B = E", std::abs(co.B - co.E)});
  out.push_back({"gauge G = -L", std::abs(co.G + co.L)});
  out.push_back({"(A+B+1)/2 = z1/(z1-z2)", std::abs(0.5 * (co.A + co.B + 1.0) - z1 / dz)});
  out.push_back({"CF+HK = z1 z2/(z1-z2)^2", std::abs(cfhk - z1 * z2 / (dz * dz))});
  out.push_back({"(A+B-1)(A+B+1)/4 = CF+HK",
                 std::abs(0.25 * (co.A + co.B - 1.0) * (co.A + co.B + 1.0) - cfhk)});
  out.push_back({"(3A-B)(3D-E)/4 + 4GL = CF+HK",
                 std::abs(0.25 * (3.0 * co.A - co.B) * (3.0 * co.D - co.E) +
                          4.0 * co.G * co.L - cfhk)});
  return out;
}

std::vector<NamedResidual> rational_identities(const CoefficientSet& co) {
  const cplx cfhk = co.C * co.F + co.H * co.K;
  std::vector<NamedResidual> out;
  out.push_back({"(A+B)(D+E)/4 = CF+HK",
                 std::abs(0.25 * (co.A + co.B) * (co.D + co.E) - cfhk)});
  out.push_back({"(3A-B)(3D-E)/4 + 4GL = CF+HK",
                 std::abs(0.25 * (3.0 * co.A - co.B) * (3.0 * co.D - co.E) +
                          4.0 * co.G * co.L - cfhk)});
  return out;
}

std::vector<NamedResidual> shift_survivors(const CoefficientSet& co, cplx lambda) {
  CoefficientSet s = shift_coefficients(co, lambda);
  const cplx cfhk = s.C * s.F + s.H * s.K;
  std::vector<NamedResidual> out;
  out.push_back({"(A-D) + (B-E)", std::abs((s.A - s.D) + (s.B - s.E))});
  out.push_back({"(A-D) - (G+L)", std::abs((s.A - s.D) - (s.G + s.L))});
  out.push_back({"A+B unchanged", std::abs((s.A + s.B) - (co.A + co.B))});
  out.push_back({"(A+B-1)(A+B+1)/4 = CF+HK",
                 std::abs(0.25 * (s.A + s.B - 1.0) * (s.A + s.B + 1.0) - cfhk)});
  return out;
}

cplx shift_breaker(const CoefficientSet& co) {
  // On unshifted coefficients this equals the quadratic identity
  // (3A - B)(3D - E)/4 + 4 G L = CF + HK via D = A, E = B, L = -G, so it
  // vanishes; written in site-1 labels only, it picks up 2 lambda (3A - B - 4G)
  // under the identity shift and so witnesses the gauge parameter.
  const cplx t = 3.0 * co.A - co.B;
  return 0.25 * t * t - 4.0 * co.G * co.G - (co.C * co.F + co.H * co.K);
}

CoefficientRank coefficient_rank(const GlobalParams& gp, cplx x1, cplx x2, cplx g1, cplx g2) {
  auto vec = [&](cplx xx1, cplx xx2, cplx gg1, cplx gg2, cplx hh,
                 cplx lam) -> Eigen::VectorXcd {
    GlobalParams gpe = make_global(hh, gp.alpha);
    CoefficientSet co = shift_coefficients(
        coefficients(derive_kinematics(gpe, xx1, gg1), derive_kinematics(gpe, xx2, gg2)), lam);
    Eigen::VectorXcd v(10);
    v << co.A, co.B, co.C, co.D, co.E, co.F, co.G, co.H, co.K, co.L;
    return v;
  };
  const double step = 1e-6;
  std::array<cplx, 6> p0{x1, x2, g1, g2, gp.h, cplx(0.0)};
  Eigen::MatrixXcd jac(10, 6);
  for (int j = 0; j < 6; ++j) {
    std::array<cplx, 6> up = p0, dn = p0;
    up[j] += step;
    dn[j] -= step;
    jac.col(j) = (vec(up[0], up[1], up[2], up[3], up[4], up[5]) -
                  vec(dn[0], dn[1], dn[2], dn[3], dn[4], dn[5])) /
                 (2.0 * step);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac);
  CoefficientRank out;
  out.singular_values = svd.singularValues();
  out.rank = 0;
  for (int i = 0; i < out.singular_values.size(); ++i)
    if (out.singular_values(i) > 1e-8 * out.singular_values(0)) ++out.rank;
  return out;
}

}  // namespace gl22
