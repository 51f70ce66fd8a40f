#include "gl22/limits.hpp"

#include "gl22/fundrep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gl22 {

namespace {

constexpr cplx kI{0.0, 1.0};

Mat2 sigma3() {
  Mat2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

// The outer root of x + 1/x = u.
cplx x_of_u(cplx u) {
  const cplx root = std::sqrt(u * u - 4.0);
  const cplx x = 0.5 * (u + root);
  return std::abs(x) > 1.0 ? x : 0.5 * (u - root);
}

// Fourth-order central difference along the real direction.
template <typename F>
auto richardson4(F&& f, cplx v, double step = 1e-5) {
  return ((8.0 * (f(v + step) - f(v - step)) - (f(v + 2.0 * step) - f(v - 2.0 * step))) /
          (12.0 * step))
      .eval();
}

template <typename F>
cplx richardson4_scalar(F&& f, cplx v, double step = 1e-5) {
  return (8.0 * (f(v + step) - f(v - step)) - (f(v + 2.0 * step) - f(v - 2.0 * step))) /
         (12.0 * step);
}

Mat2 t_of_site(const LimitSite& s) {
  Mat2 t;
  t << s.a, -s.b, -s.c, s.d;
  return t;
}

void guard_collision(cplx s1, cplx s2, const char* who) {
  if (std::abs(s1 - s2) < 1e-10)
    throw std::domain_error(std::string(who) + ": site parameter collision s1 = s2");
}

}  // namespace

std::string family_name(LimitFamily f) {
  switch (f) {
    case LimitFamily::FullRational: return "full_rational";
    case LimitFamily::ConvRational: return "conv_rational";
    case LimitFamily::ConvTrig: return "conv_trig";
    case LimitFamily::TwistRational: return "twist_rational";
    case LimitFamily::TwistTrig: return "twist_trig";
    case LimitFamily::SpecialInf: return "special_inf";
    case LimitFamily::SpecialZero: return "special_zero";
    case LimitFamily::SpecialRational: return "special_rational";
  }
  throw std::invalid_argument("family_name: unknown family");
}

LimitFamily family_from_name(const std::string& name) {
  for (LimitFamily f : kAllFamilies)
    if (family_name(f) == name) return f;
  throw std::invalid_argument("family_from_name: unknown family '" + name + "'");
}

bool family_is_trig(LimitFamily f) {
  switch (f) {
    case LimitFamily::ConvTrig:
    case LimitFamily::TwistTrig:
    case LimitFamily::SpecialInf:
    case LimitFamily::SpecialZero:
      return true;
    default:
      return false;
  }
}

LimitPathPoint limit_path(LimitFamily f, const LimitInputs& in, double eps) {
  LimitPathPoint pt;
  switch (f) {
    case LimitFamily::FullRational: {
      pt.gp = make_global(eps, in.alpha);
      pt.k1 = derive_kinematics(pt.gp, x_of_u(in.s1), in.g1);
      pt.k2 = derive_kinematics(pt.gp, x_of_u(in.s2), in.g2);
      pt.rescale = kI * eps;
      return pt;
    }
    case LimitFamily::ConvRational: {
      pt.gp = make_global(in.h0, in.alpha);
      const cplx h = pt.gp.h, hp = pt.gp.hp, x0 = in.x0;
      pt.k1 = derive_kinematics(pt.gp, x0 * (1.0 + eps * in.s1), in.g1);
      pt.k2 = derive_kinematics(pt.gp, x0 * (1.0 + eps * in.s2), in.g2);
      pt.rescale = -h * hp * eps * (x0 * x0 - 1.0) / ((h * x0 + kI * hp) * (hp * x0 - kI * h));
      return pt;
    }
    case LimitFamily::ConvTrig: {
      pt.gp = make_global(in.h0, in.alpha / eps);
      const cplx base = kI * pt.gp.h / pt.gp.hp;
      pt.k1 = derive_kinematics(pt.gp, base * (1.0 + eps / in.s1), in.g1);
      pt.k2 = derive_kinematics(pt.gp, base * (1.0 + eps / in.s2), in.g2);
      pt.rescale = 1.0;
      return pt;
    }
    case LimitFamily::TwistRational: {
      const GlobalParams gp0 = make_global(in.h0, 1.0);
      const cplx h = gp0.h, hp = gp0.hp;
      pt.gp = make_global(in.h0, kI * eps * in.alpha / (hp - kI * h));
      const cplx slope = (hp - kI * h) / hp;
      pt.k1 = derive_kinematics(pt.gp, 1.0 + eps * slope * in.s1, in.g1);
      pt.k2 = derive_kinematics(pt.gp, 1.0 + eps * slope * in.s2, in.g2);
      pt.rescale = kI * h * eps * eps / hp;
      return pt;
    }
    case LimitFamily::TwistTrig: {
      pt.gp = make_global(1.0 / eps, in.alpha);
      pt.k1 = derive_kinematics(pt.gp, 1.0 - eps / in.s1, in.g1);
      pt.k2 = derive_kinematics(pt.gp, 1.0 - eps / in.s2, in.g2);
      pt.rescale = 1.0;
      return pt;
    }
    case LimitFamily::SpecialInf: {
      pt.gp = make_global(1.0 / eps, 0.5 * eps * in.alpha);
      pt.k1 = derive_kinematics(pt.gp, in.s1, in.g1);
      pt.k2 = derive_kinematics(pt.gp, in.s2, in.g2);
      pt.rescale = 1.0;
      return pt;
    }
    case LimitFamily::SpecialZero: {
      pt.gp = make_global(eps, in.alpha);
      pt.k1 = derive_kinematics(pt.gp, -kI * (in.s1 - 1.0) / (eps * in.s1), in.g1);
      pt.k2 = derive_kinematics(pt.gp, -kI * (in.s2 - 1.0) / (eps * in.s2), in.g2);
      pt.rescale = 1.0;
      return pt;
    }
    case LimitFamily::SpecialRational: {
      pt.gp = make_global(eps * eps, in.alpha);
      pt.k1 = derive_kinematics(pt.gp, in.s1 / eps, in.g1);
      pt.k2 = derive_kinematics(pt.gp, in.s2 / eps, in.g2);
      pt.rescale = kI * eps;
      return pt;
    }
  }
  throw std::invalid_argument("limit_path: unknown family");
}

LimitSite limit_site(LimitFamily f, cplx v, cplx gamma, cplx alpha) {
  LimitSite s;
  switch (f) {
    case LimitFamily::FullRational: {
      const cplx x = v;
      s.a = gamma;
      s.b = -kI * alpha * x / (gamma * (x * x - 1.0));
      s.c = kI * gamma / (alpha * x);
      s.d = x * x / (gamma * (x * x - 1.0));
      s.q = -kI * x / (x * x - 1.0);
      s.sigma = x + 1.0 / x;
      return s;
    }
    case LimitFamily::TwistRational:
    case LimitFamily::TwistTrig: {
      const cplx y = v;
      s.a = gamma;
      s.b = alpha / (2.0 * y * gamma);
      s.c = -gamma * y / alpha;
      s.d = 1.0 / (2.0 * gamma);
      s.q = 1.0 / (2.0 * y);
      s.sigma = y * y;
      return s;
    }
    case LimitFamily::SpecialInf: {
      const cplx x = v;
      const cplx zt = -4.0 * x / ((x - 1.0) * (x - 1.0));
      s.a = gamma;
      s.b = -(alpha / (2.0 * gamma)) * (x - 1.0) / (x + 1.0);
      s.c = (2.0 * gamma / alpha) / (x - 1.0);
      s.d = (1.0 / gamma) * x / (x + 1.0);
      s.q = -(x - 1.0) / (x + 1.0);
      s.sigma = zt;
      return s;
    }
    case LimitFamily::SpecialZero: {
      s.a = gamma;
      s.b = 0.0;
      s.c = 0.0;
      s.d = 1.0 / gamma;
      s.q = 1.0 / (v - 1.0);
      s.sigma = v;
      return s;
    }
    case LimitFamily::SpecialRational: {
      s.a = gamma;
      s.b = 0.0;
      s.c = 0.0;
      s.d = 1.0 / gamma;
      s.q = -1.0 / v;
      s.sigma = v;
      return s;
    }
    default:
      throw std::invalid_argument(
          "limit_site: the conventional families keep no deformed site data");
  }
}

CoefficientSet limit_coefficients(LimitFamily f, const LimitInputs& in) {
  switch (f) {
    case LimitFamily::ConvRational: {
      guard_collision(in.s1, in.s2, "limit_coefficients");
      const cplx du = in.s1 - in.s2;
      CoefficientSet co{};
      co.A = co.B = co.D = co.E = 1.0 / du;
      co.C = co.F = co.G = co.L = 0.0;
      co.H = (in.g1 / in.g2) / du;
      co.K = (in.g2 / in.g1) / du;
      return co;
    }
    case LimitFamily::ConvTrig: {
      guard_collision(in.s1, in.s2, "limit_coefficients");
      const cplx dz = in.s1 - in.s2;
      CoefficientSet co{};
      co.A = co.B = co.D = co.E = 0.5 * (in.s1 + in.s2) / dz;
      co.C = co.F = 0.0;
      co.G = 0.25;
      co.L = -0.25;
      co.H = (in.g1 / in.g2) * in.s1 / dz;
      co.K = (in.g2 / in.g1) * in.s2 / dz;
      return co;
    }
    case LimitFamily::FullRational: {
      const LimitSite s1 = limit_site(f, x_of_u(in.s1), in.g1, in.alpha);
      const LimitSite s2 = limit_site(f, x_of_u(in.s2), in.g2, in.alpha);
      return rational_coefficients(s1.sigma, s1.q, s1.a, s1.b, s1.c, s1.d,
                                   s2.sigma, s2.q, s2.a, s2.b, s2.c, s2.d);
    }
    default: {
      const LimitSite s1 = limit_site(f, in.s1, in.g1, in.alpha);
      const LimitSite s2 = limit_site(f, in.s2, in.g2, in.alpha);
      if (family_is_trig(f))
        return table_coefficients(s1.sigma, s1.q, s1.a, s1.b, s1.c, s1.d,
                                  s2.sigma, s2.q, s2.a, s2.b, s2.c, s2.d);
      return rational_coefficients(s1.sigma, s1.q, s1.a, s1.b, s1.c, s1.d,
                                   s2.sigma, s2.q, s2.a, s2.b, s2.c, s2.d);
    }
  }
}

Mat build_limit_r(LimitFamily f, const CoefficientSet& co) {
  return family_is_trig(f) ? table_op(co) : rational_op(co);
}

double fit_order(const std::vector<double>& eps, const std::vector<double>& err) {
  const std::size_t n = eps.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(eps[i]), ly = std::log(err[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (double(n) * sxy - sx * sy) / (double(n) * sxx - sx * sx);
}

ConvergenceData convergence_check(LimitFamily f, const LimitInputs& in,
                                  const std::vector<double>& eps_list) {
  const Mat rlim = build_limit_r(f, limit_coefficients(f, in));
  ConvergenceData out;
  out.eps = eps_list;
  for (double eps : eps_list) {
    const LimitPathPoint pt = limit_path(f, in, eps);
    out.err.push_back(max_abs(Mat(pt.rescale * r_fund_universal(pt.k1, pt.k2) - rlim)));
  }
  out.order = fit_order(out.eps, out.err);
  return out;
}

double limit_cybe(LimitFamily f, const LimitInputs& in, cplx s3, cplx g3) {
  LimitInputs in13 = in, in23 = in;
  in13.s2 = s3;
  in13.g2 = g3;
  in23.s1 = in.s2;
  in23.g1 = in.g2;
  in23.s2 = s3;
  in23.g2 = g3;
  const Mat r12 = build_limit_r(f, limit_coefficients(f, in));
  const Mat r13 = build_limit_r(f, limit_coefficients(f, in13));
  const Mat r23 = build_limit_r(f, limit_coefficients(f, in23));
  const GradedSpace& leg = GradedSpace::fundamental();
  return cybe_bracket_residual(embed_legs(r12, 0, 1, 3, leg), embed_legs(r13, 0, 2, 3, leg),
                               embed_legs(r23, 1, 2, 3, leg));
}

LimitAlgebra limit_algebra(LimitFamily f, cplx v, cplx alpha) {
  LimitAlgebra out;
  switch (f) {
    case LimitFamily::FullRational: {
      const cplx u = v + 1.0 / v;
      out.available = true;
      out.W << kI * u, 2.0 * alpha, 2.0 / alpha, -kI * u;
      out.U << 0.0, -kI * alpha, kI / alpha, 0.0;
      out.U /= u * u - 4.0;
      out.V = -u / (u * u - 4.0);
      out.dfactor = v * v / (v * v - 1.0);
      return out;
    }
    case LimitFamily::TwistRational: {
      out.available = true;
      out.W << 0.0, 2.0 * alpha, 2.0 * v * v / alpha, 0.0;
      out.U << -1.0, 0.0, 0.0, 1.0;
      out.U /= 4.0 * v * v;
      out.V = -1.0 / (2.0 * v * v);
      out.dfactor = 1.0 / (2.0 * v);
      return out;
    }
    case LimitFamily::TwistTrig: {
      out.available = true;
      out.W << 0.0, 2.0 * alpha, 2.0 * v * v / alpha, 0.0;
      out.U << -0.25, 0.0, 0.0, 0.25;
      out.V = -0.5;
      out.dfactor = v / 2.0;
      return out;
    }
    case LimitFamily::SpecialInf: {
      const cplx zt = -4.0 * v / ((v - 1.0) * (v - 1.0));
      out.available = true;
      out.W << -1.0, alpha, -zt / alpha, 1.0;
      out.U << -1.0, 0.0, -2.0 / alpha, 1.0;
      out.U *= 0.25 * zt / (zt - 1.0);
      out.V = -0.5 * zt / (zt - 1.0);
      out.dfactor = -v * (v - 1.0) / (v + 1.0);
      return out;
    }
    case LimitFamily::SpecialZero: {
      out.available = true;
      out.W = (v - 1.0) * sigma3();
      out.U.setZero();
      out.V = -v / (v - 1.0);
      out.dfactor = v;
      return out;
    }
    case LimitFamily::SpecialRational: {
      out.available = true;
      out.W = -v * sigma3();
      out.U.setZero();
      out.V = -1.0 / v;
      out.dfactor = 1.0;
      return out;
    }
    default:
      out.available = false;
      out.W.setZero();
      out.U.setZero();
      return out;
  }
}

namespace {

// {Q, S} = -eps R + eps L - eps eps W11 A, {Q, Q} = eps eps W12 A,
// {S, S} = -eps eps W21 A, [B, Q] = W11 Q + W12 S, [B, S] = W21 Q + W22 S.
double bracket_closure_site(const LimitSite& s, const Mat2& w) {
  // R and L are symmetric in their indices; Q and S are not, so their index
  // order must be preserved.
  auto rs = [&](Gen kind, int i, int j) {
    if (kind == Gen::R || kind == Gen::L) return represent_site(
        GenId{kind, std::min(i, j), std::max(i, j)}, s.a, s.b, s.c, s.d, s.q);
    return represent_site(GenId{kind, i, j}, s.a, s.b, s.c, s.d, s.q);
  };
  const Mat4 amat = rs(Gen::A, 1, 1);
  const Mat4 bmat = rs(Gen::B, 1, 1);
  double worst = 0.0;
  auto up = [&](const Mat4& m) { worst = std::max(worst, max_abs(m)); };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Mat4 q1 = rs(Gen::Q, a + 1, b + 1);
      const Mat4 s1 = rs(Gen::S, a + 1, b + 1);
      for (int g = 0; g < 2; ++g)
        for (int d = 0; d < 2; ++d) {
          const Mat4 q2 = rs(Gen::Q, g + 1, d + 1);
          const Mat4 s2 = rs(Gen::S, g + 1, d + 1);
          const double ee = kEps[a][g] * kEps[b][d];
          Mat4 rhs = Mat4::Zero();
          if (kEps[a][g] != 0.0) rhs -= kEps[a][g] * rs(Gen::R, b + 1, d + 1);
          if (kEps[b][d] != 0.0) rhs += kEps[b][d] * rs(Gen::L, a + 1, g + 1);
          rhs -= ee * w(0, 0) * amat;
          up(supercommutator(q1, 1, s2, 1) - rhs);
          up(supercommutator(q1, 1, q2, 1) - ee * w(0, 1) * amat);
          up(supercommutator(s1, 1, s2, 1) + ee * w(1, 0) * amat);
        }
      up(supercommutator(bmat, 0, q1, 1) - (w(0, 0) * q1 + w(0, 1) * s1));
      up(supercommutator(bmat, 0, s1, 1) - (w(1, 0) * q1 + w(1, 1) * s1));
    }
  return worst;
}

}  // namespace

std::vector<NamedResidual> limit_algebra_relations(LimitFamily f, cplx v, cplx gamma,
                                                   cplx alpha) {
  const LimitSite s = limit_site(f, v, gamma, alpha);
  const LimitAlgebra alg = limit_algebra(f, v, alpha);
  if (!alg.available)
    throw std::invalid_argument("limit_algebra_relations: no algebra data for this family");
  const Mat2 t = t_of_site(s);
  const Mat2 m = sigma3();
  std::vector<NamedResidual> out;
  out.push_back({"ad - bc = 1", std::abs(s.a * s.d - s.b * s.c - 1.0)});
  out.push_back({"T sigma3 = q W T", max_abs(Mat2(t * m - s.q * alg.W * t))});
  out.push_back({"tr W = 0", std::abs(alg.W.trace())});
  const cplx dq = alg.dfactor *
                  richardson4_scalar([&](cplx vv) { return limit_site(f, vv, gamma, alpha).q; }, v);
  out.push_back({"V = D(q)/q", std::abs(dq / s.q - alg.V)});
  const Mat2 dw =
      alg.dfactor * richardson4([&](cplx vv) { return limit_algebra(f, vv, alpha).W; }, v);
  out.push_back(
      {"D(W) = [U, W] - V W",
       max_abs(Mat2(dw - (alg.U * alg.W - alg.W * alg.U) + alg.V * alg.W))});
  const Mat2 dt = alg.dfactor *
                  richardson4([&](cplx vv) { return t_of_site(limit_site(f, vv, gamma, alpha)); }, v);
  const Mat2 m0 = dt * t.inverse() - alg.U;
  const Mat2 x = t * m * t.inverse();
  const cplx g = 0.5 * (m0 * x).trace();
  out.push_back({"D(T) T^-1 - U = g T sigma3 T^-1", max_abs(Mat2(m0 - g * x))});
  out.push_back({"(T sigma3 T^-1)^2 = 1", max_abs(Mat2(x * x - Mat2::Identity()))});
  out.push_back({"site bracket closure", bracket_closure_site(s, alg.W)});
  return out;
}

std::vector<NamedResidual> untwist_relations(LimitFamily f, cplx v, cplx alpha) {
  std::vector<NamedResidual> out;
  Mat2 wexp;
  wexp << 0.0, 2.0 * alpha, 2.0 / alpha, 0.0;
  const LimitAlgebra alg = limit_algebra(f, v, alpha);
  if (f == LimitFamily::TwistRational || f == LimitFamily::TwistTrig) {
    const cplx sig = v * v;
    Mat2 dg;
    dg << std::pow(sig, 0.25), 0.0, 0.0, std::pow(sig, -0.25);
    const Mat2 wbar = std::pow(sig, -0.5) * dg * alg.W * dg.inverse();
    Mat2 eqs;
    eqs << 0.25, 0.0, 0.0, -0.25;
    const cplx ea = 0.5;
    const bool rational = (f == LimitFamily::TwistRational);
    const Mat2 ubar = alg.U + (rational ? Mat2(eqs / sig) : eqs);
    const cplx vbar = alg.V + (rational ? ea / sig : ea);
    out.push_back({"untwisted W is the constant off-diagonal form", max_abs(Mat2(wbar - wexp))});
    out.push_back({"untwisted U vanishes", max_abs(ubar)});
    out.push_back({"untwisted V vanishes", std::abs(vbar)});
    return out;
  }
  if (f == LimitFamily::SpecialZero) {
    out.push_back({"untwisted W is sigma3", max_abs(Mat2(alg.W / (v - 1.0) - sigma3()))});
    out.push_back({"untwisted U vanishes", max_abs(alg.U)});
    out.push_back({"untwisted V vanishes", std::abs(alg.V + v / (v - 1.0))});
    return out;
  }
  throw std::invalid_argument("untwist_relations: family carries no twist to remove");
}

const std::vector<DegenerationNode>& degeneration_nodes() {
  static const std::vector<DegenerationNode> nodes = {
      {"T(h)", {{1, 0}, {1, 0}, {0, 1}, {0, 1}}},
      {"T(0)", {{1, 0}, {1, 0}, {0, 2}}},
      {"T(inf)", {{1, 0}, {1, 1}, {0, 1}}},
      {"T(twist)", {{1, 1}, {1, 1}}},
      {"T(conv)", {{1, 2}, {1, 0}}},
      {"R(full)", {{2, 0}, {0, 1}, {0, 1}}},
      {"R(def)", {{2, 0}, {0, 2}}},
      {"R(twist)", {{2, 1}, {0, 1}}},
      {"R(conv)", {{2, 2}}},
  };
  return nodes;
}

bool coarsens(std::vector<std::pair<int, int>> src, std::vector<std::pair<int, int>> dst) {
  const std::size_t n = src.size(), m = dst.size();
  if (m >= n) return false;
  std::sort(dst.begin(), dst.end());
  std::vector<std::size_t> assign(n, 0);
  while (true) {
    std::vector<bool> hit(m, false);
    for (std::size_t a : assign) hit[a] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
      std::vector<std::pair<int, int>> sums(m, {0, 0});
      for (std::size_t i = 0; i < n; ++i) {
        sums[assign[i]].first += src[i].first;
        sums[assign[i]].second += src[i].second;
      }
      std::sort(sums.begin(), sums.end());
      if (sums == dst) return true;
    }
    // next assignment in base m
    std::size_t pos = 0;
    while (pos < n && ++assign[pos] == m) assign[pos++] = 0;
    if (pos == n) return false;
  }
}

std::map<std::string, std::vector<std::string>> degeneration_graph() {
  std::map<std::string, std::vector<std::string>> edges;
  const auto& nodes = degeneration_nodes();
  for (const auto& u : nodes) {
    std::vector<std::string> dst;
    for (const auto& v : nodes)
      if (coarsens(u.blocks, v.blocks)) dst.push_back(v.name);
    std::sort(dst.begin(), dst.end());
    edges[u.name] = dst;
  }
  return edges;
}

std::map<std::string, std::vector<std::string>> reference_edges() {
  std::map<std::string, std::vector<std::string>> ref;
  ref["T(h)"] = {"T(0)", "T(inf)", "T(twist)", "T(conv)",
                 "R(full)", "R(def)", "R(twist)", "R(conv)"};
  ref["T(0)"] = {"T(conv)", "R(def)", "R(conv)"};
  ref["T(inf)"] = {"T(twist)", "T(conv)", "R(twist)", "R(conv)"};
  ref["T(twist)"] = {"R(conv)"};
  ref["T(conv)"] = {"R(conv)"};
  ref["R(full)"] = {"R(def)", "R(twist)", "R(conv)"};
  ref["R(def)"] = {"R(conv)"};
  ref["R(twist)"] = {"R(conv)"};
  ref["R(conv)"] = {};
  for (auto& [k, v] : ref) std::sort(v.begin(), v.end());
  return ref;
}

std::string family_node(LimitFamily f) {
  switch (f) {
    case LimitFamily::FullRational: return "R(full)";
    case LimitFamily::ConvRational: return "R(conv)";
    case LimitFamily::ConvTrig: return "T(conv)";
    case LimitFamily::TwistRational: return "R(twist)";
    case LimitFamily::TwistTrig: return "T(twist)";
    case LimitFamily::SpecialInf: return "T(inf)";
    case LimitFamily::SpecialZero: return "T(0)";
    case LimitFamily::SpecialRational: return "R(def)";
  }
  throw std::invalid_argument("family_node: unknown family");
}

}  // namespace gl22
