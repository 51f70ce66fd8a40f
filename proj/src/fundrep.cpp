#include "gl22/fundrep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gl22 {

namespace {

GenId rl(Gen kind, int i, int j) {  // sorted storage for the symmetric R/L labels
  return {kind, std::min(i, j), std::max(i, j)};
}

double eps(int i, int j) { return kEps[i - 1][j - 1]; }  // 1-based wrapper

}  // namespace

const std::array<GenId, 16>& canonical_generators() {
  static const std::array<GenId, 16> gens = {{
      {Gen::R, 1, 1}, {Gen::R, 1, 2}, {Gen::R, 2, 2},
      {Gen::L, 1, 1}, {Gen::L, 1, 2}, {Gen::L, 2, 2},
      {Gen::Q, 1, 1}, {Gen::Q, 1, 2}, {Gen::Q, 2, 1}, {Gen::Q, 2, 2},
      {Gen::S, 1, 1}, {Gen::S, 1, 2}, {Gen::S, 2, 1}, {Gen::S, 2, 2},
      {Gen::A, 0, 0}, {Gen::B, 0, 0},
  }};
  return gens;
}

int canonical_index(GenId g) {
  switch (g.kind) {
    case Gen::R: return g.i + g.j - 2;
    case Gen::L: return 3 + g.i + g.j - 2;
    case Gen::Q: return 6 + 2 * (g.i - 1) + (g.j - 1);
    case Gen::S: return 10 + 2 * (g.i - 1) + (g.j - 1);
    case Gen::A: return 14;
    case Gen::B: return 15;
  }
  throw std::logic_error("canonical_index: bad generator");
}

std::string generator_name(GenId g) {
  switch (g.kind) {
    case Gen::A: return "A";
    case Gen::B: return "B";
    case Gen::R: return "R" + std::to_string(g.i) + std::to_string(g.j);
    case Gen::L: return "L" + std::to_string(g.i) + std::to_string(g.j);
    case Gen::Q: return "Q" + std::to_string(g.i) + std::to_string(g.j);
    case Gen::S: return "S" + std::to_string(g.i) + std::to_string(g.j);
  }
  return "?";
}

Mat4 represent_site(GenId g, cplx a, cplx b, cplx c, cplx d, cplx q) {
  Mat4 m = Mat4::Zero();
  switch (g.kind) {
    case Gen::R: {
      const int i1 = g.i - 1, i2 = g.j - 1;
      for (int cc = 0; cc < 2; ++cc) {
        m(i1, cc) += 0.5 * kEps[i2][cc];
        m(i2, cc) += 0.5 * kEps[i1][cc];
      }
      break;
    }
    case Gen::L: {
      const int i1 = g.i - 1, i2 = g.j - 1;
      for (int cc = 0; cc < 2; ++cc) {
        m(2 + i1, 2 + cc) += 0.5 * kEps[i2][cc];
        m(2 + i2, 2 + cc) += 0.5 * kEps[i1][cc];
      }
      break;
    }
    case Gen::Q: {
      const int al = g.i - 1, bb = g.j - 1;
      for (int cc = 0; cc < 2; ++cc) m(2 + al, cc) += a * kEps[bb][cc];
      for (int gg = 0; gg < 2; ++gg) m(bb, 2 + gg) += -b * kEps[al][gg];
      break;
    }
    case Gen::S: {
      const int al = g.i - 1, bb = g.j - 1;
      for (int cc = 0; cc < 2; ++cc) m(2 + al, cc) += -c * kEps[bb][cc];
      for (int gg = 0; gg < 2; ++gg) m(bb, 2 + gg) += d * kEps[al][gg];
      break;
    }
    case Gen::A:
      m = (0.5 * q) * Mat4::Identity();
      break;
    case Gen::B: {
      const cplx w = 0.5 / q;
      m.diagonal() << -w, -w, w, w;
      break;
    }
  }
  return m;
}

Mat4 represent(GenId g, int level, const Kinematics& kn) {
  return std::pow(kn.z, level) * represent_site(g, kn);
}

int bracket_into(GenId s, int m, GenId t, int n, const GlobalParams& gp,
                 std::array<BracketTerm, 8>& out) {
  const Gen ks = s.kind, kt = t.kind;
  int cnt = 0;
  auto emit = [&](GenId g, int lvl, cplx w) {
    if (w != cplx(0)) out[static_cast<size_t>(cnt++)] = {g, lvl, w};
  };

  const bool s_rl = (ks == Gen::R || ks == Gen::L);
  const bool t_rl = (kt == Gen::R || kt == Gen::L);
  const bool s_qs = (ks == Gen::Q || ks == Gen::S);
  const bool t_qs = (kt == Gen::Q || kt == Gen::S);

  if (s_rl && t_rl) {
    if (ks != kt) return 0;
    // [J^{ab}, J^{cd}] = eps^{bc} J^{ad} + eps^{ad} J^{bc}
    emit(rl(ks, s.i, t.j), m + n, eps(s.j, t.i));
    emit(rl(ks, s.j, t.i), m + n, eps(s.i, t.j));
    return cnt;
  }
  if (ks == Gen::A || kt == Gen::A) return 0;
  if (ks == Gen::B && kt == Gen::B) return 0;
  if (s_rl && t_qs) {
    if (ks == Gen::R) {
      // [R^{ab}, J^{gd}] = 1/2 eps^{bd} J^{ga} + 1/2 eps^{ad} J^{gb}
      emit({kt, t.i, s.i}, m + n, 0.5 * eps(s.j, t.j));
      emit({kt, t.i, s.j}, m + n, 0.5 * eps(s.i, t.j));
    } else {
      // [L^{ab}, J^{gd}] = 1/2 eps^{bg} J^{ad} + 1/2 eps^{ag} J^{bd}
      emit({kt, s.i, t.j}, m + n, 0.5 * eps(s.j, t.i));
      emit({kt, s.j, t.j}, m + n, 0.5 * eps(s.i, t.i));
    }
    return cnt;
  }
  if (s_qs && (t_rl || kt == Gen::B)) {
    // even-odd reversal: [odd, even] = -[even, odd]
    std::array<BracketTerm, 8> tmp;
    const int k = bracket_into(t, n, s, m, gp, tmp);
    for (int idx = 0; idx < k; ++idx) emit(tmp[idx].kind, tmp[idx].level, -tmp[idx].w);
    return cnt;
  }
  if (ks == Gen::B && t_qs) {
    const cplx invh = cplx(1) / gp.h;
    if (kt == Gen::Q) {
      // [B_m, Q_n] = h^-1 (Q_{m+n+1} - Q_{m+n}) + 2 alpha S_{m+n}
      emit({Gen::Q, t.i, t.j}, m + n + 1, invh);
      emit({Gen::Q, t.i, t.j}, m + n, -invh);
      emit({Gen::S, t.i, t.j}, m + n, 2.0 * gp.alpha);
    } else {
      // [B_m, S_n] = 2 alpha^-1 Q_{m+n+1} - h^-1 (S_{m+n+1} - S_{m+n})
      emit({Gen::Q, t.i, t.j}, m + n + 1, 2.0 / gp.alpha);
      emit({Gen::S, t.i, t.j}, m + n + 1, -invh);
      emit({Gen::S, t.i, t.j}, m + n, invh);
    }
    return cnt;
  }
  if (s_qs && t_qs) {
    const double ee = eps(s.i, t.i) * eps(s.j, t.j);
    if (ks == Gen::Q && kt == Gen::Q) {
      // {Q, Q} = 2 alpha eps eps A_{m+n}
      emit({Gen::A, 0, 0}, m + n, 2.0 * gp.alpha * ee);
      return cnt;
    }
    if (ks == Gen::S && kt == Gen::S) {
      // {S, S} = -2 alpha^-1 eps eps A_{m+n+1}
      emit({Gen::A, 0, 0}, m + n + 1, -2.0 / gp.alpha * ee);
      return cnt;
    }
    if (ks == Gen::Q && kt == Gen::S) {
      // {Q^{ab}, S^{gd}} = -eps^{ag} R^{bd} + eps^{bd} L^{ag}
      //                    - eps^{ag} eps^{bd} h^-1 (A_{m+n+1} - A_{m+n})
      emit(rl(Gen::R, s.j, t.j), m + n, -eps(s.i, t.i));
      emit(rl(Gen::L, s.i, t.i), m + n, eps(s.j, t.j));
      emit({Gen::A, 0, 0}, m + n + 1, -ee / gp.h);
      emit({Gen::A, 0, 0}, m + n, ee / gp.h);
      return cnt;
    }
    // {S_m, Q_n} = {Q_n, S_m}
    return bracket_into(t, n, s, m, gp, out);
  }
  return 0;  // B with R or L
}

AlgebraElement bracket(GenId s, int m, GenId t, int n, const GlobalParams& gp) {
  std::array<BracketTerm, 8> terms;
  const int k = bracket_into(s, m, t, n, gp, terms);
  AlgebraElement out;
  for (int idx = 0; idx < k; ++idx)
    out[{terms[idx].kind, terms[idx].level}] += terms[idx].w;
  for (auto it = out.begin(); it != out.end();)
    it = (std::abs(it->second) == 0.0) ? out.erase(it) : std::next(it);
  return out;
}

double bracket_antisymmetry_residual(const GlobalParams& gp, int m, int n) {
  double worst = 0.0;
  for (const GenId& s : canonical_generators())
    for (const GenId& t : canonical_generators()) {
      AlgebraElement st = bracket(s, m, t, n, gp);
      AlgebraElement ts = bracket(t, n, s, m, gp);
      const double sgn = (is_odd(s) && is_odd(t)) ? 1.0 : -1.0;
      for (const auto& [key, w] : ts) st[key] -= sgn * w;
      for (const auto& [key, w] : st) worst = std::max(worst, std::abs(w));
    }
  return worst;
}

double jacobi_residual(const GlobalParams& gp, int level_lo, int level_hi) {
  const auto& gens = canonical_generators();
  double worst = 0.0;
  std::array<BracketTerm, 8> inner, outer;
  // Accumulator keyed by (generator, level - m - n - p); shifts are 0, 1 or 2.
  std::array<cplx, 48> acc;
  std::array<int, 48> touched;
  for (const GenId& s : gens)
    for (const GenId& t : gens)
      for (const GenId& u : gens) {
        const std::array<GenId, 3> g3 = {s, t, u};
        for (int m = level_lo; m <= level_hi; ++m)
          for (int n = level_lo; n <= level_hi; ++n)
            for (int p = level_lo; p <= level_hi; ++p) {
              const std::array<int, 3> l3 = {m, n, p};
              const int base = m + n + p;
              int ntouched = 0;
              for (int c = 0; c < 3; ++c) {
                const GenId ga = g3[c], gb = g3[(c + 1) % 3], gc = g3[(c + 2) % 3];
                const int la = l3[c], lb = l3[(c + 1) % 3], lc = l3[(c + 2) % 3];
                const double sg = (is_odd(ga) && is_odd(gc)) ? -1.0 : 1.0;
                const int ni = bracket_into(gb, lb, gc, lc, gp, inner);
                for (int ii = 0; ii < ni; ++ii) {
                  const int no = bracket_into(ga, la, inner[ii].kind, inner[ii].level, gp, outer);
                  for (int oo = 0; oo < no; ++oo) {
                    const int slot =
                        canonical_index(outer[oo].kind) * 3 + (outer[oo].level - base);
                    if (acc[slot] == cplx(0)) touched[ntouched++] = slot;
                    acc[slot] += sg * inner[ii].w * outer[oo].w;
                  }
                }
              }
              for (int ti = 0; ti < ntouched; ++ti) {
                worst = std::max(worst, std::abs(acc[touched[ti]]));
                acc[touched[ti]] = cplx(0);
              }
            }
      }
  return worst;
}

double homomorphism_residual(const GlobalParams& gp, const Kinematics& kn,
                             const std::vector<std::pair<int, int>>& levels) {
  const auto& gens = canonical_generators();
  std::array<Mat4, 16> site;
  for (const GenId& g : gens) site[canonical_index(g)] = represent_site(g, kn);
  double worst = 0.0;
  std::array<BracketTerm, 8> terms;
  for (const GenId& s : gens)
    for (const GenId& t : gens) {
      const int ps = is_odd(s), pt = is_odd(t);
      const Mat4& ms = site[canonical_index(s)];
      const Mat4& mt = site[canonical_index(t)];
      const int k = bracket_into(s, 0, t, 0, gp, terms);
      for (const auto& [m, n] : levels) {
        const cplx zmn = std::pow(kn.z, m + n);
        Mat4 lhs = zmn * supercommutator(ms, ps, mt, pt);
        for (int idx = 0; idx < k; ++idx)
          lhs -= terms[idx].w * std::pow(kn.z, terms[idx].level + m + n) *
                 site[canonical_index(terms[idx].kind)];
        worst = std::max(worst, max_abs(lhs));
      }
    }
  return worst;
}

namespace {

Mat2 t_of(const GlobalParams& gp, cplx x) {
  const Kinematics kn = derive_kinematics(gp, x, preferred_gamma(gp, x));
  return kn.T;
}

}  // namespace

DerivationResiduals derivation_check(const GlobalParams& gp, cplx x) {
  const Kinematics kn = derive_kinematics(gp, x, preferred_gamma(gp, x));
  if (!kn.affine_valid)
    throw std::domain_error("derivation_check: U, V singular at this kinematic point");
  const KinematicsDerivative kd = kinematics_derivative(gp, x);
  DerivationResiduals r{};
  const Mat2 dTdz = kd.dTdx / kd.dzdx;
  r.res_U = max_abs(Mat2(kn.z * dTdz * kn.T.inverse() - kn.U));
  r.res_V = std::abs((kn.z / kn.q) * (kd.dqdx / kd.dzdx) - kn.V);
  r.res_W = max_abs(Mat2(kn.z * kd.dWdz - (kn.U * kn.W - kn.W * kn.U) + kn.V * kn.W));
  const double hstep = 1e-6;
  const Mat2 fd = (8.0 * (t_of(gp, x + hstep) - t_of(gp, x - hstep)) -
                   (t_of(gp, x + 2 * hstep) - t_of(gp, x - 2 * hstep))) /
                  (12.0 * hstep);
  r.fd_gap = max_abs(Mat2(fd - kd.dTdx));
  return r;
}

namespace {

// Coefficients s_k of 1/((z - z*+)(z - z*-)) = sum_{k>=0} s_k z^k, |z| small.
std::vector<cplx> pole_series(const GlobalParams& gp, int nmax) {
  const cplx i(0, 1);
  const cplx zsp = (i * gp.h + gp.hp) * (i * gp.h + gp.hp);
  const cplx zsm = (i * gp.h - gp.hp) * (i * gp.h - gp.hp);
  std::vector<cplx> ss(static_cast<size_t>(nmax) + 1);
  for (int k = 0; k <= nmax; ++k) {
    cplx acc = 0;
    for (int i2 = 0; i2 <= k; ++i2)
      acc += std::pow(zsp, -1 - i2) * std::pow(zsm, -1 - (k - i2));
    ss[static_cast<size_t>(k)] = acc;
  }
  return ss;
}

// (1/2 pi i) oint f dg = sum_m f_m g_{-m} (-m).
cplx oint_fdg(const LaurentPoly& f, const LaurentPoly& g) {
  cplx acc = 0;
  for (const auto& [m, fm] : f) {
    auto it = g.find(-m);
    if (it != g.end()) acc += fm * it->second * static_cast<double>(-m);
  }
  return acc;
}

// (1/2 pi i) oint f g K dz/z = sum_j (fg)_j K_{-j}; K(z) has no constant term,
// so only j <= -1 contributes. kernel(kk) returns the z^kk coefficient of K.
template <class Kernel>
cplx oint_fg_kernel(const LaurentPoly& f, const LaurentPoly& g, Kernel kernel) {
  cplx acc = 0;
  for (const auto& [m, fm] : f)
    for (const auto& [n, gn] : g)
      if (m + n <= -1) acc += fm * gn * kernel(-(m + n));
  return acc;
}

int kernel_order(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.empty() || g.empty()) return 0;
  return std::max(0, -(f.begin()->first + g.begin()->first));
}

}  // namespace

cplx cocycle(const LaurentPoly& f, GenId s, const LaurentPoly& g, GenId t,
             const GlobalParams& gp) {
  const Gen ks = s.kind, kt = t.kind;
  if ((ks == Gen::R && kt == Gen::R) || (ks == Gen::L && kt == Gen::L)) {
    const double w = 0.5 * (eps(s.i, t.i) * eps(s.j, t.j) + eps(s.i, t.j) * eps(s.j, t.i));
    return (ks == Gen::R ? -w : w) * oint_fdg(f, g);
  }
  const int nmax = kernel_order(f, g);
  const auto ss = pole_series(gp, nmax + 1);
  const cplx h2 = gp.h * gp.h;
  auto u_coeff = [&](cplx nij) {
    return [&, nij](int kk) { return kk >= 1 ? nij * ss[static_cast<size_t>(kk - 1)] : cplx(0); };
  };
  if (ks == Gen::Q && kt == Gen::Q) {
    const double ee = eps(s.i, t.i) * eps(s.j, t.j);
    return ee * oint_fg_kernel(f, g, u_coeff(gp.h * gp.alpha));
  }
  if (ks == Gen::S && kt == Gen::S) {
    const double ee = eps(s.i, t.i) * eps(s.j, t.j);
    return -ee * oint_fg_kernel(f, g, u_coeff(-gp.h / gp.alpha));
  }
  if (ks == Gen::Q && kt == Gen::S) {
    const double ee = eps(s.i, t.i) * eps(s.j, t.j);
    return ee * (oint_fdg(f, g) - oint_fg_kernel(f, g, u_coeff(-h2)));
  }
  if (ks == Gen::S && kt == Gen::Q) return cocycle(g, t, f, s, gp);
  if (ks == Gen::A && kt == Gen::B) {
    auto v_coeff = [&](int kk) {
      if (kk < 1) return cplx(0);
      const cplx skm2 = kk >= 2 ? ss[static_cast<size_t>(kk - 2)] : cplx(0);
      return -(skm2 + (2.0 * h2 - 1.0) * ss[static_cast<size_t>(kk - 1)]);
    };
    return -(oint_fdg(f, g) - oint_fg_kernel(f, g, v_coeff));
  }
  if (ks == Gen::B && kt == Gen::A) return -cocycle(g, t, f, s, gp);
  return cplx(0);
}

double cocycle_jacobi_residual(const GlobalParams& gp,
                               const std::vector<std::array<int, 3>>& levels) {
  const auto& gens = canonical_generators();
  double worst = 0.0;
  std::array<BracketTerm, 8> terms;
  for (const auto& lvl : levels)
    for (const GenId& s : gens)
      for (const GenId& t : gens)
        for (const GenId& u : gens) {
          const std::array<GenId, 3> g3 = {s, t, u};
          cplx acc = 0;
          for (int c = 0; c < 3; ++c) {
            const GenId ga = g3[c], gb = g3[(c + 1) % 3], gc = g3[(c + 2) % 3];
            const int la = lvl[c], lb = lvl[(c + 1) % 3], lc = lvl[(c + 2) % 3];
            const double sg = (is_odd(ga) && is_odd(gc)) ? -1.0 : 1.0;
            const int k = bracket_into(ga, la, gb, lb, gp, terms);
            for (int idx = 0; idx < k; ++idx)
              acc += sg * terms[idx].w *
                     cocycle(LaurentPoly{{terms[idx].level, cplx(1)}}, terms[idx].kind,
                             LaurentPoly{{lc, cplx(1)}}, gc, gp);
          }
          worst = std::max(worst, std::abs(acc));
        }
  return worst;
}

std::vector<NamedResidual> serre_chevalley_check(const GlobalParams& gp, const Kinematics& kn) {
  const auto rep = [&](GenId g) { return represent_site(g, kn); };
  const Mat4 h1 = 2.0 * rep({Gen::R, 1, 2});
  const Mat4 h3 = -2.0 * rep({Gen::L, 1, 2});
  const Mat4 h2 = -(kn.z - cplx(1)) / gp.h * rep({Gen::A, 0, 0}) - 0.5 * h1 - 0.5 * h3;
  const Mat4 e1 = -rep({Gen::R, 2, 2}), f1 = rep({Gen::R, 1, 1});
  const Mat4 e2 = rep({Gen::Q, 1, 1}), f2 = -rep({Gen::S, 2, 2});
  const Mat4 e3 = -rep({Gen::L, 2, 2}), f3 = rep({Gen::L, 1, 1});
  const std::array<Mat4, 3> hs = {h1, h2, h3}, es = {e1, e2, e3}, fs = {f1, f2, f3};
  static const double cartan[3][3] = {{2, -1, 0}, {-1, 0, 1}, {0, 1, -2}};

  std::vector<NamedResidual> out;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      out.push_back({"[H" + std::to_string(j + 1) + ",E" + std::to_string(k + 1) + "]",
                     max_abs(Mat4(hs[j] * es[k] - es[k] * hs[j] - cartan[j][k] * es[k]))});
      out.push_back({"[H" + std::to_string(j + 1) + ",F" + std::to_string(k + 1) + "]",
                     max_abs(Mat4(hs[j] * fs[k] - fs[k] * hs[j] + cartan[j][k] * fs[k]))});
    }
  out.push_back({"[E1,F1]-H1", max_abs(Mat4(supercommutator(e1, 0, f1, 0) - h1))});
  out.push_back({"{E2,F2}+H2", max_abs(Mat4(supercommutator(e2, 1, f2, 1) + h2))});
  out.push_back({"[E3,F3]+H3", max_abs(Mat4(supercommutator(e3, 0, f3, 0) + h3))});
  out.push_back({"[E1,E3]", max_abs(Mat4(supercommutator(e1, 0, e3, 0)))});
  out.push_back({"[F1,F3]", max_abs(Mat4(supercommutator(f1, 0, f3, 0)))});
  return out;
}

}  // namespace gl22
