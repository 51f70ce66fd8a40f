#pragma once

// The centrally extended deformed gl(2|2) loop superalgebra: generators,
// structure constants, the evaluation representation on the 2|2 site space,
// the derivation that extends it, and the affine 2-cocycle.

#include "gl22/params.hpp"
#include "gl22/report.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gl22 {

// eps(1,2) = +1 with both index positions numerically equal.
inline constexpr double kEps[2][2] = {{0.0, 1.0}, {-1.0, 0.0}};

enum class Gen : int { R = 0, L, Q, S, A, B };

// Generator label; i, j are 1-based, R and L are stored with i <= j.
struct GenId {
  Gen kind = Gen::A;
  int i = 0, j = 0;

  friend bool operator==(const GenId&, const GenId&) = default;
  friend auto operator<=>(const GenId&, const GenId&) = default;
};

inline bool is_odd(GenId g) { return g.kind == Gen::Q || g.kind == Gen::S; }

// R11 R12 R22 L11 L12 L22 Q11 Q12 Q21 Q22 S11 S12 S21 S22 A B.
const std::array<GenId, 16>& canonical_generators();
int canonical_index(GenId g);
std::string generator_name(GenId g);

// Evaluation representation of the level-0 generator on the site space.
Mat4 represent_site(GenId g, cplx a, cplx b, cplx c, cplx d, cplx q);
inline Mat4 represent_site(GenId g, const Kinematics& kn) {
  return represent_site(g, kn.a, kn.b, kn.c, kn.d, kn.q);
}

// Level-n generator: z^n times the site matrix.
Mat4 represent(GenId g, int level, const Kinematics& kn);

struct BracketTerm {
  GenId kind;
  int level = 0;
  cplx w;
};

// Expands [s_m, t_n} into at most 6 terms; returns the term count. Terms are
// not merged, so cancelling contributions may appear twice.
int bracket_into(GenId s, int m, GenId t, int n, const GlobalParams& gp,
                 std::array<BracketTerm, 8>& out);

using AlgebraElement = std::map<std::pair<GenId, int>, cplx>;

// Merged form of bracket_into with exact zeros dropped.
AlgebraElement bracket(GenId s, int m, GenId t, int n, const GlobalParams& gp);

// max violation of [s,t} = -(-1)^{|s||t|}[t,s} over all generator pairs.
double bracket_antisymmetry_residual(const GlobalParams& gp, int m, int n);

// max violation of the graded Jacobi identity over all generator triples and
// all level triples in [level_lo, level_hi]^3.
double jacobi_residual(const GlobalParams& gp, int level_lo = -3, int level_hi = 3);

// max over all generator pairs and the given level pairs of
// | rho([s,t}) - [rho(s), rho(t)} |.
double homomorphism_residual(const GlobalParams& gp, const Kinematics& kn,
                             const std::vector<std::pair<int, int>>& levels = {{0, 0}});

// Residuals of the derivation identities in the preferred gauge:
//   z (dT/dz) T^-1 = U,   (z/q) dq/dz = V,   z dW/dz = [U, W] - V W,
// plus the gap between analytic and Richardson finite-difference dT/dx.
struct DerivationResiduals {
  double res_U, res_V, res_W, fd_gap;
};
DerivationResiduals derivation_check(const GlobalParams& gp, cplx x);

// Laurent polynomial in the spectral parameter, exponent -> coefficient.
using LaurentPoly = std::map<int, cplx>;

// Affine 2-cocycle on pairs of loop generators f(z) s, g(z) t.
cplx cocycle(const LaurentPoly& f, GenId s, const LaurentPoly& g, GenId t,
             const GlobalParams& gp);

// Graded cyclic sum of the cocycle against the bracket, maximised over all
// generator triples at the given monomial degrees. Reported as a diagnostic;
// whether it vanishes in the deformed sector is left open.
double cocycle_jacobi_residual(const GlobalParams& gp,
                               const std::vector<std::array<int, 3>>& levels);

// Chevalley-style presentation: Cartan relations against the fixed Cartan
// matrix and the [E_j, F_j] pairings, evaluated in the site representation.
std::vector<NamedResidual> serre_chevalley_check(const GlobalParams& gp, const Kinematics& kn);

}  // namespace gl22
