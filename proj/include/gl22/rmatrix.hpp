#pragma once

// The trigonometric classical r-matrix on the 4|4-dimensional two-site space:
// closed-form coefficients, the structural table form, the universal
// generator-sum form, the s/t split, and the bilinear identity checks.

#include "gl22/fundrep.hpp"
#include "gl22/params.hpp"
#include "gl22/report.hpp"

#include <vector>

namespace gl22 {

// Two-site tensor index for single-site basis labels i, j in 0..3.
inline int st(int i, int j) { return 4 * i + j; }

struct CoefficientSet {
  cplx A, B, C, D, E, F, G, H, K, L;
};

// Closed-form coefficients; throws when z1 and z2 collide.
CoefficientSet coefficients(const Kinematics& k1, const Kinematics& k2);

// The same closed forms on bare site data (z, q, a, b, c, d) per site; the
// rational kernel is the constant-free degeneration of the table kernel.
// Both throw on |s1 - s2| < 1e-10.
CoefficientSet table_coefficients(cplx z1, cplx q1, cplx a1, cplx b1, cplx c1, cplx d1,
                                  cplx z2, cplx q2, cplx a2, cplx b2, cplx c2, cplx d2);
CoefficientSet rational_coefficients(cplx s1, cplx q1, cplx a1, cplx b1, cplx c1, cplx d1,
                                     cplx s2, cplx q2, cplx a2, cplx b2, cplx c2, cplx d2);

// 16x16 matrix from the structural table of the trigonometric form.
Mat table_op(const CoefficientSet& co);

// 16x16 matrix from the structural table of the rational form (no unit shifts).
Mat rational_op(const CoefficientSet& co);

struct RMatrix {
  Mat op;
  Kinematics k1, k2;
  CoefficientSet co;
};

RMatrix r_fund_table(const Kinematics& k1, const Kinematics& k2);

// Independent construction: evaluation of the universal loop-sum form.
Mat r_fund_universal(const Kinematics& k1, const Kinematics& k2);

// r = (z1 s12 + z2 s21) / (z1 - z2); t = s12 + s21 is the split-independent part.
struct STSplit {
  Mat s12, s21, t12;
};
STSplit st_split(const Kinematics& k1, const Kinematics& k2);

// Graded permutation operator on the two-site space.
const Mat& p16();
const GradedSpace& two_site_space();

// max |[r12, r13] + [r12, r23] + [r13, r23]| for the given embedded legs.
double cybe_bracket_residual(const Mat& r12, const Mat& r13, const Mat& r23);

// CYBE residual for three sites; perturb rescales each S-generator by z,
// which must break the identity (negative control).
double cybe_residual(const Kinematics& k1, const Kinematics& k2, const Kinematics& k3,
                     bool perturb = false);

// max |r(1,2) + P r(2,1) P|.
double antisymmetry_residual(const Kinematics& k1, const Kinematics& k2);

// The pure-gauge freedom: a multiple of the identity on the two-site space.
CoefficientSet shift_coefficients(const CoefficientSet& co, cplx lambda);

// Polynomial relations among the ten coefficients, named.
std::vector<NamedResidual> coefficient_identities(const CoefficientSet& co, cplx z1, cplx z2);

// Constant-free bilinear relations satisfied by the rational-form coefficients.
std::vector<NamedResidual> rational_identities(const CoefficientSet& co);

// Relations surviving the identity shift (value independent of lambda) and a
// witness combination that does depend on it.
std::vector<NamedResidual> shift_survivors(const CoefficientSet& co, cplx lambda);
cplx shift_breaker(const CoefficientSet& co);

// Numerical rank of the map (x1, x2, gamma1, gamma2, h, lambda) -> (A..L).
struct CoefficientRank {
  Eigen::VectorXd singular_values;  // descending
  int rank;                         // at relative threshold 1e-8
};
CoefficientRank coefficient_rank(const GlobalParams& gp, cplx x1, cplx x2, cplx g1, cplx g2);

}  // namespace gl22
