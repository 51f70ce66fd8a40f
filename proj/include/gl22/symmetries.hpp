#pragma once

// Discrete maps on the kinematic data that act on the r-matrix in closed form:
// conjugation (x -> 1/x), spectral inversion (z -> 1/z), the statistics flip
// (bosons <-> fermions), and the coupling duality (h <-> -h').  Each map comes
// with the induced relations on coefficients and on the 16x16 operator.

#include "gl22/params.hpp"
#include "gl22/report.hpp"
#include "gl22/rmatrix.hpp"

#include <vector>

namespace gl22 {

// x -> 1/x, gamma -> -alpha q / gamma: z fixed, q -> -q.
Kinematics conjugate_site(const GlobalParams& gp, const Kinematics& kn);

// x -> i(hx + ih')/(h'x - ih), gamma -> gamma/(h'x - ih): z -> 1/z, q -> z q.
Kinematics invert_z(const GlobalParams& gp, const Kinematics& kn);

// x fixed, gamma -> -alpha x q / gamma: z and q fixed, phi <-> psi roles swap.
Kinematics statistics_flip(const GlobalParams& gp, const Kinematics& kn);

// (h, h') -> (-h', h), alpha -> -(h/h') alpha, k -> i k.
GlobalParams dual_global(const GlobalParams& gp);

// Same (x, gamma) re-derived under the dual couplings: z -> -z, q -> -(h'/h) q.
Kinematics duality(const GlobalParams& gp, const Kinematics& kn);

// Left (and for some maps right) 2x2 transport factors in T' = R T (S).
Mat2 conjugation_right_factor();
Mat2 inversion_left_factor(const GlobalParams& gp);
Mat2 flip_left_factor(const GlobalParams& gp, cplx z);
Mat2 flip_right_factor();
Mat2 duality_left_factor(const GlobalParams& gp, cplx z);

// Relation bundles; every residual should vanish.
std::vector<NamedResidual> conjugation_relations(const GlobalParams& gp, const Kinematics& k1,
                                                 const Kinematics& k2);
std::vector<NamedResidual> inversion_relations(const GlobalParams& gp, const Kinematics& k1,
                                               const Kinematics& k2);
std::vector<NamedResidual> flip_relations(const GlobalParams& gp, const Kinematics& k1,
                                          const Kinematics& k2);
std::vector<NamedResidual> duality_relations(const GlobalParams& gp, const Kinematics& k1,
                                             const Kinematics& k2);

// Orders of the maps: squares fix x (conjugation and inversion send
// gamma -> -gamma, so their fourth powers are the identity); the statistics
// flip is an involution; the duality has order four on the couplings.
std::vector<NamedResidual> group_relations(const GlobalParams& gp, const Kinematics& kn);

}  // namespace gl22
