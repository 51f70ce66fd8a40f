#pragma once

// The eight limiting r-matrices: parameter paths into each limit, closed-form
// limit coefficients, convergence of the rescaled full r-matrix, the limit
// algebra data (W, U, V and the site derivation), untwisting gauge maps, and
// the degeneration graph between the limits.

#include "gl22/params.hpp"
#include "gl22/report.hpp"
#include "gl22/rmatrix.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace gl22 {

enum class LimitFamily {
  FullRational,
  ConvRational,
  ConvTrig,
  TwistRational,
  TwistTrig,
  SpecialInf,
  SpecialZero,
  SpecialRational,
};

inline constexpr std::array<LimitFamily, 8> kAllFamilies{
    LimitFamily::FullRational,  LimitFamily::ConvRational, LimitFamily::ConvTrig,
    LimitFamily::TwistRational, LimitFamily::TwistTrig,    LimitFamily::SpecialInf,
    LimitFamily::SpecialZero,   LimitFamily::SpecialRational,
};

std::string family_name(LimitFamily f);
LimitFamily family_from_name(const std::string& name);

// Trig families keep the unit shifts in the structural table; rational ones drop them.
bool family_is_trig(LimitFamily f);

struct LimitInputs {
  cplx s1, s2;    // per-site parameters of the limit family
  cplx g1, g2;    // per-site gammas
  cplx alpha;     // coupling surviving in the limit
  cplx h0 = 0.0;  // finite h kept by the conventional / twisted-rational paths
  cplx x0 = 0.0;  // expansion point of the conventional rational path
};

struct LimitPathPoint {
  GlobalParams gp;
  Kinematics k1, k2;
  cplx rescale;  // the limit is rescale * r(eps) -> r_limit as eps -> 0
};
LimitPathPoint limit_path(LimitFamily f, const LimitInputs& in, double eps);

// Site data surviving the limit; sigma is the argument fed to the coefficient
// kernel (a rational parameter or the residual spectral parameter z-tilde).
struct LimitSite {
  cplx a, b, c, d, q;
  cplx sigma;
};

// Defined for all families except the two conventional ones (which have no
// deformed site data left); throws for those.
LimitSite limit_site(LimitFamily f, cplx v, cplx gamma, cplx alpha);

CoefficientSet limit_coefficients(LimitFamily f, const LimitInputs& in);

// Structural table of the matching form (trig or rational) on the coefficients.
Mat build_limit_r(LimitFamily f, const CoefficientSet& co);

// Least-squares slope of log(err) against log(eps).
double fit_order(const std::vector<double>& eps, const std::vector<double>& err);

struct ConvergenceData {
  std::vector<double> eps;
  std::vector<double> err;
  double order;
};
ConvergenceData convergence_check(LimitFamily f, const LimitInputs& in,
                                  const std::vector<double>& eps_list = {1e-2, 1e-3, 1e-4});

// CYBE residual of the limit r-matrix on three sites (s3, g3 extends in).
double limit_cybe(LimitFamily f, const LimitInputs& in, cplx s3, cplx g3);

// Closed-form limit of the algebra data: bracket matrix W, derivation
// connection U and scalar V, and the prefactor turning d/dv into the
// preferred derivation D = dfactor(v) d/dv.
struct LimitAlgebra {
  bool available = false;
  Mat2 W, U;
  cplx V = 0.0;
  cplx dfactor = 0.0;
};
LimitAlgebra limit_algebra(LimitFamily f, cplx v, cplx alpha);

// Site constraints, derivation identities (via high-order finite differences),
// the gauge-covariant transport of T, and bracket closure with the W entries.
std::vector<NamedResidual> limit_algebra_relations(LimitFamily f, cplx v, cplx gamma,
                                                   cplx alpha);

// Gauge map removing the twist: W -> constant off-diagonal (or sigma3) form
// with U and V mapped to zero.  Defined for the twisted and the z-fixed
// special family; throws otherwise.
std::vector<NamedResidual> untwist_relations(LimitFamily f, cplx v, cplx alpha);

// Degeneration partial order.  Each node carries the multiset of block
// signatures (odd count, shift count) of its algebra; an edge means the
// source's blocks merge strictly onto the destination's.
struct DegenerationNode {
  std::string name;
  std::vector<std::pair<int, int>> blocks;
};
const std::vector<DegenerationNode>& degeneration_nodes();
bool coarsens(std::vector<std::pair<int, int>> src, std::vector<std::pair<int, int>> dst);
std::map<std::string, std::vector<std::string>> degeneration_graph();
std::map<std::string, std::vector<std::string>> reference_edges();
std::string family_node(LimitFamily f);

}  // namespace gl22
