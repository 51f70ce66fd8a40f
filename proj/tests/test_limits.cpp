#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gl22/limits.hpp>

#include <cmath>
#include <complex>
#include <vector>

using namespace gl22;

namespace {

const cplx I(0, 1);

LimitInputs pinned(LimitFamily f) {
  LimitInputs in;
  in.g1 = cplx(1.1);
  in.g2 = cplx(0.8, 0.3);
  in.alpha = cplx(0.83, -0.21);
  switch (f) {
    case LimitFamily::FullRational:
      in.s1 = {2.3, 0.4};
      in.s2 = {-1.1, 0.9};
      break;
    case LimitFamily::ConvRational:
      in.s1 = {0.9, 0.2};
      in.s2 = {-0.4, 1.1};
      in.h0 = {0.31, 0.11};
      in.x0 = {1.9, 0.6};
      break;
    case LimitFamily::ConvTrig:
      in.s1 = {1.7, 0.5};
      in.s2 = {-0.8, 1.2};
      in.h0 = {0.31, 0.11};
      break;
    case LimitFamily::TwistRational:
      in.s1 = {1.3, 0.3};
      in.s2 = {-0.7, 0.8};
      in.alpha = {0.9, 0.1};
      in.h0 = {0.31, 0.11};
      break;
    case LimitFamily::TwistTrig:
      in.s1 = {1.3, 0.3};
      in.s2 = {2.1, -0.6};
      break;
    case LimitFamily::SpecialInf:
      in.s1 = {1.9, 0.6};
      in.s2 = {-2.2, 0.5};
      in.alpha = {0.9, 0.1};
      break;
    case LimitFamily::SpecialZero:
      in.s1 = {1.7, 0.5};
      in.s2 = {-0.8, 1.2};
      break;
    case LimitFamily::SpecialRational:
      in.s1 = {2.3, 0.4};
      in.s2 = {-1.1, 0.9};
      break;
  }
  return in;
}

// In-test re-derivations of the limiting site data, written out independently.
struct Site {
  cplx sig, q, a, b, c, d;
};

Site full_rational_site(cplx u, cplx g, cplx al) {
  const cplx root = std::sqrt(u * u - 4.0);
  cplx x = 0.5 * (u + root);
  if (std::abs(x) <= 1.0) x = 0.5 * (u - root);
  const cplx x2m1 = x * x - 1.0;
  return {u, -I * x / x2m1, g, -I * al * x / (g * x2m1), I * g / (al * x), x * x / (g * x2m1)};
}

Site twist_site(cplx y, cplx g, cplx al) {
  return {y * y, 0.5 / y, g, al / (2.0 * y * g), -g * y / al, 0.5 / g};
}

Site special_inf_site(cplx x, cplx g, cplx al) {
  const cplx zt = -4.0 * x / ((x - 1.0) * (x - 1.0));
  return {zt, -(x - 1.0) / (x + 1.0), g, -0.5 * (al / g) * (x - 1.0) / (x + 1.0),
          2.0 * g / (al * (x - 1.0)), x / (g * (x + 1.0))};
}

Site special_zero_site(cplx v, cplx g) { return {v, 1.0 / (v - 1.0), g, 0.0, 0.0, 1.0 / g}; }

Site special_rational_site(cplx v, cplx g) { return {v, -1.0 / v, g, 0.0, 0.0, 1.0 / g}; }

// Independent transcriptions of the two coefficient kernels.
CoefficientSet rational_kernel(const Site& s1, const Site& s2) {
  const cplx ds = s1.sig - s2.sig;
  CoefficientSet co;
  co.A = co.D = (2.0 + s1.q / s2.q + s2.q / s1.q) / (4.0 * ds);
  co.B = co.E = 2.0 / ds - co.A;
  co.C = (s1.a * s2.c - s2.a * s1.c) / ds;
  co.F = (s1.b * s2.d - s2.b * s1.d) / ds;
  co.G = (s2.q / s1.q - s1.q / s2.q) / (4.0 * ds);
  co.L = -co.G;
  co.H = (s1.a * s2.d - s2.b * s1.c) / ds;
  co.K = (s2.a * s1.d - s1.b * s2.c) / ds;
  return co;
}

CoefficientSet trig_kernel(const Site& s1, const Site& s2) {
  const cplx z1 = s1.sig, z2 = s2.sig, dz = z1 - z2;
  CoefficientSet co;
  co.A = co.D = (z1 + z2 + z1 * s1.q / s2.q + z2 * s2.q / s1.q) / (4.0 * dz);
  co.B = co.E = 2.0 * z1 / dz - 1.0 - co.A;
  co.C = (z1 * s1.a * s2.c - z2 * s2.a * s1.c) / dz;
  co.F = (z1 * s1.b * s2.d - z2 * s2.b * s1.d) / dz;
  co.G = (z2 * s2.q / s1.q - z1 * s1.q / s2.q) / (4.0 * dz);
  co.L = -co.G;
  co.H = (z1 * s1.a * s2.d - z2 * s2.b * s1.c) / dz;
  co.K = (z2 * s2.a * s1.d - z1 * s1.b * s2.c) / dz;
  return co;
}

double coeff_gap(const CoefficientSet& x, const CoefficientSet& y) {
  double w = 0.0;
  auto up = [&](cplx u, cplx v) { w = std::max(w, std::abs(u - v)); };
  up(x.A, y.A);
  up(x.B, y.B);
  up(x.C, y.C);
  up(x.D, y.D);
  up(x.E, y.E);
  up(x.F, y.F);
  up(x.G, y.G);
  up(x.H, y.H);
  up(x.K, y.K);
  up(x.L, y.L);
  return w;
}

}  // namespace

TEST_CASE("family names, kernel kinds and graph nodes") {
  for (LimitFamily f : kAllFamilies) CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_name("nope"), std::invalid_argument);
  CHECK_FALSE(family_is_trig(LimitFamily::FullRational));
  CHECK(family_is_trig(LimitFamily::ConvTrig));
  CHECK(family_is_trig(LimitFamily::TwistTrig));
  CHECK_FALSE(family_is_trig(LimitFamily::TwistRational));
  CHECK(family_is_trig(LimitFamily::SpecialInf));
  CHECK(family_is_trig(LimitFamily::SpecialZero));
  CHECK_FALSE(family_is_trig(LimitFamily::SpecialRational));
  CHECK(family_node(LimitFamily::FullRational) == "R(full)");
  CHECK(family_node(LimitFamily::ConvRational) == "R(conv)");
  CHECK(family_node(LimitFamily::ConvTrig) == "T(conv)");
  CHECK(family_node(LimitFamily::TwistRational) == "R(twist)");
  CHECK(family_node(LimitFamily::TwistTrig) == "T(twist)");
  CHECK(family_node(LimitFamily::SpecialInf) == "T(inf)");
  CHECK(family_node(LimitFamily::SpecialZero) == "T(0)");
  CHECK(family_node(LimitFamily::SpecialRational) == "R(def)");
}

TEST_CASE("limit coefficients match independent closed forms") {
  // the two conventional families in their direct difference form
  {
    const LimitInputs in = pinned(LimitFamily::ConvRational);
    const CoefficientSet co = limit_coefficients(LimitFamily::ConvRational, in);
    const cplx du = in.s1 - in.s2;
    CHECK(std::abs(co.A - 1.0 / du) <= 1e-15);
    CHECK(std::abs(co.B - 1.0 / du) <= 1e-15);
    CHECK(std::abs(co.H - in.g1 / (in.g2 * du)) <= 1e-15);
    CHECK(std::abs(co.K - in.g2 / (in.g1 * du)) <= 1e-15);
    CHECK(co.C == cplx(0));
    CHECK(co.G == cplx(0));
  }
  {
    const LimitInputs in = pinned(LimitFamily::ConvTrig);
    const CoefficientSet co = limit_coefficients(LimitFamily::ConvTrig, in);
    const cplx dz = in.s1 - in.s2;
    CHECK(std::abs(co.A - 0.5 * (in.s1 + in.s2) / dz) <= 1e-15);
    CHECK(std::abs(co.G - 0.25) <= 1e-15);
    CHECK(std::abs(co.L + 0.25) <= 1e-15);
    CHECK(std::abs(co.H - in.g1 * in.s1 / (in.g2 * dz)) <= 1e-15);
    CHECK(std::abs(co.K - in.g2 * in.s2 / (in.g1 * dz)) <= 1e-15);
    CHECK(co.F == cplx(0));
  }
  // the six site-based families against re-derived sites and kernels
  {
    const LimitInputs in = pinned(LimitFamily::FullRational);
    const CoefficientSet want = rational_kernel(full_rational_site(in.s1, in.g1, in.alpha),
                                                full_rational_site(in.s2, in.g2, in.alpha));
    CHECK(coeff_gap(limit_coefficients(LimitFamily::FullRational, in), want) <= 1e-14);
  }
  {
    const LimitInputs in = pinned(LimitFamily::TwistRational);
    const CoefficientSet want = rational_kernel(twist_site(in.s1, in.g1, in.alpha),
                                                twist_site(in.s2, in.g2, in.alpha));
    CHECK(coeff_gap(limit_coefficients(LimitFamily::TwistRational, in), want) <= 1e-14);
  }
  {
    const LimitInputs in = pinned(LimitFamily::TwistTrig);
    const CoefficientSet want = trig_kernel(twist_site(in.s1, in.g1, in.alpha),
                                            twist_site(in.s2, in.g2, in.alpha));
    CHECK(coeff_gap(limit_coefficients(LimitFamily::TwistTrig, in), want) <= 1e-14);
  }
  {
    const LimitInputs in = pinned(LimitFamily::SpecialInf);
    const CoefficientSet want = trig_kernel(special_inf_site(in.s1, in.g1, in.alpha),
                                            special_inf_site(in.s2, in.g2, in.alpha));
    CHECK(coeff_gap(limit_coefficients(LimitFamily::SpecialInf, in), want) <= 1e-14);
  }
  {
    const LimitInputs in = pinned(LimitFamily::SpecialZero);
    const CoefficientSet want =
        trig_kernel(special_zero_site(in.s1, in.g1), special_zero_site(in.s2, in.g2));
    CHECK(coeff_gap(limit_coefficients(LimitFamily::SpecialZero, in), want) <= 1e-14);
  }
  {
    const LimitInputs in = pinned(LimitFamily::SpecialRational);
    const CoefficientSet want =
        rational_kernel(special_rational_site(in.s1, in.g1), special_rational_site(in.s2, in.g2));
    CHECK(coeff_gap(limit_coefficients(LimitFamily::SpecialRational, in), want) <= 1e-14);
  }
}

TEST_CASE("rescaled full r-matrix converges to every limit form") {
  for (LimitFamily f : kAllFamilies) {
    const ConvergenceData cd = convergence_check(f, pinned(f));
    INFO("family ", family_name(f), ": order ", cd.order, ", err(1e-4) = ", cd.err.back());
    CHECK(cd.order >= 0.9);
    CHECK(cd.err[1] < cd.err[0]);
    CHECK(cd.err[2] < cd.err[1]);
  }
}

TEST_CASE("every limit r-matrix satisfies the classical Yang-Baxter equation") {
  for (LimitFamily f : kAllFamilies) {
    const double res = limit_cybe(f, pinned(f), cplx(-0.9, 0.7), cplx(1.4, -0.2));
    INFO("family ", family_name(f));
    CHECK(res <= 1e-12);
  }
}

TEST_CASE("constant-free bilinear identities hold for the rational limits") {
  for (LimitFamily f : {LimitFamily::FullRational, LimitFamily::TwistRational,
                        LimitFamily::SpecialRational}) {
    const CoefficientSet co = limit_coefficients(f, pinned(f));
    INFO("family ", family_name(f));
    CHECK(worst(rational_identities(co)) <= 1e-12);
  }
}

TEST_CASE("limit algebra data: site constraints, derivation, bracket closure") {
  const cplx gamma(0.9, 0.4), alpha(0.83, -0.21);
  const struct {
    LimitFamily f;
    cplx v;
  } pts[] = {
      {LimitFamily::FullRational, {1.7, 0.6}},   {LimitFamily::TwistRational, {1.3, 0.3}},
      {LimitFamily::TwistTrig, {1.3, 0.3}},      {LimitFamily::SpecialInf, {1.9, 0.6}},
      {LimitFamily::SpecialZero, {1.7, 0.5}},    {LimitFamily::SpecialRational, {2.3, 0.4}},
  };
  for (const auto& pt : pts) {
    const auto checks = limit_algebra_relations(pt.f, pt.v, gamma, alpha);
    CHECK(checks.size() == 8);
    const NamedResidual w = worst_entry(checks);
    INFO("family ", family_name(pt.f), ", worst: ", w.name, " = ", w.value);
    CHECK(w.value <= 1e-8);
  }
  CHECK_THROWS_AS(limit_algebra_relations(LimitFamily::ConvTrig, cplx(1.5), gamma, alpha),
                  std::invalid_argument);
  CHECK_FALSE(limit_algebra(LimitFamily::ConvRational, cplx(1.5), alpha).available);
}

TEST_CASE("full-family algebra data is the h -> 0 limit of the torsion data") {
  const cplx x(1.7, 0.6), alpha(0.83, -0.21), gamma(0.9, 0.4);
  const LimitAlgebra alg = limit_algebra(LimitFamily::FullRational, x, alpha);
  double errw[2], erru[2], errv[2];
  const double epss[2] = {1e-3, 1e-5};
  for (int i = 0; i < 2; ++i) {
    const double eps = epss[i];
    const GlobalParams gpe = make_global(cplx(eps), alpha);
    const Kinematics kn = derive_kinematics(gpe, x, gamma);
    errw[i] = max_abs(Mat2(kn.W - alg.W));
    erru[i] = max_abs(Mat2(I * eps * kn.U - alg.U));
    errv[i] = std::abs(I * eps * kn.V - alg.V);
  }
  CHECK(errw[1] < errw[0] / 50.0);
  CHECK(erru[1] < erru[0] / 50.0);
  CHECK(errv[1] < errv[0] / 50.0);
  CHECK(errw[1] <= 1e-3);
}

TEST_CASE("the two twisted families share one site map") {
  const cplx v(1.3, 0.3), gamma(0.9, 0.4), alpha(0.9, 0.1);
  const LimitSite s4 = limit_site(LimitFamily::TwistRational, v, gamma, alpha);
  const LimitSite s5 = limit_site(LimitFamily::TwistTrig, v, gamma, alpha);
  CHECK(s4.a == s5.a);
  CHECK(s4.b == s5.b);
  CHECK(s4.c == s5.c);
  CHECK(s4.d == s5.d);
  CHECK(s4.q == s5.q);
  CHECK(s4.sigma == s5.sigma);
}

TEST_CASE("untwisting gauge maps") {
  const cplx alpha(0.9, 0.1);
  for (auto [f, v] : {std::pair{LimitFamily::TwistRational, cplx(1.3, 0.3)},
                      std::pair{LimitFamily::TwistTrig, cplx(1.3, 0.3)},
                      std::pair{LimitFamily::SpecialZero, cplx(1.7, 0.5)}}) {
    const auto checks = untwist_relations(f, v, alpha);
    CHECK(checks.size() == 3);
    INFO("family ", family_name(f));
    CHECK(worst(checks) <= 1e-14);
  }
  CHECK_THROWS_AS(untwist_relations(LimitFamily::FullRational, cplx(1.5), alpha),
                  std::invalid_argument);
}

TEST_CASE("degeneration graph equals the pinned arrow list") {
  const auto& nodes = degeneration_nodes();
  CHECK(nodes.size() == 9);
  CHECK(nodes.front().name == "T(h)");
  CHECK(nodes.front().blocks.size() == 4);

  CHECK(coarsens(nodes.front().blocks, {{2, 2}}));         // everything merges to one block
  CHECK_FALSE(coarsens({{2, 2}}, nodes.front().blocks));   // nothing un-merges
  CHECK_FALSE(coarsens({{1, 0}, {1, 0}, {0, 2}},           // equal block counts never coarsen
                       {{1, 0}, {1, 1}, {0, 1}}));

  const auto graph = degeneration_graph();
  const auto ref = reference_edges();
  CHECK(graph == ref);
  std::size_t edges = 0;
  for (const auto& [src, dst] : graph) edges += dst.size();
  CHECK(edges == 22);
}

TEST_CASE("invalid limit requests throw") {
  LimitInputs in = pinned(LimitFamily::ConvRational);
  in.s2 = in.s1;
  CHECK_THROWS_AS(limit_coefficients(LimitFamily::ConvRational, in), std::domain_error);
  LimitInputs tw = pinned(LimitFamily::TwistRational);
  tw.s2 = -tw.s1;  // sigma = y^2 collides even though y1 != y2
  CHECK_THROWS_AS(limit_coefficients(LimitFamily::TwistRational, tw), std::domain_error);
  CHECK_THROWS_AS(limit_site(LimitFamily::ConvRational, cplx(1.0), cplx(1.0), cplx(1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(limit_site(LimitFamily::ConvTrig, cplx(1.0), cplx(1.0), cplx(1.0)),
                  std::invalid_argument);
}
