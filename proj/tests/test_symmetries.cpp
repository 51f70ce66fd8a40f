#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gl22/symmetries.hpp>

#include <complex>

using namespace gl22;

namespace {

const GlobalParams kGp = make_global(cplx(0.31, 0.11), cplx(0.83, -0.21));

struct Pair {
  Kinematics k1, k2;
};

Pair sample(cplx x1, cplx x2) {
  return {derive_kinematics(kGp, x1, cplx(1.1, -0.2)),
          derive_kinematics(kGp, x2, cplx(0.8, 0.3))};
}

void check_bundle(const std::vector<NamedResidual>& checks, size_t expected_size, double tol) {
  CHECK(checks.size() == expected_size);
  const NamedResidual w = worst_entry(checks);
  INFO("worst residual: ", w.name, " = ", w.value);
  CHECK(w.value <= tol);
}

}  // namespace

TEST_CASE("conjugation x -> 1/x: site maps and coefficient exchange") {
  const Pair p = sample(cplx(2.3, 0.4), cplx(-1.1, 0.9));
  const Kinematics kc = conjugate_site(kGp, p.k1);
  CHECK(std::abs(kc.x - 1.0 / p.k1.x) <= 1e-15);
  CHECK(std::abs(kc.z - p.k1.z) <= 1e-14);
  CHECK(std::abs(kc.q + p.k1.q) <= 1e-14);
  check_bundle(conjugation_relations(kGp, p.k1, p.k2), 28, 1e-11);
  const Pair q = sample(cplx(1.9, -0.7), cplx(0.3, 1.6));
  check_bundle(conjugation_relations(kGp, q.k1, q.k2), 28, 1e-11);
}

TEST_CASE("spectral inversion z -> 1/z: sign flip of all coefficients") {
  const Pair p = sample(cplx(2.3, 0.4), cplx(-1.1, 0.9));
  const Kinematics ki = invert_z(kGp, p.k1);
  CHECK(std::abs(ki.z - 1.0 / p.k1.z) <= 1e-14);
  CHECK(std::abs(ki.q - p.k1.z * p.k1.q) <= 1e-14);
  check_bundle(inversion_relations(kGp, p.k1, p.k2), 15, 1e-11);
  const Pair q = sample(cplx(1.9, -0.7), cplx(0.3, 1.6));
  check_bundle(inversion_relations(kGp, q.k1, q.k2), 15, 1e-11);
}

TEST_CASE("statistics flip: boson and fermion blocks trade places") {
  const Pair p = sample(cplx(2.3, 0.4), cplx(-1.1, 0.9));
  const Kinematics kf = statistics_flip(kGp, p.k1);
  CHECK(kf.x == p.k1.x);
  CHECK(std::abs(kf.z - p.k1.z) <= 1e-15);
  CHECK(std::abs(kf.q - p.k1.q) <= 1e-14);
  check_bundle(flip_relations(kGp, p.k1, p.k2), 14, 1e-11);
  const Pair q = sample(cplx(1.9, -0.7), cplx(0.3, 1.6));
  check_bundle(flip_relations(kGp, q.k1, q.k2), 14, 1e-11);
}

TEST_CASE("coupling duality h <-> -h': the r-matrix is blind to the swap") {
  const GlobalParams gpd = dual_global(kGp);
  CHECK(std::abs(gpd.h + kGp.hp) <= 1e-16);
  CHECK(std::abs(gpd.hp - kGp.h) <= 1e-16);
  CHECK(std::abs(gpd.h * gpd.h + gpd.hp * gpd.hp - cplx(1)) <= 1e-15);
  const Pair p = sample(cplx(2.3, 0.4), cplx(-1.1, 0.9));
  check_bundle(duality_relations(kGp, p.k1, p.k2), 15, 1e-11);
  const Pair q = sample(cplx(1.9, -0.7), cplx(0.3, 1.6));
  check_bundle(duality_relations(kGp, q.k1, q.k2), 15, 1e-11);
}

TEST_CASE("orders of the discrete maps") {
  const Kinematics kn = derive_kinematics(kGp, cplx(2.3, 0.4), cplx(1.1, -0.2));
  check_bundle(group_relations(kGp, kn), 12, 1e-13);
  // The square of conjugation flips the sign of gamma but nothing else.
  const Kinematics c2 = conjugate_site(kGp, conjugate_site(kGp, kn));
  CHECK(std::abs(c2.gamma + kn.gamma) <= 1e-14);
  CHECK(std::abs(c2.b + kn.b) <= 1e-13);  // b is odd in gamma
  CHECK(std::abs(c2.z - kn.z) <= 1e-14);  // z is gamma-blind
}

TEST_CASE("transport factors are unimodular where the maps preserve det T") {
  CHECK(std::abs(conjugation_right_factor().determinant() - cplx(1)) <= 1e-15);
  CHECK(std::abs(inversion_left_factor(kGp).determinant() - cplx(1)) <= 1e-15);
  CHECK(std::abs(duality_left_factor(kGp, cplx(0.4, 0.3)).determinant() - cplx(1)) <= 1e-15);
  // The flip transports det T = 1 through two factors of determinant -1.
  const cplx z(0.4, 0.3);
  CHECK(std::abs(flip_left_factor(kGp, z).determinant() * flip_right_factor().determinant() -
                 cplx(1)) <= 1e-13);
}
