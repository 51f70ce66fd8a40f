#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gl22/superlinalg.hpp>

#include <complex>
#include <random>
#include <vector>

using namespace gl22;

namespace {

std::mt19937_64 rng(20260814u);

cplx random_cplx() {
  static std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng)};
}

// Dense random matrix mapping `in` to `out` with no parity structure.
Mat random_mat(int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_cplx();
  return m;
}

// Random parity-homogeneous operator: entries only where out+in parity == p.
Mat random_homogeneous(const GradedSpace& out, const GradedSpace& in, int p) {
  Mat m = Mat::Zero(out.dim(), in.dim());
  for (int i = 0; i < out.dim(); ++i)
    for (int j = 0; j < in.dim(); ++j)
      if ((out.parity(i) + in.parity(j)) % 2 == p) m(i, j) = random_cplx();
  return m;
}

}  // namespace

TEST_CASE("graded space bookkeeping") {
  const GradedSpace f = GradedSpace::fundamental();
  CHECK(f.dim() == 4);
  CHECK(f.parities() == std::vector<int>{0, 0, 1, 1});
  const GradedSpace ff = f.tensor(f);
  CHECK(ff.dim() == 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(ff.parity(i * 4 + j) == (f.parity(i) + f.parity(j)) % 2);
}

TEST_CASE("kron_graded matches its defining elementwise sign rule") {
  const GradedSpace s1({0, 1, 0});
  const GradedSpace s2({1, 0});
  const Mat a = random_mat(3, 3);
  const Mat b = random_mat(2, 2);
  for (int pb : {0, 1}) {
    const Mat m = kron_graded(a, b, pb, s1);
    REQUIRE(m.rows() == 6);
    REQUIRE(m.cols() == 6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 2; ++l) {
            const double sgn = (pb && s1.parity(k)) ? -1.0 : 1.0;
            const cplx want = sgn * a(i, k) * b(j, l);
            CHECK(std::abs(m(i * 2 + j, k * 2 + l) - want) <= 1e-15);
          }
  }
}

TEST_CASE("mixed product rule (A x B)(C x D) = (-1)^{|B||C|} AC x BD") {
  const GradedSpace f = GradedSpace::fundamental();
  for (int pa : {0, 1})
    for (int pb : {0, 1})
      for (int pc : {0, 1})
        for (int pd : {0, 1}) {
          const Mat a = random_homogeneous(f, f, pa);
          const Mat b = random_homogeneous(f, f, pb);
          const Mat c = random_homogeneous(f, f, pc);
          const Mat d = random_homogeneous(f, f, pd);
          const Mat lhs = kron_graded(a, b, pb, f) * kron_graded(c, d, pd, f);
          const double sgn = (pb && pc) ? -1.0 : 1.0;
          const Mat rhs = sgn * kron_graded(Mat(a * c), Mat(b * d), (pb + pd) % 2, f);
          CHECK(max_abs(Mat(lhs - rhs)) <= 1e-13);
        }
}

TEST_CASE("graded swap: elementwise form, involution, conjugation rule") {
  const GradedSpace f = GradedSpace::fundamental();
  const Mat p = graded_swap(f, f);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx want = (f.parity(i) && f.parity(j)) ? cplx(-1) : cplx(1);
      CHECK(std::abs(p(j * 4 + i, i * 4 + j) - want) <= 1e-15);
    }
  CHECK(max_abs(Mat(p * p - Mat::Identity(16, 16))) <= 1e-15);

  // P (A x B) P = (-1)^{|A||B|} (B x A) for homogeneous A, B.
  for (int pa : {0, 1})
    for (int pb : {0, 1}) {
      const Mat a = random_homogeneous(f, f, pa);
      const Mat b = random_homogeneous(f, f, pb);
      const Mat lhs = p * kron_graded(a, b, pb, f) * p;
      const double sgn = (pa && pb) ? -1.0 : 1.0;
      CHECK(max_abs(Mat(lhs - sgn * kron_graded(b, a, pa, f))) <= 1e-13);
    }
}

TEST_CASE("adjacent_swap acts on basis vectors with the Koszul sign") {
  const GradedSpace f = GradedSpace::fundamental();
  const int n = 3, d = 4;
  for (int k : {0, 1}) {
    const Mat p = adjacent_swap(k, n, f);
    Mat want = Mat::Zero(64, 64);
    for (int i0 = 0; i0 < d; ++i0)
      for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = 0; i2 < d; ++i2) {
          int idx[3] = {i0, i1, i2};
          const int col = (idx[0] * d + idx[1]) * d + idx[2];
          const double sgn = (f.parity(idx[k]) && f.parity(idx[k + 1])) ? -1.0 : 1.0;
          std::swap(idx[k], idx[k + 1]);
          const int row = (idx[0] * d + idx[1]) * d + idx[2];
          want(row, col) = sgn;
        }
    CHECK(max_abs(Mat(p - want)) <= 1e-15);
    CHECK(max_abs(Mat(p * p - Mat::Identity(64, 64))) <= 1e-15);
  }
}

TEST_CASE("embed_legs agrees with first-principles tensor placement") {
  const GradedSpace f = GradedSpace::fundamental();
  const GradedSpace ff = f.tensor(f);
  const Mat id4 = Mat::Identity(4, 4);
  for (int px : {0, 1})
    for (int py : {0, 1}) {
      const Mat x = random_homogeneous(f, f, px);
      const Mat y = random_homogeneous(f, f, py);
      const Mat op = kron_graded(x, y, py, f);  // X x Y on two legs
      const int pop = (px + py) % 2;

      // Legs (0,1): op x I.  Legs (1,2): I x op.
      const Mat e01 = embed_legs(op, 0, 1, 3, f, pop);
      CHECK(max_abs(Mat(e01 - kron_graded(op, id4, 0, ff))) <= 1e-13);
      const Mat e12 = embed_legs(op, 1, 2, 3, f, pop);
      CHECK(max_abs(Mat(e12 - kron_graded(Mat(Mat::Identity(4, 4)), op, pop, f))) <= 1e-13);

      // Legs (0,2): X x I x Y, the even identity slides past Y with no sign.
      const Mat e02 = embed_legs(op, 0, 2, 3, f, pop);
      const Mat want = kron_graded(Mat(kron_graded(x, id4, 0, f)), y, py, ff);
      CHECK(max_abs(Mat(e02 - want)) <= 1e-13);

      // Same thing as a product of single-leg embeddings.
      const Mat x0 = kron_graded(Mat(kron_graded(x, id4, 0, f)), id4, 0, ff);
      const Mat y2 = kron_graded(Mat(Mat::Identity(16, 16)), y, py, ff);
      CHECK(max_abs(Mat(e02 - x0 * y2)) <= 1e-13);
    }
}

TEST_CASE("supercommutator: commutator vs anticommutator by parity") {
  const GradedSpace f = GradedSpace::fundamental();
  const Mat a1 = random_homogeneous(f, f, 1);
  const Mat b1 = random_homogeneous(f, f, 1);
  const Mat a0 = random_homogeneous(f, f, 0);
  CHECK(max_abs(Mat(supercommutator<cplx>(a1, 1, b1, 1) - (a1 * b1 + b1 * a1))) <= 1e-15);
  CHECK(max_abs(Mat(supercommutator<cplx>(a0, 0, b1, 1) - (a0 * b1 - b1 * a0))) <= 1e-15);
  // Graded antisymmetry [A,B} = -(-1)^{|A||B|} [B,A}: odd-odd is symmetric.
  CHECK(max_abs(Mat(supercommutator<cplx>(a1, 1, b1, 1) - supercommutator<cplx>(b1, 1, a1, 1))) <=
        1e-15);
  CHECK(max_abs(Mat(supercommutator<cplx>(a0, 0, b1, 1) + supercommutator<cplx>(b1, 1, a0, 0))) <=
        1e-15);
}

TEST_CASE("homogeneity_violation flags off-parity entries") {
  const GradedSpace f = GradedSpace::fundamental();
  Mat m = random_homogeneous(f, f, 1);
  CHECK(homogeneity_violation(m, 1, f, f) == 0.0);
  CHECK(homogeneity_violation(m, 0, f, f) > 0.0);
  m(0, 1) = cplx(0.25, 0.0);  // even-even slot pollutes an odd operator
  CHECK(homogeneity_violation(m, 1, f, f) == doctest::Approx(0.25));
}

TEST_CASE("GradedOperator wrapper tracks parity and spaces through products") {
  const GradedSpace f = GradedSpace::fundamental();
  const GradedOperator a{random_homogeneous(f, f, 1), 1, f, f};
  const GradedOperator b{random_homogeneous(f, f, 1), 1, f, f};
  CHECK(a.homogeneity_violation() == 0.0);
  const GradedOperator ab = kron_graded(a, b);
  CHECK(ab.parity == 0);
  CHECK(ab.out_space == f.tensor(f));
  CHECK(max_abs(Mat(ab.mat - kron_graded(a.mat, b.mat, 1, f))) == 0.0);
  CHECK(ab.homogeneity_violation() == 0.0);
  const GradedOperator sc = supercommutator(a, b);
  CHECK(sc.parity == 0);
  CHECK(max_abs(Mat(sc.mat - (a.mat * b.mat + b.mat * a.mat))) <= 1e-15);
}

TEST_CASE("argument validation") {
  const GradedSpace f = GradedSpace::fundamental();
  const Mat a = random_mat(4, 4);
  CHECK_THROWS_AS(kron_graded<cplx>(a, a, 0, std::vector<int>{0, 1}), std::invalid_argument);
  const Mat op = random_mat(16, 16);
  CHECK_THROWS_AS(embed_legs(op, 1, 1, 3, f), std::invalid_argument);
  CHECK_THROWS_AS(embed_legs(op, 0, 3, 3, f), std::invalid_argument);
  CHECK_THROWS_AS(embed_legs(random_mat(8, 8), 0, 1, 3, f), std::invalid_argument);
}
