#pragma once

// Z2-graded dense linear algebra: graded tensor products, the graded swap,
// supercommutators and leg embeddings for multi-site operators.
//
// Conventions, fixed across the whole library:
//   * a graded space carries a parity (0 even, 1 odd) per basis vector;
//   * tensor bases are ordered lexicographically, |i> (x) |j> -> i*dim2 + j;
//   * (A (x) B)(v (x) w) = (-1)^{|B||v|} Av (x) Bw, so the matrix of the
//     graded Kronecker product is M[(i,j),(k,l)] = A(i,k) B(j,l) (-1)^{|B| p1[k]}.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gl22 {

using cplx = std::complex<double>;

template <class Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Mat = MatX<cplx>;
using Mat2 = Eigen::Matrix<cplx, 2, 2>;
using Mat4 = Eigen::Matrix<cplx, 4, 4>;

// Parity-graded basis bookkeeping for a finite-dimensional super vector space.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<int> parities) : parities_(std::move(parities)) {}

  // The 2|2-dimensional site space: two even then two odd basis vectors.
  static GradedSpace fundamental() { return GradedSpace({0, 0, 1, 1}); }

  int dim() const { return static_cast<int>(parities_.size()); }
  int parity(int i) const { return parities_[static_cast<size_t>(i)]; }
  const std::vector<int>& parities() const { return parities_; }

  GradedSpace tensor(const GradedSpace& other) const {
    std::vector<int> p;
    p.reserve(parities_.size() * other.parities_.size());
    for (int a : parities_)
      for (int b : other.parities_) p.push_back((a + b) % 2);
    return GradedSpace(std::move(p));
  }

  bool operator==(const GradedSpace& other) const { return parities_ == other.parities_; }

 private:
  std::vector<int> parities_;
};

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
inline double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

// Graded Kronecker product. parity_b is the Z2 degree of the operator B as a
// whole; in_a lists the parities of the input space A acts on. Only these two
// enter the Koszul sign picked up when B moves past the first tensor factor.
template <class Scalar>
MatX<Scalar> kron_graded(const MatX<Scalar>& a, const MatX<Scalar>& b, int parity_b,
                         const std::vector<int>& in_a) {
  const Eigen::Index rows_a = a.rows(), cols_a = a.cols();
  const Eigen::Index rows_b = b.rows(), cols_b = b.cols();
  if (static_cast<size_t>(cols_a) != in_a.size())
    throw std::invalid_argument("kron_graded: parity list does not match input dimension");
  MatX<Scalar> m(rows_a * rows_b, cols_a * cols_b);
  for (Eigen::Index k = 0; k < cols_a; ++k) {
    const double sgn = (parity_b && in_a[static_cast<size_t>(k)]) ? -1.0 : 1.0;
    for (Eigen::Index i = 0; i < rows_a; ++i)
      m.block(i * rows_b, k * cols_b, rows_b, cols_b) = (sgn * a(i, k)) * b;
  }
  return m;
}

inline Mat kron_graded(const Mat& a, const Mat& b, int parity_b, const GradedSpace& in_a) {
  return kron_graded<cplx>(a, b, parity_b, in_a.parities());
}

// P(v (x) w) = (-1)^{|v||w|} w (x) v; an involution on s1 (x) s2 when s1 == s2.
template <class Scalar>
MatX<Scalar> graded_swap(const GradedSpace& s1, const GradedSpace& s2) {
  const int n1 = s1.dim(), n2 = s2.dim();
  MatX<Scalar> p = MatX<Scalar>::Zero(n1 * n2, n1 * n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      p(j * n1 + i, i * n2 + j) = (s1.parity(i) && s2.parity(j)) ? Scalar(-1) : Scalar(1);
  return p;
}

inline Mat graded_swap(const GradedSpace& s1, const GradedSpace& s2) {
  return graded_swap<cplx>(s1, s2);
}

// [A, B} = AB - (-1)^{|A||B|} BA.
template <class Scalar>
MatX<Scalar> supercommutator(const MatX<Scalar>& a, int parity_a, const MatX<Scalar>& b,
                             int parity_b) {
  const Scalar sgn = (parity_a && parity_b) ? Scalar(-1) : Scalar(1);
  return a * b - sgn * (b * a);
}

inline Mat4 supercommutator(const Mat4& a, int parity_a, const Mat4& b, int parity_b) {
  const cplx sgn = (parity_a && parity_b) ? cplx(-1) : cplx(1);
  return a * b - sgn * (b * a);
}

// Swap of adjacent legs (k, k+1) inside an n-fold tensor power of `leg`.
inline Mat adjacent_swap(int k, int n, const GradedSpace& leg) {
  const int d = leg.dim();
  const GradedSpace pair = leg.tensor(leg);
  Mat m = graded_swap(leg, leg);
  GradedSpace acc = pair;
  for (int i = 0; i < k; ++i) {
    m = kron_graded(Mat(Mat::Identity(d, d)), m, 0, leg);
    acc = leg.tensor(acc);
  }
  for (int i = k + 2; i < n; ++i) {
    m = kron_graded(m, Mat(Mat::Identity(d, d)), 0, acc);
    acc = acc.tensor(leg);
  }
  return m;
}

// Embed a two-leg operator onto legs (i, j), i < j, of an n-fold tensor power.
// The operator is first placed on adjacent legs (i, i+1), then leg i+1 is
// walked to position j by conjugating with adjacent graded swaps.
inline Mat embed_legs(const Mat& op, int i, int j, int n, const GradedSpace& leg,
                      int parity = 0) {
  if (!(0 <= i && i < j && j < n)) throw std::invalid_argument("embed_legs: bad leg indices");
  const int d = leg.dim();
  if (op.rows() != d * d || op.cols() != d * d)
    throw std::invalid_argument("embed_legs: operator is not two-leg");
  Mat m = op;
  GradedSpace acc = leg.tensor(leg);
  for (int k = 0; k < i; ++k) {
    m = kron_graded(Mat(Mat::Identity(d, d)), m, parity, leg);
    acc = leg.tensor(acc);
  }
  for (int k = i + 2; k < n; ++k) {
    m = kron_graded(m, Mat(Mat::Identity(d, d)), 0, acc);
    acc = acc.tensor(leg);
  }
  for (int pos = i + 1; pos < j; ++pos) {
    const Mat p = adjacent_swap(pos, n, leg);
    m = p * m * p;
  }
  return m;
}

// Largest matrix entry that violates parity homogeneity of declared degree.
inline double homogeneity_violation(const Mat& m, int parity, const GradedSpace& out,
                                    const GradedSpace& in) {
  double worst = 0.0;
  for (int i = 0; i < out.dim(); ++i)
    for (int j = 0; j < in.dim(); ++j)
      if ((out.parity(i) + in.parity(j)) % 2 != parity) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

// A matrix together with its grading data; keeps embeddings honest.
struct GradedOperator {
  Mat mat;
  int parity = 0;
  GradedSpace out_space;
  GradedSpace in_space;

  double homogeneity_violation() const {
    return gl22::homogeneity_violation(mat, parity, out_space, in_space);
  }
};

inline GradedOperator kron_graded(const GradedOperator& a, const GradedOperator& b) {
  return GradedOperator{kron_graded(a.mat, b.mat, b.parity, a.in_space),
                        (a.parity + b.parity) % 2, a.out_space.tensor(b.out_space),
                        a.in_space.tensor(b.in_space)};
}

inline GradedOperator supercommutator(const GradedOperator& a, const GradedOperator& b) {
  return GradedOperator{supercommutator<cplx>(a.mat, a.parity, b.mat, b.parity),
                        (a.parity + b.parity) % 2, a.out_space, a.in_space};
}

}  // namespace gl22
