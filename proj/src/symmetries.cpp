#include "gl22/symmetries.hpp"

#include "gl22/fundrep.hpp"

namespace gl22 {

namespace {
constexpr cplx kI{0.0, 1.0};

Mat block_eps() {
  Mat n = Mat::Zero(4, 4);
  n(0, 1) = 1.0;
  n(1, 0) = -1.0;
  n(2, 3) = 1.0;
  n(3, 2) = -1.0;
  return n;
}

Mat sigma_flip() {
  Mat s = Mat::Zero(4, 4);
  s(2, 0) = s(3, 1) = s(0, 2) = s(1, 3) = 1.0;
  return s;
}

void push(std::vector<NamedResidual>& out, const char* name, cplx v) {
  out.push_back({name, std::abs(v)});
}

void push(std::vector<NamedResidual>& out, const char* name, double v) {
  out.push_back({name, v});
}
}  // namespace

Kinematics conjugate_site(const GlobalParams& gp, const Kinematics& kn) {
  return derive_kinematics(gp, 1.0 / kn.x, -gp.alpha * kn.q / kn.gamma);
}

Kinematics invert_z(const GlobalParams& gp, const Kinematics& kn) {
  const cplx den = gp.hp * kn.x - kI * gp.h;
  return derive_kinematics(gp, kI * (gp.h * kn.x + kI * gp.hp) / den, kn.gamma / den);
}

Kinematics statistics_flip(const GlobalParams& gp, const Kinematics& kn) {
  return derive_kinematics(gp, kn.x, -gp.alpha * kn.x * kn.q / kn.gamma);
}

GlobalParams dual_global(const GlobalParams& gp) {
  return GlobalParams{-gp.hp, gp.h, -(gp.h / gp.hp) * gp.alpha, kI * gp.k};
}

Kinematics duality(const GlobalParams& gp, const Kinematics& kn) {
  return derive_kinematics(dual_global(gp), kn.x, kn.gamma);
}

Mat2 conjugation_right_factor() {
  Mat2 m;
  m << 0.0, -1.0, 1.0, 0.0;
  return m;
}

Mat2 inversion_left_factor(const GlobalParams& gp) {
  Mat2 m;
  m << 0.0, kI * gp.alpha, kI / gp.alpha, 0.0;
  return m;
}

Mat2 flip_left_factor(const GlobalParams& gp, cplx z) {
  Mat2 m;
  m << gp.h, gp.alpha / z, -z / gp.alpha, -gp.h;
  return Mat2((kI / gp.hp) * m);
}

Mat2 flip_right_factor() {
  Mat2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Mat2 duality_left_factor(const GlobalParams& gp, cplx z) {
  Mat2 m;
  m << 1.0, 0.0, z / (gp.alpha * gp.h), 1.0;
  return m;
}

std::vector<NamedResidual> conjugation_relations(const GlobalParams& gp, const Kinematics& k1,
                                                 const Kinematics& k2) {
  std::vector<NamedResidual> out;
  const Kinematics k1c = conjugate_site(gp, k1);
  const Kinematics k2c = conjugate_site(gp, k2);
  push(out, "site: z invariant", k1c.z - k1.z);
  push(out, "site: q flips sign", k1c.q + k1.q);
  push(out, "site: T' = T R", max_abs(Mat2(k1c.T - k1.T * conjugation_right_factor())));
  const CoefficientSet c0 = coefficients(k1, k2);
  const CoefficientSet c1 = coefficients(k1c, k2);
  push(out, "conj(1): A' = -(A-B)/2", c1.A + 0.5 * (c0.A - c0.B));
  push(out, "conj(1): (A'-B')/2 = -A", 0.5 * (c1.A - c1.B) + c0.A);
  push(out, "conj(1): G' = L", c1.G - c0.L);
  push(out, "conj(1): L' = G", c1.L - c0.G);
  push(out, "conj(1): H' = -F", c1.H + c0.F);
  push(out, "conj(1): F' = H", c1.F - c0.H);
  push(out, "conj(1): K' = -C", c1.K + c0.C);
  push(out, "conj(1): C' = K", c1.C - c0.K);
  push(out, "conj(1): (A+B+1)/2 invariant", 0.5 * (c1.A + c1.B) - 0.5 * (c0.A + c0.B));
  const CoefficientSet c2 = coefficients(k1, k2c);
  push(out, "conj(2): H' = C", c2.H - c0.C);
  push(out, "conj(2): C' = -H", c2.C + c0.H);
  push(out, "conj(2): K' = F", c2.K - c0.F);
  push(out, "conj(2): F' = -K", c2.F + c0.K);
  push(out, "conj(2): A' = -(A-B)/2", c2.A + 0.5 * (c0.A - c0.B));
  push(out, "conj(2): D' = -(D-E)/2", c2.D + 0.5 * (c0.D - c0.E));
  push(out, "conj(2): G' = L", c2.G - c0.L);
  push(out, "conj(2): L' = G", c2.L - c0.G);
  const CoefficientSet c12 = coefficients(k1c, k2c);
  push(out, "conj(12): C' = F", c12.C - c0.F);
  push(out, "conj(12): F' = C", c12.F - c0.C);
  push(out, "conj(12): H' = K", c12.H - c0.K);
  push(out, "conj(12): K' = H", c12.K - c0.H);
  push(out, "conj(12): A' = A", c12.A - c0.A);
  push(out, "conj(12): B' = B", c12.B - c0.B);
  push(out, "conj(12): G' = G", c12.G - c0.G);
  push(out, "conj(12): L' = L", c12.L - c0.L);
  return out;
}

std::vector<NamedResidual> inversion_relations(const GlobalParams& gp, const Kinematics& k1,
                                               const Kinematics& k2) {
  std::vector<NamedResidual> out;
  const Kinematics k1i = invert_z(gp, k1);
  const Kinematics k2i = invert_z(gp, k2);
  push(out, "site: z' = 1/z", k1i.z - 1.0 / k1.z);
  push(out, "site: q' = z q", k1i.q - k1.z * k1.q);
  push(out, "site: T' = R T", max_abs(Mat2(k1i.T - inversion_left_factor(gp) * k1.T)));
  const CoefficientSet c0 = coefficients(k1, k2);
  const CoefficientSet ci = coefficients(k1i, k2i);
  push(out, "inv: A' = -A", ci.A + c0.A);
  push(out, "inv: B' = -B", ci.B + c0.B);
  push(out, "inv: C' = -C", ci.C + c0.C);
  push(out, "inv: D' = -D", ci.D + c0.D);
  push(out, "inv: E' = -E", ci.E + c0.E);
  push(out, "inv: F' = -F", ci.F + c0.F);
  push(out, "inv: G' = -G", ci.G + c0.G);
  push(out, "inv: H' = -H", ci.H + c0.H);
  push(out, "inv: K' = -K", ci.K + c0.K);
  push(out, "inv: L' = -L", ci.L + c0.L);
  push(out, "inv: (A'+B'+1)/2 = -(A+B-1)/2",
       0.5 * (ci.A + ci.B + 1.0) + 0.5 * (c0.A + c0.B - 1.0));
  const Mat r0 = r_fund_universal(k1, k2);
  const Mat ri = r_fund_universal(k1i, k2i);
  const Mat nn = kron_graded(block_eps(), block_eps(), 0, GradedSpace::fundamental());
  push(out, "operator: r' = -(N x N) r (N x N)^-1",
       max_abs(Mat(ri + nn * r0 * nn.inverse())));
  return out;
}

std::vector<NamedResidual> flip_relations(const GlobalParams& gp, const Kinematics& k1,
                                          const Kinematics& k2) {
  std::vector<NamedResidual> out;
  const Kinematics k1f = statistics_flip(gp, k1);
  const Kinematics k2f = statistics_flip(gp, k2);
  push(out, "site: z invariant", k1f.z - k1.z);
  push(out, "site: q invariant", k1f.q - k1.q);
  push(out, "site: T' = R T S",
       max_abs(Mat2(k1f.T - flip_left_factor(gp, k1.z) * k1.T * flip_right_factor())));
  const CoefficientSet c0 = coefficients(k1, k2);
  const CoefficientSet cf = coefficients(k1f, k2f);
  push(out, "flip: A' = D", cf.A - c0.D);
  push(out, "flip: B' = E", cf.B - c0.E);
  push(out, "flip: D' = A", cf.D - c0.A);
  push(out, "flip: E' = B", cf.E - c0.B);
  push(out, "flip: G' = -L", cf.G + c0.L);
  push(out, "flip: L' = -G", cf.L + c0.G);
  push(out, "flip: C' = -F", cf.C + c0.F);
  push(out, "flip: F' = -C", cf.F + c0.C);
  push(out, "flip: H' = K", cf.H - c0.K);
  push(out, "flip: K' = H", cf.K - c0.H);
  const Mat r0 = r_fund_universal(k1, k2);
  const Mat rf = r_fund_universal(k1f, k2f);
  const Mat ss =
      kron_graded(sigma_flip(), sigma_flip(), 1, GradedSpace::fundamental());
  push(out, "operator: r' = -(S x S) r (S x S)^-1",
       max_abs(Mat(rf + ss * r0 * ss.inverse())));
  return out;
}

std::vector<NamedResidual> duality_relations(const GlobalParams& gp, const Kinematics& k1,
                                             const Kinematics& k2) {
  std::vector<NamedResidual> out;
  const GlobalParams gpd = dual_global(gp);
  const Kinematics k1d = duality(gp, k1);
  const Kinematics k2d = duality(gp, k2);
  push(out, "couplings: k' = ik solves k'^2 - 2 h_new k' + 1 = 0",
       gpd.k * gpd.k - 2.0 * gpd.h * gpd.k + 1.0);
  push(out, "site: z' = -z", k1d.z + k1.z);
  push(out, "site: q' = -(h'/h) q", k1d.q + (gp.hp / gp.h) * k1.q);
  push(out, "site: T' = R T", max_abs(Mat2(k1d.T - duality_left_factor(gp, k1.z) * k1.T)));
  const CoefficientSet c0 = coefficients(k1, k2);
  const CoefficientSet cd = coefficients(k1d, k2d);
  push(out, "dual: A invariant", cd.A - c0.A);
  push(out, "dual: B invariant", cd.B - c0.B);
  push(out, "dual: C invariant", cd.C - c0.C);
  push(out, "dual: D invariant", cd.D - c0.D);
  push(out, "dual: E invariant", cd.E - c0.E);
  push(out, "dual: F invariant", cd.F - c0.F);
  push(out, "dual: G invariant", cd.G - c0.G);
  push(out, "dual: H invariant", cd.H - c0.H);
  push(out, "dual: K invariant", cd.K - c0.K);
  push(out, "dual: L invariant", cd.L - c0.L);
  push(out, "operator: table form invariant",
       max_abs(Mat(r_fund_table(k1d, k2d).op - r_fund_table(k1, k2).op)));
  return out;
}

std::vector<NamedResidual> group_relations(const GlobalParams& gp, const Kinematics& kn) {
  std::vector<NamedResidual> out;
  const Kinematics c2 = conjugate_site(gp, conjugate_site(gp, kn));
  push(out, "conjugation^2: x restored", c2.x - kn.x);
  push(out, "conjugation^2: gamma -> -gamma", c2.gamma + kn.gamma);
  const Kinematics c4 = conjugate_site(gp, conjugate_site(gp, c2));
  push(out, "conjugation^4 = id", c4.gamma - kn.gamma);
  const Kinematics i2 = invert_z(gp, invert_z(gp, kn));
  push(out, "inversion^2: x restored", i2.x - kn.x);
  push(out, "inversion^2: z restored", i2.z - kn.z);
  push(out, "inversion^2: gamma -> -gamma", i2.gamma + kn.gamma);
  const Kinematics f2 = statistics_flip(gp, statistics_flip(gp, kn));
  push(out, "flip^2: x restored", f2.x - kn.x);
  push(out, "flip^2: gamma restored", f2.gamma - kn.gamma);
  GlobalParams g4 = gp;
  for (int i = 0; i < 4; ++i) g4 = dual_global(g4);
  push(out, "duality^4: h restored", g4.h - gp.h);
  push(out, "duality^4: h' restored", g4.hp - gp.hp);
  push(out, "duality^4: k restored", g4.k - gp.k);
  push(out, "duality^4: alpha restored", g4.alpha - gp.alpha);
  return out;
}

}  // namespace gl22
