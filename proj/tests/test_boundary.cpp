#include "cyhg/boundary.hpp"

#include <complex>

#include "doctest.h"
#include "test_oracles.hpp"

using namespace cyhg;
using namespace cyhg::boundary;

namespace {

// Independent oracle: Jordan block sizes from exact ranks of powers, and the
// graded dimensions they force (block of size s spreads weights
// s-1, s-3, ..., -(s-1) around the center).
std::array<int, 7> gr_from_jordan(const RatMat& N) {
  std::array<unsigned, 6> r{};  // r[k] = rank(N^k), r[0] = 4
  r[0] = 4;
  for (unsigned k = 1; k <= 5; ++k) r[k] = N.pow(k).rank();
  std::array<int, 7> gr{};
  for (unsigned s = 1; s <= 4; ++s) {
    int blocks = static_cast<int>(r[s - 1]) - 2 * static_cast<int>(r[s]) +
                 static_cast<int>(r[s + 1 <= 5 ? s + 1 : 5]);
    for (unsigned j = 0; j < s; ++j) {
      int weight = static_cast<int>(s) - 1 - 2 * static_cast<int>(j);
      gr[weight + 3] += blocks;
    }
  }
  return gr;
}

RatMat random_nilpotent(test_oracles::Rng& rng) {
  // random strictly upper triangular, conjugated by a random unimodular matrix
  RatMat T(4, 4);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = i + 1; j < 4; ++j)
      T.at(i, j) = Rat(rng.integer(-4, 4), rng.integer(1, 3));
  RatMat P = RatMat::identity(4), Pinv = RatMat::identity(4);
  for (int step = 0; step < 6; ++step) {
    unsigned i = static_cast<unsigned>(rng.integer(0, 3));
    unsigned j = static_cast<unsigned>(rng.integer(0, 3));
    if (i == j) continue;
    Rat m(rng.integer(-2, 2));
    // P -> E P, Pinv -> Pinv E^{-1} with E the elementary row op
    RatMat E = RatMat::identity(4), Einv = RatMat::identity(4);
    E.at(i, j) = m;
    Einv.at(i, j) = -m;
    P = E * P;
    Pinv = Pinv * Einv;
  }
  return P * T * Pinv;
}

}  // namespace

TEST_CASE("exact rational linear algebra basics") {
  RatMat A(3, 3);
  A.at(0, 0) = 1;
  A.at(0, 1) = 2;
  A.at(1, 0) = 2;
  A.at(1, 1) = 4;
  A.at(2, 2) = Rat(1, 3);
  CHECK(A.rank() == 2);
  auto K = A.kernel_basis();
  CHECK(K.cols == 1);
  CHECK((A * K).is_zero());
  auto B = A.image_basis();
  CHECK(B.cols == 2);
  CHECK(subspace_leq(B, A));
  CHECK(subspace_intersect(B, K.transpose().transpose()).cols ==
        subspace_intersect(B, K).cols);
}

TEST_CASE("weight filtration of the zero endomorphism") {
  RatMat z(4, 4);
  auto wf = weight_filtration(NilpotentEndo(z));
  std::array<int, 7> want{0, 0, 0, 4, 4, 4, 4};
  CHECK(wf.dims == want);
}

TEST_CASE("weight filtration of a size-4 Jordan block") {
  RatMat J(4, 4);
  for (unsigned i = 0; i + 1 < 4; ++i) J.at(i + 1, i) = 1;
  auto wf = weight_filtration(NilpotentEndo(J));
  std::array<int, 7> want{1, 0, 1, 0, 1, 0, 1};
  CHECK(wf.gr == want);
}

TEST_CASE("weight filtration of the rank-one N2 generator") {
  auto wf = weight_filtration(NilpotentEndo::n2(Rat(3)));
  // Jordan type J2 + J1 + J1: graded dimensions 1, 2, 1 at weights 2, 3, 4.
  std::array<int, 7> want{0, 0, 1, 2, 1, 0, 0};
  CHECK(wf.gr == want);
  CHECK(wf.gr == gr_from_jordan(NilpotentEndo::n2(Rat(3)).N));
}

TEST_CASE("weight filtration: N W_k inside W_{k-2}, Gr symmetry, Jordan oracle") {
  test_oracles::Rng rng(31);
  std::vector<NilpotentEndo> cases;
  cases.push_back(NilpotentEndo::n1(Rat(1), Rat(2), Rat(3), Rat(-1)));
  cases.push_back(NilpotentEndo::n2(Rat(5)));
  cases.push_back(NilpotentEndo::n3(Rat(1), Rat(0), Rat(1)));
  cases.push_back(NilpotentEndo::n3(Rat(2), Rat(1), Rat(3)));
  for (int k = 0; k < 25; ++k) cases.push_back(NilpotentEndo(random_nilpotent(rng)));

  for (const auto& n : cases) {
    auto wf = weight_filtration(n);
    for (int k = 0; k <= 6; ++k) {
      RatMat img = n.N * wf.W[k];
      const RatMat& target = (k >= 2) ? wf.W[k - 2] : RatMat(4, 0);
      CHECK(subspace_leq(img, target));
    }
    for (int k = 0; k <= 3; ++k) CHECK(wf.gr[3 + k] == wf.gr[3 - k]);
    CHECK(wf.gr == gr_from_jordan(n.N));
    CHECK(wf.dims[6] == 4);
  }
}

TEST_CASE("nilpotency guard") {
  RatMat m(4, 4);
  m.at(0, 0) = 1;
  CHECK_THROWS_AS(NilpotentEndo{m}, NotNilpotent);
}

TEST_CASE("Example 4.3 matrices classify to their displayed LMHS types") {
  auto t1 = lmhs_type(NilpotentEndo::n1(Rat(1), Rat(2), Rat(3), Rat(-5)));
  CHECK(t1.kind == LMHSCase::n1_diagonal);
  CHECK(t1.describe() == "(3,3) + (2,2) + (1,1) + (0,0)");
  std::array<int, 7> g1{1, 0, 1, 0, 1, 0, 1};
  CHECK(t1.gr == g1);

  auto t2 = lmhs_type(NilpotentEndo::n2(Rat(7)));
  CHECK(t2.kind == LMHSCase::n2_isolated);
  CHECK(t2.describe() == "(3,0) + (0,3) + (2,2) + (1,1)");

  auto t3 = lmhs_type(NilpotentEndo::n3(Rat(1), Rat(0), Rat(1)));
  CHECK(t3.kind == LMHSCase::n3_two_pure);
  CHECK(t3.arrows.size() == 2);

  // outside the three cases: N = 0 and a J3 + J1 type
  RatMat z(4, 4);
  CHECK_THROWS_AS(lmhs_type(NilpotentEndo(z)), UnclassifiedSignature);
  RatMat j3(4, 4);
  j3.at(1, 0) = 1;
  j3.at(2, 1) = 1;
  CHECK_THROWS_AS(lmhs_type(NilpotentEndo(j3)), UnclassifiedSignature);
}

TEST_CASE("n1 with generic parameters is regular nilpotent") {
  auto n = NilpotentEndo::n1(Rat(1), Rat(1), Rat(0), Rat(0));
  CHECK(n.index == 4);
  // and infinitesimally symplectic for the standard form is a recorded flag
  auto sigma = SymplecticForm::standard();
  (void)n.infinitesimally_symplectic(sigma);
}

TEST_CASE("nilpotent orbit limit: identity, displayed N3 component, N1 degree") {
  Eigen::Vector4cd Pi;
  Pi << std::complex<double>(0.3, 1.0), std::complex<double>(-1.2, 0.4),
      std::complex<double>(0.9, -0.5), std::complex<double>(0.1, 0.8);

  RatMat z(4, 4);
  auto lim0 = nilpotent_orbit_limit(NilpotentEndo(z), Pi, {{0, 1}, {0, 2}});
  CHECK((lim0.finite - Pi).norm() == 0.0);
  for (auto& v : lim0.values) CHECK((v - Pi).norm() == 0.0);

  // N3 with A = [[a,b],[b,d]]: third component i a z Pi_1 + i b z Pi_2 + Pi_3
  double a = 2, b = 1, d = 3;
  auto n3 = NilpotentEndo::n3(Rat(2), Rat(1), Rat(3));
  auto lim3 = nilpotent_orbit_limit(n3, Pi, {});
  const std::complex<double> I{0, 1};
  CHECK(std::abs(lim3.coeffs[0](2) - Pi(2)) < 1e-15);
  CHECK(std::abs(lim3.coeffs[1](2) - I * (a * Pi(0) + b * Pi(1))) < 1e-14);
  CHECK(std::abs(lim3.coeffs[1](3) - I * (b * Pi(0) + d * Pi(1))) < 1e-14);
  CHECK(lim3.degree[0] == 0);
  CHECK(lim3.degree[2] == 1);

  // generic N1: top divergence degree 3 on a generic vector
  auto n1 = NilpotentEndo::n1(Rat(1), Rat(2), Rat(0), Rat(0));
  auto lim1 = nilpotent_orbit_limit(n1, Pi, {});
  int top = *std::max_element(lim1.degree.begin(), lim1.degree.end());
  CHECK(top == 3);
}

TEST_CASE("exp(izN) truncation is exact and shifts compose exactly") {
  test_oracles::Rng rng(57);
  for (int trial = 0; trial < 8; ++trial) {
    NilpotentEndo n{random_nilpotent(rng)};
    // all coefficients beyond the nilpotency index vanish identically
    auto C = orbit_exponential_coeffs(n, 20);
    for (unsigned k = n.index; k < 20; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(C[k][i][j].is_zero());

    // exp(i(z+c)N) = exp(icN) exp(izN) as exact polynomials in z
    Rat c(rng.integer(-5, 5), rng.integer(1, 4));
    auto Cc = orbit_exponential_coeffs(n, n.index);
    // E(c) = sum_k C_k c^k, exactly
    std::array<std::array<GaussRat, 4>, 4> Ec{};
    Rat cp(1);
    for (unsigned k = 0; k < n.index; ++k) {
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) Ec[i][j] = Ec[i][j] + Cc[k][i][j] * GaussRat{cp};
      cp *= c;
    }
    // z^m coefficient of exp(i(z+c)N): sum_{k>=m} C_k binom(k,m) c^{k-m}
    for (unsigned m = 0; m < n.index; ++m) {
      std::array<std::array<GaussRat, 4>, 4> lhs{};
      for (unsigned k = m; k < n.index; ++k) {
        Rat w = rat_binomial(k, m);
        Rat cp2(1);
        for (unsigned e = 0; e < k - m; ++e) cp2 *= c;
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            lhs[i][j] = lhs[i][j] + Cc[k][i][j] * GaussRat{w * cp2};
      }
      // rhs: (E(c) * C_m)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          GaussRat acc{Rat(0)};
          for (int k2 = 0; k2 < 4; ++k2) acc = acc + Ec[i][k2] * Cc[m][k2][j];
          CHECK(lhs[i][j] == acc);
        }
    }
  }
}

TEST_CASE("boundary constraints: satisfying vectors and seeded random vectors") {
  // N3, first two residuals vanish on the constructed vector
  Eigen::Vector4cd sat;
  sat << 0.0, 0.0, 0.0, std::complex<double>(0.4, -0.2);
  BoundaryParams p3;
  p3.a = Rat(1);
  p3.b = Rat(0);
  p3.d = Rat(1);
  auto r3 = boundary_constraints(BoundaryKind::N3, sat, p3);
  REQUIRE(r3.r.size() == 3);
  CHECK(r3.r[0] == 0.0);
  CHECK(r3.r[1] == 0.0);
  CHECK(r3.r[2] > 0.1);

  // N2 with Pi = (1, 0, 0, conj(1)) and a = 0: all residuals vanish
  Eigen::Vector4cd sat2;
  sat2 << 1.0, 0.0, 0.0, 1.0;
  BoundaryParams p2;
  p2.a = Rat(0);
  auto r2 = boundary_constraints(BoundaryKind::N2, sat2, p2);
  CHECK(r2.total == 0.0);

  // seeded random vectors with entries bounded away from 0 stay away from
  // the constraint locus
  test_oracles::Rng rng(101);
  BoundaryParams p2g;
  p2g.a = Rat(1);
  for (int seed = 0; seed < 100; ++seed) {
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) {
      auto z = rng.annulus(0.3, 1.0);
      v(i) = std::complex<double>(z.real(), z.imag());
    }
    CHECK(boundary_constraints(BoundaryKind::N2, v, p2g).total > 0.1);
    CHECK(boundary_constraints(BoundaryKind::N3, v, p3).total > 0.1);
  }

  // N1: a vector already of the form C L + conj(C L) for the limit line has
  // zero membership residual when N1 Pi = 0 (limit = Pi itself)
  Eigen::Vector4cd real_vec;
  real_vec << 1.0, 2.0, -1.0, 0.5;  // real: lies in span{L, conj L} trivially
  BoundaryParams p1;
  p1.a = Rat(0);
  p1.b = Rat(0);
  p1.c = Rat(0);
  p1.d = Rat(0);
  auto r1 = boundary_constraints(BoundaryKind::N1, real_vec, p1);
  CHECK(r1.total < 1e-12);
  BoundaryParams p1g;
  p1g.a = Rat(1);
  p1g.b = Rat(2);
  p1g.c = Rat(1);
  p1g.d = Rat(-1);
  Eigen::Vector4cd gv;
  gv << std::complex<double>(1, 0.3), std::complex<double>(0.2, -1),
      std::complex<double>(-0.7, 0.4), std::complex<double>(0.5, 0.9);
  auto r1g = boundary_constraints(BoundaryKind::N1, gv, p1g);
  CHECK(r1g.total > 0.01);
}
