#include "cyhg/hyperseries.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"
#include "test_oracles.hpp"

using namespace cyhg;
using namespace cyhg::hyperseries;

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(Rat(1, 2), 0) == Rat(1));
  CHECK(pochhammer(Rat(1, 2), 2) == Rat(3, 4));
  CHECK(pochhammer(Rat(1), 3) == Rat(6));
  CHECK(pochhammer(Rat(-2), 3) == Rat(0));
}

TEST_CASE("1F0(1/2) coefficients are the binomial series of (1-t)^{-1/2}") {
  auto s = hg_series(HGParams::halfs(1), 3);
  CHECK(s.c[0] == Rat(1));
  CHECK(s.c[1] == Rat(1, 2));
  CHECK(s.c[2] == Rat(3, 8));
  CHECK(s.c[3] == Rat(5, 16));
}

TEST_CASE("2F1(1/2,1/2;1) first coefficient") {
  auto s = hg_series(HGParams::halfs(2), 4);
  CHECK(s.c[1] == Rat(1, 4));
}

TEST_CASE("2F1 coefficients equal squared 1F0 coefficients (independent oracle)") {
  // Oracle: a_j(1F0) = (1/2)_j / j! assembled directly from Pochhammer symbols,
  // not via the recurrence inside hg_series.
  auto f2 = hg_series(HGParams::halfs(2), 50);
  for (unsigned j = 0; j <= 50; ++j) {
    Rat oracle = pochhammer(Rat(1, 2), j) / rat_factorial(j);
    CHECK(f2.c[j] == oracle * oracle);
  }
}

TEST_CASE("halfs tower: nF coefficients are n-th powers of the 1F0 coefficients") {
  auto f1 = hg_series(HGParams::halfs(1), 50);
  for (unsigned n = 2; n <= 4; ++n) {
    auto fn = hg_series(HGParams::halfs(n), 50);
    for (unsigned j = 0; j <= 50; ++j) {
      Rat pw(1);
      for (unsigned k = 0; k < n; ++k) pw *= f1.c[j];
      CHECK(fn.c[j] == pw);
    }
  }
}

TEST_CASE("hadamard identity, annihilator, tower step") {
  auto f1 = hg_series(HGParams::halfs(1), 40);
  auto geo = QSeries::geometric(Var::t, 40);
  auto zero = QSeries(Var::t, 40);

  auto id = hadamard(f1, geo);
  for (unsigned j = 0; j <= 40; ++j) CHECK(id.c[j] == f1.c[j]);

  auto z = hadamard(f1, zero);
  CHECK(z.is_zero());

  // 1F0 * 2F1 = 3F2 coefficient-exactly (the i*pi prefactor of the displayed
  // period identity is the caller's bookkeeping, not the series').
  auto f2 = hg_series(HGParams::halfs(2), 40);
  auto f3 = hg_series(HGParams::halfs(3), 40);
  auto prod = hadamard(f1, f2);
  for (unsigned j = 0; j <= 40; ++j) CHECK(prod.c[j] == f3.c[j]);
}

TEST_CASE("hadamard is commutative and associative, geometric is the unit") {
  test_oracles::Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    QSeries a(Var::t, 12), b(Var::t, 12), c(Var::t, 12);
    for (unsigned j = 0; j <= 12; ++j) {
      a.c[j] = Rat(rng.integer(-9, 9), rng.integer(1, 7));
      b.c[j] = Rat(rng.integer(-9, 9), rng.integer(1, 7));
      c.c[j] = Rat(rng.integer(-9, 9), rng.integer(1, 7));
    }
    auto ab = hadamard(a, b), ba = hadamard(b, a);
    for (unsigned j = 0; j <= 12; ++j) CHECK(ab.c[j] == ba.c[j]);
    auto l = hadamard(hadamard(a, b), c), r = hadamard(a, hadamard(b, c));
    for (unsigned j = 0; j <= 12; ++j) CHECK(l.c[j] == r.c[j]);
    auto e = hadamard(a, QSeries::geometric(Var::t, 12));
    for (unsigned j = 0; j <= 12; ++j) CHECK(e.c[j] == a.c[j]);
  }
}

TEST_CASE("hadamard rejects mixed variables") {
  QSeries a(Var::t, 3), b(Var::inv_t, 3);
  CHECK_THROWS_AS(hadamard(a, b), MixedVariables);
}

TEST_CASE("frobenius basis: n=1 is the plain series with no log part") {
  auto basis = frobenius_basis(HGParams::halfs(1), 10);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].log_degree() == 0);
  auto plain = hg_series(HGParams::halfs(1), 10);
  for (unsigned j = 0; j <= 10; ++j) CHECK(basis[0].parts[0].c[j] == plain.c[j]);
}

TEST_CASE("frobenius basis: f_0 equals hg_series, log-degree of f_l is l") {
  for (auto params : {HGParams::halfs(4), HGParams::dwork(3)}) {
    auto basis = frobenius_basis(params, 20);  // (f_{n-1}, ..., f_0)
    REQUIRE(basis.size() == params.n);
    auto plain = hg_series(params, 20);
    const auto& f0 = basis.back();
    CHECK(f0.log_degree() == 0);
    for (unsigned j = 0; j <= 20; ++j) CHECK(f0.parts[0].c[j] == plain.c[j]);
    for (unsigned l = 0; l < params.n; ++l)
      CHECK(basis[params.n - 1 - l].log_degree() == static_cast<int>(l));
  }
}

TEST_CASE("frobenius basis leading log-coefficients are triangular with 1/l! diagonal") {
  auto params = HGParams::halfs(4);
  auto basis = frobenius_basis(params, 8);
  for (unsigned l = 0; l < 4; ++l) {
    const auto& fl = basis[3 - l];  // descending order in the returned list
    for (unsigned m = 0; m < fl.parts.size(); ++m) {
      Rat lead = fl.parts[m].c[0];
      if (m == l)
        CHECK(lead == Rat(1) / rat_factorial(l));
      else if (m > l)
        CHECK(lead == Rat(0));
    }
    // below-diagonal leading terms vanish: c_0(alpha) = 1 identically
    for (unsigned m = 0; m < l; ++m) CHECK(fl.parts[m].c[0] == Rat(0));
  }
}

TEST_CASE("frobenius basis rejects non-unipotent input") {
  HGParams p;
  p.n = 2;
  p.upper = {Rat(1, 2), Rat(1, 3)};
  p.lower = {Rat(3, 2)};
  p.beta = {Rat(1, 2), Rat(1, 3)};
  CHECK_THROWS_AS(frobenius_basis(p, 5), InvalidParams);
}

TEST_CASE("solutions at infinity: n=1 shape, unit leading coefficients") {
  auto basis = solutions_at_infinity(HGParams::halfs(1), 12);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].var == Var::inv_t);
  CHECK(basis[0].exponent == Rat(1, 2));
  auto body = hg_series(HGParams::halfs(1), 12);
  for (unsigned j = 0; j <= 12; ++j) CHECK(basis[0].parts[0].c[j] == body.c[j]);

  // distinct-exponent case: B_k = 1 normalization
  auto dwork = solutions_at_infinity(HGParams::dwork(3), 12);
  REQUIRE(dwork.size() == 3);
  for (const auto& F : dwork) {
    CHECK(F.log_degree() == 0);
    CHECK(F.parts[0].c[0] == Rat(1));
  }

  // resonant case: log-corrected basis, descending log degrees
  auto res = solutions_at_infinity(HGParams::halfs(4), 12);
  REQUIRE(res.size() == 4);
  for (unsigned l = 0; l < 4; ++l) {
    CHECK(res[3 - l].log_degree() == static_cast<int>(l));
    CHECK(res[3 - l].exponent == Rat(1, 2));
  }
}

TEST_CASE("evaluate: closed forms and tails") {
  auto f1 = frobenius_basis(HGParams::halfs(1), 200)[0];

  auto at0 = evaluate(f1, 0.0);
  CHECK(at0.value.real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(at0.tail_bound == 0.0);

  auto at34 = evaluate(f1, 0.75);
  CHECK(std::abs(at34.value - std::complex<double>(2.0, 0)) < 1e-10);
}

TEST_CASE("evaluate 2F1(1/2,1/2;1;1/2) against the period quadrature oracle") {
  // Period identity: int_0^s dx / sqrt(x(x-1)(x-s)) = (i pi) 2F1(1/2,1/2;1;s).
  // On (0, s) the product x(x-1)(x-s) is positive, so with the principal real
  // square root the integral is real and equals pi * 2F1; the paper's i
  // belongs to its branch choice. We compare moduli.
  double s = 0.5;
  double quad = test_oracles::tanh_sinh(
      [s](double x) { return 1.0 / std::sqrt(x * (1 - x) * (s - x)); }, 0.0, s);
  auto series = hg_series(HGParams::halfs(2), 220);
  QLogSeries f;
  f.var = Var::t;
  f.parts = {series};
  auto val = evaluate(f, s);
  double pi = 3.14159265358979323846;
  CHECK(std::abs(quad / pi - std::abs(val.value)) < 1e-8 * std::abs(val.value));
}

TEST_CASE("evaluate: exact and frozen modes agree within the tail bound") {
  auto params = HGParams::halfs(4);
  auto basis = frobenius_basis(params, 160);
  auto frozen = freeze(basis[0]);
  test_oracles::Rng rng(5);
  for (int i = 0; i < 8; ++i) {
    std::complex<double> t = rng.annulus(0.05, 0.6);
    auto a = evaluate(basis[0], t);
    auto b = evaluate(frozen, t);
    CHECK(std::abs(a.value - b.value) < 1e-12 * (1 + std::abs(a.value)));
  }
  // truncation error is controlled by the reported tail estimate
  auto coarse_q = frobenius_basis(params, 60)[0];
  for (int i = 0; i < 5; ++i) {
    std::complex<double> t = rng.annulus(0.1, 0.5);
    auto fine = evaluate(basis[0], t);
    auto coarse = evaluate(coarse_q, t);
    CHECK(std::abs(fine.value - coarse.value) <= 20 * coarse.tail_bound + 1e-14);
  }
}

TEST_CASE("evaluate rejects points outside the convergence disk") {
  auto f1 = frobenius_basis(HGParams::halfs(1), 20)[0];
  CHECK_THROWS_AS(evaluate(f1, std::complex<double>(1.5, 0)), OutsideDisk);
  auto Finf = solutions_at_infinity(HGParams::halfs(1), 20)[0];
  CHECK_THROWS_AS(evaluate(Finf, std::complex<double>(0.5, 0)), OutsideDisk);
}
