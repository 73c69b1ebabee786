#include "cyhg/periods.hpp"
#include <algorithm>

#include <cmath>

namespace cyhg {

SymplecticForm SymplecticForm::standard() {
  SymplecticForm s{};
  for (auto& row : s.m) row = {0, 0, 0, 0};
  s.m[0][2] = 1;
  s.m[1][3] = 1;
  s.m[2][0] = -1;
  s.m[3][1] = -1;
  return s;
}

void SymplecticForm::validate() const {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (m[i][j] != -m[j][i]) throw InvalidParams("symplectic form must be antisymmetric");
  // 4x4 integer determinant by Laplace expansion
  long long det = 0;
  int perm4[24][4], np = 0;
  int idx[4] = {0, 1, 2, 3};
  // enumerate permutations of {0,1,2,3}
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    for (int k = 0; k < 4; ++k) perm4[np][k] = p[k];
    ++np;
  } while (std::next_permutation(p.begin(), p.end()));
  (void)idx;
  for (int k = 0; k < np; ++k) {
    int sgn = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm4[k][i] > perm4[k][j]) sgn = -sgn;
    long long term = sgn;
    for (int i = 0; i < 4; ++i) term *= m[i][perm4[k][i]];
    det += term;
  }
  if (det != 1) throw InvalidParams("symplectic form must be unimodular (det 1)");
}

Eigen::Matrix4cd SymplecticForm::cd() const {
  Eigen::Matrix4cd M;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M(i, j) = static_cast<double>(m[i][j]);
  return M;
}

Eigen::Matrix4d SymplecticForm::d() const {
  Eigen::Matrix4d M;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M(i, j) = static_cast<double>(m[i][j]);
  return M;
}

}  // namespace cyhg

namespace cyhg::periods {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI{0, 1};
}  // namespace

const char* frame_name(Frame f) {
  switch (f) {
    case Frame::frobenius0: return "frobenius0";
    case Frame::infinity: return "infinity";
    case Frame::symplectic: return "symplectic";
    case Frame::local_conifold: return "local(conifold)";
    case Frame::local_tyurin: return "local(tyurin)";
    case Frame::local_lcs: return "local(lcs)";
  }
  return "?";
}

bool is_symplectic_coords(Frame f) {
  return f == Frame::symplectic || f == Frame::local_conifold ||
         f == Frame::local_tyurin || f == Frame::local_lcs;
}

Eigen::Matrix4cd TransitionMatrix::numeric() const {
  cplx tpi = std::pow(cplx(0, 2 * kPi), tpi_pow);
  Eigen::Matrix4cd M;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M(i, j) = tpi * core[i][j].to_complex();
  return M;
}

GaussRat TransitionMatrix::det_core() const {
  // exact fraction-free-ish elimination over Q(i)
  std::array<std::array<GaussRat, 4>, 4> a = core;
  GaussRat det{Rat(1)};
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return GaussRat{Rat(0)};
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    for (int r = col + 1; r < 4; ++r) {
      if (a[r][col].is_zero()) continue;
      GaussRat f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  return det;
}

TransitionMatrix TransitionMatrix::inverse() const {
  // exact Gauss-Jordan over Q(i)
  std::array<std::array<GaussRat, 4>, 4> a = core;
  std::array<std::array<GaussRat, 4>, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[i][i] = GaussRat{Rat(1)};
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw SingularPrepotential("transition matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    GaussRat d = a[col][col];
    for (int c = 0; c < 4; ++c) {
      a[col][c] = a[col][c] / d;
      inv[col][c] = inv[col][c] / d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      GaussRat f = a[r][col];
      for (int c = 0; c < 4; ++c) {
        a[r][c] = a[r][c] - f * a[col][c];
        inv[r][c] = inv[r][c] - f * inv[col][c];
      }
    }
  }
  TransitionMatrix t;
  t.core = inv;
  t.tpi_pow = -tpi_pow;
  t.from = to;
  t.to = from;
  return t;
}

PeriodVector TransitionMatrix::apply(const PeriodVector& p) const {
  if (p.frame != from)
    throw FrameMismatch(std::string("expected frame ") + frame_name(from) + ", got " +
                        frame_name(p.frame));
  PeriodVector r;
  r.v = numeric() * p.v;
  r.frame = to;
  r.point = p.point;
  return r;
}

TransitionMatrix operator*(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.from != b.to)
    throw FrameMismatch("transition matrices do not compose frame-to-frame");
  TransitionMatrix r;
  r.tpi_pow = a.tpi_pow + b.tpi_pow;
  r.from = b.from;
  r.to = a.to;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      GaussRat acc{Rat(0)};
      for (int k = 0; k < 4; ++k) acc = acc + a.core[i][k] * b.core[k][j];
      r.core[i][j] = acc;
    }
  return r;
}

std::array<QLogSeries, 4> log_frobenius_series(const HGParams& params, unsigned order) {
  if (params.n != 4) throw InvalidParams("period vector needs an order-4 family");
  auto basis = hyperseries::frobenius_basis(params, order);  // (f3, f2, f1, f0)
  // w_j = C(3,j) f_{3-j}: log-degree 3-j, w_3 the normalized holomorphic slot.
  std::array<QLogSeries, 4> w{basis[0], basis[1], basis[2], basis[3]};
  w[1] = w[1].scaled(Rat(3));
  w[2] = w[2].scaled(Rat(3));
  return w;
}

PeriodVector log_frobenius_vector(const HGParams& params, cplx t, unsigned order) {
  if (!(std::abs(t) > 0) || !(std::abs(t) < 1))
    throw OutsideDisk("log-Frobenius vector needs 0 < |t| < 1");
  auto w = log_frobenius_series(params, order);
  PeriodVector p;
  for (int j = 0; j < 4; ++j) p.v(j) = evaluate(w[j], t).value;
  p.frame = Frame::frobenius0;
  p.point = t;
  return p;
}

TransitionMatrix transition_S(const Prepotential& pre) {
  if (pre.phi111.is_zero())
    throw SingularPrepotential("phi111 = 0 makes S singular");
  const GaussRat C{pre.Const};
  TransitionMatrix S;
  S.tpi_pow = 3;
  S.from = Frame::frobenius0;
  S.to = Frame::symplectic;
  for (auto& row : S.core) row.fill(GaussRat{Rat(0)});
  S.core[0][0] = C * GaussRat{Rat(-1, 3)} * pre.phi000;
  S.core[0][1] = C * GaussRat{Rat(-1, 2)} * pre.phi001;
  S.core[0][3] = C * GaussRat{Rat(1, 6)} * pre.phi111;
  S.core[1][0] = C * GaussRat{Rat(-1, 2)} * pre.phi111;
  S.core[1][1] = C * (-pre.phi001);
  S.core[1][2] = C * GaussRat{Rat(-1, 2)} * pre.phi111;
  S.core[2][0] = C;
  S.core[3][1] = C;
  return S;
}

TransitionMatrix frame_change_unit_triangular(const std::array<GaussRat, 6>& a) {
  TransitionMatrix T;
  T.tpi_pow = 0;
  T.from = Frame::frobenius0;
  T.to = Frame::symplectic;
  for (auto& row : T.core) row.fill(GaussRat{Rat(0)});
  for (int i = 0; i < 4; ++i) T.core[i][i] = GaussRat{Rat(1)};
  T.core[1][0] = a[0];
  T.core[2][0] = a[1];
  T.core[2][1] = a[2];
  T.core[3][0] = a[3];
  T.core[3][1] = a[4];
  T.core[3][2] = a[5];
  return T;
}

TransitionMatrix preset_A_zeta() {
  // Placeholder slots for the zeta-value entries (out of scope numerically).
  return frame_change_unit_triangular(
      {GaussRat{Rat(0)}, GaussRat{Rat(0), Rat(1, 3)}, GaussRat{Rat(0)},
       GaussRat{Rat(0)}, GaussRat{Rat(0), Rat(1, 3)}, GaussRat{Rat(0)}});
}

TransitionMatrix preset_A_log() {
  // Formal a_log(n) = n log n / (2 pi i) slots, stood in by rationals.
  return frame_change_unit_triangular(
      {GaussRat{Rat(1)}, GaussRat{Rat(2)}, GaussRat{Rat(1)},
       GaussRat{Rat(3)}, GaussRat{Rat(2)}, GaussRat{Rat(1)}});
}

PeriodVector local_model(LocalKind kind, cplx z, cplx a) {
  if (std::abs(z) >= 0.5)
    throw ModelRegion("local models are used for |z| < 0.5");
  PeriodVector p;
  p.point = z;
  switch (kind) {
    case LocalKind::conifold: {
      cplx zlogz = (z == 0.0) ? cplx(0, 0) : z * std::log(z);
      cplx a2z2 = a * a * z * z / (8 * kPi);
      p.v << 1.0 + a2z2, a * z, kI - kI * a2z2, (kI * a / (2 * kPi)) * zlogz;
      p.frame = Frame::local_conifold;
      return p;
    }
    case LocalKind::tyurin: {
      if (z == 0.0) throw ModelRegion("tyurin model needs z != 0");
      cplx lg = std::log(z);
      cplx two_pi_i = 2 * kPi * kI;
      p.v << 1.0 + a * z, kI - kI * a * z, lg / two_pi_i - (a * z / two_pi_i) * (lg - 2.0),
          lg / (2 * kPi) - (a * z / (2 * kPi)) * (lg - 2.0);
      p.frame = Frame::local_tyurin;
      return p;
    }
    case LocalKind::lcs: {
      if (z == 0.0) throw ModelRegion("lcs model needs z != 0");
      PeriodVector w = log_frobenius_vector(HGParams::halfs(4), z);
      w.frame = Frame::local_lcs;
      return w;
    }
  }
  throw InvalidParams("bad local model kind");
}

double pairing(const PeriodVector& p, const SymplecticForm& sigma) {
  cplx h = -kI * (p.v.adjoint() * sigma.cd() * p.v)(0, 0);
  return h.real();  // imaginary part vanishes by antisymmetry
}

double kahler_potential(const PeriodVector& p, const SymplecticForm& sigma) {
  if (!is_symplectic_coords(p.frame))
    throw FrameMismatch("Kahler potential needs symplectic coordinates, got " +
                        std::string(frame_name(p.frame)));
  double h = pairing(p, sigma);
  if (!(h > 0))
    throw DegeneratePairing("pairing -i Pi^dagger Sigma Pi = " + std::to_string(h) +
                            " is not positive (wrong frame or boundary point)");
  return -std::log(h);
}

}  // namespace cyhg::periods
