#include "cyhg/k3e.hpp"

#include <cmath>
#include <numeric>

namespace cyhg::k3e {

void ChargePairK3::validate() const {
  if (pp <= 0) throw IndefiniteForm("<p,p> must be positive");
  if (disc() >= 0)
    throw IndefiniteForm("discriminant " + std::to_string(disc()) +
                         " >= 0: no attractor (form is indefinite)");
}

bool BQF::is_reduced() const {
  if (!(std::llabs(b) <= a && a <= c)) return false;
  if ((std::llabs(b) == a || a == c) && b < 0) return false;
  return true;
}

bool BQF::is_primitive() const {
  return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c)) == 1;
}

std::complex<double> BQF::root() const {
  double s = std::sqrt(static_cast<double>(-disc()));
  return {-static_cast<double>(b) / (2.0 * a), s / (2.0 * a)};
}

std::complex<double> tau_from_charges(const ChargePairK3& c) {
  c.validate();
  double s = std::sqrt(static_cast<double>(-c.disc()));
  return {static_cast<double>(c.pq) / c.pp, s / c.pp};
}

double central_charge_norm(const ChargePairK3& c) {
  c.validate();
  return std::sqrt(static_cast<double>(-c.disc()));
}

BQF shioda_inose_form(const ChargePairK3& c) {
  c.validate();
  return {c.pp, -2 * c.pq, c.qq};
}

BQF apply_transform(const BQF& f, const std::array<std::array<long long, 2>, 2>& g) {
  // (x, y) -> (g00 x + g01 y, g10 x + g11 y)
  long long p = g[0][0], q = g[0][1], r = g[1][0], s = g[1][1];
  BQF out;
  out.a = f.a * p * p + f.b * p * r + f.c * r * r;
  out.b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
  out.c = f.a * q * q + f.b * q * s + f.c * s * s;
  return out;
}

namespace {

using Mat2 = std::array<std::array<long long, 2>, 2>;

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return r;
}

}  // namespace

ReducedBQF reduce_bqf(const BQF& f) {
  if (!f.positive_definite())
    throw IndefiniteForm("reduction needs a positive definite form");
  BQF cur = f;
  Mat2 g{{{1, 0}, {0, 1}}};
  for (int guard = 0; guard < 10000; ++guard) {
    // normalize b into (-a, a] by (x, y) -> (x - k y, y)
    if (cur.b > cur.a || cur.b <= -cur.a) {
      long long k = static_cast<long long>(
          std::llround(static_cast<double>(cur.b) / (2.0 * cur.a)));
      Mat2 T{{{1, -k}, {0, 1}}};
      cur = apply_transform(cur, T);
      g = mat_mul(g, T);
      continue;
    }
    if (cur.a > cur.c) {
      Mat2 S{{{0, -1}, {1, 0}}};
      cur = apply_transform(cur, S);
      g = mat_mul(g, S);
      continue;
    }
    if (cur.b < 0 && (cur.a == cur.c || cur.b == -cur.a)) {
      // boundary ties, resolved inside SL2: a = c flips via S, b = -a shifts via T
      if (cur.a == cur.c) {
        Mat2 S{{{0, -1}, {1, 0}}};
        cur = apply_transform(cur, S);
        g = mat_mul(g, S);
      } else {
        Mat2 T{{{1, 1}, {0, 1}}};
        cur = apply_transform(cur, T);
        g = mat_mul(g, T);
      }
      continue;
    }
    break;
  }
  return {cur, g};
}

std::vector<BQF> class_enumerate(long long D) {
  if (D >= 0 || !((D % 4 + 4) % 4 == 0 || (D % 4 + 4) % 4 == 1))
    throw BadDiscriminant("need D < 0 with D = 0 or 1 mod 4");
  std::vector<BQF> out;
  long long amax = static_cast<long long>(std::sqrt(static_cast<double>(-D) / 3.0)) + 1;
  for (long long a = 1; a <= amax; ++a)
    for (long long b = -a; b <= a; ++b) {
      if (((b * b - D) % (4 * a)) != 0) continue;
      long long c = (b * b - D) / (4 * a);
      BQF f{a, b, c};
      if (f.disc() != D) continue;
      if (!f.is_reduced()) continue;
      if (!f.is_primitive()) continue;  // imprimitive forms flagged out
      out.push_back(f);
    }
  return out;
}

std::complex<double> reduce_to_fundamental_domain(std::complex<double> tau) {
  for (int guard = 0; guard < 10000; ++guard) {
    double n = std::round(tau.real());
    tau -= n;
    if (std::abs(tau) < 1.0 - 1e-15) {
      tau = -1.0 / tau;
      continue;
    }
    break;
  }
  // boundary conventions: Re in [-1/2, 1/2), and Re <= 0 on the unit arc
  if (tau.real() <= -0.5) tau += 1.0;
  if (std::abs(std::abs(tau) - 1.0) < 1e-12 && tau.real() > 1e-12) {
    tau = -1.0 / tau;
    if (tau.real() <= -0.5) tau += 1.0;
  }
  return tau;
}

}  // namespace cyhg::k3e
