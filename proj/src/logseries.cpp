#include "cyhg/logseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyhg/errors.hpp"

namespace cyhg::hyperseries {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

int QLogSeries::log_degree() const {
  for (int j = static_cast<int>(parts.size()) - 1; j >= 0; --j)
    if (!parts[j].is_zero()) return j;
  return -1;
}

bool QLogSeries::is_zero() const { return log_degree() < 0; }

QLogSeries QLogSeries::theta() const {
  QLogSeries r = *this;
  for (size_t j = 0; j < parts.size(); ++j) {
    QSeries term = parts[j].theta() + parts[j].scaled(exponent);
    if (j + 1 < parts.size()) term = term + parts[j + 1].scaled(Rat(static_cast<long>(j + 1)));
    r.parts[j] = term;
  }
  return r;
}

QLogSeries QLogSeries::shift_up() const {
  QLogSeries r = *this;
  for (auto& p : r.parts) p = p.shift_up();
  return r;
}

QLogSeries QLogSeries::scaled(const Rat& s) const {
  QLogSeries r = *this;
  for (auto& p : r.parts) p = p.scaled(s);
  return r;
}

static void check_compatible(const QLogSeries& a, const QLogSeries& b) {
  if (a.var != b.var) throw MixedVariables("log-series variable mismatch");
  if (a.exponent != b.exponent || a.tpi_pow != b.tpi_pow || a.branch != b.branch)
    throw MixedVariables("log-series grading mismatch (exponent/2-pi-i power/branch)");
}

QLogSeries operator+(const QLogSeries& a, const QLogSeries& b) {
  check_compatible(a, b);
  QLogSeries r = a;
  r.parts.resize(std::max(a.parts.size(), b.parts.size()));
  for (size_t j = 0; j < r.parts.size(); ++j) {
    if (j >= a.parts.size())
      r.parts[j] = b.parts[j];
    else if (j >= b.parts.size())
      r.parts[j] = a.parts[j];
    else
      r.parts[j] = a.parts[j] + b.parts[j];
  }
  return r;
}

QLogSeries operator-(const QLogSeries& a, const QLogSeries& b) {
  return a + b.scaled(Rat(-1));
}

// Shared evaluation core. The log branch applies both to the log-powers and
// to the fractional exponent prefactor, so analytic continuation data stays
// consistent between the two.
template <typename PartEval>
static EvalResult eval_core(Var var, double exponent, int tpi_pow, int branch,
                            size_t nparts, std::complex<double> t, PartEval&& part) {
  std::complex<double> u = (var == Var::t) ? t : 1.0 / t;
  if (!(std::abs(u) < 1.0)) {
    throw OutsideDisk(std::string("|u| = ") + std::to_string(std::abs(u)) +
                      " >= 1 in the " + var_name(var) + " chart");
  }
  if (u == 0.0) {
    // u^e log^j u -> 0 for e > 0; for e = 0 only the log-free part survives.
    if (exponent > 0) return {0.0, 0.0};
    bool log_singular = false;
    std::complex<double> v0 = 0;
    for (size_t j = 0; j < nparts; ++j) {
      auto [val, tl] = part(j, u);
      (void)tl;
      if (j == 0)
        v0 = val;
      else if (val != 0.0)
        log_singular = true;
    }
    if (log_singular || exponent < 0)
      throw OutsideDisk("log-singular evaluation at u = 0");
    std::complex<double> tpi0 = std::pow(std::complex<double>(0, kTwoPi), tpi_pow);
    return {tpi0 * v0, 0.0};
  }
  std::complex<double> L = std::log(u) + std::complex<double>(0, kTwoPi * branch);
  std::complex<double> prefac = std::exp(exponent * L);
  std::complex<double> tpi = std::pow(std::complex<double>(0, kTwoPi), tpi_pow);

  std::complex<double> acc = 0;
  double tail = 0;
  std::complex<double> Lpow = 1;
  for (size_t j = 0; j < nparts; ++j) {
    auto [val, tl] = part(j, u);
    acc += val * Lpow;
    tail += tl * std::abs(Lpow);
    Lpow *= L;
  }
  double scale = std::abs(prefac) * std::abs(tpi);
  return {tpi * prefac * acc, tail * scale};
}

// Heuristic geometric-ratio tail estimate from the last coefficients.
static double tail_estimate(const std::vector<double>& mags, double absu) {
  size_t m = mags.size();
  if (m < 4) return std::numeric_limits<double>::infinity();
  double ratio = 0;
  int used = 0;
  for (size_t j = m - 4; j + 1 < m; ++j) {
    if (mags[j] > 0 && mags[j + 1] > 0) {
      ratio = std::max(ratio, mags[j + 1] / mags[j]);
      ++used;
    }
  }
  if (used == 0) return 0;  // series terminated
  double rho = ratio * absu;
  double last = mags[m - 1] * std::pow(absu, static_cast<double>(m - 1));
  if (rho >= 0.999) return std::numeric_limits<double>::infinity();
  return last * rho / (1 - rho);
}

EvalResult evaluate(const QLogSeries& s, std::complex<double> t, int branch) {
  return eval_core(s.var, to_double(s.exponent), s.tpi_pow, s.branch + branch,
                   s.parts.size(), t,
                   [&](size_t j, std::complex<double> u) -> std::pair<std::complex<double>, double> {
                     const auto& cs = s.parts[j].c;
                     std::complex<double> acc = 0;
                     std::vector<double> mags(cs.size());
                     for (size_t k = 0; k < cs.size(); ++k) mags[k] = std::abs(to_double(cs[k]));
                     for (auto it = cs.rbegin(); it != cs.rend(); ++it)
                       acc = acc * u + to_double(*it);
                     return {acc, tail_estimate(mags, std::abs(u))};
                   });
}

CLogSeries freeze(const QLogSeries& s) {
  CLogSeries r;
  r.var = s.var;
  r.exponent = to_double(s.exponent);
  r.tpi_pow = s.tpi_pow;
  r.parts.resize(s.parts.size());
  for (size_t j = 0; j < s.parts.size(); ++j) {
    r.parts[j].resize(s.parts[j].c.size());
    for (size_t k = 0; k < s.parts[j].c.size(); ++k)
      r.parts[j][k] = to_double(s.parts[j].c[k]);
  }
  return r;
}

EvalResult evaluate(const CLogSeries& s, std::complex<double> t, int branch) {
  return eval_core(s.var, s.exponent, s.tpi_pow, branch, s.parts.size(), t,
                   [&](size_t j, std::complex<double> u) -> std::pair<std::complex<double>, double> {
                     const auto& cs = s.parts[j];
                     std::complex<double> acc = 0;
                     std::vector<double> mags(cs.size());
                     for (size_t k = 0; k < cs.size(); ++k) mags[k] = std::abs(cs[k]);
                     for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * u + *it;
                     return {acc, tail_estimate(mags, std::abs(u))};
                   });
}

}  // namespace cyhg::hyperseries
