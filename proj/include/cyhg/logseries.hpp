#ifndef CYHG_LOGSERIES_HPP
#define CYHG_LOGSERIES_HPP

#include <complex>
#include <vector>

#include "cyhg/series.hpp"

namespace cyhg::hyperseries {

// Truncated log-series
//
//   value = (2*pi*i)^tpi_pow * u^exponent * sum_j parts[j](u) * log(u)^j
//
// with u the series variable (t or 1/t), exact rational coefficients, a
// rational exponent prefactor and the (2*pi*i)-powers carried as a separate
// integer grading so that exact arithmetic never touches floats. `branch`
// shifts log(u) by 2*pi*i*branch at evaluation time; analytic continuation
// is done by the monodromy module, never by implicit branch jumps here.
struct QLogSeries {
  Var var = Var::t;
  Rat exponent{0};
  int tpi_pow = 0;
  std::vector<QSeries> parts;
  int branch = 0;

  unsigned order() const { return parts.empty() ? 0 : parts[0].order(); }

  // Highest j with parts[j] nonzero, or -1 for the zero series.
  int log_degree() const;

  bool is_zero() const;

  // theta = u d/du acting on the full object, including the log-lowering
  // rule theta(p * log^j u) = (theta p) log^j u + j p log^{j-1} u and the
  // exponent shift theta(u^e g) = u^e (e + theta) g.
  QLogSeries theta() const;

  QLogSeries shift_up() const;          // multiply by u
  QLogSeries scaled(const Rat& s) const;
  friend QLogSeries operator+(const QLogSeries& a, const QLogSeries& b);
  friend QLogSeries operator-(const QLogSeries& a, const QLogSeries& b);
};

struct EvalResult {
  std::complex<double> value;
  double tail_bound;  // heuristic geometric-ratio estimate of truncation error
};

// Evaluates at the moduli coordinate t (the variable tag decides u = t or
// u = 1/t). Requires |u| < 1; throws OutsideDisk otherwise.
EvalResult evaluate(const QLogSeries& s, std::complex<double> t, int branch = 0);

// Float-frozen copy for hot paths (flow, transport frames). Same layout,
// coefficients pre-converted to complex doubles.
struct CLogSeries {
  Var var = Var::t;
  double exponent = 0;
  int tpi_pow = 0;
  std::vector<std::vector<std::complex<double>>> parts;
};

CLogSeries freeze(const QLogSeries& s);
EvalResult evaluate(const CLogSeries& s, std::complex<double> t, int branch = 0);

}  // namespace cyhg::hyperseries

#endif
