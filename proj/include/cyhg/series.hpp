#ifndef CYHG_SERIES_HPP
#define CYHG_SERIES_HPP

#include <complex>
#include <vector>

#include "cyhg/rational.hpp"

namespace cyhg::hyperseries {

// Series variable: u = t (expansion at 0) or u = 1/t (expansion at infinity).
enum class Var { t, inv_t };

const char* var_name(Var v);

// Truncated power series sum_{j=0..order} c[j] u^j with exact rational
// coefficients. Ring operations never round; binary operations truncate to
// the shorter operand.
struct QSeries {
  Var var = Var::t;
  std::vector<Rat> c;

  QSeries() = default;
  QSeries(Var v, unsigned order) : var(v), c(order + 1, Rat(0)) {}

  unsigned order() const { return static_cast<unsigned>(c.size()) - 1; }
  bool is_zero() const;

  static QSeries geometric(Var v, unsigned order);  // sum u^j, Hadamard identity

  // u * this, truncated to the same order (top coefficient falls off).
  QSeries shift_up() const;

  // Coefficient-wise j -> j*c_j (the theta operator on a pure power series).
  QSeries theta() const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  QSeries scaled(const Rat& s) const;

  std::complex<double> eval(std::complex<double> u) const;  // Horner
};

}  // namespace cyhg::hyperseries

#endif
