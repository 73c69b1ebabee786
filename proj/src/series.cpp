#include "cyhg/series.hpp"

#include <algorithm>

#include "cyhg/errors.hpp"

namespace cyhg::hyperseries {

const char* var_name(Var v) { return v == Var::t ? "t" : "1/t"; }

bool QSeries::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

QSeries QSeries::geometric(Var v, unsigned order) {
  QSeries g(v, order);
  for (auto& x : g.c) x = 1;
  return g;
}

QSeries QSeries::shift_up() const {
  QSeries r(var, order());
  for (unsigned j = order(); j >= 1; --j) r.c[j] = c[j - 1];
  r.c[0] = 0;
  return r;
}

QSeries QSeries::theta() const {
  QSeries r(var, order());
  for (unsigned j = 0; j <= order(); ++j) r.c[j] = c[j] * Rat(j);
  return r;
}

static unsigned common_order(const QSeries& a, const QSeries& b) {
  return std::min(a.order(), b.order());
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  if (a.var != b.var)
    throw MixedVariables("cannot add series in t to series in 1/t");
  QSeries r(a.var, common_order(a, b));
  for (unsigned j = 0; j <= r.order(); ++j) r.c[j] = a.c[j] + b.c[j];
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  if (a.var != b.var)
    throw MixedVariables("cannot subtract series in t from series in 1/t");
  QSeries r(a.var, common_order(a, b));
  for (unsigned j = 0; j <= r.order(); ++j) r.c[j] = a.c[j] - b.c[j];
  return r;
}

QSeries QSeries::scaled(const Rat& s) const {
  QSeries r(var, order());
  for (unsigned j = 0; j <= order(); ++j) r.c[j] = c[j] * s;
  return r;
}

std::complex<double> QSeries::eval(std::complex<double> u) const {
  std::complex<double> acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + to_double(*it);
  return acc;
}

}  // namespace cyhg::hyperseries
