#ifndef CYHG_RATIONAL_HPP
#define CYHG_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <complex>
#include <string>

namespace cyhg {

// Exact rational scalar used throughout the exact-arithmetic layer.
using Rat = boost::multiprecision::mpq_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rat& r) { return r.str(); }

// Parses "a/b" or "a" (optionally signed). Throws std::runtime_error on junk.
Rat parse_rational(const std::string& s);

Rat rat_factorial(unsigned n);
Rat rat_binomial(unsigned n, unsigned k);

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Fractional part in [0,1).
Rat rat_mod1(const Rat& r);

// Complex number with exact rational real/imaginary parts (element of Q(i)).
struct GaussRat {
  Rat re{0};
  Rat im{0};

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRat conj() const { return {re, -im}; }
  Rat norm2() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n = b.norm2();
    GaussRat num = a * b.conj();
    return {num.re / n, num.im / n};
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

inline GaussRat gauss_i() { return {Rat(0), Rat(1)}; }

}  // namespace cyhg

#endif
