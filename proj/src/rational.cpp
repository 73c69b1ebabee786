#include "cyhg/rational.hpp"

#include <stdexcept>

namespace cyhg {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::runtime_error("empty rational literal");
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw std::runtime_error("bad rational literal: " + s);
  }
}

Rat rat_factorial(unsigned n) {
  Rat r(1);
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

Rat rat_binomial(unsigned n, unsigned k) {
  if (k > n) return Rat(0);
  Rat r(1);
  for (unsigned i = 0; i < k; ++i) {
    r *= Rat(n - i);
    r /= Rat(i + 1);
  }
  return r;
}

Rat rat_mod1(const Rat& r) {
  using boost::multiprecision::mpz_int;
  mpz_int num = numerator(r), den = denominator(r);
  mpz_int q = num / den;
  Rat frac = r - Rat(q);
  if (frac < 0) frac += 1;
  return frac;
}

}  // namespace cyhg
