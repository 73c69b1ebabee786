#ifndef CYHG_K3E_HPP
#define CYHG_K3E_HPP

#include <array>
#include <complex>
#include <vector>

#include "cyhg/errors.hpp"

namespace cyhg::k3e {

// Intersection data <p,p>, <p,q>, <q,q> of a K3 x E charge gamma = (p, q).
struct ChargePairK3 {
  long long pp, pq, qq;

  // Reduced discriminant pq^2 - pp*qq; attractors need D < 0.
  long long disc() const { return pq * pq - pp * qq; }
  void validate() const;  // pp > 0 and D < 0, throws IndefiniteForm
};

// Positive definite integral binary quadratic form a x^2 + b x y + c y^2.
struct BQF {
  long long a, b, c;

  long long disc() const { return b * b - 4 * a * c; }
  bool positive_definite() const { return a > 0 && disc() < 0; }
  bool is_reduced() const;
  bool is_primitive() const;
  // root of a t^2 + b t + c in the upper half plane
  std::complex<double> root() const;

  friend bool operator==(const BQF& x, const BQF& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

// tau = (<p,q> + sqrt(-D)) / <p,p> with D the reduced discriminant; satisfies
// <p,p> tau^2 - 2 <p,q> tau + <q,q> = 0 and Im tau > 0.
std::complex<double> tau_from_charges(const ChargePairK3& c);

// |Z| at the attractor: sqrt(-D) with the reduced discriminant convention.
double central_charge_norm(const ChargePairK3& c);

// The Shioda-Inose form (a, b, c) = (<p,p>, -2<p,q>, <q,q>) realizing the
// displayed Gram matrix 2Q.
BQF shioda_inose_form(const ChargePairK3& c);

// Gauss reduction: |b| <= a <= c with b >= 0 when |b| = a or a = c.
// The returned transform g in SL2(Z) witnesses f(g (x,y)^t) = reduced.
struct ReducedBQF {
  BQF reduced;
  std::array<std::array<long long, 2>, 2> transform;
};

ReducedBQF reduce_bqf(const BQF& f);

// f composed with a unimodular substitution (x,y) -> g (x,y).
BQF apply_transform(const BQF& f, const std::array<std::array<long long, 2>, 2>& g);

// All reduced primitive forms of discriminant D (< 0, D = 0 or 1 mod 4);
// the count is the class number h(D).
std::vector<BQF> class_enumerate(long long D);

// Moebius reduction of tau into the standard fundamental domain
// (|tau| >= 1, |Re tau| <= 1/2).
std::complex<double> reduce_to_fundamental_domain(std::complex<double> tau);

}  // namespace cyhg::k3e

#endif
