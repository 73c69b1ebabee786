#ifndef CYHG_PICARD_FUCHS_HPP
#define CYHG_PICARD_FUCHS_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "cyhg/hyperseries.hpp"

namespace cyhg::picard_fuchs {

using hyperseries::HGParams;
using hyperseries::QLogSeries;
using hyperseries::Var;

// Hypergeometric operator in theta form,
//
//   L = P(Theta) - s Q(Theta),   Theta = s d/ds,
//
// stored as the exact coefficient vectors of P and Q. In the t chart
// P = Theta^n and Q = prod_k (Theta + rho_k); the 1/t chart swaps the roles
// with sign flips and keeps the singular set {0, 1, infinity}.
struct ThetaOperator {
  Var chart = Var::t;
  std::vector<Rat> p;  // p[m] = coefficient of Theta^m, size n+1
  std::vector<Rat> q;  // q[m] = coefficient of Theta^m in the s-multiplied part

  unsigned order() const { return static_cast<unsigned>(p.size()) - 1; }
  std::vector<Rat> rho;  // the exponents this operator was built from
};

ThetaOperator build_operator(const HGParams& params);

// Same operator rewritten in the u = 1/s chart.
ThetaOperator infinity_chart(const ThetaOperator& op);

// L applied to a (log-)series in the matching chart. Result is valid through
// the input truncation order.
QLogSeries apply(const ThetaOperator& op, const QLogSeries& f);

// First-order system dY/ds = A(s) Y for Y = (F, Theta F, ..., Theta^{n-1} F),
// with A(s) = R0/s + R1/(s-1) exactly (regular singular at {0, 1, infinity}).
struct CompanionSystem {
  unsigned n = 0;
  Var chart = Var::t;
  std::vector<std::vector<Rat>> R0, R1;  // exact residue matrices

  Eigen::MatrixXcd eval(std::complex<double> s) const;
  Eigen::MatrixXd r0_d() const;
  Eigen::MatrixXd r1_d() const;
};

CompanionSystem companion(const ThetaOperator& op);

}  // namespace cyhg::picard_fuchs

#endif
