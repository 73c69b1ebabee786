#include "cyhg/picard_fuchs.hpp"

namespace cyhg::picard_fuchs {

using hyperseries::QSeries;

namespace {

// Coefficients of prod_k (X + roots[k]).
std::vector<Rat> poly_from_roots(const std::vector<Rat>& roots) {
  std::vector<Rat> c{Rat(1)};
  for (const auto& r : roots) {
    std::vector<Rat> next(c.size() + 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] += c[i] * r;
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

ThetaOperator build_operator(const HGParams& params) {
  params.validate();
  if (!params.lower_all_one())
    throw InvalidParams("theta-form operator assumes all lower parameters 1");
  ThetaOperator op;
  op.chart = Var::t;
  op.rho = params.upper;
  op.p.assign(params.n + 1, Rat(0));
  op.p[params.n] = 1;  // Theta^n
  op.q = poly_from_roots(params.upper);
  return op;
}

ThetaOperator infinity_chart(const ThetaOperator& op) {
  // s = 1/u, Theta_s = -Theta_u:  P(-Theta_u) - (1/u) Q(-Theta_u) = 0
  // multiply by -(-1)^n u:   (-1)^n Q(-X) - u (-1)^n P(-X)
  unsigned n = op.order();
  ThetaOperator r;
  r.chart = (op.chart == Var::t) ? Var::inv_t : Var::t;
  r.rho = op.rho;
  r.p.assign(n + 1, Rat(0));
  r.q.assign(n + 1, Rat(0));
  int sign_n = (n % 2 == 0) ? 1 : -1;
  for (unsigned m = 0; m <= n; ++m) {
    int sm = (m % 2 == 0) ? 1 : -1;
    r.p[m] = op.q[m] * Rat(sign_n * sm);
    r.q[m] = op.p[m] * Rat(sign_n * sm);
  }
  return r;
}

QLogSeries apply(const ThetaOperator& op, const QLogSeries& f) {
  if (op.chart != f.var)
    throw MixedVariables("operator chart does not match series variable");
  unsigned n = op.order();
  // Iterated theta powers of f.
  std::vector<QLogSeries> th;
  th.reserve(n + 1);
  th.push_back(f);
  for (unsigned m = 1; m <= n; ++m) th.push_back(th.back().theta());

  QLogSeries pf = th[0].scaled(op.p[0]);
  QLogSeries qf = th[0].scaled(op.q[0]);
  for (unsigned m = 1; m <= n; ++m) {
    pf = pf + th[m].scaled(op.p[m]);
    qf = qf + th[m].scaled(op.q[m]);
  }
  return pf - qf.shift_up();
}

Eigen::MatrixXcd CompanionSystem::eval(std::complex<double> s) const {
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
  std::complex<double> i0 = 1.0 / s, i1 = 1.0 / (s - 1.0);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c)
      A(r, c) = to_double(R0[r][c]) * i0 + to_double(R1[r][c]) * i1;
  return A;
}

Eigen::MatrixXd CompanionSystem::r0_d() const {
  Eigen::MatrixXd M(n, n);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c) M(r, c) = to_double(R0[r][c]);
  return M;
}

Eigen::MatrixXd CompanionSystem::r1_d() const {
  Eigen::MatrixXd M(n, n);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c < n; ++c) M(r, c) = to_double(R1[r][c]);
  return M;
}

CompanionSystem companion(const ThetaOperator& op) {
  unsigned n = op.order();
  if (op.q[n] != 1)
    throw InvalidParams("companion rewrite assumes monic s-part (q_n = 1)");
  CompanionSystem sys;
  sys.n = n;
  sys.chart = op.chart;
  sys.R0.assign(n, std::vector<Rat>(n, Rat(0)));
  sys.R1.assign(n, std::vector<Rat>(n, Rat(0)));
  for (unsigned j = 0; j + 1 < n; ++j) sys.R0[j][j + 1] = 1;
  // From P(Theta)F = s Q(Theta)F with q_n = 1:
  //   Theta^n F = sum_{m<n} (-p_m + s q_m) / (1 - s) ... rearranged into
  //   dY_{n-1}/ds entries -p_m/s + (p_m - q_m)/(s-1).
  for (unsigned m = 0; m < n; ++m) {
    sys.R0[n - 1][m] = -op.p[m];
    sys.R1[n - 1][m] = op.p[m] - op.q[m];
  }
  return sys;
}

}  // namespace cyhg::picard_fuchs
