#ifndef CYHG_ATTRACTOR_HPP
#define CYHG_ATTRACTOR_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cyhg/periods.hpp"

namespace cyhg::attractor {

using cplx = std::complex<double>;
using hyperseries::HGParams;
using periods::PeriodVector;
using periods::Prepotential;

// Integral charge Q = (b1, b2, a1, a2) for gamma = sum a_i A_i - b_i B_i.
struct Charge {
  Eigen::Vector4i q;
  Charge() : q(Eigen::Vector4i::Zero()) {}
  Charge(int b1, int b2, int a1, int a2) { q << b1, b2, a1, a2; }
  bool is_zero() const { return q.isZero(); }
  Eigen::Vector4d d() const { return q.cast<double>(); }
};

// Z = Q^t Sigma Pi / sqrt(-i Pi^dagger Sigma Pi). Throws DegeneratePairing
// when the pairing is not positive.
cplx central_charge(const Charge& Q, const PeriodVector& Pi, const SymplecticForm& sigma);

// Least-squares C for Q ~ C Pi + conj(C) conj(Pi) (2 real unknowns, 4 equations).
cplx fit_C(const PeriodVector& Pi, const Charge& Q);

// Euclidean distance of C Pi + conj(C Pi) from the lattice vector Q;
// zero iff Q is of Hodge type (3,0)+(0,3) at this point.
double attractor_residual(cplx C, const PeriodVector& Pi, const Charge& Q);

// Symplectic-frame period map t -> Pi(t) with an optional analytic derivative.
struct PeriodProvider {
  std::function<PeriodVector(cplx)> eval;
  std::function<Eigen::Vector4cd(cplx)> deriv;  // optional (may be null)
  std::string name;
  double domain_radius = 0.65;

  // Family provider: Pi(t) = S(prepotential) * log-Frobenius vector.
  static PeriodProvider family(const HGParams& params, const Prepotential& pre,
                               unsigned order = 160);
  // Transversality-corrected symplectic frame Pi = (w0, w1, w3, r w2) with
  // r measured from the solution-space pairing at construction; this frame
  // satisfies Pi^T Sigma dPi = 0, so residual-0 points are |Z|-critical.
  static PeriodProvider family_transversal(const HGParams& params, unsigned order = 200);
  // Local boundary models (conifold / tyurin / lcs) with parameter a.
  static PeriodProvider local(periods::LocalKind kind, cplx a);
};

double abs_Z(const PeriodProvider& fam, const Charge& Q, const SymplecticForm& sigma,
             cplx t);

// Central-difference gradient of |Z| with respect to (Re t, Im t), step h.
Eigen::Vector2d abs_Z_gradient_fd(const PeriodProvider& fam, const Charge& Q,
                                  const SymplecticForm& sigma, cplx t, double h);

// Weil-Petersson metric g_{t tbar} = d_t d_tbar K by central differences.
double metric_fd(const PeriodProvider& fam, const SymplecticForm& sigma, cplx t,
                 double h);

// Closed-form metric from the analytic derivative (local-model override).
double metric_analytic(const PeriodProvider& fam, const SymplecticForm& sigma, cplx t);

// |Q^t Sigma D_t Pi| with D_t Pi = (d_t + d_t K) Pi: the numerical
// restatement of gamma perp H^{2,1}; vanishes at residual-0 points.
double horizontal_pairing_fd(const PeriodProvider& fam, const Charge& Q,
                             const SymplecticForm& sigma, cplx t, double h = 1e-5);

enum class FlowStatus {
  converged,          // |grad |Z|| below tolerance
  max_steps,
  boundary_exit,
  bps_trivial,        // |Z| = 0 at the start: rejected, not flowed
  metric_degenerate,
  step_failure,
};

enum class ExitKind { none, near_zero, near_one, outside_chart, degenerate_pairing };

const char* flow_status_name(FlowStatus s);
const char* exit_kind_name(ExitKind k);

struct FlowState {
  cplx t;
  double rho;
  double U;
  double absZ;
};

struct FlowOptions {
  int max_steps = 2000;
  double rho_step = 0.05;
  double rho_step_max = 1.0;
  double rho_step_min = 1e-9;
  double grad_tol = 1e-7;
  double fd_step = 1e-4;        // default metric/gradient stencil
  double boundary_eps = 1e-3;   // |t| or |t-1| exit threshold
  double pairing_eps = 1e-8;
  double monotone_slack = 1e-10;
  bool analytic_metric = false; // closed-form override where deriv is available
};

struct FlowResult {
  std::vector<FlowState> trajectory;
  FlowStatus status = FlowStatus::max_steps;
  ExitKind exit = ExitKind::none;
  const FlowState& end() const { return trajectory.back(); }
};

// Gradient descent of |Z| on the moduli coordinate with the Weil-Petersson
// metric; U is integrated passively from dU/drho = -e^U |Z|. |Z| is
// non-increasing along every accepted step (within monotone_slack).
FlowResult gradient_flow(cplx start, const Charge& Q, const PeriodProvider& fam,
                         const SymplecticForm& sigma, const FlowOptions& opt = {});

struct ScanEntry {
  Charge Q;
  cplx start;
  FlowStatus status;
  ExitKind exit;
  cplx t_end;
  double absZ_end;
  double residual;   // attractor residual with fitted C at the endpoint
  bool integral;     // rounded C Pi + conj back-matches Q
  std::string error; // nonempty when the flow threw
};

// Deduplicates Q up to sign (first nonzero entry positive), flows every charge
// from every start, and aggregates order-independently (sorted by charge then
// start). Per-charge failures are recorded, not thrown.
std::vector<ScanEntry> charge_scan(int box_radius, const std::vector<cplx>& starts,
                                   const PeriodProvider& fam, const SymplecticForm& sigma,
                                   const FlowOptions& opt = {});

// Type IIB flux pair (F3, H3) with axio-dilaton tau.
struct FluxPair {
  Eigen::Vector4i f;
  Eigen::Vector4i h;
  cplx tau;
};

struct FluxResult {
  cplx W;        // (f - tau h)^t Sigma Pi
  cplx D_tau;    // d_tau W + (d_tau K_tau) W, K_tau = -log(-i(tau - conj tau))
  cplx D_t;      // d_t W + (d_t K) W via finite differences (NaN without a provider)
};

FluxResult flux_superpotential(const FluxPair& flux, const PeriodVector& Pi,
                               const SymplecticForm& sigma);
FluxResult flux_superpotential(const FluxPair& flux, const PeriodProvider& fam, cplx t,
                               const SymplecticForm& sigma, double fd_step = 1e-5);

struct MomentReport {
  int samples = 0;
  int violations = 0;           // |Z|(x) > |Z|(g x) + tol
  double worst_gap = 0;         // most negative |Z|(gx) - |Z|(x)
  std::vector<double> w_trend;  // <mu(exp(i T zeta) x), zeta>/|zeta| at doubling T
  double w_estimate = 0;        // last trend value
};

// (a) samples group elements exp(eps X), X in sp(4,C), near the identity and
// counts Kirwan-Ness violations; (b) tracks the moment-weight trend along
// exp(i T zeta) x for zeta in the compact u(2) subalgebra. Empirical only.
MomentReport moment_checks(const PeriodVector& Pi_end, const Charge& Q,
                           const SymplecticForm& sigma, int samples, uint64_t seed,
                           double tol = 1e-6);

// <mu([v]), zeta> = Re(v^dagger (i zeta) v) / |v|^2 for zeta in u(2) inside
// sp(4, R), the projective moment-map candidate used by the trend report.
double moment_pairing(const Eigen::Vector4cd& v, const Eigen::Matrix4d& zeta);

}  // namespace cyhg::attractor

#endif
