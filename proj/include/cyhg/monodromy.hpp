#ifndef CYHG_MONODROMY_HPP
#define CYHG_MONODROMY_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cyhg/picard_fuchs.hpp"

namespace cyhg::monodromy {

using cplx = std::complex<double>;
using hyperseries::HGParams;
using picard_fuchs::CompanionSystem;

// Polyline in C \ {0, 1}. Every vertex (and by convexity every point of every
// segment) must stay at distance >= clearance from both punctures.
struct Path {
  std::vector<cplx> points;
  double clearance = 0.05;

  bool closed() const;
  void validate() const;  // throws PunctureTooClose / InvalidParams

  static Path segment(cplx a, cplx b, double clearance = 0.05);
  // Closed polygonal loop around `center` through `start`, counterclockwise
  // if ccw, with `sides` vertices.
  static Path loop(cplx center, cplx start, bool ccw, int sides = 32,
                   double clearance = 0.05);
  Path reversed() const;
  Path then(const Path& next) const;  // concatenate (next must start where this ends)
};

struct TransportOptions {
  double tol = 1e-12;       // local error target per step
  double min_step = 1e-12;  // in the segment parameter
  double initial_step = 1e-2;
};

// Parallel transport of the frame `init` along `path` under dY/ds = A(s) Y.
// Adaptive embedded Dormand-Prince 5(4); throws StepFailure if the controller
// stalls below min_step.
Eigen::MatrixXcd transport(const CompanionSystem& sys, const Path& path,
                           const Eigen::MatrixXcd& init,
                           const TransportOptions& opt = {});

enum class Puncture { zero, one, infinity };

struct MonodromyMatrix {
  Eigen::MatrixXcd M;   // in the (f_{n-1}, ..., f_0) Frobenius frame at base
  cplx base;
  std::string loop;
  double residual;      // forward-then-reverse round-trip defect
};

// Fundamental frame at s in the Frobenius basis: column l holds
// (f_{n-1-l}, Theta f_{n-1-l}, ..., Theta^{n-1} f_{n-1-l}) evaluated at s.
Eigen::MatrixXcd frobenius_frame(const HGParams& params, cplx s, unsigned order = 200);

// Frame of the infinity basis (F_n, ..., F_1) and its Theta_t-derivatives,
// evaluated at s with |s| > 1 on the principal branch of the 1/t chart.
Eigen::MatrixXcd infinity_frame(const HGParams& params, cplx s, unsigned order = 200);

// Counterclockwise loop around the puncture, based at `base` on (0,1),
// conjugated into the Frobenius frame at the base point.
MonodromyMatrix monodromy_loop(const CompanionSystem& sys, const HGParams& params,
                               Puncture p, cplx base, unsigned order = 200,
                               const TransportOptions& opt = {});

// Closed-form M0 in the (f_{n-1},...,f_0) basis: M0[i][j] = 1/(j-i)!.
Eigen::MatrixXcd m0_closed_form(unsigned n);

struct ConnectionResult {
  Eigen::MatrixXcd P;        // infinity-frame coordinates of the continued 0-basis
  double conjugacy_residual; // || P M0 P^{-1} - M_inf ||, reported not asserted
  Path reference_path;
};

// Transition matrix between the analytic continuations of the bases at 0 and
// infinity along a fixed reference path from `base` to `target` (default 2).
ConnectionResult connection_matrix(const CompanionSystem& sys, const HGParams& params,
                                   cplx base = 0.5, cplx target = 2.0,
                                   unsigned order = 200);

ConnectionResult connection_matrix_along(const CompanionSystem& sys,
                                         const HGParams& params, const Path& path,
                                         unsigned order = 200);

}  // namespace cyhg::monodromy

#endif
