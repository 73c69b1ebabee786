#include "cyhg/attractor.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace cyhg::attractor {

namespace {
const cplx kI{0, 1};

double pairing_checked(const PeriodVector& Pi, const SymplecticForm& sigma) {
  if (!periods::is_symplectic_coords(Pi.frame))
    throw FrameMismatch("central charge needs symplectic coordinates");
  double h = periods::pairing(Pi, sigma);
  if (!(h > 0))
    throw DegeneratePairing("pairing " + std::to_string(h) + " not positive");
  return h;
}
}  // namespace

cplx central_charge(const Charge& Q, const PeriodVector& Pi, const SymplecticForm& sigma) {
  double h = pairing_checked(Pi, sigma);
  cplx w = Q.d().transpose() * (sigma.cd() * Pi.v);
  return w / std::sqrt(h);
}

cplx fit_C(const PeriodVector& Pi, const Charge& Q) {
  // Q ~ 2 Re(C Pi): columns 2 Re Pi and -2 Im Pi against the 4 real targets.
  Eigen::Matrix<double, 4, 2> A;
  for (int i = 0; i < 4; ++i) {
    A(i, 0) = 2 * Pi.v(i).real();
    A(i, 1) = -2 * Pi.v(i).imag();
  }
  Eigen::Vector2d sol = A.colPivHouseholderQr().solve(Q.d());
  return {sol(0), sol(1)};
}

double attractor_residual(cplx C, const PeriodVector& Pi, const Charge& Q) {
  Eigen::Vector4d v;
  for (int i = 0; i < 4; ++i) v(i) = 2 * (C * Pi.v(i)).real();
  return (v - Q.d()).norm();
}

PeriodProvider PeriodProvider::family(const HGParams& params, const Prepotential& pre,
                                      unsigned order) {
  auto w = periods::log_frobenius_series(params, order);
  auto S = periods::transition_S(pre).numeric();
  std::vector<hyperseries::CLogSeries> frozen, frozen_theta;
  for (const auto& s : w) {
    frozen.push_back(freeze(s));
    frozen_theta.push_back(freeze(s.theta()));
  }
  PeriodProvider p;
  p.name = "family";
  p.domain_radius = 0.65;
  p.eval = [frozen, S](cplx t) {
    PeriodVector r;
    for (int j = 0; j < 4; ++j) r.v(j) = evaluate(frozen[j], t).value;
    r.v = S * r.v;
    r.frame = periods::Frame::symplectic;
    r.point = t;
    return r;
  };
  p.deriv = [frozen_theta, S](cplx t) {
    Eigen::Vector4cd d;
    for (int j = 0; j < 4; ++j) d(j) = evaluate(frozen_theta[j], t).value / t;
    return (S * d).eval();
  };
  return p;
}

PeriodProvider PeriodProvider::family_transversal(const HGParams& params, unsigned order) {
  auto w = periods::log_frobenius_series(params, order);
  std::vector<hyperseries::CLogSeries> frozen, frozen_theta;
  for (const auto& s : w) {
    frozen.push_back(freeze(s));
    frozen_theta.push_back(freeze(s.theta()));
  }
  auto wval = [frozen](cplx t) {
    Eigen::Vector4cd v;
    for (int j = 0; j < 4; ++j) v(j) = evaluate(frozen[j], t).value;
    return v;
  };
  auto wder = [frozen_theta](cplx t) {
    Eigen::Vector4cd v;
    for (int j = 0; j < 4; ++j) v(j) = evaluate(frozen_theta[j], t).value / t;
    return v;
  };

  // The intrinsic antisymmetric pairing B on the w-basis has only the (0,3)
  // and (1,2) slots filled; measure r = B12/B03 from w^T B w' = 0 and check
  // it is constant in t.
  auto ratio_at = [&](cplx t) {
    Eigen::Vector4cd v = wval(t), d = wder(t);
    return -(v(0) * d(3) - v(3) * d(0)) / (v(1) * d(2) - v(2) * d(1));
  };
  cplx r1 = ratio_at({0.2, 0.1}), r2 = ratio_at({-0.15, 0.22});
  if (std::abs(r1 - r2) > 1e-8 * std::abs(r1) || std::abs(r1.imag()) > 1e-8)
    throw InvalidParams("solution-space pairing ratio is not constant; "
                        "cannot build a transversal frame");
  double r = r1.real();

  PeriodProvider p;
  p.name = "family-transversal";
  p.domain_radius = 0.55;
  p.eval = [wval, r](cplx t) {
    Eigen::Vector4cd v = wval(t);
    PeriodVector P;
    P.v << v(0), v(1), v(3), r * v(2);
    P.frame = periods::Frame::symplectic;
    P.point = t;
    return P;
  };
  p.deriv = [wder, r](cplx t) {
    Eigen::Vector4cd d = wder(t);
    Eigen::Vector4cd out;
    out << d(0), d(1), d(3), r * d(2);
    return out;
  };
  return p;
}

PeriodProvider PeriodProvider::local(periods::LocalKind kind, cplx a) {
  PeriodProvider p;
  p.name = std::string("local-") + (kind == periods::LocalKind::conifold  ? "conifold"
                                    : kind == periods::LocalKind::tyurin ? "tyurin"
                                                                          : "lcs");
  p.domain_radius = 0.45;
  p.eval = [kind, a](cplx z) { return periods::local_model(kind, z, a); };
  if (kind == periods::LocalKind::conifold) {
    constexpr double kPi = 3.14159265358979323846;
    p.deriv = [a](cplx z) {
      Eigen::Vector4cd d;
      d(0) = a * a * z / (4 * kPi);
      d(1) = a;
      d(2) = -kI * a * a * z / (4 * kPi);
      d(3) = (kI * a / (2 * kPi)) * (std::log(z) + 1.0);
      return d;
    };
  }
  return p;
}

double abs_Z(const PeriodProvider& fam, const Charge& Q, const SymplecticForm& sigma,
             cplx t) {
  return std::abs(central_charge(Q, fam.eval(t), sigma));
}

Eigen::Vector2d abs_Z_gradient_fd(const PeriodProvider& fam, const Charge& Q,
                                  const SymplecticForm& sigma, cplx t, double h) {
  double fx1 = abs_Z(fam, Q, sigma, t + cplx(h, 0));
  double fx0 = abs_Z(fam, Q, sigma, t - cplx(h, 0));
  double fy1 = abs_Z(fam, Q, sigma, t + cplx(0, h));
  double fy0 = abs_Z(fam, Q, sigma, t - cplx(0, h));
  return {(fx1 - fx0) / (2 * h), (fy1 - fy0) / (2 * h)};
}

double metric_fd(const PeriodProvider& fam, const SymplecticForm& sigma, cplx t,
                 double h) {
  auto K = [&](cplx s) { return periods::kahler_potential(fam.eval(s), sigma); };
  double lap = K(t + cplx(h, 0)) + K(t - cplx(h, 0)) + K(t + cplx(0, h)) +
               K(t - cplx(0, h)) - 4 * K(t);
  return lap / (4 * h * h);  // d_t d_tbar = Laplacian / 4
}

double metric_analytic(const PeriodProvider& fam, const SymplecticForm& sigma, cplx t) {
  if (!fam.deriv) throw InvalidParams("provider has no analytic derivative");
  PeriodVector Pi = fam.eval(t);
  double hpair = pairing_checked(Pi, sigma);
  Eigen::Vector4cd dPi = fam.deriv(t);
  Eigen::Matrix4cd Sg = sigma.cd();
  cplx ht = -kI * (Pi.v.adjoint() * Sg * dPi)(0, 0);
  cplx htt = -kI * (dPi.adjoint() * Sg * dPi)(0, 0);
  return (-htt / hpair + ht * std::conj(ht) / (hpair * hpair)).real();
}

double horizontal_pairing_fd(const PeriodProvider& fam, const Charge& Q,
                             const SymplecticForm& sigma, cplx t, double h) {
  auto K = [&](cplx s) { return periods::kahler_potential(fam.eval(s), sigma); };
  PeriodVector Pi = fam.eval(t);
  Eigen::Vector4cd dPi;
  if (fam.deriv) {
    dPi = fam.deriv(t);
  } else {
    dPi = (fam.eval(t + cplx(h, 0)).v - fam.eval(t - cplx(h, 0)).v) / (2 * h);
    dPi -= kI * (fam.eval(t + cplx(0, h)).v - fam.eval(t - cplx(0, h)).v) / (2 * h);
    dPi /= 2.0;  // d/dt = (d/dx - i d/dy)/2
  }
  cplx dK = cplx((K(t + cplx(h, 0)) - K(t - cplx(h, 0))) / (2 * h),
                 -(K(t + cplx(0, h)) - K(t - cplx(0, h))) / (2 * h)) /
            2.0;
  Eigen::Vector4cd horiz = dPi + dK * Pi.v;  // D_t Pi = (d_t + d_t K) Pi
  cplx val = Q.d().transpose() * (sigma.cd() * horiz);
  return std::abs(val);
}

const char* flow_status_name(FlowStatus s) {
  switch (s) {
    case FlowStatus::converged: return "converged";
    case FlowStatus::max_steps: return "max_steps";
    case FlowStatus::boundary_exit: return "boundary_exit";
    case FlowStatus::bps_trivial: return "bps_trivial";
    case FlowStatus::metric_degenerate: return "metric_degenerate";
    case FlowStatus::step_failure: return "step_failure";
  }
  return "?";
}

const char* exit_kind_name(ExitKind k) {
  switch (k) {
    case ExitKind::none: return "none";
    case ExitKind::near_zero: return "near_zero";
    case ExitKind::near_one: return "near_one";
    case ExitKind::outside_chart: return "outside_chart";
    case ExitKind::degenerate_pairing: return "degenerate_pairing";
  }
  return "?";
}

namespace {

ExitKind classify_exit(cplx t, const PeriodProvider& fam, const FlowOptions& opt) {
  if (std::abs(t) < opt.boundary_eps) return ExitKind::near_zero;
  if (std::abs(t - cplx(1, 0)) < opt.boundary_eps) return ExitKind::near_one;
  if (std::abs(t) > fam.domain_radius) return ExitKind::outside_chart;
  return ExitKind::none;
}

}  // namespace

FlowResult gradient_flow(cplx start, const Charge& Q, const PeriodProvider& fam,
                         const SymplecticForm& sigma, const FlowOptions& opt) {
  if (Q.is_zero()) throw InvalidParams("attractor flow needs a nonzero charge");
  FlowResult res;
  ExitKind ek = classify_exit(start, fam, opt);
  if (ek != ExitKind::none)
    throw InvalidParams("flow must start in the smooth interior region");

  double Z0 = abs_Z(fam, Q, sigma, start);
  if (Z0 < 1e-14) {
    res.trajectory.push_back({start, 0, 0, Z0});
    res.status = FlowStatus::bps_trivial;
    return res;
  }

  auto metric_at = [&](cplx t) {
    if (opt.analytic_metric && fam.deriv) return metric_analytic(fam, sigma, t);
    return metric_fd(fam, sigma, t, opt.fd_step);
  };

  double g0 = metric_at(start);
  if (!(g0 > 0) || !std::isfinite(g0))
    throw MetricDegenerate("metric not positive at the flow start");

  cplx t = start;
  double rho = 0, U = 0, Z = Z0;
  double einvU = 1.0;  // e^{-U}, updated in closed form from dU/drho = -e^U |Z|
  double drho = opt.rho_step;
  res.trajectory.push_back({t, rho, U, Z});

  for (int step = 0; step < opt.max_steps; ++step) {
    Eigen::Vector2d grad = abs_Z_gradient_fd(fam, Q, sigma, t, opt.fd_step);
    if (grad.norm() < opt.grad_tol) {
      res.status = FlowStatus::converged;
      return res;
    }
    double g = metric_at(t);
    if (!(g > 0) || !std::isfinite(g)) {
      res.status = FlowStatus::metric_degenerate;
      return res;
    }
    // dt/drho = -2 e^U g^{-1} d_tbar |Z|, with d_tbar = (d_x + i d_y)/2
    cplx dbar(0.5 * grad(0), 0.5 * grad(1));
    cplx vel = -2.0 * (1.0 / einvU) * dbar / g;

    bool stepped = false;
    while (drho >= opt.rho_step_min) {
      cplx tn = t + vel * drho;
      ExitKind e = classify_exit(tn, fam, opt);
      if (e == ExitKind::near_zero || e == ExitKind::near_one) {
        // terminal boundary landing, still subject to the monotonicity check
        double Zn = Z;
        bool have_Z = true;
        try {
          Zn = abs_Z(fam, Q, sigma, tn);
        } catch (const Error&) {
          have_Z = false;
        }
        if (have_Z && Zn > Z + opt.monotone_slack) {
          drho *= 0.5;
          continue;
        }
        res.trajectory.push_back({tn, rho + drho, U, Zn});
        res.status = FlowStatus::boundary_exit;
        res.exit = e;
        return res;
      }
      if (e == ExitKind::outside_chart) {
        drho *= 0.5;
        continue;
      }
      double Zn;
      try {
        PeriodVector Pin = fam.eval(tn);
        double hn = periods::pairing(Pin, sigma);
        if (!(hn > opt.pairing_eps)) {
          res.trajectory.push_back({tn, rho + drho, U, Z});
          res.status = FlowStatus::boundary_exit;
          res.exit = ExitKind::degenerate_pairing;
          return res;
        }
        Zn = std::abs(central_charge(Q, Pin, sigma));
      } catch (const Error&) {
        drho *= 0.5;
        continue;
      }
      if (Zn <= Z + opt.monotone_slack) {
        einvU += 0.5 * (Z + Zn) * drho;  // e^{-U} grows by int |Z| drho
        U = -std::log(einvU);
        rho += drho;
        t = tn;
        Z = Zn;
        res.trajectory.push_back({t, rho, U, Z});
        drho = std::min(drho * 1.25, opt.rho_step_max);
        stepped = true;
        break;
      }
      drho *= 0.5;
    }
    if (!stepped) {
      // |Z| cannot decrease at the smallest step: a fixed point if the
      // gradient is already small, otherwise an honest stall
      res.status = (grad.norm() < 10 * opt.grad_tol) ? FlowStatus::converged
                                                     : FlowStatus::step_failure;
      return res;
    }
  }
  res.status = FlowStatus::max_steps;
  return res;
}

std::vector<ScanEntry> charge_scan(int box_radius, const std::vector<cplx>& starts,
                                   const PeriodProvider& fam, const SymplecticForm& sigma,
                                   const FlowOptions& opt) {
  if (box_radius < 1) throw InvalidParams("box radius must be >= 1");
  std::vector<Charge> charges;
  for (int a = -box_radius; a <= box_radius; ++a)
    for (int b = -box_radius; b <= box_radius; ++b)
      for (int c = -box_radius; c <= box_radius; ++c)
        for (int d = -box_radius; d <= box_radius; ++d) {
          Charge Q(a, b, c, d);
          if (Q.is_zero()) continue;
          // dedup Q ~ -Q: keep the representative with positive first nonzero
          int lead = 0;
          for (int i = 0; i < 4; ++i)
            if (Q.q(i) != 0) {
              lead = Q.q(i);
              break;
            }
          if (lead < 0) continue;
          charges.push_back(Q);
        }

  std::vector<ScanEntry> out;
  for (const auto& Q : charges)
    for (cplx s0 : starts) {
      ScanEntry e;
      e.Q = Q;
      e.start = s0;
      try {
        FlowResult r = gradient_flow(s0, Q, fam, sigma, opt);
        e.status = r.status;
        e.exit = r.exit;
        e.t_end = r.end().t;
        e.absZ_end = r.end().absZ;
        try {
          PeriodVector Pi = fam.eval(e.t_end);
          cplx C = fit_C(Pi, Q);
          e.residual = attractor_residual(C, Pi, Q);
          Eigen::Vector4d v;
          for (int i = 0; i < 4; ++i) v(i) = 2 * (C * Pi.v(i)).real();
          Eigen::Vector4d r4 = v.array().round();
          e.integral = (v - r4).norm() < 1e-3 && (r4 - Q.d()).norm() == 0;
        } catch (const Error&) {
          e.residual = std::numeric_limits<double>::quiet_NaN();
          e.integral = false;
        }
      } catch (const Error& err) {
        e.status = FlowStatus::step_failure;
        e.exit = ExitKind::none;
        e.t_end = s0;
        e.absZ_end = std::numeric_limits<double>::quiet_NaN();
        e.residual = std::numeric_limits<double>::quiet_NaN();
        e.integral = false;
        e.error = err.what();
      }
      out.push_back(std::move(e));
    }

  std::sort(out.begin(), out.end(), [](const ScanEntry& a, const ScanEntry& b) {
    for (int i = 0; i < 4; ++i)
      if (a.Q.q(i) != b.Q.q(i)) return a.Q.q(i) < b.Q.q(i);
    if (a.start.real() != b.start.real()) return a.start.real() < b.start.real();
    return a.start.imag() < b.start.imag();
  });
  return out;
}

FluxResult flux_superpotential(const FluxPair& flux, const PeriodVector& Pi,
                               const SymplecticForm& sigma) {
  if (!(flux.tau.imag() > 0)) throw InvalidParams("axio-dilaton needs Im tau > 0");
  if (!periods::is_symplectic_coords(Pi.frame))
    throw FrameMismatch("flux superpotential needs symplectic coordinates");
  Eigen::Vector4cd G = flux.f.cast<cplx>() - flux.tau * flux.h.cast<cplx>();
  Eigen::Matrix4cd Sg = sigma.cd();
  cplx W = G.transpose() * (Sg * Pi.v);
  cplx dtauW = -(flux.h.cast<cplx>().transpose() * (Sg * Pi.v))(0, 0);
  // K_tau = -log(-i (tau - conj tau)); d_tau K_tau = i / (2 Im tau)
  cplx dtauK = kI / (2 * flux.tau.imag());
  FluxResult r;
  r.W = W;
  r.D_tau = dtauW + dtauK * W;
  r.D_t = cplx(std::numeric_limits<double>::quiet_NaN(), 0);
  return r;
}

FluxResult flux_superpotential(const FluxPair& flux, const PeriodProvider& fam, cplx t,
                               const SymplecticForm& sigma, double fd_step) {
  PeriodVector Pi = fam.eval(t);
  FluxResult r = flux_superpotential(flux, Pi, sigma);
  auto Wat = [&](cplx s) {
    return flux_superpotential(flux, fam.eval(s), sigma).W;
  };
  auto K = [&](cplx s) { return periods::kahler_potential(fam.eval(s), sigma); };
  double h = fd_step;
  cplx dW = ((Wat(t + cplx(h, 0)) - Wat(t - cplx(h, 0))) -
             kI * (Wat(t + cplx(0, h)) - Wat(t - cplx(0, h)))) /
            (4 * h);
  cplx dK = cplx((K(t + cplx(h, 0)) - K(t - cplx(h, 0))),
                 -(K(t + cplx(0, h)) - K(t - cplx(0, h)))) /
            (4 * h);
  r.D_t = dW + dK * r.W;
  return r;
}

double moment_pairing(const Eigen::Vector4cd& v, const Eigen::Matrix4d& zeta) {
  Eigen::Matrix4cd izeta = kI * zeta.cast<cplx>();
  cplx num = (v.adjoint() * izeta * v)(0, 0);
  return num.real() / v.squaredNorm();
}

namespace {

// splitmix64, for reproducible sampling
struct Rng {
  uint64_t s;
  double real() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return ((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
  }
  double sym() { return 2 * real() - 1; }
};

// sp(4): X = [[A, B], [C, -A^T]] with B, C symmetric.
Eigen::Matrix4cd random_sp4(Rng& rng, double scale) {
  Eigen::Matrix2cd A, B, C;
  auto rc = [&]() { return cplx(rng.sym(), rng.sym()) * scale; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      A(i, j) = rc();
      B(i, j) = rc();
      C(i, j) = rc();
    }
  B(1, 0) = B(0, 1);
  C(1, 0) = C(0, 1);
  Eigen::Matrix4cd X;
  X.topLeftCorner<2, 2>() = A;
  X.topRightCorner<2, 2>() = B;
  X.bottomLeftCorner<2, 2>() = C;
  X.bottomRightCorner<2, 2>() = -A.transpose();
  return X;
}

// compact u(2) inside sp(4,R): zeta = [[A, B], [-B, A]], A antisymmetric,
// B symmetric; then i*zeta is Hermitian and the moment pairing is real.
Eigen::Matrix4d random_u2(Rng& rng, double scale) {
  double a = rng.sym() * scale;
  Eigen::Matrix2d A, B;
  A << 0, a, -a, 0;
  B << rng.sym() * scale, rng.sym() * scale, 0, rng.sym() * scale;
  B(1, 0) = B(0, 1);
  Eigen::Matrix4d z;
  z.topLeftCorner<2, 2>() = A;
  z.topRightCorner<2, 2>() = B;
  z.bottomLeftCorner<2, 2>() = -B;
  z.bottomRightCorner<2, 2>() = A;
  return z;
}

}  // namespace

MomentReport moment_checks(const PeriodVector& Pi_end, const Charge& Q,
                           const SymplecticForm& sigma, int samples, uint64_t seed,
                           double tol) {
  MomentReport rep;
  rep.samples = samples;
  double Z0 = std::abs(central_charge(Q, Pi_end, sigma));
  Rng rng{seed};
  for (int i = 0; i < samples; ++i) {
    Eigen::Matrix4cd X = random_sp4(rng, 0.05);
    Eigen::Matrix4cd g = X.exp();
    PeriodVector Pg = Pi_end;
    Pg.v = g * Pi_end.v;
    double Zg;
    try {
      Zg = std::abs(central_charge(Q, Pg, sigma));
    } catch (const Error&) {
      continue;  // left the positive-pairing chart; sample discarded
    }
    double gap = Zg - Z0;
    rep.worst_gap = std::min(rep.worst_gap, gap);
    if (gap < -tol) ++rep.violations;
  }

  Eigen::Matrix4d zeta = random_u2(rng, 1.0);
  zeta /= zeta.norm();
  for (double T : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    Eigen::Matrix4cd arg = kI * T * zeta.cast<cplx>();
    Eigen::Matrix4cd gT = arg.exp();
    Eigen::Vector4cd v = gT * Pi_end.v;
    rep.w_trend.push_back(moment_pairing(v, zeta));
  }
  rep.w_estimate = rep.w_trend.back();
  return rep;
}

}  // namespace cyhg::attractor
