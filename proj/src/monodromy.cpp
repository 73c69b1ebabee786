#include "cyhg/monodromy.hpp"

#include <algorithm>
#include <cmath>

#include "cyhg/errors.hpp"
#include "cyhg/logseries.hpp"

namespace cyhg::monodromy {

using hyperseries::CLogSeries;
using hyperseries::QLogSeries;

namespace {
constexpr double kPi = 3.14159265358979323846;

double dist_point_segment(cplx p, cplx a, cplx b) {
  cplx ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0) return std::abs(p - a);
  double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}
}  // namespace

bool Path::closed() const {
  return points.size() >= 2 && std::abs(points.front() - points.back()) < 1e-14;
}

void Path::validate() const {
  if (points.size() < 2) throw InvalidParams("path needs at least two points");
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    if (std::abs(points[i] - points[i + 1]) < 1e-15)
      throw InvalidParams("consecutive path points coincide");
    for (cplx puncture : {cplx(0, 0), cplx(1, 0)}) {
      double d = dist_point_segment(puncture, points[i], points[i + 1]);
      if (d < clearance)
        throw PunctureTooClose("segment " + std::to_string(i) + " passes at distance " +
                               std::to_string(d) + " from a puncture");
    }
  }
}

Path Path::segment(cplx a, cplx b, double clearance) {
  Path p;
  p.points = {a, b};
  p.clearance = clearance;
  p.validate();
  return p;
}

Path Path::loop(cplx center, cplx start, bool ccw, int sides, double clearance) {
  Path p;
  p.clearance = clearance;
  cplx r0 = start - center;
  double sign = ccw ? 1.0 : -1.0;
  for (int k = 0; k <= sides; ++k) {
    double th = sign * 2.0 * kPi * k / sides;
    p.points.push_back(center + r0 * std::polar(1.0, th));
  }
  p.points.back() = start;  // close exactly
  p.validate();
  return p;
}

Path Path::reversed() const {
  Path p = *this;
  std::reverse(p.points.begin(), p.points.end());
  return p;
}

Path Path::then(const Path& next) const {
  if (std::abs(points.back() - next.points.front()) > 1e-12)
    throw InvalidParams("concatenated path segments do not join");
  Path p = *this;
  p.clearance = std::min(clearance, next.clearance);
  p.points.insert(p.points.end(), next.points.begin() + 1, next.points.end());
  return p;
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) with PI-free basic step control.

Eigen::MatrixXcd transport(const CompanionSystem& sys, const Path& path,
                           const Eigen::MatrixXcd& init, const TransportOptions& opt) {
  path.validate();
  static const double c2 = 1. / 5, c3 = 3. / 10, c4 = 4. / 5, c5 = 8. / 9;
  static const double a21 = 1. / 5;
  static const double a31 = 3. / 40, a32 = 9. / 40;
  static const double a41 = 44. / 45, a42 = -56. / 15, a43 = 32. / 9;
  static const double a51 = 19372. / 6561, a52 = -25360. / 2187, a53 = 64448. / 6561,
                      a54 = -212. / 729;
  static const double a61 = 9017. / 3168, a62 = -355. / 33, a63 = 46732. / 5247,
                      a64 = 49. / 176, a65 = -5103. / 18656;
  static const double b1 = 35. / 384, b3 = 500. / 1113, b4 = 125. / 192,
                      b5 = -2187. / 6784, b6 = 11. / 84;
  static const double e1 = 35. / 384 - 5179. / 57600, e3 = 500. / 1113 - 7571. / 16695,
                      e4 = 125. / 192 - 393. / 640, e5 = -2187. / 6784 + 92097. / 339200,
                      e6 = 11. / 84 - 187. / 2100, e7 = -1. / 40;

  Eigen::MatrixXcd Y = init;
  for (size_t seg = 0; seg + 1 < path.points.size(); ++seg) {
    cplx a = path.points[seg], b = path.points[seg + 1];
    cplx dz = b - a;
    auto rhs = [&](double sigma, const Eigen::MatrixXcd& y) -> Eigen::MatrixXcd {
      return dz * (sys.eval(a + sigma * dz) * y);
    };
    double sigma = 0, h = std::min(opt.initial_step, 1.0);
    Eigen::MatrixXcd k1 = rhs(sigma, Y);
    while (sigma < 1.0) {
      h = std::min(h, 1.0 - sigma);
      Eigen::MatrixXcd k2 = rhs(sigma + c2 * h, Y + h * (a21 * k1));
      Eigen::MatrixXcd k3 = rhs(sigma + c3 * h, Y + h * (a31 * k1 + a32 * k2));
      Eigen::MatrixXcd k4 = rhs(sigma + c4 * h, Y + h * (a41 * k1 + a42 * k2 + a43 * k3));
      Eigen::MatrixXcd k5 =
          rhs(sigma + c5 * h, Y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      Eigen::MatrixXcd k6 =
          rhs(sigma + h, Y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      Eigen::MatrixXcd ynew =
          Y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      Eigen::MatrixXcd k7 = rhs(sigma + h, ynew);
      Eigen::MatrixXcd errm =
          h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
      double scale = opt.tol * std::max(1.0, Y.cwiseAbs().maxCoeff());
      double errnorm = errm.cwiseAbs().maxCoeff() / scale;
      if (errnorm <= 1.0) {
        sigma += h;
        Y = ynew;
        k1 = k7;  // FSAL
      }
      double fac = 0.9 * std::pow(std::max(errnorm, 1e-10), -0.2);
      h *= std::clamp(fac, 0.2, 5.0);
      if (h < opt.min_step)
        throw StepFailure("step control stalled at h = " + std::to_string(h));
    }
  }
  return Y;
}

// ---------------------------------------------------------------------------
// Frames

namespace {

// Frozen theta-derivative chains of a solution list, for fast frame evaluation.
struct ThetaChains {
  unsigned n;
  // chains[col][row] = theta^row applied to basis element col
  std::vector<std::vector<CLogSeries>> chains;
  int theta_sign;  // +1 in the t chart, -1 per theta in the 1/t chart

  ThetaChains(const std::vector<QLogSeries>& basis, unsigned n_, bool inv_chart)
      : n(n_), theta_sign(inv_chart ? -1 : 1) {
    for (const auto& f : basis) {
      std::vector<CLogSeries> chain;
      QLogSeries cur = f;
      for (unsigned r = 0; r < n; ++r) {
        chain.push_back(freeze(cur));
        if (r + 1 < n) cur = cur.theta();
      }
      chains.push_back(std::move(chain));
    }
  }

  Eigen::MatrixXcd frame(cplx s) const {
    Eigen::MatrixXcd Y(n, n);
    for (unsigned col = 0; col < n; ++col) {
      double sgn = 1;
      for (unsigned row = 0; row < n; ++row) {
        Y(row, col) = sgn * evaluate(chains[col][row], s).value;
        sgn *= theta_sign;
      }
    }
    return Y;
  }
};

}  // namespace

Eigen::MatrixXcd frobenius_frame(const HGParams& params, cplx s, unsigned order) {
  auto basis = hyperseries::frobenius_basis(params, order);  // (f_{n-1},...,f_0)
  return ThetaChains(basis, params.n, false).frame(s);
}

Eigen::MatrixXcd infinity_frame(const HGParams& params, cplx s, unsigned order) {
  auto basis = hyperseries::solutions_at_infinity(params, order);  // (F_n,...,F_1)
  return ThetaChains(basis, params.n, true).frame(s);
}

Eigen::MatrixXcd m0_closed_form(unsigned n) {
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) {
      double f = 1;
      for (unsigned k = 2; k <= j - i; ++k) f *= k;
      M(i, j) = 1.0 / f;
    }
  return M;
}

namespace {

Path loop_for(Puncture p, cplx base) {
  switch (p) {
    case Puncture::zero:
      return Path::loop(cplx(0, 0), base, /*ccw=*/true, 48);
    case Puncture::one:
      return Path::loop(cplx(1, 0), base, /*ccw=*/true, 48);
    case Puncture::infinity: {
      // Out to 3i, once around everything clockwise in the chart (that is
      // counterclockwise around infinity), and back.
      cplx out(0, 3);
      auto go = Path::segment(base, out);
      auto big = Path::loop(cplx(0, 0), out, /*ccw=*/false, 64);
      return go.then(big).then(go.reversed());
    }
  }
  throw InvalidParams("bad puncture");
}

const char* loop_name(Puncture p) {
  switch (p) {
    case Puncture::zero: return "ccw around 0";
    case Puncture::one: return "ccw around 1";
    case Puncture::infinity: return "ccw around infinity";
  }
  return "?";
}

}  // namespace

MonodromyMatrix monodromy_loop(const CompanionSystem& sys, const HGParams& params,
                               Puncture p, cplx base, unsigned order,
                               const TransportOptions& opt) {
  Path path = loop_for(p, base);
  Eigen::MatrixXcd Y0 = frobenius_frame(params, base, order);
  Eigen::MatrixXcd Y1 = transport(sys, path, Y0, opt);
  // Continuation in frame coordinates: Y1 = Y0 * C. The reported matrix uses
  // the basis-vector convention of the closed forms, which is C^T.
  Eigen::MatrixXcd C = Y0.fullPivLu().solve(Y1);
  Eigen::MatrixXcd back = transport(sys, path.reversed(), Y1, opt);
  double residual = (back - Y0).norm() / Y0.norm();
  return {C.transpose(), base, loop_name(p), residual};
}

ConnectionResult connection_matrix_along(const CompanionSystem& sys,
                                         const HGParams& params, const Path& path,
                                         unsigned order) {
  cplx base = path.points.front(), target = path.points.back();
  Eigen::MatrixXcd Y0 = frobenius_frame(params, base, order);
  Eigen::MatrixXcd Ycont = transport(sys, path, Y0);
  Eigen::MatrixXcd Yinf = infinity_frame(params, target, order);
  Eigen::MatrixXcd P = Yinf.fullPivLu().solve(Ycont);

  // Reported, never asserted: the paper's conjugacy M_inf = P M_0 P^{-1}
  // checked against the numerically transported monodromy at infinity
  // expressed in the infinity frame at the target point.
  Path loop_inf = Path::loop(cplx(0, 0), target, /*ccw=*/false, 64);
  Eigen::MatrixXcd Yinf_end = transport(sys, loop_inf, Yinf);
  Eigen::MatrixXcd Cinf = Yinf.fullPivLu().solve(Yinf_end).transpose();
  Eigen::MatrixXcd M0 = m0_closed_form(params.n);
  Eigen::MatrixXcd PT = P.transpose();
  double resid = (PT * M0 * PT.inverse() - Cinf).norm();
  return {P, resid, path};
}

ConnectionResult connection_matrix(const CompanionSystem& sys, const HGParams& params,
                                   cplx base, cplx target, unsigned order) {
  Path ref = Path::segment(base, base + cplx(0, 0.75))
                 .then(Path::segment(base + cplx(0, 0.75), target + cplx(0, 0.75)))
                 .then(Path::segment(target + cplx(0, 0.75), target));
  return connection_matrix_along(sys, params, ref, order);
}

}  // namespace cyhg::monodromy
