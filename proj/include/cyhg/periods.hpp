#ifndef CYHG_PERIODS_HPP
#define CYHG_PERIODS_HPP

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "cyhg/hyperseries.hpp"
#include "cyhg/symplectic.hpp"

namespace cyhg::periods {

using cplx = std::complex<double>;
using hyperseries::HGParams;
using hyperseries::QLogSeries;

enum class Frame {
  frobenius0,
  infinity,
  symplectic,
  local_conifold,
  local_tyurin,
  local_lcs,
};

const char* frame_name(Frame f);
bool is_symplectic_coords(Frame f);  // local models are written in symplectic coordinates

struct PeriodVector {
  Eigen::Vector4cd v;
  Frame frame = Frame::frobenius0;
  cplx point{0, 0};
};

// Kahler prepotential data. Only the polynomial part enters S; the instanton
// term vanishes in the large complex structure limit and is out of scope.
struct Prepotential {
  GaussRat phi111{Rat(1)};
  GaussRat phi011{Rat(0)};
  GaussRat phi001{Rat(0)};
  GaussRat phi000{Rat(0)};
  Rat Const{1};
};

// 4x4 frame-change matrix with exact Q(i) core and the (2 pi i)-power carried
// as an integer grading: numeric matrix = (2 pi i)^tpi_pow * core.
struct TransitionMatrix {
  std::array<std::array<GaussRat, 4>, 4> core;
  int tpi_pow = 0;
  Frame from = Frame::frobenius0;
  Frame to = Frame::symplectic;

  Eigen::Matrix4cd numeric() const;
  GaussRat det_core() const;  // exact determinant of the core
  TransitionMatrix inverse() const;
  PeriodVector apply(const PeriodVector& p) const;
  friend TransitionMatrix operator*(const TransitionMatrix& a, const TransitionMatrix& b);
};

// Log-Frobenius period vector at t: entries w_j = C(3,j) f_{3-j}(t),
// log-degree of w_j equal to 3-j, frame frobenius0. The paper's display
// carries a stray summation index; see the README note on the convention.
PeriodVector log_frobenius_vector(const HGParams& params, cplx t, unsigned order = 120);

// Same entries as truncated log-series (for the recombination oracle and
// for serialization).
std::array<QLogSeries, 4> log_frobenius_series(const HGParams& params, unsigned order = 120);

// Prepotential transition matrix S with Pi = S w,
//   S = Const (2 pi i)^3 [ -phi000/3  -phi001/2   0          phi111/6
//                          -phi111/2  -phi001    -phi111/2   0
//                           1          0          0          0
//                           0          1          0          0 ].
TransitionMatrix transition_S(const Prepotential& pre);

// Unit-lower-triangular frame change w -> Pi; a = (a10, a20, a21, a30, a31, a32).
TransitionMatrix frame_change_unit_triangular(const std::array<GaussRat, 6>& a);

// Placeholder presets for the displayed factorization A = A_zeta A_log.
// Entries are formal stand-ins (the zeta-value matrix itself is out of scope);
// both factors are unit lower triangular, so products and inverses stay exact.
TransitionMatrix preset_A_zeta();
TransitionMatrix preset_A_log();

enum class LocalKind { conifold, tyurin, lcs };

// Displayed local period vectors at the three one-modulus boundary types.
// Valid for |z| < 0.5 (ModelRegion otherwise); tyurin needs z != 0.
PeriodVector local_model(LocalKind kind, cplx z, cplx a);

// h(Pi) = -i Pi^dagger Sigma Pi (real by antisymmetry of Sigma).
double pairing(const PeriodVector& p, const SymplecticForm& sigma);

// K = -log h with h required positive; throws DegeneratePairing otherwise.
// The paper's two sign displays are reconciled by this convention, which makes
// |Z| = |Q^t Sigma Pi| e^{K/2} internally consistent.
double kahler_potential(const PeriodVector& p, const SymplecticForm& sigma);

}  // namespace cyhg::periods

#endif
