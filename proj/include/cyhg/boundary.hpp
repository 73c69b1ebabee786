#ifndef CYHG_BOUNDARY_HPP
#define CYHG_BOUNDARY_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cyhg/errors.hpp"
#include "cyhg/ratmat.hpp"
#include "cyhg/symplectic.hpp"

namespace cyhg::boundary {

using cplx = std::complex<double>;

// Exact rational nilpotent 4x4 endomorphism; floats are rejected at this
// module's boundary so filtrations stay exact.
struct NilpotentEndo {
  RatMat N;
  unsigned index = 0;  // smallest r with N^r = 0

  explicit NilpotentEndo(RatMat m);  // throws NotNilpotent

  bool infinitesimally_symplectic(const SymplecticForm& sigma) const;

  // Example 4.3 generators.
  static NilpotentEndo n1(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
  static NilpotentEndo n2(const Rat& a);
  static NilpotentEndo n3(const Rat& a, const Rat& b, const Rat& d);  // A = [[a,b],[b,d]]
};

// Monodromy weight filtration centered at weight 3:
// W[0] <= W[1] <= ... <= W[6], N W_k <= W_{k-2}, N^k : Gr_{3+k} ~ Gr_{3-k}.
struct WeightFiltration {
  std::array<RatMat, 7> W;     // column spans
  std::array<int, 7> dims;     // dim W_k
  std::array<int, 7> gr;       // dim Gr_k
};

WeightFiltration weight_filtration(const NilpotentEndo& N);

enum class LMHSCase {
  n1_diagonal,     // I^{p,p} on the diagonal, (0,0) <- (1,1) <- (2,2) <- (3,3)
  n2_isolated,     // (3,0), (0,3) isolated and (1,1) <- (2,2)
  n3_two_pure,     // (2,0) <- (3,1) and (0,2) <- (1,3)
};

struct LMHSType {
  LMHSCase kind;
  // multiset of (p, q) with multiplicities summing to 4
  std::vector<std::pair<std::pair<int, int>, int>> pieces;
  // N-action arrows (from, to)
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> arrows;
  std::array<int, 7> gr;
  std::string describe() const;
};

// Classifies the h = (1,1,1,1) degenerations by exact rank signature;
// throws UnclassifiedSignature outside the three Example-4.3 cases.
LMHSType lmhs_type(const NilpotentEndo& N);

// exp(i z N) Pi as an exact polynomial in z (at most `index` terms; the
// truncation is exact because N is nilpotent). The paper's two expansion
// displays differ by z -> -z; the convention here matches the boundary
// constraint system that consumes it.
struct OrbitLimit {
  std::vector<Eigen::Vector4cd> coeffs;   // z^k vector coefficients
  std::array<int, 4> degree;              // per-component top degree (-1: zero)
  Eigen::Vector4cd finite;                // z^0 part
  std::vector<Eigen::Vector4cd> values;   // polynomial evaluated on z_sequence
};

OrbitLimit nilpotent_orbit_limit(const NilpotentEndo& N, const Eigen::Vector4cd& Pi,
                                 const std::vector<cplx>& z_sequence);

// Exact matrix coefficients of exp(i z N) (for exactness properties):
// entry k is the Gaussian-rational matrix of z^k, k = 0..terms-1.
std::vector<std::array<std::array<GaussRat, 4>, 4>> orbit_exponential_coeffs(
    const NilpotentEndo& N, unsigned terms);

enum class BoundaryKind { N1, N2, N3 };

struct BoundaryParams {
  Rat a{0}, b{0}, c{0}, d{0};  // N3 uses (a,b,d); N2 uses a; N1 uses all four
};

// Residuals of the per-component attractor constraint systems. A constraint
// of the form "lim (alpha z + beta) = 0" contributes hypot(|alpha|, |beta|):
// the divergent coefficient must cancel and the finite part must vanish.
struct BoundaryResiduals {
  std::vector<double> r;
  double total;
  std::vector<std::string> labels;
};

BoundaryResiduals boundary_constraints(BoundaryKind kind, const Eigen::Vector4cd& Pi,
                                       const BoundaryParams& p);

}  // namespace cyhg::boundary

#endif
