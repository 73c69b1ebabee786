#ifndef CYHG_HYPERSERIES_HPP
#define CYHG_HYPERSERIES_HPP

#include <string>
#include <vector>

#include "cyhg/errors.hpp"
#include "cyhg/logseries.hpp"

namespace cyhg::hyperseries {

// Parameters of nF_{n-1}(rho_1..rho_n ; lower_1..lower_{n-1} | s).
// The paper's families all have lower parameters equal to 1; beta holds the
// exponents at infinity (rho_k reduced mod 1 into [0,1)).
struct HGParams {
  unsigned n = 0;
  std::vector<Rat> upper;
  std::vector<Rat> lower;
  std::vector<Rat> beta;

  // Iterated-twist family with all exponents 1/2: L_n = Theta^n - s(Theta+1/2)^n.
  static HGParams halfs(unsigned n);
  // Mirror family preset of order n: exponents k/(n+1), k = 1..n.
  static HGParams dwork(unsigned n);
  // "halfs-3", "dwork-4", ...
  static HGParams preset(const std::string& name);

  bool lower_all_one() const;
  void validate() const;  // throws InvalidParams
};

// (rho)_j = rho (rho+1) ... (rho+j-1), empty product = 1.
Rat pochhammer(const Rat& rho, unsigned j);

// Coefficients a_j = prod_k (rho_k)_j / (prod_i (lower_i)_j * j!).
// For lower = (1,..,1) this is prod_k (rho_k)_j / (j!)^n, the normalization
// under which the Hadamard tower 1F0 * 1F0 = 2F1 holds coefficient-exactly.
QSeries hg_series(const HGParams& params, unsigned order);

// Coefficient-wise product. Throws MixedVariables on tag mismatch.
QSeries hadamard(const QSeries& a, const QSeries& b);

// Frobenius basis (f_{n-1}, ..., f_0) near t = 0 built from alpha-derivatives
// of t^alpha F(rho+alpha; 1+alpha; t), truncated at alpha^n. Requires the
// maximally unipotent case (all lower parameters 1). f_l has log-degree l and
// carries the (2*pi*i)^{-l} grading.
std::vector<QLogSeries> frobenius_basis(const HGParams& params, unsigned order);

// Solution basis at t = infinity, ordered (F_n, ..., F_1) as in the monodromy
// normal form. For pairwise distinct beta_k these are pure power series
// t^{-beta_k} nF_{n-1}(shifted | 1/t) with B_k = 1. When all beta_k coincide
// (the rho = 1/2 families) the basis is log-corrected via the alpha-deformation
// in the 1/t chart. Partial collisions throw ResonantExponents.
std::vector<QLogSeries> solutions_at_infinity(const HGParams& params, unsigned order);

}  // namespace cyhg::hyperseries

#endif
