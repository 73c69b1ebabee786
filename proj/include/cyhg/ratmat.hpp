#ifndef CYHG_RATMAT_HPP
#define CYHG_RATMAT_HPP

#include <vector>

#include "cyhg/rational.hpp"

namespace cyhg::boundary {

// Dense exact rational matrix, row-major. Small sizes only (the module works
// on 4x4 endomorphisms and their kernels/images).
struct RatMat {
  unsigned rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(unsigned r, unsigned c) : rows(r), cols(c), a(r * c, Rat(0)) {}

  Rat& at(unsigned i, unsigned j) { return a[i * cols + j]; }
  const Rat& at(unsigned i, unsigned j) const { return a[i * cols + j]; }

  static RatMat identity(unsigned n);
  bool is_zero() const;

  friend RatMat operator*(const RatMat& x, const RatMat& y);
  friend RatMat operator+(const RatMat& x, const RatMat& y);
  friend RatMat operator-(const RatMat& x, const RatMat& y);
  RatMat scaled(const Rat& s) const;
  RatMat transpose() const;
  RatMat pow(unsigned k) const;

  unsigned rank() const;
  // Columns form a basis of { x : A x = 0 }.
  RatMat kernel_basis() const;
  // Columns form a basis of the column span.
  RatMat image_basis() const;
};

// Columns of the result span the sum of the two column spans.
RatMat subspace_sum(const RatMat& A, const RatMat& B);
// Columns of the result span the intersection of the two column spans.
RatMat subspace_intersect(const RatMat& A, const RatMat& B);
// span(A) contained in span(B)?
bool subspace_leq(const RatMat& A, const RatMat& B);

}  // namespace cyhg::boundary

#endif
