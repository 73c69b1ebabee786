#include "cyhg/ratmat.hpp"

#include <stdexcept>

namespace cyhg::boundary {

RatMat RatMat::identity(unsigned n) {
  RatMat m(n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RatMat operator*(const RatMat& x, const RatMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("ratmat dimension mismatch");
  RatMat r(x.rows, y.cols);
  for (unsigned i = 0; i < x.rows; ++i)
    for (unsigned k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (unsigned j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

RatMat operator+(const RatMat& x, const RatMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("ratmat dimension mismatch");
  RatMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

RatMat operator-(const RatMat& x, const RatMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("ratmat dimension mismatch");
  RatMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

RatMat RatMat::scaled(const Rat& s) const {
  RatMat r = *this;
  for (auto& x : r.a) x *= s;
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols, rows);
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

RatMat RatMat::pow(unsigned k) const {
  if (rows != cols) throw std::invalid_argument("pow needs a square matrix");
  RatMat r = identity(rows);
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

namespace {

// Row-reduce in place; returns pivot column indices.
std::vector<unsigned> rref(RatMat& m) {
  std::vector<unsigned> pivots;
  unsigned row = 0;
  for (unsigned col = 0; col < m.cols && row < m.rows; ++col) {
    unsigned piv = row;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != row)
      for (unsigned j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    Rat d = m.at(row, col);
    for (unsigned j = 0; j < m.cols; ++j) m.at(row, j) /= d;
    for (unsigned r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (unsigned j = 0; j < m.cols; ++j) m.at(r, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

unsigned RatMat::rank() const {
  RatMat m = *this;
  return static_cast<unsigned>(rref(m).size());
}

RatMat RatMat::kernel_basis() const {
  RatMat m = *this;
  auto pivots = rref(m);
  std::vector<unsigned> free_cols;
  for (unsigned c = 0, p = 0; c < cols; ++c) {
    if (p < pivots.size() && pivots[p] == c)
      ++p;
    else
      free_cols.push_back(c);
  }
  RatMat K(cols, static_cast<unsigned>(free_cols.size()));
  for (unsigned k = 0; k < free_cols.size(); ++k) {
    unsigned fc = free_cols[k];
    K.at(fc, k) = 1;
    for (unsigned p = 0; p < pivots.size(); ++p) K.at(pivots[p], k) = -m.at(p, fc);
  }
  return K;
}

RatMat RatMat::image_basis() const {
  RatMat m = *this;
  auto pivots = rref(m);
  RatMat B(rows, static_cast<unsigned>(pivots.size()));
  for (unsigned k = 0; k < pivots.size(); ++k)
    for (unsigned i = 0; i < rows; ++i) B.at(i, k) = at(i, pivots[k]);
  return B;
}

RatMat subspace_sum(const RatMat& A, const RatMat& B) {
  if (A.rows != B.rows) throw std::invalid_argument("ambient dimension mismatch");
  RatMat J(A.rows, A.cols + B.cols);
  for (unsigned i = 0; i < A.rows; ++i) {
    for (unsigned j = 0; j < A.cols; ++j) J.at(i, j) = A.at(i, j);
    for (unsigned j = 0; j < B.cols; ++j) J.at(i, A.cols + j) = B.at(i, j);
  }
  return J.image_basis();
}

RatMat subspace_intersect(const RatMat& A, const RatMat& B) {
  if (A.rows != B.rows) throw std::invalid_argument("ambient dimension mismatch");
  // kernel of [A | B] gives pairs (x, y) with A x = -B y; intersection = A x
  RatMat J(A.rows, A.cols + B.cols);
  for (unsigned i = 0; i < A.rows; ++i) {
    for (unsigned j = 0; j < A.cols; ++j) J.at(i, j) = A.at(i, j);
    for (unsigned j = 0; j < B.cols; ++j) J.at(i, A.cols + j) = B.at(i, j);
  }
  RatMat K = J.kernel_basis();
  RatMat V(A.rows, K.cols);
  for (unsigned k = 0; k < K.cols; ++k)
    for (unsigned i = 0; i < A.rows; ++i) {
      Rat acc(0);
      for (unsigned j = 0; j < A.cols; ++j) acc += A.at(i, j) * K.at(j, k);
      V.at(i, k) = acc;
    }
  return V.image_basis();
}

bool subspace_leq(const RatMat& A, const RatMat& B) {
  return subspace_sum(A, B).cols == B.image_basis().cols;
}

}  // namespace cyhg::boundary
