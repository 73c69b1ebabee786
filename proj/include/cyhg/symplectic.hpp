#ifndef CYHG_SYMPLECTIC_HPP
#define CYHG_SYMPLECTIC_HPP

#include <array>

#include <Eigen/Dense>

#include "cyhg/errors.hpp"

namespace cyhg {

// Integer symplectic intersection form on the rank-4 charge lattice.
// Standard block form [[0, I2], [-I2, 0]]; unimodular and antisymmetric.
struct SymplecticForm {
  std::array<std::array<int, 4>, 4> m;

  static SymplecticForm standard();

  void validate() const;  // antisymmetry and det = 1, exact integer arithmetic
  Eigen::Matrix4cd cd() const;
  Eigen::Matrix4d d() const;
};

}  // namespace cyhg

#endif
