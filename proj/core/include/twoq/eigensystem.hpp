#ifndef TWOQ_EIGENSYSTEM_HPP
#define TWOQ_EIGENSYSTEM_HPP

#include <vector>

#include "twoq/complex_matrix.hpp"
#include "twoq/tolerances.hpp"

namespace twoq {

struct SpectralData {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, same order
  int zero_count = 0;               // eigenvalues with |lambda| <= zero_tol
  double zero_tol = kZeroTol;
};

/// Full spectral decomposition of a hermitian matrix by cyclic Jacobi
/// rotations. Deterministic; converges when the off-diagonal Frobenius mass
/// drops below 1e-14 * ||H||_F. Throws NotHermitian / NoConvergence.
SpectralData eigensystem(const ComplexMatrix& h, double zero_tol = kZeroTol);

double min_eigenvalue(const ComplexMatrix& h);

}  // namespace twoq

#endif
