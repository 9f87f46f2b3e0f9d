#ifndef TWOQ_QSTATE_HPP
#define TWOQ_QSTATE_HPP

#include <array>

#include "twoq/complex_matrix.hpp"
#include "twoq/eigensystem.hpp"
#include "twoq/tolerances.hpp"

namespace twoq {

/// A two-qubit state: 4x4, hermitian, unit trace. Positivity is not part of
/// the type (geometry tells states from non-states); validate_state in
/// strict mode additionally requires min eigenvalue >= -1e-10.
struct DensityMatrix {
  ComplexMatrix mat;
};

/// Bloch-type chart: rho = I/4 + (1/2) sum s_i sigma_i x I
///                        + (1/2) sum p_i I x sigma_i
///                        + sum beta_kl sigma_k x sigma_l.
struct MakhlinCoordinates {
  std::array<double, 3> s{};
  std::array<double, 3> p{};
  std::array<std::array<double, 3>, 3> beta{};
};

/// Pauli matrix sigma_i, i in 1..3 (i = 0 gives the 2x2 identity).
const ComplexMatrix& pauli(int i);

/// Checks hermiticity and unit trace (and positivity when strict).
/// Throws NotHermitian / TraceNotOne / NotPositive with the violating
/// magnitude.
DensityMatrix validate_state(const ComplexMatrix& m, bool strict = false);

/// s_j = tr(rho (sigma_j x I))/2, p_j = tr(rho (I x sigma_j))/2,
/// beta_kl = tr(rho (sigma_k x sigma_l))/4.
MakhlinCoordinates bloch_decompose(const DensityMatrix& rho);

/// Inverse of bloch_decompose; always hermitian with unit trace.
ComplexMatrix bloch_compose(const MakhlinCoordinates& c);

/// Transposition of the second tensor factor: block [[A,B],[C,D]] (first
/// qubit indexes the blocks) goes to [[A^T,B^T],[C^T,D^T]]. Involution.
ComplexMatrix partial_transpose(const ComplexMatrix& m);

// Common fixtures.
ComplexMatrix maximally_mixed();
ComplexMatrix bell_phi_plus();                 // projector onto (|00>+|11>)/sqrt(2)
ComplexMatrix werner_state(double w);          // w * Bell + (1-w) * I/4

}  // namespace twoq

#endif
