#ifndef TWOQ_INVARIANTS_HPP
#define TWOQ_INVARIANTS_HPP

#include "twoq/qstate.hpp"

namespace twoq {

/// The nine local-unitary invariants used by the determinant formula, in
/// Makhlin's numbering. I2, I3, I4, I5, I7 and I8 are squares or norms and
/// hence nonnegative.
struct InvariantVector {
  double I1 = 0;   // det beta
  double I2 = 0;   // tr(beta^T beta)
  double I3 = 0;   // tr((beta^T beta)^2)
  double I4 = 0;   // s . s
  double I5 = 0;   // |s beta|^2   (s as a row vector)
  double I7 = 0;   // p . p
  double I8 = 0;   // |beta p|^2   (p as a column vector)
  double I12 = 0;  // s beta p
  double I14 = 0;  // e_ijk e_lmn s_i p_l beta_jm beta_kn
};

InvariantVector compute_invariants(const MakhlinCoordinates& c);

/// Closed-form det of the partial transpose in terms of the nine invariants:
///   1/256 - (4 I2 + I4 + I7)/32 + (4 I1 + I12)/2
///   + (32 I3 - 16 I5 - 16 I8 - 16 I14 - 16 I2^2 + I4^2 + I7^2
///      + 8 I2 I4 + 8 I2 I7 - 2 I4 I7)/16.
double det_pt_via_invariants(const InvariantVector& v);

/// det(rho^Gamma) by direct cofactor expansion of the 4x4 matrix; the
/// imaginary residue must stay below 1e-12 and is discarded.
double det_pt_direct(const DensityMatrix& rho);

}  // namespace twoq

#endif
