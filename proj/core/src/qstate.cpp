#include "twoq/qstate.hpp"

#include <cmath>
#include <stdexcept>

#include "twoq/errors.hpp"

namespace twoq {

const ComplexMatrix& pauli(int i) {
  static const std::array<ComplexMatrix, 4> sigma = {
      ComplexMatrix(2, {1, 0, 0, 1}),
      ComplexMatrix(2, {0, 1, 1, 0}),
      ComplexMatrix(2, {0, cxd(0, -1), cxd(0, 1), 0}),
      ComplexMatrix(2, {1, 0, 0, -1}),
  };
  return sigma.at(i);
}

DensityMatrix validate_state(const ComplexMatrix& m, bool strict) {
  if (m.dim() != 4) throw std::invalid_argument("state must be 4x4");
  if (!m.is_finite()) throw std::invalid_argument("state has nonfinite entries");
  const double hd = m.hermiticity_defect();
  if (hd > kHermTol) throw NotHermitian(hd);
  const cxd t = m.trace();
  const double td = std::max(std::abs(t.real() - 1.0), std::abs(t.imag()));
  if (td > kTraceTol) throw TraceNotOne(td);
  if (strict) {
    const double lo = min_eigenvalue(m);
    if (lo < -kStrictEigTol) throw NotPositive(lo);
  }
  return DensityMatrix{m};
}

MakhlinCoordinates bloch_decompose(const DensityMatrix& rho) {
  MakhlinCoordinates c;
  const ComplexMatrix& m = rho.mat;
  auto tr_with = [&](const ComplexMatrix& op) {
    return (m * op).trace().real();
  };
  const ComplexMatrix i2 = pauli(0);
  for (int j = 1; j <= 3; ++j) {
    c.s[j - 1] = 0.5 * tr_with(kron(pauli(j), i2));
    c.p[j - 1] = 0.5 * tr_with(kron(i2, pauli(j)));
  }
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      c.beta[k - 1][l - 1] = 0.25 * tr_with(kron(pauli(k), pauli(l)));
  return c;
}

ComplexMatrix bloch_compose(const MakhlinCoordinates& c) {
  ComplexMatrix m = 0.25 * ComplexMatrix::identity(4);
  const ComplexMatrix i2 = pauli(0);
  for (int j = 1; j <= 3; ++j) {
    m += (0.5 * c.s[j - 1]) * kron(pauli(j), i2);
    m += (0.5 * c.p[j - 1]) * kron(i2, pauli(j));
  }
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      m += cxd(c.beta[k - 1][l - 1]) * kron(pauli(k), pauli(l));
  return m;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m) {
  if (m.dim() != 4) throw std::invalid_argument("partial transpose needs dim 4");
  ComplexMatrix r(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          r(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
  return r;
}

ComplexMatrix maximally_mixed() { return 0.25 * ComplexMatrix::identity(4); }

ComplexMatrix bell_phi_plus() {
  ComplexMatrix m(4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return m;
}

ComplexMatrix werner_state(double w) {
  return cxd(w) * bell_phi_plus() + cxd(1.0 - w) * maximally_mixed();
}

}  // namespace twoq
