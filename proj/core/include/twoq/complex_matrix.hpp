#ifndef TWOQ_COMPLEX_MATRIX_HPP
#define TWOQ_COMPLEX_MATRIX_HPP

#include <complex>
#include <initializer_list>
#include <vector>

namespace twoq {

using cxd = std::complex<double>;
using cvec = std::vector<cxd>;

/// Dense square complex matrix, row-major. Small dimensions only (the
/// project needs 2, 4 and the occasional generic n <= 8).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), a_(dim * dim) {}
  ComplexMatrix(int dim, std::initializer_list<cxd> entries);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(const std::vector<double>& entries);

  int dim() const { return dim_; }
  cxd& operator()(int r, int c) { return a_[r * dim_ + c]; }
  const cxd& operator()(int r, int c) const { return a_[r * dim_ + c]; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cxd z);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(cxd z, ComplexMatrix a) { return a *= z; }
  friend ComplexMatrix operator*(ComplexMatrix a, cxd z) { return a *= z; }
  ComplexMatrix operator*(const ComplexMatrix& o) const;

  ComplexMatrix dagger() const;
  ComplexMatrix transpose() const;
  cxd trace() const;

  double max_abs() const;
  double frobenius_norm() const;
  /// ||M - M^dag||_max
  double hermiticity_defect() const;
  bool is_finite() const;

 private:
  int dim_ = 0;
  std::vector<cxd> a_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Determinant. Cofactor (Leibniz) expansion up to dim 4 so there is no
/// pivoting noise near det = 0; LU with partial pivoting beyond that.
cxd det(const ComplexMatrix& m);

/// Transpose of the cofactor matrix: adj(H) * H = det(H) * I. Hermitian for
/// hermitian input. Carries the first derivative of det.
ComplexMatrix adjugate(const ComplexMatrix& m);

// small vector helpers
cxd inner(const cvec& a, const cvec& b);  // conjugate-linear in the first slot
double norm(const cvec& a);
cvec kron_vec(const cvec& a, const cvec& b);
ComplexMatrix outer(const cvec& a, const cvec& b);  // a b^dag

}  // namespace twoq

#endif
