#include "twoq/complex_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace twoq {

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<cxd> entries)
    : dim_(dim), a_(entries) {
  if (static_cast<int>(a_.size()) != dim * dim)
    throw std::invalid_argument("entry count does not match dimension");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& entries) {
  ComplexMatrix m(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  assert(dim_ == o.dim_);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  assert(dim_ == o.dim_);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cxd z) {
  for (auto& x : a_) x *= z;
  return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  assert(dim_ == o.dim_);
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const cxd aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < dim_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

cxd ComplexMatrix::trace() const {
  cxd t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : a_) s += std::norm(x);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

bool ComplexMatrix::is_finite() const {
  for (const auto& x : a_)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  ComplexMatrix r(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const cxd aij = a(i, j);
      if (aij == 0.0) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return r;
}

namespace {

// Leibniz expansion over permutations, n <= 4. 24 products at n = 4.
cxd det_leibniz(const ComplexMatrix& m) {
  const int n = m.dim();
  int perm[4];
  for (int i = 0; i < n; ++i) perm[i] = i;
  cxd sum = 0.0;
  int sign = 1;
  // Heap's algorithm, iterative.
  int c[4] = {0, 0, 0, 0};
  auto term = [&]() {
    cxd p = sign;
    for (int i = 0; i < n; ++i) p *= m(i, perm[i]);
    sum += p;
  };
  term();
  int i = 0;
  while (i < n) {
    if (c[i] < i) {
      std::swap(perm[c[i] * (i % 2)], perm[i]);
      sign = -sign;
      term();
      ++c[i];
      i = 0;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  return sum;
}

cxd det_lu(ComplexMatrix m) {
  const int n = m.dim();
  cxd d = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
    if (m(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      d = -d;
    }
    d *= m(k, k);
    for (int i = k + 1; i < n; ++i) {
      const cxd f = m(i, k) / m(k, k);
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

// Minor of m with row r and column c removed.
ComplexMatrix minor_matrix(const ComplexMatrix& m, int r, int c) {
  ComplexMatrix s(m.dim() - 1);
  for (int i = 0, si = 0; i < m.dim(); ++i) {
    if (i == r) continue;
    for (int j = 0, sj = 0; j < m.dim(); ++j) {
      if (j == c) continue;
      s(si, sj) = m(i, j);
      ++sj;
    }
    ++si;
  }
  return s;
}

}  // namespace

cxd det(const ComplexMatrix& m) {
  if (m.dim() == 0) return 1.0;
  if (m.dim() <= 4) return det_leibniz(m);
  return det_lu(m);
}

ComplexMatrix adjugate(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1.0;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cxd cof = det(minor_matrix(m, i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

cxd inner(const cvec& a, const cvec& b) {
  assert(a.size() == b.size());
  cxd s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const cvec& a) {
  double s = 0.0;
  for (const auto& x : a) s += std::norm(x);
  return std::sqrt(s);
}

cvec kron_vec(const cvec& a, const cvec& b) {
  cvec r(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
  return r;
}

ComplexMatrix outer(const cvec& a, const cvec& b) {
  assert(a.size() == b.size());
  ComplexMatrix r(static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = a[i] * std::conj(b[j]);
  return r;
}

}  // namespace twoq
