#include "twoq/eigensystem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "twoq/errors.hpp"

namespace twoq {

namespace {

double offdiag_norm(const ComplexMatrix& h) {
  double s = 0.0;
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

}  // namespace

SpectralData eigensystem(const ComplexMatrix& h, double zero_tol) {
  const double defect = h.hermiticity_defect();
  if (defect > 1e-10) throw NotHermitian(defect);

  const int n = h.dim();
  ComplexMatrix a = h;
  // Work on the hermitian average so roundoff in the input cannot drift.
  for (int i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      const cxd v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double stop = 1e-14 * std::max(a.frobenius_norm(), 1e-300);
  constexpr int kMaxSweeps = 64;
  int sweep = 0;
  while (offdiag_norm(a) > stop) {
    if (++sweep > kMaxSweeps)
      throw NoConvergence("jacobi sweep cap reached");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r <= stop / (n * n)) continue;
        // Phase strips a(p,q) to a real value, then a real Jacobi rotation
        // with |theta| <= pi/4 annihilates it.
        const cxd phase = a(p, q) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cxd s = t * c * phase;

        // G has G(p,p)=c, G(p,q)=s, G(q,p)=-conj(s), G(q,q)=c; A <- G^dag A G.
        for (int k = 0; k < n; ++k) {
          const cxd akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - std::conj(s) * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cxd apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = std::conj(s) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (int k = 0; k < n; ++k) {
          const cxd vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(s) * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return diag[x] < diag[y]; });

  SpectralData out;
  out.zero_tol = zero_tol;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues[i] = diag[order[i]];
    for (int k = 0; k < n; ++k) out.eigenvectors(k, i) = v(k, order[i]);
    if (std::abs(out.eigenvalues[i]) <= zero_tol) ++out.zero_count;
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& h) {
  return eigensystem(h).eigenvalues.front();
}

}  // namespace twoq
