#include "twoq/sampling.hpp"

#include <cmath>
#include <numbers>

#include "twoq/errors.hpp"

namespace twoq {

std::uint64_t RandomStream::mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RandomStream RandomStream::substream(std::uint64_t seed, std::uint64_t index,
                                     std::uint64_t domain) {
  return RandomStream(mix(mix(seed) ^ mix((domain << 56) + index + 1)));
}

double RandomStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 is kept away from 0 so the log stays finite.
  double u1 = uniform();
  if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  spare_ = mag * std::sin(ang);
  have_spare_ = true;
  return mag * std::cos(ang);
}

cxd RandomStream::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

std::vector<double> RandomStream::dirichlet_flat(int k) {
  std::vector<double> w(k);
  double sum = 0.0;
  for (int i = 0; i < k; ++i) {
    double u = uniform();
    if (u < 0x1.0p-53) u = 0x1.0p-53;
    w[i] = -std::log(u);
    sum += w[i];
  }
  for (auto& x : w) x /= sum;
  return w;
}

cvec RandomStream::gaussian_vector(int n) {
  cvec v(n);
  for (auto& x : v) x = complex_gaussian();
  return v;
}

namespace {

ComplexMatrix ginibre(RandomStream& rng, int rows, int cols) {
  // Stored as a square matrix with zero padding when cols < rows.
  ComplexMatrix a(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = rng.complex_gaussian();
  return a;
}

DensityMatrix wishart_state(RandomStream& rng, int r) {
  const ComplexMatrix a = ginibre(rng, 4, r);
  ComplexMatrix rho = a * a.dagger();
  const double t = rho.trace().real();
  rho *= cxd(1.0 / t);
  return validate_state(rho);
}

cvec normalized_gaussian_vector(RandomStream& rng, int n) {
  cvec v = rng.gaussian_vector(n);
  const double nn = norm(v);
  for (auto& x : v) x /= nn;
  return v;
}

DensityMatrix product_pure(RandomStream& rng) {
  const cvec e = normalized_gaussian_vector(rng, 2);
  const cvec f = normalized_gaussian_vector(rng, 2);
  return validate_state(kron(outer(e, e), outer(f, f)));
}

}  // namespace

DensityMatrix sample_one(const EnsembleSpec& spec, std::uint64_t index) {
  RandomStream rng = RandomStream::substream(spec.seed, index);
  switch (spec.kind) {
    case EnsembleKind::HilbertSchmidt:
      return wishart_state(rng, 4);
    case EnsembleKind::Pure: {
      const cvec v = normalized_gaussian_vector(rng, 4);
      return validate_state(outer(v, v));
    }
    case EnsembleKind::ProductPure:
      return product_pure(rng);
    case EnsembleKind::SeparableMixture: {
      if (spec.k < 1) throw InvalidSpec("separable mixture needs k >= 1");
      const std::vector<double> w = rng.dirichlet_flat(spec.k);
      ComplexMatrix rho(4);
      for (int i = 0; i < spec.k; ++i)
        rho += cxd(w[i]) * product_pure(rng).mat;
      return validate_state(rho);
    }
    case EnsembleKind::RankDeficient:
      if (spec.r < 1 || spec.r > 4)
        throw InvalidSpec("rank-deficient ensemble needs 1 <= r <= 4");
      return wishart_state(rng, spec.r);
  }
  throw InvalidSpec("unknown ensemble kind");
}

std::vector<DensityMatrix> sample(const EnsembleSpec& spec, int count) {
  if (count < 1) throw InvalidSpec("count must be >= 1");
  std::vector<DensityMatrix> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(sample_one(spec, i));
  return out;
}

LocalUnitary sample_local_unitary(std::uint64_t seed, std::uint64_t index) {
  RandomStream rng = RandomStream::substream(seed, index, 1);
  auto su2 = [&rng]() {
    // Normalized Gaussian 4-vector = uniform unit quaternion = Haar SU(2).
    double q[4];
    double nn = 0.0;
    for (auto& x : q) {
      x = rng.gaussian();
      nn += x * x;
    }
    nn = std::sqrt(nn);
    for (auto& x : q) x /= nn;
    return ComplexMatrix(2, {cxd(q[0], q[1]), cxd(q[2], q[3]),
                             cxd(-q[2], q[3]), cxd(q[0], -q[1])});
  };
  LocalUnitary g;
  g.u = su2();
  g.v = su2();
  return g;
}

DensityMatrix apply_local_unitary(const DensityMatrix& rho, const LocalUnitary& g) {
  const ComplexMatrix w = kron(g.u, g.v);
  return validate_state(w * rho.mat * w.dagger());
}

ComplexMatrix haar_unitary(int dim, std::uint64_t seed, std::uint64_t index) {
  RandomStream rng = RandomStream::substream(seed, index, 2);
  const ComplexMatrix a = ginibre(rng, dim, dim);
  // Gram-Schmidt on columns, then fix each phase so R's diagonal is positive.
  ComplexMatrix q(dim);
  for (int j = 0; j < dim; ++j) {
    cvec col(dim);
    for (int i = 0; i < dim; ++i) col[i] = a(i, j);
    for (int k = 0; k < j; ++k) {
      cxd proj = 0.0;
      for (int i = 0; i < dim; ++i) proj += std::conj(q(i, k)) * col[i];
      for (int i = 0; i < dim; ++i) col[i] -= proj * q(i, k);
    }
    const double nn = norm(col);
    for (int i = 0; i < dim; ++i) q(i, j) = col[i] / nn;
  }
  return q;
}

}  // namespace twoq
