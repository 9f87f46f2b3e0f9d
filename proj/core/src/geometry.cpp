#include "twoq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "twoq/errors.hpp"
#include "twoq/sampling.hpp"

namespace twoq {

std::string to_string(BoundaryTag tag) {
  switch (tag) {
    case BoundaryTag::NotAState: return "not-a-state";
    case BoundaryTag::InteriorSeparable: return "interior-separable";
    case BoundaryTag::InteriorEntangled: return "entangled";
    case BoundaryTag::BoundaryD: return "boundary-D";
    case BoundaryTag::BoundaryDGamma: return "boundary-DGamma";
    case BoundaryTag::BoundaryBoth: return "boundary-both";
  }
  return "?";
}

SeparabilityVerdict is_separable(const DensityMatrix& rho, double tol) {
  const double lo = min_eigenvalue(rho.mat);
  if (lo < -kStrictEigTol) throw NotAState(lo);
  SeparabilityVerdict v;
  v.margin = det_pt_direct(rho);
  v.min_eig_pt = min_eigenvalue(partial_transpose(rho.mat));
  v.separable = v.margin >= -tol;
  return v;
}

BoundaryClass classify(const ComplexMatrix& m, double tol) {
  BoundaryClass out;
  const DensityMatrix rho = validate_state(m);  // hermitian, trace 1
  out.min_eig = min_eigenvalue(m);
  out.min_eig_pt = min_eigenvalue(partial_transpose(m));
  out.det = det(m).real();
  out.det_pt = det_pt_direct(rho);

  if (out.min_eig < -tol) {
    out.tag = BoundaryTag::NotAState;
    return out;
  }
  const bool on_d = std::abs(out.det) <= tol;
  const bool on_dg = std::abs(out.det_pt) <= tol;
  out.on_boundary_M = on_d;
  if (on_d && on_dg) {
    out.tag = BoundaryTag::BoundaryBoth;
  } else if (on_dg) {
    out.tag = BoundaryTag::BoundaryDGamma;
  } else if (out.det_pt < 0.0) {
    out.tag = BoundaryTag::InteriorEntangled;
  } else if (on_d) {
    // det rho^Gamma > tol here, so rho^Gamma is psd and this is the
    // D cap M^Gamma piece of the separability boundary.
    out.tag = BoundaryTag::BoundaryD;
  } else {
    out.tag = BoundaryTag::InteriorSeparable;
  }
  return out;
}

double boundary_point_lambda(const DensityMatrix& outside,
                             const DensityMatrix& inside, double tol) {
  auto det_at = [&](double lam) {
    ComplexMatrix m = cxd(lam) * outside.mat + cxd(1.0 - lam) * inside.mat;
    return det(partial_transpose(m)).real();
  };
  const double f0 = det_at(0.0);
  const double f1 = det_at(1.0);
  if (f0 <= tol) throw SameSign("inner endpoint has no positive margin");
  if (f1 >= -tol) throw SameSign("outer endpoint is not entangled");

  double lo = 0.0, hi = 1.0;  // f(lo) > 0 > f(hi)
  double mid = 0.5;
  for (int it = 0; it < 60; ++it) {
    mid = 0.5 * (lo + hi);
    const double fm = det_at(mid);
    if (fm > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  mid = 0.5 * (lo + hi);
  if (std::abs(det_at(mid)) > tol)
    throw SameSign("bisection failed to reach the root tolerance");
  return mid;
}

DensityMatrix boundary_point(const DensityMatrix& outside,
                             const DensityMatrix& inside, double tol) {
  const double lam = boundary_point_lambda(outside, inside, tol);
  return validate_state(cxd(lam) * outside.mat + cxd(1.0 - lam) * inside.mat);
}

HypersurfacePoint analyze_hypersurface_point(const ComplexMatrix& m,
                                             Hypersurface which, double tol,
                                             double grad_tol) {
  HypersurfacePoint out;
  out.rho = validate_state(m);
  const ComplexMatrix h =
      which == Hypersurface::D ? m : partial_transpose(m);
  const double d = det(h).real();
  if (std::abs(d) > tol) throw NotOnHypersurface(d);

  ComplexMatrix grad = adjugate(h);
  const cxd tr = grad.trace();
  grad -= (tr / cxd(static_cast<double>(m.dim()))) * ComplexMatrix::identity(m.dim());
  // The partial transpose is a linear isometry of the chart, so pulling the
  // gradient back leaves its norm (and the singularity verdict) unchanged.
  if (which == Hypersurface::DGamma) grad = partial_transpose(grad);

  out.gradient = grad;
  out.gradient_norm = grad.frobenius_norm();
  out.singular = out.gradient_norm <= grad_tol;
  out.zero_count = eigensystem(h).zero_count;
  return out;
}

namespace {

// 2x2 matricization of a 4-vector; row index = first qubit.
ComplexMatrix matricize(const cvec& v) {
  return ComplexMatrix(2, {v[0], v[1], v[2], v[3]});
}

cvec vectorize(const ComplexMatrix& m) {
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

// Rank-1 split M = e f^T. Assumes M is (numerically) rank one.
void rank_one_factors(const ComplexMatrix& m, cvec& e, cvec& f) {
  const double c0 = std::norm(m(0, 0)) + std::norm(m(1, 0));
  const double c1 = std::norm(m(0, 1)) + std::norm(m(1, 1));
  if (c0 >= c1)
    e = {m(0, 0), m(1, 0)};
  else
    e = {m(0, 1), m(1, 1)};
  const double ne = norm(e);
  e[0] /= ne;
  e[1] /= ne;
  // f^T = e^dag M, which reproduces M exactly when M has rank one.
  f = {std::conj(e[0]) * m(0, 0) + std::conj(e[1]) * m(1, 0),
       std::conj(e[0]) * m(0, 1) + std::conj(e[1]) * m(1, 1)};
}

struct Root {
  cxd alpha, beta;
};

}  // namespace

ProductVectorResult kernel_product_vector(const cvec& v1, const cvec& v2) {
  const ComplexMatrix m1 = matricize(v1);
  const ComplexMatrix m2 = matricize(v2);
  const cxd a = det(m1);
  const cxd c = det(m2);
  const cxd b = det(m1 + m2) - a - c;  // polarization of the determinant

  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  ProductVectorResult out;

  std::vector<Root> roots;
  if (scale <= 1e-14) {
    // det vanishes identically: every vector in the span is a product
    // vector; factor the first basis direction.
    out.degenerate = true;
    roots.push_back({1.0, 0.0});
  } else {
    // a alpha^2 + b alpha beta + c beta^2 = 0, solved in the larger-|.|
    // leading coefficient for stability.
    const cxd disc = std::sqrt(b * b - 4.0 * a * c);
    // Pick the sign that maximizes |b -+ disc| (the stable branch).
    const cxd q = (std::abs(b + disc) >= std::abs(b - disc)) ? (b + disc)
                                                             : (b - disc);
    if (std::abs(q) <= 1e-14 * scale) {
      // b and disc both vanish: double root at alpha/beta = 0 or beta=0
      // depending on which leading coefficient survives.
      if (std::abs(a) >= std::abs(c))
        roots.push_back({cxd(0.0), cxd(1.0)});
      else
        roots.push_back({cxd(1.0), cxd(0.0)});
    } else if (std::abs(a) >= std::abs(c)) {
      // alpha/beta = -q/(2a) and its Vieta partner 2c/q... careful: with
      // ratio r = alpha/beta: a r^2 + b r + c = 0.
      roots.push_back({-q / (2.0 * a), 1.0});
      roots.push_back({-(2.0 * c) / q, 1.0});
    } else {
      // ratio u = beta/alpha: c u^2 + b u + a = 0.
      roots.push_back({1.0, -q / (2.0 * c)});
      roots.push_back({1.0, -(2.0 * a) / q});
    }
  }

  auto build = [&](const Root& r, cvec& e, cvec& f) {
    cvec u(4);
    for (int i = 0; i < 4; ++i) u[i] = r.alpha * v1[i] + r.beta * v2[i];
    const double nu = norm(u);
    for (auto& x : u) x /= nu;
    rank_one_factors(matricize(u), e, f);
    const cvec ef = kron_vec(e, f);
    double res = 0.0;
    for (int i = 0; i < 4; ++i) res += std::norm(u[i] - ef[i]);
    return std::sqrt(res);
  };

  out.residual = build(roots[0], out.e, out.f);
  if (roots.size() > 1) {
    cvec e2, f2;
    build(roots[1], e2, f2);
    out.second = std::make_pair(std::move(e2), std::move(f2));
  }
  return out;
}

namespace {

AuditRecord audit_one(std::uint64_t seed, std::uint64_t index, double tol,
                      double interior_delta) {
  AuditRecord rec;
  rec.index = index;
  // Rejection-sample an interior entangled state; sub-attempts get their own
  // indices so the scan is reproducible and thread-independent.
  EnsembleSpec spec{EnsembleKind::HilbertSchmidt, seed};
  DensityMatrix rho = maximally_mixed_state();
  bool found = false;
  for (std::uint64_t attempt = 0; attempt < 4096 && !found; ++attempt) {
    rho = sample_one(spec, (index << 12) + attempt);
    if (det_pt_direct(rho) < -1e-6 && min_eigenvalue(rho.mat) > interior_delta)
      found = true;
  }
  if (!found) {
    rec.ok = false;
    return rec;
  }

  const DensityMatrix center = validate_state(maximally_mixed());
  const DensityMatrix star = boundary_point(rho, center, tol);
  rec.min_eig = min_eigenvalue(star.mat);
  rec.det = det(star.mat).real();
  rec.det_pt = det_pt_direct(star);

  const SpectralData pt = eigensystem(partial_transpose(star.mat));
  rec.zero_count = pt.zero_count;
  const HypersurfacePoint hp =
      analyze_hypersurface_point(star.mat, Hypersurface::DGamma, kClassTol);
  rec.gradient_norm = hp.gradient_norm;
  rec.tag = classify(star.mat).tag;

  rec.ok = rec.min_eig > 0.0 && pt.zero_count == 1 && !hp.singular;
  return rec;
}

}  // namespace

SmoothnessReport smoothness_audit(int n_samples, std::uint64_t seed, double tol,
                                  int threads, double interior_delta) {
  SmoothnessReport rep;
  rep.samples = n_samples;
  rep.records.resize(n_samples);

  threads = std::max(1, threads);
  auto worker = [&](int first, int step) {
    for (int i = first; i < n_samples; i += step)
      rep.records[i] = audit_one(seed, i, tol, interior_delta);
  };
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    for (auto& th : pool) th.join();
  }
  for (const auto& rec : rep.records)
    if (!rec.ok) {
      ++rep.failures;
      rep.failed_indices.push_back(rec.index);
    }

  // Product-vector identity <e,f|rho^G|e,f> = <e,f*|rho|e,f*> on random
  // triples (state, e, f).
  for (int i = 0; i < n_samples; ++i) {
    RandomStream rng = RandomStream::substream(seed, i, 3);
    const DensityMatrix rho =
        sample_one({EnsembleKind::HilbertSchmidt, seed ^ 0x9e37ULL}, i);
    cvec e = rng.gaussian_vector(2), f = rng.gaussian_vector(2);
    const double ne = norm(e), nf = norm(f);
    for (auto& x : e) x /= ne;
    for (auto& x : f) x /= nf;
    cvec fstar = f;
    for (auto& x : fstar) x = std::conj(x);
    const cvec ef = kron_vec(e, f);
    const cvec efs = kron_vec(e, fstar);
    const ComplexMatrix pt = partial_transpose(rho.mat);
    auto qform = [](const ComplexMatrix& m, const cvec& v) {
      cxd s = 0.0;
      for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
          s += std::conj(v[i]) * m(i, j) * v[j];
      return s;
    };
    const double dev = std::abs(qform(pt, ef) - qform(rho.mat, efs));
    rep.max_identity_deviation = std::max(rep.max_identity_deviation, dev);
  }
  if (rep.max_identity_deviation > 1e-12) ++rep.failures;
  return rep;
}

}  // namespace twoq
