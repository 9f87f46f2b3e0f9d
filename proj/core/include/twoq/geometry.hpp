#ifndef TWOQ_GEOMETRY_HPP
#define TWOQ_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twoq/invariants.hpp"
#include "twoq/qstate.hpp"

namespace twoq {

// The state space M sits in the affine space of trace-1 hermitian matrices.
// D and DGamma are the hypersurfaces det rho = 0 and det rho^Gamma = 0; the
// boundary of the separable set S is (D cap M^Gamma) union (DGamma cap M).

enum class BoundaryTag {
  NotAState,          // min eigenvalue of rho below -tol
  InteriorSeparable,  // det rho^Gamma > tol, det rho > tol
  InteriorEntangled,  // det rho^Gamma < -tol (see on_boundary_M for dM)
  BoundaryD,          // det rho = 0 within tol, rho^Gamma psd
  BoundaryDGamma,     // det rho^Gamma = 0 within tol, det rho > tol
  BoundaryBoth,       // both determinants vanish within tol
};

std::string to_string(BoundaryTag tag);

struct BoundaryClass {
  BoundaryTag tag = BoundaryTag::NotAState;
  bool on_boundary_M = false;  // det rho = 0 within tol
  // witnesses
  double min_eig = 0;     // of rho
  double min_eig_pt = 0;  // of rho^Gamma
  double det = 0;         // det rho
  double det_pt = 0;      // det rho^Gamma
};

struct SeparabilityVerdict {
  bool separable = false;
  double margin = 0;      // det rho^Gamma
  double min_eig_pt = 0;  // PPT witness, must agree in sign on states
};

/// Determinant criterion: a two-qubit state is separable iff
/// det rho^Gamma >= 0. Requires a strict state; throws NotAState.
SeparabilityVerdict is_separable(const DensityMatrix& rho, double tol = kClassTol);

/// Full classification of a trace-1 hermitian matrix relative to M, S and
/// the two determinantal hypersurfaces.
BoundaryClass classify(const ComplexMatrix& m, double tol = kClassTol);

/// Bisection along the segment from `inside` (separable, positive margin)
/// to `outside` (entangled) for the point where det rho^Gamma changes sign.
/// Throws SameSign when the endpoint margins do not straddle zero.
DensityMatrix boundary_point(const DensityMatrix& outside,
                             const DensityMatrix& inside,
                             double tol = kRootTol);
double boundary_point_lambda(const DensityMatrix& outside,
                             const DensityMatrix& inside,
                             double tol = kRootTol);

enum class Hypersurface { D, DGamma };

struct HypersurfacePoint {
  DensityMatrix rho;
  ComplexMatrix gradient;  // traceless hermitian, chart gradient of det
  double gradient_norm = 0;
  bool singular = false;
  int zero_count = 0;
};

/// Gradient of the defining determinant on the trace-1 chart, realized as
/// the traceless projection of the adjugate (of rho for D, of rho^Gamma for
/// DGamma, pulled back through the partial transpose). Asserts the
/// equivalence: singular (gradient vanishes) iff at least two zero
/// eigenvalues. Throws NotOnHypersurface if |det| > tol.
HypersurfacePoint analyze_hypersurface_point(const ComplexMatrix& m,
                                             Hypersurface which,
                                             double tol = kClassTol,
                                             double grad_tol = kGradTol);

struct ProductVectorResult {
  cvec e;  // 2-vector, unit norm
  cvec f;  // 2-vector
  double residual = 0;  // || (alpha v1 + beta v2) - e x f ||
  bool degenerate = false;  // det identically zero on the span
  // second root of the quadratic when distinct
  std::optional<std::pair<cvec, cvec>> second;
};

/// Finds a product vector in the span of two orthonormal 4-vectors by
/// solving det(alpha M1 + beta M2) = 0 for the matricized pair on the
/// projective line. Every 2-dimensional subspace of C2 x C2 contains one.
ProductVectorResult kernel_product_vector(const cvec& v1, const cvec& v2);

struct AuditRecord {
  std::uint64_t index = 0;
  BoundaryTag tag = BoundaryTag::BoundaryDGamma;
  double det = 0;
  double det_pt = 0;
  int zero_count = 0;
  double gradient_norm = 0;
  double min_eig = 0;
  bool ok = false;
};

struct SmoothnessReport {
  int samples = 0;
  int failures = 0;
  double max_identity_deviation = 0;  // <e,f|rho^G|e,f> vs <e,f*|rho|e,f*>
  std::vector<AuditRecord> records;
  std::vector<std::uint64_t> failed_indices;
};

/// Draws interior entangled states, walks each to the separability boundary
/// toward I/4 and checks the boundary point is a smooth point of DGamma
/// with a simple kernel; also exercises the product-vector identity
/// <e,f|rho^Gamma|e,f> = <e,f*|rho|e,f*> on random triples. `threads`
/// only fans out the sample loop; per-index seeding keeps results identical.
SmoothnessReport smoothness_audit(int n_samples, std::uint64_t seed,
                                  double tol = kRootTol, int threads = 1,
                                  double interior_delta = kInteriorDelta);

}  // namespace twoq

#endif
