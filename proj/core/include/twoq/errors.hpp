#ifndef TWOQ_ERRORS_HPP
#define TWOQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twoq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input matrix is not hermitian; `defect` is the max-norm of M - M^dag.
struct NotHermitian : Error {
  explicit NotHermitian(double defect_)
      : Error("matrix is not hermitian, defect " + std::to_string(defect_)),
        defect(defect_) {}
  double defect;
};

/// Trace differs from 1; `defect` is |tr - 1| (or the imaginary part).
struct TraceNotOne : Error {
  explicit TraceNotOne(double defect_)
      : Error("trace is not 1, defect " + std::to_string(defect_)),
        defect(defect_) {}
  double defect;
};

/// Strict state validation failed; `min_eigenvalue` is the witness.
struct NotPositive : Error {
  explicit NotPositive(double min_eigenvalue_)
      : Error("matrix is not positive semidefinite, min eigenvalue " +
              std::to_string(min_eigenvalue_)),
        min_eigenvalue(min_eigenvalue_) {}
  double min_eigenvalue;
};

/// Eigensolver hit its sweep cap. Signals a bug, not expected on valid input.
struct NoConvergence : Error {
  using Error::Error;
};

struct InvalidSpec : Error {
  using Error::Error;
};

struct NotAState : Error {
  explicit NotAState(double min_eigenvalue_)
      : Error("input is not a state, min eigenvalue " +
              std::to_string(min_eigenvalue_)),
        min_eigenvalue(min_eigenvalue_) {}
  double min_eigenvalue;
};

/// Bisection endpoints carry the same determinant sign.
struct SameSign : Error {
  using Error::Error;
};

struct NotOnHypersurface : Error {
  explicit NotOnHypersurface(double det_)
      : Error("point is not on the hypersurface, |det| = " +
              std::to_string(det_)),
        det(det_) {}
  double det;
};

/// Series denominator has no constant term.
struct ZeroConstantTerm : Error {
  using Error::Error;
};

/// Requested polynomial space exceeds the configured dimension cap.
struct TooLarge : Error {
  using Error::Error;
};

}  // namespace twoq

#endif
