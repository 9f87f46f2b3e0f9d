#ifndef TWOQ_TOLERANCES_HPP
#define TWOQ_TOLERANCES_HPP

// Default tolerances. Determinants of trace-1 positive matrices live on the
// 1/256 scale, so boundary tolerances are absolute, not relative.

namespace twoq {

inline constexpr double kHermTol = 1e-12;       // ||M - M^dag||_max
inline constexpr double kTraceTol = 1e-12;      // |tr - 1|
inline constexpr double kStrictEigTol = 1e-10;  // strict validation slack
inline constexpr double kZeroTol = 1e-9;        // eigenvalue == 0 cutoff
inline constexpr double kClassTol = 1e-9;       // boundary classification
inline constexpr double kRootTol = 1e-12;       // bisection target on det
inline constexpr double kGradTol = 1e-9;        // singular-point threshold
inline constexpr double kInteriorDelta = 1e-3;  // audit interior filter

}  // namespace twoq

#endif
