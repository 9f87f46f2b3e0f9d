#include "twoq/invariants.hpp"

#include <array>
#include <cassert>
#include <cmath>

namespace twoq {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 row_times(const Vec3& s, const Mat3& b) {
  Vec3 r{};
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) r[j] += s[i] * b[i][j];
  return r;
}

Vec3 times_col(const Mat3& b, const Vec3& p) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += b[i][j] * p[j];
  return r;
}

double det3(const Mat3& b) {
  return b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
         b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
         b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
}

// The 6 permutations of (0,1,2) with their signs; the Levi-Civita double
// contraction runs over the 36 pairs of these instead of a 6-index loop.
struct SignedPerm {
  int i, j, k;
  double sign;
};
constexpr std::array<SignedPerm, 6> kEps = {{
    {0, 1, 2, +1.0},
    {1, 2, 0, +1.0},
    {2, 0, 1, +1.0},
    {0, 2, 1, -1.0},
    {2, 1, 0, -1.0},
    {1, 0, 2, -1.0},
}};

}  // namespace

InvariantVector compute_invariants(const MakhlinCoordinates& c) {
  InvariantVector v;
  const Mat3& b = c.beta;

  Mat3 btb{};  // beta^T beta
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) btb[i][j] += b[k][i] * b[k][j];

  v.I1 = det3(b);
  v.I2 = btb[0][0] + btb[1][1] + btb[2][2];
  double t2 = 0.0;  // tr((beta^T beta)^2) = sum of squared entries of btb
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t2 += btb[i][j] * btb[j][i];
  v.I3 = t2;

  v.I4 = dot(c.s, c.s);
  const Vec3 sb = row_times(c.s, b);
  v.I5 = dot(sb, sb);
  v.I7 = dot(c.p, c.p);
  const Vec3 bp = times_col(b, c.p);
  v.I8 = dot(bp, bp);
  v.I12 = dot(sb, c.p);

  double i14 = 0.0;
  for (const auto& a : kEps)
    for (const auto& d : kEps)
      i14 += a.sign * d.sign * c.s[a.i] * c.p[d.i] * b[a.j][d.j] * b[a.k][d.k];
  v.I14 = i14;

  return v;
}

double det_pt_via_invariants(const InvariantVector& v) {
  const double quad = 32.0 * v.I3 - 16.0 * v.I5 - 16.0 * v.I8 - 16.0 * v.I14 -
                      16.0 * v.I2 * v.I2 + v.I4 * v.I4 + v.I7 * v.I7 +
                      8.0 * v.I2 * v.I4 + 8.0 * v.I2 * v.I7 -
                      2.0 * v.I4 * v.I7;
  return 1.0 / 256.0 - (4.0 * v.I2 + v.I4 + v.I7) / 32.0 +
         (4.0 * v.I1 + v.I12) / 2.0 + quad / 16.0;
}

double det_pt_direct(const DensityMatrix& rho) {
  const cxd d = det(partial_transpose(rho.mat));
  assert(std::abs(d.imag()) <= 1e-12);
  return d.real();
}

}  // namespace twoq
