#ifndef TWOQ_SAMPLING_HPP
#define TWOQ_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "twoq/qstate.hpp"

namespace twoq {

/// Reproducible random stream. The engine is std::mt19937_64, which the
/// standard pins bit-for-bit across platforms; distributions below are
/// hand-rolled (Box-Muller etc.) because the standard library ones are not.
///
/// Stream splitting: the sub-stream for sample `index` in sampler family
/// `domain` under master seed `seed` runs on an engine seeded with
///     mix(mix(seed) ^ mix((domain << 56) + index + 1))
/// where mix is the splitmix64 finalizer. Ensembles draw from domain 0,
/// local-unitary pairs from domain 1, Haar unitaries from domain 2, so the
/// same master seed never correlates a state with its group element.
/// Identical (seed, domain, index) triples give bit-identical streams no
/// matter how work is scheduled.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : eng_(seed) {}
  static RandomStream substream(std::uint64_t seed, std::uint64_t index,
                                std::uint64_t domain = 0);
  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t next_u64() { return eng_(); }
  double uniform();                  // [0, 1)
  double gaussian();                 // N(0, 1)
  cxd complex_gaussian();            // independent N(0,1) real and imag parts
  std::vector<double> dirichlet_flat(int k);
  cvec gaussian_vector(int n);       // complex Gaussian entries

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

enum class EnsembleKind {
  HilbertSchmidt,    // rho = A A^dag / tr, A a 4x4 complex Ginibre matrix
  Pure,              // normalized Gaussian vector projector
  ProductPure,       // |e><e| x |f><f|
  SeparableMixture,  // convex combination of k product-pure states
  RankDeficient,     // rho = A A^dag / tr, A of size 4 x r
};

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::HilbertSchmidt;
  std::uint64_t seed = 0;
  int k = 4;  // SeparableMixture terms
  int r = 2;  // RankDeficient rank bound
};

/// Sample `index` of the stream defined by `spec`; independent of any other
/// index, so callers may fan out. Throws InvalidSpec.
DensityMatrix sample_one(const EnsembleSpec& spec, std::uint64_t index);

std::vector<DensityMatrix> sample(const EnsembleSpec& spec, int count);

struct LocalUnitary {
  ComplexMatrix u;  // 2x2 special unitary
  ComplexMatrix v;
};

/// Haar-distributed pair of SU(2) elements (unit quaternion construction).
LocalUnitary sample_local_unitary(std::uint64_t seed, std::uint64_t index = 0);

/// (U x V) rho (U x V)^dag.
DensityMatrix apply_local_unitary(const DensityMatrix& rho, const LocalUnitary& g);

/// Haar-distributed U(n) element (Ginibre + Gram-Schmidt with positive
/// diagonal phases). Used by the hypersurface audits.
ComplexMatrix haar_unitary(int dim, std::uint64_t seed, std::uint64_t index = 0);

}  // namespace twoq

#endif
