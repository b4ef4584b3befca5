#pragma once

#include <cstdint>
#include <random>

#include "homtest/linalg.hpp"

namespace homtest {

/// Mixes a parent seed with a branch index (splitmix64 finalizer). Used for
/// every derived stream so that results never depend on scheduling.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);

// Thin wrapper around mt19937_64. The distributions are written out here
// rather than taken from <random> because the standard leaves their
// algorithms implementation-defined, and artifacts must be reproducible
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform();                    // [0, 1)
  double normal();                     // N(0, 1)
  std::size_t index(std::size_t n);    // uniform in [0, n)
  cplx complex_normal();               // real and imaginary parts N(0, 1/2)

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

Mat random_gaussian(Rng& rng, int rows, int cols);
Mat random_hermitian(Rng& rng, int n);
/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
Mat random_unitary(Rng& rng, int n);

}  // namespace homtest
