#ifndef QHT_RNG_HPP
#define QHT_RNG_HPP

#include <cstdint>
#include <random>

#include "qht/hermitian.hpp"

namespace qht {

/// Seeded generator with an explicit Box-Muller transform, so streams are
/// identical across standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double gaussian();
  Complex complex_gaussian() { return {gaussian(), gaussian()}; }

  Matrix gaussian_matrix(int rows, int cols);
  Matrix random_hermitian(int dim);

  /// G G^dag normalized to unit trace; ridge > 0 mixes in ridge * I before
  /// normalizing, keeping the spectrum away from zero.
  DensityOperator random_density(int dim, double ridge = 0.0);

  /// Random Hermitian with spectrum clipped into [0, 1].
  TestOperator random_test(int dim);

private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qht

#endif
