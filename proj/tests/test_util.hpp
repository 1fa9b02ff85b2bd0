#ifndef QHT_TEST_UTIL_HPP
#define QHT_TEST_UTIL_HPP

#include "qht/exponents.hpp"
#include "qht/rng.hpp"

namespace qht::testutil {

// Reference noncommuting qubit pair used across the suites:
// rho = diag(3/4, 1/4), sigma = 0.6|+><+| + 0.4|-><-|.
inline StatePair reference_pair() {
  Matrix rho(2, 2), sigma(2, 2);
  rho << 0.75, 0.0, 0.0, 0.25;
  sigma << 0.5, 0.1, 0.1, 0.5;
  return {DensityOperator(rho), DensityOperator(sigma)};
}

inline StatePair bernoulli_pair() {
  Matrix rho(2, 2), sigma(2, 2);
  rho << 0.5, 0.0, 0.0, 0.5;
  sigma << 0.25, 0.0, 0.0, 0.75;
  return {DensityOperator(rho), DensityOperator(sigma)};
}

inline StatePair random_full_rank_pair(Rng& rng, int dim) {
  return {rng.random_density(dim, 1e-3), rng.random_density(dim, 1e-3)};
}

}  // namespace qht::testutil

#endif
