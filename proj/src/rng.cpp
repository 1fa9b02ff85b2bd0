#include "qht/rng.hpp"

#include <cmath>
#include <numbers>

namespace qht {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Matrix Rng::gaussian_matrix(int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
  }
  return m;
}

Matrix Rng::random_hermitian(int dim) {
  const Matrix g = gaussian_matrix(dim, dim);
  return 0.5 * (g + g.adjoint());
}

DensityOperator Rng::random_density(int dim, double ridge) {
  const Matrix g = gaussian_matrix(dim, dim);
  Matrix m = g * g.adjoint();
  if (ridge > 0.0) m += ridge * Matrix::Identity(dim, dim);
  m /= m.trace().real();
  return DensityOperator(std::move(m));
}

TestOperator Rng::random_test(int dim) {
  return TestOperator::clip(random_hermitian(dim));
}

}  // namespace qht
