#include "qht/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace qht {

Matrix SpectralDecomposition::apply(const std::function<double(double)>& f) const {
  const int d = dim();
  Matrix scaled(d, d);
  for (int i = 0; i < d; ++i) {
    scaled.col(i) = eigenvectors.col(i) * f(eigenvalues[i]);
  }
  return scaled * eigenvectors.adjoint();
}

Matrix SpectralDecomposition::reconstruct() const {
  return apply([](double x) { return x; });
}

double max_asymmetry(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

Matrix hermitize(const Matrix& a) {
  if (a.rows() != a.cols()) {
    std::ostringstream os;
    os << "matrix is not square: " << a.rows() << "x" << a.cols();
    throw ValidationError(os.str());
  }
  const double asym = max_asymmetry(a);
  if (asym > kHermTol) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max asymmetry " << asym << " exceeds "
       << kHermTol;
    throw ValidationError(os.str());
  }
  return 0.5 * (a + a.adjoint());
}

namespace {

// First nonzero entry made real positive.
void phase_normalize(Eigen::Ref<Vector> v) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double mag = std::abs(v[k]);
    if (mag > 1e-12) {
      v *= std::conj(v[k]) / mag;
      v[k] = Complex(mag, 0.0);
      return;
    }
  }
}

bool column_lex_less(const Matrix& m, int a, int b) {
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    const Complex x = m(k, a), y = m(k, b);
    if (std::abs(x.real() - y.real()) > 1e-12) return x.real() < y.real();
    if (std::abs(x.imag() - y.imag()) > 1e-12) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

SpectralDecomposition spectral_decompose(const Matrix& a) {
  const Matrix h = hermitize(a);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("eigendecomposition failed to converge");
  }
  const int d = static_cast<int>(h.rows());

  SpectralDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  for (int i = 0; i < d; ++i) phase_normalize(out.eigenvectors.col(i));

  // Deterministic order inside degenerate blocks.
  int lo = 0;
  while (lo < d) {
    int hi = lo + 1;
    while (hi < d && out.eigenvalues[lo] - out.eigenvalues[hi] <= 1e-12) ++hi;
    if (hi - lo > 1) {
      std::vector<int> idx(hi - lo);
      std::iota(idx.begin(), idx.end(), lo);
      std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
        return column_lex_less(out.eigenvectors, x, y);
      });
      Matrix block(d, hi - lo);
      for (int k = 0; k < hi - lo; ++k) block.col(k) = out.eigenvectors.col(idx[k]);
      out.eigenvectors.middleCols(lo, hi - lo) = block;
    }
    lo = hi;
  }
  return out;
}

Matrix matrix_power(const SpectralDecomposition& eig, double t) {
  if (t < 0.0) {
    for (int i = 0; i < eig.dim(); ++i) {
      if (eig.eigenvalues[i] <= kSpectrumEps) {
        throw DomainError("negative matrix power of a singular matrix");
      }
    }
  }
  for (int i = 0; i < eig.dim(); ++i) {
    if (eig.eigenvalues[i] < -kSpectrumEps) {
      std::ostringstream os;
      os << "matrix_power requires PSD input; eigenvalue " << eig.eigenvalues[i];
      throw DomainError(os.str());
    }
  }
  return eig.apply([t](double x) {
    return x <= kSpectrumEps ? 0.0 : std::pow(x, t);
  });
}

Matrix matrix_power(const Matrix& a, double t) {
  return matrix_power(spectral_decompose(a), t);
}

Matrix matrix_log(const Matrix& a) {
  const SpectralDecomposition eig = spectral_decompose(a);
  for (int i = 0; i < eig.dim(); ++i) {
    if (eig.eigenvalues[i] <= kSpectrumEps) {
      std::ostringstream os;
      os << "matrix_log requires full rank; eigenvalue " << eig.eigenvalues[i];
      throw DomainError(os.str());
    }
  }
  return eig.apply([](double x) { return std::log(x); });
}

Matrix matrix_exp(const Matrix& a) {
  return spectral_decompose(a).apply([](double x) { return std::exp(x); });
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix tensor_power(const Matrix& a, int n, long cap) {
  if (n < 1) throw DomainError("tensor_power requires n >= 1");
  double need = 1.0;
  for (int k = 0; k < n; ++k) need *= static_cast<double>(a.rows());
  if (need > static_cast<double>(cap)) {
    std::ostringstream os;
    os << "tensor power dimension " << need << " exceeds cap " << cap;
    throw ResourceError(os.str());
  }
  Matrix out = a;
  for (int k = 1; k < n; ++k) out = kron(out, a);
  return out;
}

Matrix positive_part_projection(const Matrix& a, double eps) {
  const SpectralDecomposition eig = spectral_decompose(a);
  return eig.apply([eps](double x) { return x > eps ? 1.0 : 0.0; });
}

DensityOperator::DensityOperator(Matrix m) : m_(hermitize(std::move(m))) {
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "density operator trace " << tr << " deviates from 1 by "
       << std::abs(tr - 1.0);
    throw ValidationError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -1e-12) {
    std::ostringstream os;
    os << "density operator has negative eigenvalue " << min_eig;
    throw ValidationError(os.str());
  }
}

TestOperator::TestOperator(Matrix m) : m_(hermitize(std::move(m))) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
  const double lo = solver.eigenvalues().minCoeff();
  const double hi = solver.eigenvalues().maxCoeff();
  if (lo < -1e-10 || hi > 1.0 + 1e-10) {
    std::ostringstream os;
    os << "test operator spectrum [" << lo << ", " << hi
       << "] outside [0, 1]";
    throw ValidationError(os.str());
  }
}

TestOperator TestOperator::clip(const Matrix& herm) {
  const SpectralDecomposition eig = spectral_decompose(herm);
  Matrix clipped = eig.apply([](double x) {
    return std::clamp(x, 0.0, 1.0);
  });
  return TestOperator(std::move(clipped), Unchecked{});
}

}  // namespace qht
