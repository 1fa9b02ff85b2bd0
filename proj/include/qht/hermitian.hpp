#ifndef QHT_HERMITIAN_HPP
#define QHT_HERMITIAN_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "qht/errors.hpp"

namespace qht {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermTol = 1e-12;
// Eigenvalues at or below this threshold are treated as part of the null space.
inline constexpr double kSpectrumEps = 1e-12;
inline constexpr long kDefaultDimCap = 4096;

/// Eigenvalues sorted descending with matching orthonormal eigenvector columns.
/// Degenerate blocks are ordered deterministically (see spectral_decompose).
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  int dim() const { return static_cast<int>(eigenvalues.size()); }

  /// Reassembles sum f(lambda_i) |x_i><x_i|.
  Matrix apply(const std::function<double(double)>& f) const;

  Matrix reconstruct() const;
};

double max_asymmetry(const Matrix& a);

/// Returns (A + A^dag)/2; rejects matrices whose asymmetry exceeds kHermTol.
Matrix hermitize(const Matrix& a);

/// Deterministic Hermitian eigendecomposition. Eigenvalues descend; within
/// degenerate blocks eigenvectors are phase-normalized (first nonzero entry
/// real positive) and sorted lexicographically by (Re, Im) of their entries.
SpectralDecomposition spectral_decompose(const Matrix& a);

/// A^t for PSD A with the support convention lambda^t = 0 for lambda <= eps
/// and all t >= 0 (including t = 0). Negative t requires full rank.
Matrix matrix_power(const SpectralDecomposition& eig, double t);
Matrix matrix_power(const Matrix& a, double t);

/// Requires all eigenvalues > kSpectrumEps.
Matrix matrix_log(const Matrix& a);
Matrix matrix_exp(const Matrix& a);

Matrix kron(const Matrix& a, const Matrix& b);

/// n-fold Kronecker power; throws ResourceError when dim^n exceeds cap.
Matrix tensor_power(const Matrix& a, int n, long cap = kDefaultDimCap);

/// Projector {A > 0} onto eigenvectors with eigenvalue > eps.
Matrix positive_part_projection(const Matrix& a, double eps = kSpectrumEps);

/// Hermitian PSD unit-trace matrix.
class DensityOperator {
public:
  explicit DensityOperator(Matrix m);
  const Matrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

private:
  Matrix m_;
};

/// Hermitian T with 0 <= T <= I.
class TestOperator {
public:
  explicit TestOperator(Matrix m);
  /// Clips the spectrum of an arbitrary Hermitian matrix into [0, 1].
  static TestOperator clip(const Matrix& herm);
  const Matrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

private:
  struct Unchecked {};
  TestOperator(Matrix m, Unchecked) : m_(std::move(m)) {}
  Matrix m_;
};

}  // namespace qht

#endif
