#ifndef QHT_EXPONENTS_HPP
#define QHT_EXPONENTS_HPP

#include <span>
#include <vector>

#include "qht/hermitian.hpp"

namespace qht {

/// A hypothesis pair (rho, sigma) with cached spectral data.
class StatePair {
public:
  StatePair(DensityOperator rho, DensityOperator sigma);

  const DensityOperator& rho() const { return rho_; }
  const DensityOperator& sigma() const { return sigma_; }
  const SpectralDecomposition& rho_eig() const { return rho_eig_; }
  const SpectralDecomposition& sigma_eig() const { return sigma_eig_; }
  int dim() const { return rho_.dim(); }
  bool full_rank() const { return full_rank_; }
  bool commuting(double tol = 1e-12) const;

private:
  DensityOperator rho_;
  DensityOperator sigma_;
  SpectralDecomposition rho_eig_;
  SpectralDecomposition sigma_eig_;
  bool full_rank_;
};

/// phi(s) = log Tr[rho^{1-s} sigma^s] for s in [0, 1].
double phi(const StatePair& pair, double s);

/// phi_tilde(s) = log Tr[exp((1-s) log rho + s log sigma)]; full rank only.
double phi_tilde(const StatePair& pair, double s);

/// D(rho||sigma) = Tr[rho (log rho - log sigma)]; requires supp rho <= supp sigma.
double relative_entropy(const StatePair& pair);

/// D(sigma||rho).
double reverse_relative_entropy(const StatePair& pair);

/// Phi(a) = max_{s in [0,1]} (a s - phi(s)) on a in [-D(rho||sigma), D(sigma||rho)].
double capital_phi(const StatePair& pair, double a);

/// Psi(a) = Phi(a) - a.
double capital_psi(const StatePair& pair, double a);

/// The unique a with Psi(a) = r, for r in [0, D(rho||sigma)].
double invert_psi(const StatePair& pair, double r);

/// b(r) = max_{0<=s<1} (-s r - phi(s)) / (1 - s), cross-checked against the
/// duality route b(r) = invert_psi(r) + r, which is the returned value.
double hoeffding_bound(const StatePair& pair, double r);

/// Same optimization with phi_tilde; satisfies b_tilde(r) >= b(r).
double b_tilde(const StatePair& pair, double r);

/// xi(t) = (t+1) phi(t / (t+1)) for t >= 0.
double xi(const StatePair& pair, double t);

/// Max over s_grid of |max_{r in r_grid}(-s r - (1-s) b(r)) - phi(s)|.
double conversion_check(const StatePair& pair, std::span<const double> s_grid,
                        std::span<const double> r_grid);

struct ExponentProfile {
  std::vector<double> s_grid;
  std::vector<double> phi_values;
  double slope_at_zero = 0.0;
  double slope_at_one = 0.0;
};

ExponentProfile sweep_phi(const StatePair& pair, int points);

std::vector<double> linspace(double lo, double hi, int points);

}  // namespace qht

#endif
