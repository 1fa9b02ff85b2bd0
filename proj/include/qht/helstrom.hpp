#ifndef QHT_HELSTROM_HPP
#define QHT_HELSTROM_HPP

#include <vector>

#include "qht/classical_iid.hpp"
#include "qht/exponents.hpp"

namespace qht {

struct ErrorPair {
  double alpha = 0.0;  // 1 - Tr[rho_n T]
  double beta = 0.0;   // Tr[sigma_n T]
  bool clamped = false;
};

ErrorPair error_probabilities(const DensityOperator& rho_n,
                              const DensityOperator& sigma_n,
                              const TestOperator& t);

/// Projection {rho_n - delta sigma_n > 0}, the minimizer of alpha + delta beta.
TestOperator helstrom_test(const DensityOperator& rho_n,
                           const DensityOperator& sigma_n, double delta);

struct SpectralTails {
  double f = 0.0;  // F_n(a) = Tr[rho^(x)n {rho^(x)n - e^{-na} sigma^(x)n <= 0}]
  double g = 0.0;  // G_n(a) = Tr[sigma^(x)n {rho^(x)n - e^{-na} sigma^(x)n > 0}]
};

SpectralTails spectral_tails(const StatePair& pair, int n, double a,
                             long cap = kDefaultDimCap);

/// slack = (alpha_n[T] + delta beta_n[T]) - (1/2)[f_n(b) + e^{-nb} g_n(b)]
/// with b = -(log delta)/n and (f, g) from the Nussbaum-Szkola pair.
double lemma_check(const StatePair& pair, int n, const TestOperator& t,
                   double delta);

struct ProbeRow {
  int n = 0;
  double a = 0.0;
  double rate_f = 0.0;  // -(1/n) log F_n(a)
  double rate_g = 0.0;  // -(1/n) log G_n(a)
  double capital_phi = 0.0;
  double capital_psi = 0.0;
  double gap_f = 0.0;
  double gap_g = 0.0;
};

/// Finite-n spectral tail rates against the conjectured limits Phi(a), Psi(a).
std::vector<ProbeRow> conjecture_probe(const StatePair& pair, double a,
                                       int n_max, long cap = kDefaultDimCap);

}  // namespace qht

#endif
