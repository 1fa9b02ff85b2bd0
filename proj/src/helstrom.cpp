#include "qht/helstrom.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qht {

ErrorPair error_probabilities(const DensityOperator& rho_n,
                              const DensityOperator& sigma_n,
                              const TestOperator& t) {
  if (rho_n.dim() != t.dim() || sigma_n.dim() != t.dim()) {
    std::ostringstream os;
    os << "dimension mismatch: states " << rho_n.dim() << "/" << sigma_n.dim()
       << ", test " << t.dim();
    throw ValidationError(os.str());
  }
  ErrorPair out;
  out.alpha = 1.0 - (rho_n.matrix() * t.matrix()).trace().real();
  out.beta = (sigma_n.matrix() * t.matrix()).trace().real();
  auto clamp01 = [&out](double x) {
    if (x < -1e-10 || x > 1.0 + 1e-10) {
      std::ostringstream os;
      os << "error probability " << x << " outside [0, 1]";
      throw ValidationError(os.str());
    }
    if (x < 0.0 || x > 1.0) out.clamped = true;
    return std::clamp(x, 0.0, 1.0);
  };
  out.alpha = clamp01(out.alpha);
  out.beta = clamp01(out.beta);
  return out;
}

TestOperator helstrom_test(const DensityOperator& rho_n,
                           const DensityOperator& sigma_n, double delta) {
  if (delta <= 0.0) throw DomainError("helstrom_test requires delta > 0");
  if (rho_n.dim() != sigma_n.dim()) {
    throw ValidationError("helstrom_test: dimension mismatch");
  }
  return TestOperator(
      positive_part_projection(rho_n.matrix() - delta * sigma_n.matrix()));
}

SpectralTails spectral_tails(const StatePair& pair, int n, double a, long cap) {
  const Matrix rho_n = tensor_power(pair.rho().matrix(), n, cap);
  const Matrix sigma_n = tensor_power(pair.sigma().matrix(), n, cap);
  const Matrix diff = rho_n - std::exp(-n * a) * sigma_n;
  const Matrix proj_pos = positive_part_projection(diff);
  const Matrix proj_nonpos =
      Matrix::Identity(proj_pos.rows(), proj_pos.cols()) - proj_pos;
  SpectralTails out;
  out.f = std::clamp((rho_n * proj_nonpos).trace().real(), 0.0, 1.0);
  out.g = std::clamp((sigma_n * proj_pos).trace().real(), 0.0, 1.0);
  return out;
}

double lemma_check(const StatePair& pair, int n, const TestOperator& t,
                   double delta) {
  if (delta <= 0.0) throw DomainError("lemma_check requires delta > 0");
  const Matrix rho_n = tensor_power(pair.rho().matrix(), n);
  const Matrix sigma_n = tensor_power(pair.sigma().matrix(), n);
  if (t.dim() != rho_n.rows()) {
    std::ostringstream os;
    os << "lemma_check: test dimension " << t.dim() << " does not match "
       << rho_n.rows();
    throw ValidationError(os.str());
  }
  const double alpha = 1.0 - (rho_n * t.matrix()).trace().real();
  const double beta = (sigma_n * t.matrix()).trace().real();
  const ClassicalPair cp = ns_distributions(pair);
  const double b = -std::log(delta) / n;
  const double rhs = iid_lower_bound(cp, n, b);
  return (alpha + delta * beta) - rhs;
}

std::vector<ProbeRow> conjecture_probe(const StatePair& pair, double a,
                                       int n_max, long cap) {
  if (n_max < 1) throw DomainError("conjecture_probe requires n_max >= 1");
  const double phi_a = capital_phi(pair, a);
  const double psi_a = phi_a - a;
  if (psi_a <= 1e-12 || phi_a <= 1e-12) {
    std::ostringstream os;
    os << "a = " << a << " outside the open interval (-D(rho||sigma), D(sigma||rho))";
    throw DomainError(os.str());
  }
  std::vector<ProbeRow> rows(n_max);
#pragma omp parallel for schedule(dynamic)
  for (int n = 1; n <= n_max; ++n) {
    const SpectralTails tails = spectral_tails(pair, n, a, cap);
    ProbeRow& row = rows[n - 1];
    row.n = n;
    row.a = a;
    row.rate_f = -std::log(tails.f) / n;
    row.rate_g = -std::log(tails.g) / n;
    row.capital_phi = phi_a;
    row.capital_psi = psi_a;
    row.gap_f = row.rate_f - phi_a;
    row.gap_g = row.rate_g - psi_a;
  }
  return rows;
}

}  // namespace qht
