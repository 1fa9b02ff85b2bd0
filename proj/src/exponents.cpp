#include "qht/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qht/scalar_opt.hpp"

namespace qht {

namespace {

constexpr double kRankTol = 1e-10;
constexpr double kSTol = 1e-10;
// The direct b(r) search stays strictly inside s < 1.
constexpr double kSUpper = 1.0 - 1e-8;

void require_s_range(double s) {
  if (s < 0.0 || s > 1.0) {
    std::ostringstream os;
    os << "s = " << s << " outside [0, 1]";
    throw DomainError(os.str());
  }
}

void require_full_rank(const StatePair& pair, const char* what) {
  if (!pair.full_rank()) {
    std::ostringstream os;
    os << what << " requires full-rank states";
    throw DomainError(os.str());
  }
}

}  // namespace

StatePair::StatePair(DensityOperator rho, DensityOperator sigma)
    : rho_(std::move(rho)), sigma_(std::move(sigma)) {
  if (rho_.dim() != sigma_.dim()) {
    std::ostringstream os;
    os << "dimension mismatch: rho " << rho_.dim() << ", sigma " << sigma_.dim();
    throw ValidationError(os.str());
  }
  rho_eig_ = spectral_decompose(rho_.matrix());
  sigma_eig_ = spectral_decompose(sigma_.matrix());
  full_rank_ = rho_eig_.eigenvalues.minCoeff() > kRankTol &&
               sigma_eig_.eigenvalues.minCoeff() > kRankTol;
}

bool StatePair::commuting(double tol) const {
  const Matrix& r = rho_.matrix();
  const Matrix& s = sigma_.matrix();
  return (r * s - s * r).cwiseAbs().maxCoeff() < tol;
}

double phi(const StatePair& pair, double s) {
  require_s_range(s);
  const Matrix a = matrix_power(pair.rho_eig(), 1.0 - s);
  const Matrix b = matrix_power(pair.sigma_eig(), s);
  const double overlap = (a * b).trace().real();
  return std::log(overlap);
}

double phi_tilde(const StatePair& pair, double s) {
  require_s_range(s);
  require_full_rank(pair, "phi_tilde");
  const Matrix log_rho = pair.rho_eig().apply([](double x) { return std::log(x); });
  const Matrix log_sigma =
      pair.sigma_eig().apply([](double x) { return std::log(x); });
  const Matrix exp_mix = matrix_exp((1.0 - s) * log_rho + s * log_sigma);
  return std::log(exp_mix.trace().real());
}

double relative_entropy(const StatePair& pair) {
  const SpectralDecomposition& re = pair.rho_eig();
  const SpectralDecomposition& se = pair.sigma_eig();
  double entropy_term = 0.0;
  for (int i = 0; i < re.dim(); ++i) {
    const double l = re.eigenvalues[i];
    if (l > kSpectrumEps) entropy_term += l * std::log(l);
  }
  double cross_term = 0.0;
  for (int j = 0; j < se.dim(); ++j) {
    const double g = se.eigenvalues[j];
    const double w =
        (se.eigenvectors.col(j).adjoint() * pair.rho().matrix() *
         se.eigenvectors.col(j))(0, 0)
            .real();
    if (g <= kSpectrumEps) {
      if (w > 1e-12) {
        throw DomainError("relative_entropy: supp(rho) not contained in supp(sigma)");
      }
      continue;
    }
    cross_term += w * std::log(g);
  }
  return entropy_term - cross_term;
}

double reverse_relative_entropy(const StatePair& pair) {
  StatePair swapped(pair.sigma(), pair.rho());
  return relative_entropy(swapped);
}

namespace {

struct PhiDomain {
  double d_rho_sigma;
  double d_sigma_rho;
};

PhiDomain domain_of(const StatePair& pair) {
  return {relative_entropy(pair), reverse_relative_entropy(pair)};
}

void require_a_in_domain(double a, const PhiDomain& dom) {
  const double slack = 1e-9;
  if (a < -dom.d_rho_sigma - slack || a > dom.d_sigma_rho + slack) {
    std::ostringstream os;
    os << "a = " << a << " outside [" << -dom.d_rho_sigma << ", "
       << dom.d_sigma_rho << "]";
    throw DomainError(os.str());
  }
}

double capital_phi_unchecked(const StatePair& pair, double a) {
  auto objective = [&](double s) { return a * s - phi(pair, s); };
  return golden_section_maximize(objective, 0.0, 1.0, kSTol).value;
}

}  // namespace

double capital_phi(const StatePair& pair, double a) {
  require_a_in_domain(a, domain_of(pair));
  return capital_phi_unchecked(pair, a);
}

double capital_psi(const StatePair& pair, double a) {
  require_a_in_domain(a, domain_of(pair));
  return capital_phi_unchecked(pair, a) - a;
}

double invert_psi(const StatePair& pair, double r) {
  const PhiDomain dom = domain_of(pair);
  if (dom.d_rho_sigma <= kSpectrumEps) {
    throw DomainError("invert_psi: degenerate pair with D(rho||sigma) = 0");
  }
  if (r < -1e-12 || r > dom.d_rho_sigma + 1e-9) {
    std::ostringstream os;
    os << "r = " << r << " outside [0, " << dom.d_rho_sigma << "]";
    throw DomainError(os.str());
  }
  auto psi = [&](double a) { return capital_phi_unchecked(pair, a) - a; };
  return bisect_decreasing(psi, -dom.d_rho_sigma, dom.d_sigma_rho, r, kSTol);
}

namespace {

double direct_bound(const StatePair& pair, double r, double (*f)(const StatePair&, double)) {
  auto objective = [&](double s) { return (-s * r - f(pair, s)) / (1.0 - s); };
  return golden_section_maximize(objective, 0.0, kSUpper, kSTol).value;
}

}  // namespace

double hoeffding_bound(const StatePair& pair, double r) {
  const PhiDomain dom = domain_of(pair);
  if (dom.d_rho_sigma <= kSpectrumEps) {
    throw DomainError("hoeffding_bound: degenerate pair with D(rho||sigma) = 0");
  }
  if (r <= 0.0 || r > dom.d_rho_sigma + 1e-9) {
    std::ostringstream os;
    os << "r = " << r << " outside (0, " << dom.d_rho_sigma << "]";
    throw DomainError(os.str());
  }
  const double b_direct = direct_bound(pair, r, &phi);
  const double b_dual = invert_psi(pair, r) + r;
  if (std::abs(b_direct - b_dual) > 1e-4) {
    std::ostringstream os;
    os << "hoeffding_bound routes disagree: direct " << b_direct << ", duality "
       << b_dual;
    throw ConsistencyError(os.str());
  }
  return b_dual;
}

double b_tilde(const StatePair& pair, double r) {
  require_full_rank(pair, "b_tilde");
  const double d = relative_entropy(pair);
  if (d <= kSpectrumEps) {
    throw DomainError("b_tilde: degenerate pair with D(rho||sigma) = 0");
  }
  if (r <= 0.0 || r > d + 1e-9) {
    std::ostringstream os;
    os << "r = " << r << " outside (0, " << d << "]";
    throw DomainError(os.str());
  }
  return direct_bound(pair, r, &phi_tilde);
}

double xi(const StatePair& pair, double t) {
  if (t < 0.0) throw DomainError("xi requires t >= 0");
  return (t + 1.0) * phi(pair, t / (t + 1.0));
}

double conversion_check(const StatePair& pair, std::span<const double> s_grid,
                        std::span<const double> r_grid) {
  const double d = relative_entropy(pair);
  if (d <= kSpectrumEps) {
    throw DomainError("conversion_check: degenerate pair with D(rho||sigma) = 0");
  }
  std::vector<double> bounds(r_grid.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < static_cast<long>(r_grid.size()); ++k) {
    bounds[k] = hoeffding_bound(pair, r_grid[k]);
  }
  double max_residual = 0.0;
  for (double s : s_grid) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < r_grid.size(); ++k) {
      const double v = -s * r_grid[k] - (1.0 - s) * bounds[k];
      if (v > best) {
        best = v;
        best_k = k;
      }
    }
    // The grid only localizes the maximizer; polish between the neighbouring
    // grid points (b is steep near r = 0, so the raw grid max undershoots).
    const double lo = best_k == 0 ? 1e-12 : r_grid[best_k - 1];
    const double hi =
        best_k + 1 < r_grid.size() ? r_grid[best_k + 1] : r_grid.back();
    if (hi > lo) {
      best = std::max(
          best, golden_section_maximize(
                    [&](double r) {
                      return -s * r - (1.0 - s) * hoeffding_bound(pair, r);
                    },
                    lo, hi, 1e-10)
                    .value);
    }
    max_residual = std::max(max_residual, std::abs(best - phi(pair, s)));
  }
  return max_residual;
}

ExponentProfile sweep_phi(const StatePair& pair, int points) {
  if (points < 3) throw DomainError("sweep_phi requires at least 3 points");
  ExponentProfile out;
  out.s_grid = linspace(0.0, 1.0, points);
  out.phi_values.resize(out.s_grid.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < static_cast<long>(out.s_grid.size()); ++k) {
    out.phi_values[k] = phi(pair, out.s_grid[k]);
  }
  // Second-order one-sided differences; [0,1] has no room for central stencils.
  const double h = 1e-4;
  out.slope_at_zero =
      (-3.0 * phi(pair, 0.0) + 4.0 * phi(pair, h) - phi(pair, 2.0 * h)) / (2.0 * h);
  out.slope_at_one =
      (3.0 * phi(pair, 1.0) - 4.0 * phi(pair, 1.0 - h) + phi(pair, 1.0 - 2.0 * h)) /
      (2.0 * h);
  return out;
}

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  }
  return out;
}

}  // namespace qht
