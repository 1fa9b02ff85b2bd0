#include <doctest.h>

#include <cmath>

#include "qht/exponents.hpp"
#include "qht/scalar_opt.hpp"
#include "test_util.hpp"

using namespace qht;
using testutil::bernoulli_pair;
using testutil::random_full_rank_pair;
using testutil::reference_pair;

// Frozen golden values for the reference pair, computed once with an
// independent 2x2 closed-form / dense-grid oracle.
namespace golden {
constexpr double phi_half = -0.03974494381397145;
constexpr double phi_tilde_half = -0.03986983865053421;
constexpr double d_rho_sigma = 0.1512230332012649;
constexpr double d_sigma_rho = 0.16397654977657888;
constexpr double capital_phi_at_0 = 0.0397616586466942;
constexpr double a_star_half_d = -0.06112407286815845;
constexpr double b_at_half_d = 0.014487443732474;
constexpr double b_at_005 = 0.030331369590072724;
constexpr double b_tilde_at_005 = 0.03055218520474699;
constexpr double bernoulli_b_005 = 0.022663780359681505;
}  // namespace golden

namespace {

// Dense-grid Legendre maximization, independent of the golden-section path.
double grid_capital_phi(const StatePair& pair, double a, int points = 200001) {
  double best = -1e300;
  for (int i = 0; i < points; ++i) {
    const double s = static_cast<double>(i) / (points - 1);
    best = std::max(best, a * s - phi(pair, s));
  }
  return best;
}

}  // namespace

TEST_CASE("phi basics") {
  const StatePair ref = reference_pair();

  SUBCASE("rho = sigma gives zero") {
    Rng rng(1);
    const DensityOperator rho = rng.random_density(3, 1e-3);
    const StatePair same(rho, rho);
    for (double s : {0.0, 0.3, 0.7, 1.0}) {
      CHECK(std::abs(phi(same, s)) < 1e-12);
    }
  }

  SUBCASE("commuting closed form") {
    const StatePair pair = bernoulli_pair();
    const double expect =
        std::log(std::sqrt(0.5) * (std::sqrt(0.25) + std::sqrt(0.75)));
    CHECK(phi(pair, 0.5) == doctest::Approx(expect).epsilon(1e-12));
  }

  SUBCASE("reference pair golden value") {
    CHECK(phi(ref, 0.5) == doctest::Approx(golden::phi_half).epsilon(1e-10));
  }

  SUBCASE("s outside [0,1] rejected") {
    CHECK_THROWS_AS(phi(ref, -0.1), DomainError);
    CHECK_THROWS_AS(phi(ref, 1.1), DomainError);
  }

  SUBCASE("endpoints vanish for full-rank pairs") {
    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
      const StatePair pair = random_full_rank_pair(rng, 2 + trial % 3);
      CHECK(std::abs(phi(pair, 0.0)) < 1e-9);
      CHECK(std::abs(phi(pair, 1.0)) < 1e-9);
    }
  }

  SUBCASE("convexity and skew symmetry") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const StatePair pair = random_full_rank_pair(rng, 3);
      const StatePair rev(pair.sigma(), pair.rho());
      for (int i = 0; i < 10; ++i) {
        const double s1 = rng.uniform();
        const double s2 = rng.uniform();
        const double mid = 0.5 * (s1 + s2);
        CHECK(phi(pair, mid) <= 0.5 * (phi(pair, s1) + phi(pair, s2)) + 1e-9);
        CHECK(phi(pair, s1) == doctest::Approx(phi(rev, 1.0 - s1)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("phi_tilde and Golden-Thompson") {
  const StatePair ref = reference_pair();

  SUBCASE("equals phi for commuting pairs") {
    const StatePair pair = bernoulli_pair();
    for (double s : {0.1, 0.5, 0.9}) {
      CHECK(phi_tilde(pair, s) == doctest::Approx(phi(pair, s)).epsilon(1e-9));
    }
  }

  SUBCASE("rho = sigma gives zero") {
    Rng rng(4);
    const DensityOperator rho = rng.random_density(2, 1e-3);
    const StatePair same(rho, rho);
    CHECK(std::abs(phi_tilde(same, 0.4)) < 1e-10);
  }

  SUBCASE("strictly below phi at the reference point, golden gap") {
    CHECK(phi_tilde(ref, 0.5) ==
          doctest::Approx(golden::phi_tilde_half).epsilon(1e-10));
    CHECK(phi_tilde(ref, 0.5) < phi(ref, 0.5));
  }

  SUBCASE("inequality on random pairs") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const StatePair pair = random_full_rank_pair(rng, 3);
      for (double s : linspace(0.0, 1.0, 11)) {
        CHECK(phi_tilde(pair, s) <= phi(pair, s) + 1e-10);
      }
    }
  }
}

TEST_CASE("relative_entropy") {
  SUBCASE("rho = sigma gives zero") {
    Rng rng(6);
    const DensityOperator rho = rng.random_density(3, 1e-3);
    CHECK(std::abs(relative_entropy(StatePair(rho, rho))) < 1e-12);
  }

  SUBCASE("diagonal closed form") {
    CHECK(relative_entropy(bernoulli_pair()) ==
          doctest::Approx(0.5 * std::log(4.0 / 3.0)).epsilon(1e-12));
  }

  SUBCASE("reference pair golden value matches -phi'(0)") {
    const StatePair ref = reference_pair();
    const double d = relative_entropy(ref);
    CHECK(d == doctest::Approx(golden::d_rho_sigma).epsilon(1e-10));
    // Second-order one-sided stencil; s < 0 is outside the domain.
    const double h = 1e-4;
    const double slope =
        (-3.0 * phi(ref, 0.0) + 4.0 * phi(ref, h) - phi(ref, 2.0 * h)) / (2.0 * h);
    CHECK(std::abs(slope + d) < 1e-5);
  }

  SUBCASE("support violation") {
    Matrix rho(2, 2), sigma(2, 2);
    rho << 0.5, 0.0, 0.0, 0.5;
    sigma << 1.0, 0.0, 0.0, 0.0;
    CHECK_THROWS_AS(
        relative_entropy(StatePair(DensityOperator(rho), DensityOperator(sigma))),
        DomainError);
  }
}

TEST_CASE("capital_phi, capital_psi, invert_psi") {
  const StatePair ref = reference_pair();
  const double d_rs = relative_entropy(ref);
  const double d_sr = reverse_relative_entropy(ref);
  CHECK(d_sr == doctest::Approx(golden::d_sigma_rho).epsilon(1e-10));

  SUBCASE("endpoint values") {
    CHECK(std::abs(capital_phi(ref, -d_rs)) < 1e-8);
    CHECK(capital_phi(ref, d_sr) == doctest::Approx(d_sr).epsilon(1e-8));
    CHECK(capital_psi(ref, -d_rs) == doctest::Approx(d_rs).epsilon(1e-8));
    CHECK(std::abs(capital_psi(ref, d_sr)) < 1e-8);
  }

  SUBCASE("Phi(0) against dense-grid oracle and golden value") {
    CHECK(capital_phi(ref, 0.0) ==
          doctest::Approx(golden::capital_phi_at_0).epsilon(1e-8));
    CHECK(capital_phi(ref, 0.0) ==
          doctest::Approx(grid_capital_phi(ref, 0.0)).epsilon(1e-8));
    CHECK(capital_psi(ref, 0.0) == doctest::Approx(capital_phi(ref, 0.0)));
  }

  SUBCASE("monotonicity along the a-domain") {
    double prev_phi = -1e300, prev_psi = 1e300;
    for (double a : linspace(-d_rs, d_sr, 41)) {
      const double cphi = capital_phi(ref, a);
      const double cpsi = capital_psi(ref, a);
      CHECK(cphi >= prev_phi - 1e-9);
      CHECK(cpsi <= prev_psi + 1e-9);
      prev_phi = cphi;
      prev_psi = cpsi;
    }
  }

  SUBCASE("a outside the domain") {
    CHECK_THROWS_WITH_AS(capital_phi(ref, d_sr + 0.1),
                         doctest::Contains("outside"), DomainError);
  }

  SUBCASE("invert_psi endpoints and round trip") {
    CHECK(invert_psi(ref, d_rs) == doctest::Approx(-d_rs).epsilon(1e-7));
    CHECK(invert_psi(ref, 0.0) == doctest::Approx(d_sr).epsilon(1e-7));
    const double r = d_rs / 2.0;
    const double a_star = invert_psi(ref, r);
    CHECK(a_star == doctest::Approx(golden::a_star_half_d).epsilon(1e-7));
    CHECK(capital_psi(ref, a_star) == doctest::Approx(r).epsilon(1e-8));
    CHECK_THROWS_AS(invert_psi(ref, d_rs + 0.1), DomainError);
  }
}

TEST_CASE("hoeffding_bound and b_tilde") {
  const StatePair ref = reference_pair();
  const double d_rs = relative_entropy(ref);

  SUBCASE("endpoints") {
    CHECK(std::abs(hoeffding_bound(ref, d_rs)) < 1e-7);
    // b(r) -> D(sigma||rho) as r -> 0, but only at sqrt(r) speed: Psi is
    // quadratic near its zero, so b(1e-9) sits ~3e-5 below the limit.
    CHECK(std::abs(hoeffding_bound(ref, 1e-9) -
                   reverse_relative_entropy(ref)) < 1e-4);
    CHECK(hoeffding_bound(ref, 1e-9) <= reverse_relative_entropy(ref) + 1e-10);
  }

  SUBCASE("golden values") {
    CHECK(hoeffding_bound(ref, d_rs / 2.0) ==
          doctest::Approx(golden::b_at_half_d).epsilon(1e-7));
    CHECK(hoeffding_bound(ref, 0.05) ==
          doctest::Approx(golden::b_at_005).epsilon(1e-7));
    CHECK(hoeffding_bound(bernoulli_pair(), 0.05) ==
          doctest::Approx(golden::bernoulli_b_005).epsilon(1e-7));
  }

  SUBCASE("duality on random pairs") {
    Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
      const StatePair pair = random_full_rank_pair(rng, 2);
      const double d = relative_entropy(pair);
      for (int i = 1; i <= 5; ++i) {
        const double r = d * i / 5.0;
        const double direct = golden_section_maximize(
                                  [&](double s) {
                                    return (-s * r - phi(pair, s)) / (1.0 - s);
                                  },
                                  0.0, 1.0 - 1e-8, 1e-10)
                                  .value;
        CHECK(std::abs(direct - (invert_psi(pair, r) + r)) < 1e-6);
      }
    }
  }

  SUBCASE("b_tilde dominates b") {
    CHECK(b_tilde(ref, 0.05) ==
          doctest::Approx(golden::b_tilde_at_005).epsilon(1e-7));
    CHECK(b_tilde(ref, 0.05) >= hoeffding_bound(ref, 0.05) - 1e-9);
    const StatePair pair = bernoulli_pair();
    CHECK(b_tilde(pair, 0.05) ==
          doctest::Approx(hoeffding_bound(pair, 0.05)).epsilon(1e-8));
  }

  SUBCASE("degenerate pair rejected") {
    Rng rng(9);
    const DensityOperator rho = rng.random_density(2, 1e-3);
    const StatePair same(rho, rho);
    CHECK_THROWS_AS(hoeffding_bound(same, 0.05), DomainError);
    CHECK_THROWS_AS(b_tilde(same, 0.05), DomainError);
  }
}

TEST_CASE("xi and the conversion formula") {
  const StatePair ref = reference_pair();

  SUBCASE("xi basics") {
    CHECK(std::abs(xi(ref, 0.0)) < 1e-12);
    CHECK(xi(ref, 1.0) == doctest::Approx(2.0 * phi(ref, 0.5)).epsilon(1e-12));
    Rng rng(11);
    const DensityOperator rho = rng.random_density(2, 1e-3);
    CHECK(std::abs(xi(StatePair(rho, rho), 3.0)) < 1e-10);
    // Convexity in t.
    double prev_slope = -1e300;
    double prev = xi(ref, 0.0);
    for (double t = 0.25; t <= 5.0; t += 0.25) {
      const double cur = xi(ref, t);
      const double slope = (cur - prev) / 0.25;
      CHECK(slope >= prev_slope - 1e-9);
      prev_slope = slope;
      prev = cur;
    }
  }

  SUBCASE("conversion residual small for dense grids") {
    const std::vector<double> s_grid = linspace(0.0, 1.0, 21);
    const double d = relative_entropy(ref);
    std::vector<double> r_grid(2000);
    for (int i = 0; i < 2000; ++i) r_grid[i] = d * (i + 1) / 2000.0;
    CHECK(conversion_check(ref, s_grid, r_grid) < 1e-4);

    const StatePair pair = bernoulli_pair();
    const double db = relative_entropy(pair);
    for (int i = 0; i < 2000; ++i) r_grid[i] = db * (i + 1) / 2000.0;
    CHECK(conversion_check(pair, s_grid, r_grid) < 1e-4);
  }

  SUBCASE("degenerate pair rejected") {
    Rng rng(12);
    const DensityOperator rho = rng.random_density(2, 1e-3);
    const StatePair same(rho, rho);
    const std::vector<double> grid = linspace(0.1, 0.9, 5);
    CHECK_THROWS_AS(conversion_check(same, grid, grid), DomainError);
  }
}

TEST_CASE("sweep_phi profile") {
  const StatePair ref = reference_pair();
  const ExponentProfile profile = sweep_phi(ref, 51);
  CHECK(std::abs(profile.phi_values.front()) < 1e-9);
  CHECK(std::abs(profile.phi_values.back()) < 1e-9);
  for (std::size_t i = 1; i + 1 < profile.s_grid.size(); ++i) {
    CHECK(profile.phi_values[i] <=
          0.5 * (profile.phi_values[i - 1] + profile.phi_values[i + 1]) + 1e-9);
  }
  CHECK(std::abs(profile.slope_at_zero + relative_entropy(ref)) < 1e-5);
}
