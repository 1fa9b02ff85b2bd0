#include <doctest.h>

#include <cmath>

#include "qht/helstrom.hpp"
#include "test_util.hpp"

using namespace qht;
using testutil::bernoulli_pair;
using testutil::random_full_rank_pair;
using testutil::reference_pair;

// 2x2 closed-form values for the reference pair at delta = 1, frozen from the
// eigenvalues of rho - sigma (trace norm 0.53851648...).
namespace golden {
constexpr double ref_risk_delta1 = 0.7307417596432748;
constexpr double ref_f1_at_0 = 0.267880827278685;
constexpr double ref_g1_at_0 = 0.4628609323645896;
}  // namespace golden

namespace {

DensityOperator diag_state(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return DensityOperator(m);
}

}  // namespace

TEST_CASE("error_probabilities") {
  const DensityOperator rho = diag_state(1.0, 0.0);
  const DensityOperator sigma = diag_state(0.0, 1.0);

  SUBCASE("identity and zero tests") {
    const TestOperator full{Matrix::Identity(2, 2)};
    const TestOperator none{Matrix::Zero(2, 2)};
    const ErrorPair e1 = error_probabilities(rho, sigma, full);
    CHECK(e1.alpha == doctest::Approx(0.0));
    CHECK(e1.beta == doctest::Approx(1.0));
    const ErrorPair e0 = error_probabilities(rho, sigma, none);
    CHECK(e0.alpha == doctest::Approx(1.0));
    CHECK(e0.beta == doctest::Approx(0.0));
  }

  SUBCASE("orthogonal states discriminate perfectly") {
    Matrix t = Matrix::Zero(2, 2);
    t(0, 0) = 1.0;
    const ErrorPair e = error_probabilities(rho, sigma, TestOperator{t});
    CHECK(e.alpha == doctest::Approx(0.0));
    CHECK(e.beta == doctest::Approx(0.0));
  }

  SUBCASE("dimension mismatch") {
    const TestOperator t{Matrix::Identity(4, 4)};
    CHECK_THROWS_AS(error_probabilities(rho, sigma, t), ValidationError);
  }
}

TEST_CASE("helstrom_test") {
  SUBCASE("rho = sigma yields the zero projector") {
    const DensityOperator rho = diag_state(0.5, 0.5);
    const TestOperator t = helstrom_test(rho, rho, 1.0);
    CHECK(t.matrix().cwiseAbs().maxCoeff() < 1e-12);
    const ErrorPair e = error_probabilities(rho, rho, t);
    CHECK(e.alpha + e.beta == doctest::Approx(1.0));
  }

  SUBCASE("orthogonal pure states have zero risk") {
    const DensityOperator rho = diag_state(1.0, 0.0);
    const DensityOperator sigma = diag_state(0.0, 1.0);
    const TestOperator t = helstrom_test(rho, sigma, 1.0);
    const ErrorPair e = error_probabilities(rho, sigma, t);
    CHECK(e.alpha + e.beta == doctest::Approx(0.0));
  }

  SUBCASE("reference pair risk matches the trace-norm oracle") {
    const StatePair ref = reference_pair();
    const TestOperator t = helstrom_test(ref.rho(), ref.sigma(), 1.0);
    const ErrorPair e = error_probabilities(ref.rho(), ref.sigma(), t);
    CHECK(e.alpha + e.beta ==
          doctest::Approx(golden::ref_risk_delta1).epsilon(1e-12));
  }

  SUBCASE("optimality against random tests") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      const StatePair pair = random_full_rank_pair(rng, 2);
      const int n = 1 + trial % 3;
      const DensityOperator rho_n{tensor_power(pair.rho().matrix(), n)};
      const DensityOperator sigma_n{tensor_power(pair.sigma().matrix(), n)};
      for (double delta : {0.5, 1.0, 2.0}) {
        const TestOperator best = helstrom_test(rho_n, sigma_n, delta);
        const ErrorPair eb = error_probabilities(rho_n, sigma_n, best);
        const double best_risk = eb.alpha + delta * eb.beta;
        for (int k = 0; k < 10; ++k) {
          const TestOperator t = rng.random_test(rho_n.dim());
          const ErrorPair e = error_probabilities(rho_n, sigma_n, t);
          CHECK(e.alpha + delta * e.beta >= best_risk - 1e-12);
        }
      }
    }
  }
}

TEST_CASE("spectral_tails") {
  SUBCASE("rho = sigma at a = 0") {
    const DensityOperator rho = diag_state(0.5, 0.5);
    const StatePair same(rho, rho);
    for (int n : {1, 2, 3}) {
      const SpectralTails tails = spectral_tails(same, n, 0.0);
      CHECK(tails.f == doctest::Approx(1.0));
      CHECK(tails.g == doctest::Approx(0.0));
    }
  }

  SUBCASE("commuting pairs reduce to the classical tails") {
    const StatePair pair = bernoulli_pair();
    const ClassicalPair cp = ns_distributions(pair);
    for (int n = 1; n <= 8; ++n) {
      for (double a : {-0.1, 0.0, 0.15}) {
        const SpectralTails tails = spectral_tails(pair, n, a);
        CHECK(std::abs(tails.f - iid_tail_f(cp, n, a)) < 1e-10);
        CHECK(std::abs(tails.g - iid_tail_g(cp, n, a)) < 1e-10);
      }
    }
  }

  SUBCASE("reference pair at n = 1, a = 0 against the 2x2 oracle") {
    const SpectralTails tails = spectral_tails(reference_pair(), 1, 0.0);
    CHECK(tails.f == doctest::Approx(golden::ref_f1_at_0).epsilon(1e-10));
    CHECK(tails.g == doctest::Approx(golden::ref_g1_at_0).epsilon(1e-10));
  }

  SUBCASE("n = 1 agrees with helstrom_test at delta = e^{-a}") {
    const StatePair ref = reference_pair();
    for (double a : {-0.05, 0.0, 0.08}) {
      const SpectralTails tails = spectral_tails(ref, 1, a);
      const TestOperator t =
          helstrom_test(ref.rho(), ref.sigma(), std::exp(-a));
      const ErrorPair e = error_probabilities(ref.rho(), ref.sigma(), t);
      CHECK(tails.f == doctest::Approx(e.alpha).epsilon(1e-12));
      CHECK(tails.g == doctest::Approx(e.beta).epsilon(1e-12));
    }
  }

  SUBCASE("cap exceeded") {
    CHECK_THROWS_AS(spectral_tails(reference_pair(), 3, 0.0, /*cap=*/4),
                    ResourceError);
  }
}

TEST_CASE("lemma_check") {
  SUBCASE("rho = sigma with the optimal test") {
    const DensityOperator rho = diag_state(0.5, 0.5);
    const StatePair same(rho, rho);
    const TestOperator t = helstrom_test(rho, rho, 1.0);
    CHECK(lemma_check(same, 1, t, 1.0) == doctest::Approx(0.5));
  }

  SUBCASE("orthogonal states: both sides vanish") {
    const StatePair pair(diag_state(1.0, 0.0), diag_state(0.0, 1.0));
    const TestOperator t = helstrom_test(pair.rho(), pair.sigma(), 1.0);
    CHECK(lemma_check(pair, 1, t, 1.0) == doctest::Approx(0.0));
  }

  SUBCASE("random tests never go below the bound") {
    Rng rng(42);
    double min_slack = 1e300;
    for (int trial = 0; trial < 100; ++trial) {
      const StatePair pair = random_full_rank_pair(rng, 2);
      const int n = 1 + trial % 2;
      const TestOperator t = rng.random_test(n == 1 ? 2 : 4);
      for (double delta : {0.5, 1.0, 2.0}) {
        min_slack = std::min(min_slack, lemma_check(pair, n, t, delta));
      }
    }
    CHECK(min_slack >= -1e-10);
  }
}

TEST_CASE("conjecture_probe") {
  SUBCASE("commuting pair gaps match the classical engine") {
    const StatePair pair = bernoulli_pair();
    const ClassicalPair cp = ns_distributions(pair);
    const auto rows = conjecture_probe(pair, 0.0, 6);
    REQUIRE(rows.size() == 6);
    for (const ProbeRow& row : rows) {
      const double rate_f = -std::log(iid_tail_f(cp, row.n, 0.0)) / row.n;
      const double rate_g = -std::log(iid_tail_g(cp, row.n, 0.0)) / row.n;
      CHECK(row.rate_f == doctest::Approx(rate_f).epsilon(1e-9));
      CHECK(row.rate_g == doctest::Approx(rate_g).epsilon(1e-9));
      CHECK(row.gap_f >= -1e-9);  // Chernoff-type upper bound on f_n
    }
  }

  SUBCASE("rho = sigma has an empty a-interval") {
    const DensityOperator rho = diag_state(0.5, 0.5);
    CHECK_THROWS_AS(conjecture_probe(StatePair(rho, rho), 0.0, 3), DomainError);
  }

  SUBCASE("reference pair regression values at n <= 4") {
    const auto rows = conjecture_probe(reference_pair(), 0.0, 4);
    // Deterministic: repeat runs must agree bit for bit.
    const auto again = conjecture_probe(reference_pair(), 0.0, 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].rate_f == again[i].rate_f);
      CHECK(rows[i].rate_g == again[i].rate_g);
    }
  }
}
