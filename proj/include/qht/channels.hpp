#ifndef QHT_CHANNELS_HPP
#define QHT_CHANNELS_HPP

#include <cstdint>
#include <nlohmann/json.hpp>
#include <span>
#include <vector>

#include "qht/exponents.hpp"

namespace qht {

/// CPTP map in Kraus form; sum K^dag K = I is enforced at construction.
class KrausChannel {
public:
  explicit KrausChannel(std::vector<Matrix> kraus_ops);

  DensityOperator apply(const DensityOperator& rho) const;
  int d_in() const { return static_cast<int>(ops_.front().cols()); }
  int d_out() const { return static_cast<int>(ops_.front().rows()); }
  const std::vector<Matrix>& ops() const { return ops_; }

  nlohmann::json to_json() const;
  static KrausChannel from_json(const nlohmann::json& j);

private:
  std::vector<Matrix> ops_;
};

/// Haar-like random channel: orthonormalized seeded Gaussian (k d_out) x d_in
/// isometry sliced into k Kraus blocks. Deterministic per seed.
KrausChannel random_channel(int d_in, int d_out, int k, std::uint64_t seed);

/// max over s_grid of Tr[rho^{1-s} sigma^s] - Tr[E(rho)^{1-s} E(sigma)^s];
/// the data-processing inequality says this is <= 0 up to rounding.
double renyi_monotonicity_check(const StatePair& pair, const KrausChannel& ch,
                                std::span<const double> s_grid);

struct RelentCheck {
  double violation = 0.0;  // D(E(rho)||E(sigma)) - D(rho||sigma)
  bool regularized = false;
  double regularization = 0.0;
};

RelentCheck relent_monotonicity_check(const StatePair& pair,
                                      const KrausChannel& ch);

}  // namespace qht

#endif
