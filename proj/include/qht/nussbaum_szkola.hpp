#ifndef QHT_NUSSBAUM_SZKOLA_HPP
#define QHT_NUSSBAUM_SZKOLA_HPP

#include <nlohmann/json.hpp>
#include <utility>
#include <vector>

#include "qht/exponents.hpp"

namespace qht {

// Entries where both p and q fall below this floor are pruned jointly.
inline constexpr double kSupportFloor = 1e-15;

/// Two distributions on a shared finite support of eigenindex pairs (i, j).
struct ClassicalPair {
  std::vector<std::pair<int, int>> support;
  std::vector<double> p;
  std::vector<double> q;

  std::size_t size() const { return support.size(); }
  void validate() const;

  nlohmann::json to_json() const;
  static ClassicalPair from_json(const nlohmann::json& j);
};

/// p(i,j) = lambda_i |<x_i|y_j>|^2, q(i,j) = gamma_j |<x_i|y_j>|^2.
ClassicalPair ns_distributions(const StatePair& pair);

/// log sum_w p(w)^{1-s} q(w)^s with the support convention 0^t = 0 for t >= 0.
double classical_phi(const ClassicalPair& cp, double s);

/// (1/2) [ p{p <= delta q} + delta q{p > delta q} ]; ties go to the p-side.
double min_overlap(const ClassicalPair& cp, double delta);

/// D(p||q); requires supp p contained in supp q.
double classical_relative_entropy(const ClassicalPair& cp);

/// The pair with p and q exchanged (support index pairs kept).
ClassicalPair swapped(const ClassicalPair& cp);

}  // namespace qht

#endif
