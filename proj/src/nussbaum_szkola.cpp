#include "qht/nussbaum_szkola.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace qht {

void ClassicalPair::validate() const {
  if (p.size() != support.size() || q.size() != support.size()) {
    throw ValidationError("classical pair arrays have mismatched lengths");
  }
  double sp = 0.0, sq = 0.0;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (p[k] < 0.0 || q[k] < 0.0) {
      throw ValidationError("classical pair has a negative entry");
    }
    sp += p[k];
    sq += q[k];
  }
  if (std::abs(sp - 1.0) > 1e-10 || std::abs(sq - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "classical pair sums deviate from 1: p " << sp << ", q " << sq;
    throw ValidationError(os.str());
  }
  std::set<std::pair<int, int>> seen(support.begin(), support.end());
  if (seen.size() != support.size()) {
    throw ValidationError("classical pair support contains duplicates");
  }
}

nlohmann::json ClassicalPair::to_json() const {
  nlohmann::json j;
  j["support"] = nlohmann::json::array();
  for (const auto& [i, k] : support) j["support"].push_back({i, k});
  j["p"] = p;
  j["q"] = q;
  return j;
}

ClassicalPair ClassicalPair::from_json(const nlohmann::json& j) {
  ClassicalPair cp;
  for (const auto& e : j.at("support")) {
    cp.support.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  cp.p = j.at("p").get<std::vector<double>>();
  cp.q = j.at("q").get<std::vector<double>>();
  cp.validate();
  return cp;
}

ClassicalPair ns_distributions(const StatePair& pair) {
  const SpectralDecomposition& re = pair.rho_eig();
  const SpectralDecomposition& se = pair.sigma_eig();
  const int d = pair.dim();
  ClassicalPair cp;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Complex ov =
          (re.eigenvectors.col(i).adjoint() * se.eigenvectors.col(j))(0, 0);
      const double w = std::norm(ov);
      const double pij = re.eigenvalues[i] * w;
      const double qij = se.eigenvalues[j] * w;
      if (pij > kSupportFloor || qij > kSupportFloor) {
        cp.support.emplace_back(i, j);
        cp.p.push_back(std::max(pij, 0.0));
        cp.q.push_back(std::max(qij, 0.0));
      }
    }
  }
  cp.validate();
  return cp;
}

double classical_phi(const ClassicalPair& cp, double s) {
  if (s < 0.0 || s > 1.0) {
    std::ostringstream os;
    os << "s = " << s << " outside [0, 1]";
    throw DomainError(os.str());
  }
  // log-sum-exp over terms (1-s) log p + s log q; a term vanishes unless
  // both factors are on their supports (0^t = 0 for all t >= 0).
  double max_log = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  logs.reserve(cp.size());
  for (std::size_t k = 0; k < cp.size(); ++k) {
    if (cp.p[k] <= 0.0 || cp.q[k] <= 0.0) continue;
    logs.push_back((1.0 - s) * std::log(cp.p[k]) + s * std::log(cp.q[k]));
    max_log = std::max(max_log, logs.back());
  }
  if (logs.empty()) {
    throw DomainError("classical_phi: p and q have disjoint supports");
  }
  double acc = 0.0;
  for (double x : logs) acc += std::exp(x - max_log);
  return max_log + std::log(acc);
}

double min_overlap(const ClassicalPair& cp, double delta) {
  if (delta <= 0.0) throw DomainError("min_overlap requires delta > 0");
  double p_side = 0.0, q_side = 0.0;
  for (std::size_t k = 0; k < cp.size(); ++k) {
    if (cp.p[k] <= delta * cp.q[k]) {
      p_side += cp.p[k];
    } else {
      q_side += cp.q[k];
    }
  }
  return 0.5 * (p_side + delta * q_side);
}

double classical_relative_entropy(const ClassicalPair& cp) {
  double acc = 0.0;
  for (std::size_t k = 0; k < cp.size(); ++k) {
    if (cp.p[k] <= 0.0) continue;
    if (cp.q[k] <= 0.0) {
      throw DomainError(
          "classical_relative_entropy: supp(p) not contained in supp(q)");
    }
    acc += cp.p[k] * std::log(cp.p[k] / cp.q[k]);
  }
  return acc;
}

ClassicalPair swapped(const ClassicalPair& cp) {
  ClassicalPair out = cp;
  out.p = cp.q;
  out.q = cp.p;
  return out;
}

}  // namespace qht
