#include "qht/classical_iid.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "qht/scalar_opt.hpp"

namespace qht {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Streaming log-sum-exp; deterministic for a fixed insertion order.
class LogSumAcc {
public:
  void add(double x) {
    if (x == kNegInf) return;
    if (x <= max_) {
      acc_ += std::exp(x - max_);
    } else {
      acc_ = acc_ * std::exp(max_ - x) + 1.0;
      max_ = x;
    }
  }
  void merge(const LogSumAcc& o) {
    if (o.max_ == kNegInf) return;
    if (o.max_ <= max_) {
      acc_ += o.acc_ * std::exp(o.max_ - max_);
    } else {
      acc_ = acc_ * std::exp(max_ - o.max_) + o.acc_;
      max_ = o.max_;
    }
  }
  double log_value() const {
    return max_ == kNegInf ? kNegInf : max_ + std::log(acc_);
  }

private:
  double max_ = kNegInf;
  double acc_ = 0.0;
};

struct Alphabet {
  std::vector<double> log_weight;  // log of the measure, finite on its support
  std::vector<double> log_ratio;   // log(q/p); +-inf off the other support
};

// Restricts to the support of the chosen measure so every weight is finite.
Alphabet make_alphabet(const ClassicalPair& cp, bool weight_by_p) {
  Alphabet a;
  for (std::size_t k = 0; k < cp.size(); ++k) {
    const double w = weight_by_p ? cp.p[k] : cp.q[k];
    if (w <= 0.0) continue;
    a.log_weight.push_back(std::log(w));
    double ratio;
    if (cp.p[k] <= 0.0) {
      ratio = std::numeric_limits<double>::infinity();
    } else if (cp.q[k] <= 0.0) {
      ratio = kNegInf;
    } else {
      ratio = std::log(cp.q[k]) - std::log(cp.p[k]);
    }
    a.log_ratio.push_back(ratio);
  }
  return a;
}

void check_cap(int n, int m, long cap) {
  const double count = type_class_count(n, m);
  if (count > static_cast<double>(cap)) {
    std::ostringstream os;
    os << "type-class count " << count << " for n=" << n << ", m=" << m
       << " exceeds cap " << cap;
    throw ResourceError(os.str());
  }
}

// Enumerates counts for symbols [sym, m) with `rest` trials remaining,
// in lexicographic order over counts, accumulating the masses of type
// classes whose statistic passes `keep`.
template <typename Keep>
void enumerate(const Alphabet& a, int sym, int rest, double log_coeff,
               double log_mass, double stat, const Keep& keep, LogSumAcc& acc) {
  const int m = static_cast<int>(a.log_weight.size());
  if (sym == m - 1) {
    const double coeff = log_coeff - std::lgamma(rest + 1.0);
    const double mass = log_mass + rest * a.log_weight[sym];
    const double s = stat + (rest > 0 ? rest * a.log_ratio[sym] : 0.0);
    if (keep(s)) acc.add(coeff + mass);
    return;
  }
  for (int k = 0; k <= rest; ++k) {
    enumerate(a, sym + 1, rest - k, log_coeff - std::lgamma(k + 1.0),
              log_mass + k * a.log_weight[sym],
              stat + (k > 0 ? k * a.log_ratio[sym] : 0.0), keep, acc);
  }
}

template <typename Keep>
double tail_serial(const Alphabet& a, int n, const Keep& keep) {
  LogSumAcc acc;
  if (a.log_weight.empty()) return 0.0;
  enumerate(a, 0, n, std::lgamma(n + 1.0), 0.0, 0.0, keep, acc);
  const double lv = acc.log_value();
  return lv == kNegInf ? 0.0 : std::exp(lv);
}

// Parallel over the leading symbol count; partial accumulators are merged
// in index order so the result does not depend on the thread count.
template <typename Keep>
double tail_parallel(const Alphabet& a, int n, const Keep& keep) {
  const int m = static_cast<int>(a.log_weight.size());
  if (m == 0) return 0.0;
  if (m == 1) return tail_serial(a, n, keep);
  std::vector<LogSumAcc> partial(n + 1);
#pragma omp parallel for schedule(dynamic)
  for (int k0 = 0; k0 <= n; ++k0) {
    enumerate(a, 1, n - k0, std::lgamma(n + 1.0) - std::lgamma(k0 + 1.0),
              k0 * a.log_weight[0],
              k0 > 0 ? k0 * a.log_ratio[0] : 0.0, keep, partial[k0]);
  }
  LogSumAcc acc;
  for (const LogSumAcc& part : partial) acc.merge(part);
  const double lv = acc.log_value();
  return lv == kNegInf ? 0.0 : std::exp(lv);
}

}  // namespace

double type_class_count(int n, int alphabet_size) {
  if (alphabet_size < 1) return 0.0;
  return std::round(std::exp(std::lgamma(n + alphabet_size + 0.0) -
                             std::lgamma(n + 1.0) -
                             std::lgamma(alphabet_size + 0.0)));
}

double iid_tail_f(const ClassicalPair& cp, int n, double b, long cap) {
  if (n < 1) throw DomainError("iid_tail_f requires n >= 1");
  const Alphabet a = make_alphabet(cp, /*weight_by_p=*/true);
  check_cap(n, static_cast<int>(a.log_weight.size()), cap);
  const double threshold = n * b - kTieGuard;
  return tail_parallel(a, n, [threshold](double s) { return s >= threshold; });
}

double iid_tail_g(const ClassicalPair& cp, int n, double b, long cap) {
  if (n < 1) throw DomainError("iid_tail_g requires n >= 1");
  const Alphabet a = make_alphabet(cp, /*weight_by_p=*/false);
  check_cap(n, static_cast<int>(a.log_weight.size()), cap);
  const double threshold = n * b - kTieGuard;
  return tail_parallel(a, n, [threshold](double s) { return s < threshold; });
}

double iid_tail_f_serial(const ClassicalPair& cp, int n, double b, long cap) {
  if (n < 1) throw DomainError("iid_tail_f requires n >= 1");
  const Alphabet a = make_alphabet(cp, /*weight_by_p=*/true);
  check_cap(n, static_cast<int>(a.log_weight.size()), cap);
  const double threshold = n * b - kTieGuard;
  return tail_serial(a, n, [threshold](double s) { return s >= threshold; });
}

double iid_tail_g_serial(const ClassicalPair& cp, int n, double b, long cap) {
  if (n < 1) throw DomainError("iid_tail_g requires n >= 1");
  const Alphabet a = make_alphabet(cp, /*weight_by_p=*/false);
  check_cap(n, static_cast<int>(a.log_weight.size()), cap);
  const double threshold = n * b - kTieGuard;
  return tail_serial(a, n, [threshold](double s) { return s < threshold; });
}

double cramer_rate_upper(const ClassicalPair& cp, double b) {
  const double d_pq = classical_relative_entropy(cp);
  const double d_qp = classical_relative_entropy(swapped(cp));
  if (b <= -d_pq || b >= d_qp) {
    std::ostringstream os;
    os << "b = " << b << " outside (" << -d_pq << ", " << d_qp << ")";
    throw DomainError(os.str());
  }
  auto objective = [&](double s) { return b * s - classical_phi(cp, s); };
  return golden_section_maximize(objective, 0.0, 1.0, 1e-10).value;
}

double cramer_rate_target_g(const ClassicalPair& cp, double b) {
  return cramer_rate_upper(cp, b) - b;
}

double iid_lower_bound(const ClassicalPair& cp, int n, double b, long cap) {
  return 0.5 * (iid_tail_f(cp, n, b, cap) +
                std::exp(-static_cast<double>(n) * b) * iid_tail_g(cp, n, b, cap));
}

}  // namespace qht
