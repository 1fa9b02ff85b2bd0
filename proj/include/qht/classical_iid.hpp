#ifndef QHT_CLASSICAL_IID_HPP
#define QHT_CLASSICAL_IID_HPP

#include "qht/nussbaum_szkola.hpp"

namespace qht {

inline constexpr long kDefaultTypeCap = 2'000'000;
// Type classes whose log-ratio statistic sits within this band of the
// threshold n*b are assigned to the f-side ("<=") of the split.
inline constexpr double kTieGuard = 1e-12;

/// f_n(b) = p^n{ (1/n) log(q^n/p^n) >= b }, exact via type-class enumeration.
/// OpenMP-parallel over the leading symbol count with a deterministic merge.
double iid_tail_f(const ClassicalPair& cp, int n, double b,
                  long cap = kDefaultTypeCap);

/// g_n(b) = q^n{ (1/n) log(q^n/p^n) < b }.
double iid_tail_g(const ClassicalPair& cp, int n, double b,
                  long cap = kDefaultTypeCap);

/// Serial reference implementations of the same sums, kept for testing and
/// benchmarking against the parallel kernels.
double iid_tail_f_serial(const ClassicalPair& cp, int n, double b,
                         long cap = kDefaultTypeCap);
double iid_tail_g_serial(const ClassicalPair& cp, int n, double b,
                         long cap = kDefaultTypeCap);

/// Classical Phi(b) = max_{s in [0,1]} (b s - phi_c(s)); the Cramer rate
/// target for f_n. Requires b in (-D(p||q), D(q||p)).
double cramer_rate_upper(const ClassicalPair& cp, double b);

/// Classical Psi(b) = Phi(b) - b; the Cramer rate target for g_n.
double cramer_rate_target_g(const ClassicalPair& cp, double b);

/// (1/2)[f_n(b) + e^{-n b} g_n(b)], the i.i.d. testing lower bound.
double iid_lower_bound(const ClassicalPair& cp, int n, double b,
                       long cap = kDefaultTypeCap);

/// Number of type classes C(n+m-1, m-1) (as a double, for cap checks).
double type_class_count(int n, int alphabet_size);

}  // namespace qht

#endif
