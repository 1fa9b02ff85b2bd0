#ifndef QHT_SCALAR_OPT_HPP
#define QHT_SCALAR_OPT_HPP

#include <cmath>
#include <functional>

#include "qht/errors.hpp"

namespace qht {

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
template <typename F>
GoldenResult golden_section_maximize(F&& f, double lo, double hi,
                                     double xtol = 1e-10, int max_iter = 200) {
  const double inv_gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_gr * (b - a);
  double d = a + inv_gr * (b - a);
  double fc = f(c), fd = f(d);
  int it = 0;
  while (b - a > xtol && it < max_iter) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_gr * (b - a);
      fd = f(d);
    }
    ++it;
  }
  GoldenResult out;
  out.x = 0.5 * (a + b);
  out.value = f(out.x);
  out.iterations = it;
  // The endpoints can dominate the interior for monotone objectives.
  const double flo = f(lo), fhi = f(hi);
  if (flo > out.value) {
    out.x = lo;
    out.value = flo;
  }
  if (fhi > out.value) {
    out.x = hi;
    out.value = fhi;
  }
  return out;
}

/// Solves f(x) = target for monotonically decreasing f on [lo, hi] by bisection.
template <typename F>
double bisect_decreasing(F&& f, double lo, double hi, double target,
                         double xtol = 1e-10, int max_iter = 200) {
  double a = lo, b = hi;
  for (int it = 0; it < max_iter && b - a > xtol; ++it) {
    const double mid = 0.5 * (a + b);
    if (f(mid) > target) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace qht

#endif
