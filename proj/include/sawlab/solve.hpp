#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace sawlab {

/// Bisection for f(x) = target on [lo, hi], f strictly monotone on the
/// bracket. All solver targets in this library are monotone, so bisection
/// converges unconditionally; no derivatives needed. The returned x has
/// |f(x) - target| below `residual_tol` (default 1e-12).
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double target, double residual_tol = 1e-12) {
  double flo = f(lo) - target;
  double fhi = f(hi) - target;
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0))
    throw std::domain_error("bisect: endpoints do not bracket the target");
  const bool increasing = flo < 0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid) - target;
    if (fm == 0) return mid;
    if ((fm < 0) == increasing)
      lo = mid;
    else
      hi = mid;
  }
  const double x = 0.5 * (lo + hi);
  if (std::abs(f(x) - target) > residual_tol)
    throw std::runtime_error("bisect: residual tolerance not reached");
  return x;
}

}  // namespace sawlab
