#pragma once

#include <cstdint>
#include <numbers>

#include "fejer/signal.hpp"
#include "fejer/transform.hpp"

namespace fejer {

/// Parameters (N, r) of the triangular smoothing kernel on Z/NZ.
/// The radius is capped at floor(N/2) so the kernel support never wraps.
class KernelSpec {
 public:
  KernelSpec(GroupSize group, long radius) : group_(group), radius_(radius) {
    if (radius < 1 || static_cast<std::size_t>(radius) > group.half()) {
      throw ParameterError("kernel radius " + std::to_string(radius) +
                           " outside [1, " + std::to_string(group.half()) +
                           "] for N=" + std::to_string(group.value()));
    }
  }

  GroupSize group() const noexcept { return group_; }
  long radius() const noexcept { return radius_; }

 private:
  GroupSize group_;
  long radius_;
};

/// Triangular kernel of radius r: value (r - |n|)/r^2 on the support
/// {|n| <= r-1} and 0 elsewhere, where |n| is the least absolute value
/// representative. Nonnegative, even, unit total mass. The integer
/// numerator r - |n| is exact, so support edges are exactly zero.
inline Signal triangular_kernel(const KernelSpec& spec) {
  const std::size_t size = spec.group().value();
  const long radius = spec.radius();
  const double inv_r2 = 1.0 / (static_cast<double>(radius) * static_cast<double>(radius));
  Signal out(spec.group());
  for (std::size_t n = 0; n < size; ++n) {
    const long m = std::labs(least_abs_representative(n, spec.group()));
    if (m < radius) {
      out[n] = cplx{static_cast<double>(radius - m) * inv_r2, 0.0};
    }
  }
  return out;
}

/// Indicator of {0, ..., r-1} as a signal on Z/NZ.
inline Signal boxcar(const KernelSpec& spec) {
  Signal out(spec.group());
  for (long n = 0; n < spec.radius(); ++n) {
    out[static_cast<std::size_t>(n)] = cplx{1.0, 0.0};
  }
  return out;
}

/// (1/r^2) sum_m g(m) g(n+m) with g the boxcar. Equals triangular_kernel
/// elementwise; kept as an independent construction for cross-checking.
/// O(N*r).
inline Signal boxcar_autocorrelation(const KernelSpec& spec) {
  const std::size_t size = spec.group().value();
  const std::size_t radius = static_cast<std::size_t>(spec.radius());
  const Signal g = boxcar(spec);
  const double inv_r2 = 1.0 / (static_cast<double>(radius) * static_cast<double>(radius));
  Signal out(spec.group());
  for (std::size_t n = 0; n < size; ++n) {
    double count = 0.0;
    for (std::size_t m = 0; m < radius; ++m) {  // g(m) = 1 only on {0,...,r-1}
      std::size_t shifted = n + m;
      if (shifted >= size) shifted -= size;
      count += g[shifted].real();
    }
    out[n] = cplx{count * inv_r2, 0.0};
  }
  return out;
}

/// Squared l2 norm of the radius-r triangular kernel:
/// 1/r^2 + (r-1)(2r-1)/(3r^3).
inline double kernel_l2_squared(long radius) {
  if (radius < 1) {
    throw ParameterError("kernel radius must be positive, got " + std::to_string(radius));
  }
  const double r = static_cast<double>(radius);
  return 1.0 / (r * r) + (r - 1.0) * (2.0 * r - 1.0) / (3.0 * r * r * r);
}

/// Upper bound 5/(3r) for kernel_l2_squared, valid for every r >= 1.
inline double kernel_l2_squared_bound(long radius) {
  if (radius < 1) {
    throw ParameterError("kernel radius must be positive, got " + std::to_string(radius));
  }
  return 5.0 / (3.0 * static_cast<double>(radius));
}

/// Fourier multiplier of the triangular kernel at frequency k:
/// (sin(pi*r*k/N) / (r*sin(pi*k/N)))^2 for k != 0 (mod N), and 1 at k = 0.
/// Always in [0, 1]. The k = 0 branch is explicit because the denominator
/// vanishes there; for 0 < k < N, sin(pi*k/N) > 0 and no guard is needed.
inline double kernel_symbol(const KernelSpec& spec, std::size_t k) {
  const std::size_t size = spec.group().value();
  if (k >= size) {
    throw ParameterError("frequency " + std::to_string(k) + " out of range for N=" +
                         std::to_string(size));
  }
  if (k == 0) return 1.0;
  const double r = static_cast<double>(spec.radius());
  // r*k reduced mod 2N: sin(pi*x/N) has period 2N in x.
  const std::uint64_t rk =
      (static_cast<std::uint64_t>(spec.radius()) * k) % (2 * size);
  const double num =
      std::sin(std::numbers::pi * static_cast<double>(rk) / static_cast<double>(size));
  const double den =
      std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(size));
  const double ratio = num / (r * den);
  return ratio * ratio;
}

}  // namespace fejer
