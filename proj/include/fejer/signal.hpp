#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fejer {

using cplx = std::complex<double>;

/// Invalid argument supplied by the caller (bad radius, subset size, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two operands live on cyclic groups of different order.
class DimensionError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Order of the cyclic group Z/NZ. Requires N >= 2.
class GroupSize {
 public:
  explicit GroupSize(std::size_t n) : n_(n) {
    if (n < 2) {
      throw ParameterError("group size must be at least 2, got " + std::to_string(n));
    }
  }

  std::size_t value() const noexcept { return n_; }

  /// floor(N/2), the largest admissible smoothing radius.
  std::size_t half() const noexcept { return n_ / 2; }

  friend bool operator==(GroupSize a, GroupSize b) noexcept { return a.n_ == b.n_; }
  friend bool operator!=(GroupSize a, GroupSize b) noexcept { return a.n_ != b.n_; }

 private:
  std::size_t n_;
};

/// Representative m of the residue n with m == n (mod N) and |m| <= floor(N/2).
/// For even N the two candidates at n = N/2 tie; the positive one is returned.
/// Only |m| matters to the kernels built on top of this.
inline long least_abs_representative(std::size_t n, GroupSize group) {
  const std::size_t size = group.value();
  if (n >= size) {
    throw ParameterError("residue " + std::to_string(n) + " out of range for N=" +
                         std::to_string(size));
  }
  if (2 * n > size) {
    return static_cast<long>(n) - static_cast<long>(size);
  }
  return static_cast<long>(n);
}

namespace detail {

inline void require_finite(const std::vector<cplx>& values) {
  for (const cplx& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw ParameterError("signal values must be finite");
    }
  }
}

}  // namespace detail

/// Complex-valued function on Z/NZ, indexed by residue. Plain value type;
/// all operations on signals are free functions.
class Signal {
 public:
  explicit Signal(GroupSize group) : values_(group.value(), cplx{0.0, 0.0}) {}

  Signal(GroupSize group, std::vector<cplx> values) : values_(std::move(values)) {
    if (values_.size() != group.value()) {
      throw DimensionError("signal length " + std::to_string(values_.size()) +
                           " does not match group size " + std::to_string(group.value()));
    }
    detail::require_finite(values_);
  }

  std::size_t size() const noexcept { return values_.size(); }
  GroupSize group() const { return GroupSize(values_.size()); }

  cplx& operator[](std::size_t n) noexcept { return values_[n]; }
  const cplx& operator[](std::size_t n) const noexcept { return values_[n]; }

  const std::vector<cplx>& values() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// Unit impulse at residue 0.
  static Signal delta(GroupSize group) {
    Signal out(group);
    out[0] = cplx{1.0, 0.0};
    return out;
  }

 private:
  std::vector<cplx> values_;
};

/// Fourier coefficients of a signal, indexed by frequency. Kept as a distinct
/// type so spatial and frequency data cannot be mixed up.
class Spectrum {
 public:
  explicit Spectrum(GroupSize group) : coeffs_(group.value(), cplx{0.0, 0.0}) {}

  Spectrum(GroupSize group, std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group.value()) {
      throw DimensionError("spectrum length " + std::to_string(coeffs_.size()) +
                           " does not match group size " + std::to_string(group.value()));
    }
    detail::require_finite(coeffs_);
  }

  std::size_t size() const noexcept { return coeffs_.size(); }
  GroupSize group() const { return GroupSize(coeffs_.size()); }

  cplx& operator[](std::size_t k) noexcept { return coeffs_[k]; }
  const cplx& operator[](std::size_t k) const noexcept { return coeffs_[k]; }

  const std::vector<cplx>& coefficients() const noexcept { return coeffs_; }

  auto begin() const noexcept { return coeffs_.begin(); }
  auto end() const noexcept { return coeffs_.end(); }

 private:
  std::vector<cplx> coeffs_;
};

/// Unnormalized l2 norm, (sum_n |f(n)|^2)^(1/2). No 1/N factor.
inline double l2_norm(const Signal& f) {
  double acc = 0.0;
  for (const cplx& v : f) acc += std::norm(v);
  return std::sqrt(acc);
}

/// max_n |f(n)|.
inline double linf_norm(const Signal& f) {
  double best = 0.0;
  for (const cplx& v : f) best = std::max(best, std::abs(v));
  return best;
}

/// Normalized average (1/N) sum_n f(n). A signal has mean zero iff this
/// vanishes, equivalently iff its Fourier coefficient at k=0 vanishes.
inline cplx mean(const Signal& f) {
  cplx acc{0.0, 0.0};
  for (const cplx& v : f) acc += v;
  return acc / static_cast<double>(f.size());
}

/// Inner product sum_n f(n) conj(g(n)).
inline cplx inner_product(const Signal& f, const Signal& g) {
  if (f.size() != g.size()) {
    throw DimensionError("inner product of signals on different groups");
  }
  cplx acc{0.0, 0.0};
  for (std::size_t n = 0; n < f.size(); ++n) acc += f[n] * std::conj(g[n]);
  return acc;
}

}  // namespace fejer
