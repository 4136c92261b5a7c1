#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include "fejer/signal.hpp"

namespace fejer {

namespace detail {

// e^(-2*pi*i*j/N) for j = 0..N-1. All transform code reduces exponents mod N
// before touching trig, which keeps argument-reduction error flat in k*n.
inline std::vector<cplx> twiddle_table(std::size_t size, double sign) {
  std::vector<cplx> w(size);
  const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(size);
  for (std::size_t j = 0; j < size; ++j) {
    const double angle = step * static_cast<double>(j);
    w[j] = cplx{std::cos(angle), std::sin(angle)};
  }
  return w;
}

inline std::vector<cplx> direct_transform(const std::vector<cplx>& in, double sign) {
  const std::size_t size = in.size();
  const std::vector<cplx> w = twiddle_table(size, sign);
  std::vector<cplx> out(size);
  for (std::size_t k = 0; k < size; ++k) {
    cplx acc{0.0, 0.0};
    std::size_t idx = 0;  // (k*n) mod N, maintained incrementally
    for (std::size_t n = 0; n < size; ++n) {
      acc += in[n] * w[idx];
      idx += k;
      if (idx >= size) idx -= size;
    }
    out[k] = acc;
  }
  return out;
}

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 transform; n must be a power of two.
inline void fft_pow2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle =
        (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const cplx wlen{std::cos(angle), std::sin(angle)};
    for (std::size_t i = 0; i < n; i += len) {
      cplx w{1.0, 0.0};
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (cplx& x : a) x *= inv;
  }
}

// Bluestein's chirp-z reduction: an arbitrary-length transform becomes one
// cyclic convolution at the next power of two >= 2N-1.
inline std::vector<cplx> bluestein(const std::vector<cplx>& in, bool inverse) {
  const std::size_t size = in.size();
  const double sign = inverse ? 1.0 : -1.0;

  // chirp[n] = e^(sign*pi*i*n^2/N); exponent n^2 reduced mod 2N.
  std::vector<cplx> chirp(size);
  for (std::size_t n = 0; n < size; ++n) {
    const std::uint64_t q = (static_cast<std::uint64_t>(n) * n) % (2 * size);
    const double angle =
        sign * std::numbers::pi * static_cast<double>(q) / static_cast<double>(size);
    chirp[n] = cplx{std::cos(angle), std::sin(angle)};
  }

  std::size_t padded = 1;
  while (padded < 2 * size - 1) padded <<= 1;

  std::vector<cplx> a(padded, cplx{0.0, 0.0});
  std::vector<cplx> b(padded, cplx{0.0, 0.0});
  for (std::size_t n = 0; n < size; ++n) a[n] = in[n] * chirp[n];
  b[0] = std::conj(chirp[0]);
  for (std::size_t n = 1; n < size; ++n) {
    b[n] = std::conj(chirp[n]);
    b[padded - n] = b[n];
  }

  fft_pow2(a, false);
  fft_pow2(b, false);
  for (std::size_t i = 0; i < padded; ++i) a[i] *= b[i];
  fft_pow2(a, true);

  std::vector<cplx> out(size);
  for (std::size_t k = 0; k < size; ++k) out[k] = chirp[k] * a[k];
  return out;
}

inline std::vector<cplx> fast_transform(const std::vector<cplx>& in, bool inverse) {
  std::vector<cplx> out;
  if (is_power_of_two(in.size())) {
    out = in;
    fft_pow2(out, inverse);
    if (inverse) return out;  // fft_pow2 already applied 1/N
  } else {
    out = bluestein(in, inverse);
    if (inverse) {
      const double inv = 1.0 / static_cast<double>(in.size());
      for (cplx& x : out) x *= inv;
    }
  }
  return out;
}

}  // namespace detail

/// Forward transform, coefficients[k] = sum_n f(n) e^(-2*pi*i*k*n/N).
/// Literal O(N^2) evaluation of the defining sum; this is the reference
/// against which the fast path and all closed forms are checked.
inline Spectrum dft(const Signal& f) {
  return Spectrum(f.group(), detail::direct_transform(f.values(), -1.0));
}

/// Inverse transform, values[n] = (1/N) sum_k F(k) e^(+2*pi*i*k*n/N).
inline Signal idft(const Spectrum& spectrum) {
  std::vector<cplx> out = detail::direct_transform(spectrum.coefficients(), 1.0);
  const double inv = 1.0 / static_cast<double>(spectrum.size());
  for (cplx& x : out) x *= inv;
  return Signal(spectrum.group(), std::move(out));
}

/// O(N log N) forward transform for arbitrary N (radix-2 when N is a power of
/// two, Bluestein otherwise). Same conventions as dft; agrees with it to
/// roundoff and is cross-checked in the test suite.
inline Spectrum fft(const Signal& f) {
  return Spectrum(f.group(), detail::fast_transform(f.values(), false));
}

/// O(N log N) inverse transform, matching idft.
inline Signal ifft(const Spectrum& spectrum) {
  return Signal(spectrum.group(), detail::fast_transform(spectrum.coefficients(), true));
}

/// Circular convolution by the defining sum, result(n) = sum_m f(n-m) g(m)
/// with indices mod N. O(N^2).
inline Signal convolve_direct(const Signal& f, const Signal& g) {
  if (f.size() != g.size()) {
    throw DimensionError("convolution of signals on different groups");
  }
  const std::size_t size = f.size();
  std::vector<cplx> out(size, cplx{0.0, 0.0});
  for (std::size_t n = 0; n < size; ++n) {
    cplx acc{0.0, 0.0};
    std::size_t idx = n;  // (n - m) mod N
    for (std::size_t m = 0; m < size; ++m) {
      acc += f[idx] * g[m];
      idx = (idx == 0) ? size - 1 : idx - 1;
    }
    out[n] = acc;
  }
  return Signal(f.group(), std::move(out));
}

/// Circular convolution through the frequency domain: transform, multiply
/// pointwise, invert. O(N log N) via the fast transform.
inline Signal convolve_spectral(const Signal& f, const Signal& g) {
  if (f.size() != g.size()) {
    throw DimensionError("convolution of signals on different groups");
  }
  Spectrum fs = fft(f);
  const Spectrum gs = fft(g);
  for (std::size_t k = 0; k < fs.size(); ++k) fs[k] *= gs[k];
  return ifft(fs);
}

/// Size below which the direct path beats the spectral one.
inline constexpr std::size_t kDirectConvolutionLimit = 128;

/// Circular convolution; picks the direct path for small N and the spectral
/// path otherwise. The choice depends only on N, so results are reproducible.
inline Signal convolve(const Signal& f, const Signal& g) {
  if (f.size() <= kDirectConvolutionLimit) return convolve_direct(f, g);
  return convolve_spectral(f, g);
}

}  // namespace fejer
