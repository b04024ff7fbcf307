#pragma once

// Iterative radix-2 complex FFT.  Grids in this project are powers of two by
// construction, so a hand-rolled transform keeps every operator application a
// pure function (no plan objects, no shared mutable state across threads).
// Twiddle tables are cached per thread.

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace czlab {

using cplx = std::complex<double>;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline const std::vector<cplx> &twiddles(std::size_t n) {
  thread_local std::unordered_map<std::size_t, std::vector<cplx>> cache;
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  std::vector<cplx> w(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double a = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    w[k] = {std::cos(a), std::sin(a)};
  }
  return cache.emplace(n, std::move(w)).first->second;
}

inline void fft_pow2(cplx *a, std::size_t n, bool inverse) {
  if (n <= 1)
    return;
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1)
      j ^= bit;
    j |= bit;
    if (i < j)
      std::swap(a[i], a[j]);
  }
  const std::vector<cplx> &w = twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx tw = w[k * stride];
        if (inverse)
          tw = std::conj(tw);
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * tw;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
      a[i] *= inv;
  }
}

} // namespace detail

inline void fft(std::vector<cplx> &a, bool inverse = false) {
  if (!detail::is_pow2(a.size()))
    throw std::invalid_argument("fft: length must be a power of two");
  detail::fft_pow2(a.data(), a.size(), inverse);
}

// In-place 2D transform of a row-major rows x cols array.
inline void fft2(std::vector<cplx> &a, std::size_t rows, std::size_t cols, bool inverse = false) {
  if (a.size() != rows * cols)
    throw std::invalid_argument("fft2: size mismatch");
  if (!detail::is_pow2(rows) || !detail::is_pow2(cols))
    throw std::invalid_argument("fft2: dimensions must be powers of two");
  for (std::size_t r = 0; r < rows; ++r)
    detail::fft_pow2(a.data() + r * cols, cols, inverse);
  std::vector<cplx> col(rows);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r)
      col[r] = a[r * cols + c];
    detail::fft_pow2(col.data(), rows, inverse);
    for (std::size_t r = 0; r < rows; ++r)
      a[r * cols + c] = col[r];
  }
}

} // namespace czlab
