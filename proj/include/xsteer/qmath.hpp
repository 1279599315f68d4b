// Copyright 2026 The xsteer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Small numeric kernels shared by the state, channel and measure code:
// entropy terms in bits and fixed-size complex matrices for the dense
// oracle paths.

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace xsteer {

using Complex = std::complex<double>;

/// Probabilities in [-kProbClamp, 0) are treated as rounding noise and
/// clamped to zero before entering an entropy.
inline constexpr double kProbClamp = 1e-12;

/// Tolerance on the total weight of a probability distribution.
inline constexpr double kProbSumTol = 1e-9;

/// x * log2(x), extended continuously with 0 at x = 0.
/// Throws DomainError for x < -kProbClamp or non-finite x.
double xlogx(double x);

/// Shannon entropy in bits of a discrete distribution.
/// Throws DomainError if a weight is below -kProbClamp or the weights do not
/// sum to one within kProbSumTol.
double shannon(std::span<const double> weights);

/// Dense row-major N x N complex matrix.
template <std::size_t N>
struct CMat {
  std::array<Complex, N * N> a{};

  static constexpr std::size_t dim = N;

  constexpr Complex& operator()(std::size_t row, std::size_t col) { return a[row * N + col]; }
  constexpr const Complex& operator()(std::size_t row, std::size_t col) const {
    return a[row * N + col];
  }

  static constexpr CMat identity() {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static constexpr CMat diagonal(const std::array<Complex, N>& d) {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  friend bool operator==(const CMat&, const CMat&) = default;
};

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;

template <std::size_t N>
CMat<N> operator*(const CMat<N>& lhs, const CMat<N>& rhs) {
  CMat<N> out;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t k = 0; k < N; ++k) {
      const Complex l = lhs(i, k);
      if (l == Complex{}) continue;
      for (std::size_t j = 0; j < N; ++j) out(i, j) += l * rhs(k, j);
    }
  }
  return out;
}

template <std::size_t N>
CMat<N> operator+(const CMat<N>& lhs, const CMat<N>& rhs) {
  CMat<N> out;
  for (std::size_t i = 0; i < N * N; ++i) out.a[i] = lhs.a[i] + rhs.a[i];
  return out;
}

template <std::size_t N>
CMat<N> operator-(const CMat<N>& lhs, const CMat<N>& rhs) {
  CMat<N> out;
  for (std::size_t i = 0; i < N * N; ++i) out.a[i] = lhs.a[i] - rhs.a[i];
  return out;
}

template <std::size_t N>
CMat<N> operator*(Complex scale, const CMat<N>& m) {
  CMat<N> out;
  for (std::size_t i = 0; i < N * N; ++i) out.a[i] = scale * m.a[i];
  return out;
}

/// Conjugate transpose.
template <std::size_t N>
CMat<N> adjoint(const CMat<N>& m) {
  CMat<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

/// Entrywise complex conjugate (no transpose).
template <std::size_t N>
CMat<N> conjugate(const CMat<N>& m) {
  CMat<N> out;
  for (std::size_t i = 0; i < N * N; ++i) out.a[i] = std::conj(m.a[i]);
  return out;
}

template <std::size_t N>
Complex trace(const CMat<N>& m) {
  Complex t{};
  for (std::size_t i = 0; i < N; ++i) t += m(i, i);
  return t;
}

/// Largest entrywise modulus of lhs - rhs.
template <std::size_t N>
double max_abs_diff(const CMat<N>& lhs, const CMat<N>& rhs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) worst = std::max(worst, std::abs(lhs.a[i] - rhs.a[i]));
  return worst;
}

/// Kronecker product a (qubit A) x b (qubit B) in the basis order
/// |00>, |01>, |10>, |11>.
CMat4 tensor2x2(const CMat2& a, const CMat2& b);

namespace pauli {
CMat2 identity();
CMat2 x();
CMat2 y();
CMat2 z();
}  // namespace pauli

}  // namespace xsteer
