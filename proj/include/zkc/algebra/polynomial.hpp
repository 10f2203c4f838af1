// Copyright 2026 The zk-compliance Authors.
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

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "zkc/algebra/fields.hpp"

namespace zkc::algebra {

/// Dense univariate polynomial over F, coefficients lowest degree first.
template <typename F>
using Polynomial = std::vector<F>;

/// Multiplicative subgroup {omega^j} of size n = 2^k used as QAP domain.
template <typename F>
class EvaluationDomain {
 public:
  /// Smallest power-of-two domain of size >= min_size.
  static EvaluationDomain at_least(std::size_t min_size) {
    std::size_t n = 1;
    unsigned log_n = 0;
    while (n < min_size) {
      n <<= 1;
      ++log_n;
    }
    return EvaluationDomain(n, log_n);
  }

  std::size_t size() const { return n_; }
  const F& generator() const { return omega_; }
  F element(std::size_t j) const { return omega_.pow(U256(j)); }

  /// Z(x) = x^n - 1.
  F vanishing_at(const F& x) const { return x.pow(U256(n_)) - F::one(); }

  /// L_j(x) for every j, by the closed form (x^n - 1) omega^j / (n (x - omega^j)).
  /// x must lie outside the domain.
  std::vector<F> lagrange_basis_at(const F& x) const {
    const F z = vanishing_at(x);
    if (z.is_zero()) throw std::invalid_argument("lagrange_basis_at: point inside domain");
    const F n_inv = F::from_u64(n_).inverse();
    std::vector<F> out(n_);
    F w = F::one();
    for (std::size_t j = 0; j < n_; ++j) {
      out[j] = z * w * n_inv * (x - w).inverse();
      w *= omega_;
    }
    return out;
  }

  /// In-place radix-2 NTT: coefficients -> evaluations at omega^j.
  void fft(std::vector<F>& a) const { transform(a, omega_); }

  /// Evaluations at omega^j -> coefficients.
  void ifft(std::vector<F>& a) const {
    transform(a, omega_.inverse());
    const F n_inv = F::from_u64(n_).inverse();
    for (auto& v : a) v *= n_inv;
  }

 private:
  EvaluationDomain(std::size_t n, unsigned log_n) : n_(n), omega_(root_of_unity(log_n)) {}

  // Primitive 2^log_n-th root of unity, derived from a quadratic non-residue.
  static F root_of_unity(unsigned log_n) {
    U256 odd;
    sub_with_borrow(odd, F::kModulus, U256(1));
    unsigned two_adicity = 0;
    while (!odd.bit(0)) {
      div_small(odd, 2);
      ++two_adicity;
    }
    if (log_n > two_adicity) throw std::invalid_argument("domain larger than field two-adicity");
    F g = F::from_u64(2);
    while (g.is_square()) g += F::one();
    F root = g.pow(odd);  // order 2^two_adicity
    for (unsigned i = log_n; i < two_adicity; ++i) root = root.square();
    return root;
  }

  void transform(std::vector<F>& a, const F& root) const {
    if (a.size() != n_) throw std::invalid_argument("fft: length does not match domain");
    for (std::size_t i = 1, j = 0; i < n_; ++i) {
      std::size_t bit = n_ >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n_; len <<= 1) {
      const F step = root.pow(U256(n_ / len));
      for (std::size_t start = 0; start < n_; start += len) {
        F w = F::one();
        for (std::size_t k = 0; k < len / 2; ++k) {
          const F u = a[start + k];
          const F v = a[start + k + len / 2] * w;
          a[start + k] = u + v;
          a[start + k + len / 2] = u - v;
          w *= step;
        }
      }
    }
  }

  std::size_t n_;
  F omega_;
};

template <typename F>
F evaluate(std::span<const F> poly, const F& x) {
  F acc;
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

template <typename F>
Polynomial<F> multiply(std::span<const F> a, std::span<const F> b) {
  if (a.empty() || b.empty()) return {};
  Polynomial<F> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Quotient of p by x^n - 1, or nullopt when the remainder is nonzero.
template <typename F>
std::optional<Polynomial<F>> divide_by_vanishing(Polynomial<F> p, std::size_t n) {
  if (p.size() <= n) {
    for (const auto& c : p) {
      if (!c.is_zero()) return std::nullopt;
    }
    return Polynomial<F>{};
  }
  Polynomial<F> q(p.size() - n);
  for (std::size_t k = p.size(); k-- > n;) {
    q[k - n] = p[k];
    p[k - n] += p[k];
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!p[k].is_zero()) return std::nullopt;
  }
  return q;
}

}  // namespace zkc::algebra
