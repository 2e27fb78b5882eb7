// Copyright 2026 The Authors.
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

#include "volrig/prime_field.hpp"

#include <utility>

#include "volrig/errors.hpp"

namespace volrig {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  return pow_mod(a, m - 2, m);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime_62(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1ull << 61,
                                                    (1ull << 62) - 1);
  while (true) {
    const std::uint64_t c = dist(rng) | 1ull;
    if (is_prime_u64(c)) return c;
  }
}

PrimeFieldMatrix::PrimeFieldMatrix(std::size_t rows, std::size_t cols,
                                   std::uint64_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
  if (modulus < 2 || modulus >= (1ull << 63)) {
    throw ParameterError("modulus must be a prime in [2, 2^63)");
  }
}

PrimeFieldMatrix PrimeFieldMatrix::reduce(const RationalMatrix& m,
                                          std::uint64_t p) {
  PrimeFieldMatrix out(m.rows(), m.cols(), p);
  const unsigned long pu = static_cast<unsigned long>(p);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (sgn(q) == 0) continue;
      const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), pu);
      const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), pu);
      if (den == 0) {
        throw BadPrimeError("denominator divisible by " + std::to_string(p));
      }
      out(i, j) = mul_mod(num, inv_mod(den, p), p);
    }
  }
  return out;
}

PrimeFieldMatrix PrimeFieldMatrix::select_rows(
    const std::vector<std::size_t>& rows) const {
  PrimeFieldMatrix out(rows.size(), cols_, modulus_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw ParameterError("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
  }
  return out;
}

std::size_t PrimeFieldMatrix::rank() const {
  std::vector<std::uint64_t> a = data_;
  const std::uint64_t p = modulus_;
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& {
    return a[i * cols_ + j];
  };
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
    std::size_t piv = row;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != row) {
      for (std::size_t j = c; j < cols_; ++j) std::swap(at(piv, j), at(row, j));
    }
    const std::uint64_t inv = inv_mod(at(row, c), p);
    for (std::size_t i = row + 1; i < rows_; ++i) {
      if (at(i, c) == 0) continue;
      const std::uint64_t f = mul_mod(at(i, c), inv, p);
      for (std::size_t j = c; j < cols_; ++j) {
        const std::uint64_t sub = mul_mod(f, at(row, j), p);
        std::uint64_t& x = at(i, j);
        x = x >= sub ? x - sub : x + (p - sub);
      }
    }
    ++row;
  }
  return row;
}

std::size_t rank_modp(const RationalMatrix& m, std::uint64_t prime) {
  return PrimeFieldMatrix::reduce(m, prime).rank();
}

std::size_t rank_modp_seeded(const RationalMatrix& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    try {
      return rank_modp(m, random_prime_62(rng));
    } catch (const BadPrimeError&) {
      // draw another prime
    }
  }
}

}  // namespace volrig
