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

#ifndef VOLRIG_PRIME_FIELD_HPP_
#define VOLRIG_PRIME_FIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "volrig/exact_linalg.hpp"

namespace volrig {

// Residues modulo a prime below 2^63, used by the randomized rank backend.
class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus);

  // Reduces every entry num/den to num * den^{-1} mod p. Throws BadPrimeError
  // if some denominator is divisible by p.
  static PrimeFieldMatrix reduce(const RationalMatrix& m, std::uint64_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::uint64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  PrimeFieldMatrix select_rows(const std::vector<std::size_t>& rows) const;
  std::size_t rank() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> data_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Uniform random prime in [2^61, 2^62).
std::uint64_t random_prime_62(std::mt19937_64& rng);

std::size_t rank_modp(const RationalMatrix& m, std::uint64_t prime);

// Picks a 62-bit prime from `seed`, drawing a fresh one on BadPrimeError.
std::size_t rank_modp_seeded(const RationalMatrix& m, std::uint64_t seed);

}  // namespace volrig

#endif  // VOLRIG_PRIME_FIELD_HPP_
