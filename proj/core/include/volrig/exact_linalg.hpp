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

#ifndef VOLRIG_EXACT_LINALG_HPP_
#define VOLRIG_EXACT_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace volrig {

using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms. The two-argument mpq_class constructor does not
// canonicalize, and arithmetic on non-canonical values is undefined.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Dense row-major matrix of canonical GMP rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  // Throws ParameterError on ragged input.
  static RationalMatrix from_rows(
      const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  RationalMatrix transpose() const;
  RationalMatrix select_rows(std::span<const std::size_t> rows) const;
  RationalMatrix select_cols(std::span<const std::size_t> cols) const;
  RationalMatrix scaled(const Rational& s) const;
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&);
  friend RationalMatrix operator+(const RationalMatrix&, const RationalMatrix&);
  friend RationalMatrix operator-(const RationalMatrix&, const RationalMatrix&);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Throws ParameterError when a.cols() != b.rows().
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
inline RationalMatrix operator*(const RationalMatrix& a,
                                const RationalMatrix& b) {
  return matmul(a, b);
}

// Fraction-free row echelon form of the integer matrix obtained by clearing
// each row's denominators.
struct BareissResult {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> echelon;  // row-major
  std::vector<std::size_t> pivot_cols;
  std::vector<Integer> row_scales;  // original row i was multiplied by this
  int swap_sign = 1;

  std::size_t rank() const { return pivot_cols.size(); }
  const Integer& at(std::size_t i, std::size_t j) const {
    return echelon[i * cols + j];
  }
};

// Pivot rule: first nonzero entry in column order, rows scanned top-down.
// With `check_exact_division` every Bareiss quotient is verified to be exact
// and a std::logic_error is thrown otherwise.
BareissResult bareiss_eliminate(const RationalMatrix& m,
                                bool check_exact_division = false);

std::size_t rank_exact(const RationalMatrix& m);

// Throws ParameterError for non-square input.
Rational determinant(const RationalMatrix& m);

// Some exact solution of a x = b, or nullopt when the system is inconsistent.
// Free variables are set to zero.
std::optional<std::vector<Rational>> solve_least_structure(
    const RationalMatrix& a, std::span<const Rational> b);

// "num/den" strings, always with an explicit denominator.
std::string rational_to_string(const Rational& q);
// Accepts "num/den" or "num". Throws ParseError.
Rational rational_from_string(const std::string& s);

nlohmann::json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& doc);

}  // namespace volrig

#endif  // VOLRIG_EXACT_LINALG_HPP_
