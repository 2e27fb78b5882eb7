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

#include "volrig/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

#include "volrig/errors.hpp"

namespace volrig {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParameterError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = rows[i][j];
      m(i, j).canonicalize();
    }
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalMatrix RationalMatrix::select_rows(
    std::span<const std::size_t> rows) const {
  RationalMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw ParameterError("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows[i], j);
  }
  return out;
}

RationalMatrix RationalMatrix::select_cols(
    std::span<const std::size_t> cols) const {
  RationalMatrix out(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw ParameterError("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, cols[j]);
  }
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix out = *this;
  for (Rational& q : out.data_) q *= s;
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const Rational& q : data_) {
    if (sgn(q) != 0) return false;
  }
  return true;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw ParameterError("matrix sum: shape mismatch");
  }
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw ParameterError("matrix difference: shape mismatch");
  }
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ParameterError("matmul: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  RationalMatrix c(a.rows(), b.cols());
  Rational tmp;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Rational& x = a(i, l);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(l, j)) == 0) continue;
        tmp = x * b(l, j);
        c(i, j) += tmp;
      }
    }
  }
  return c;
}

BareissResult bareiss_eliminate(const RationalMatrix& m,
                                bool check_exact_division) {
  BareissResult r;
  r.rows = m.rows();
  r.cols = m.cols();
  r.echelon.resize(r.rows * r.cols);
  r.row_scales.resize(r.rows);

  // Clear denominators row by row.
  for (std::size_t i = 0; i < r.rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < r.cols; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    r.row_scales[i] = l;
    for (std::size_t j = 0; j < r.cols; ++j) {
      r.echelon[i * r.cols + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }

  auto at = [&](std::size_t i, std::size_t j) -> Integer& {
    return r.echelon[i * r.cols + j];
  };

  Integer prev = 1;
  Integer t1;
  Integer t2;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r.cols && row < r.rows; ++c) {
    std::size_t p = row;
    while (p < r.rows && sgn(at(p, c)) == 0) ++p;
    if (p == r.rows) continue;
    if (p != row) {
      for (std::size_t j = 0; j < r.cols; ++j) std::swap(at(p, j), at(row, j));
      std::swap(r.row_scales[p], r.row_scales[row]);
      r.swap_sign = -r.swap_sign;
    }
    const Integer& piv = at(row, c);
    for (std::size_t i = row + 1; i < r.rows; ++i) {
      const Integer lead = at(i, c);
      for (std::size_t j = c + 1; j < r.cols; ++j) {
        t1 = piv * at(i, j);
        t2 = lead * at(row, j);
        t1 -= t2;
        if (check_exact_division &&
            !mpz_divisible_p(t1.get_mpz_t(), prev.get_mpz_t())) {
          throw std::logic_error("Bareiss division was not exact");
        }
        mpz_divexact(at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = piv;
    r.pivot_cols.push_back(c);
    ++row;
  }
  return r;
}

std::size_t rank_exact(const RationalMatrix& m) {
  return bareiss_eliminate(m).rank();
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw ParameterError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BareissResult r = bareiss_eliminate(m);
  if (r.rank() < n) return 0;
  Integer scale = 1;
  for (const Integer& s : r.row_scales) scale *= s;
  Rational det(r.at(n - 1, n - 1) * r.swap_sign, scale);
  det.canonicalize();
  return det;
}

std::optional<std::vector<Rational>> solve_least_structure(
    const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw ParameterError("solve: rhs length mismatch");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  // Gauss-Jordan on [A | b].
  RationalMatrix aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols) = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Rational f;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && sgn(aug(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != row) {
      for (std::size_t j = 0; j <= cols; ++j) std::swap(aug(p, j), aug(row, j));
    }
    const Rational inv = 1 / aug(row, c);
    for (std::size_t j = c; j <= cols; ++j) aug(row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || sgn(aug(i, c)) == 0) continue;
      f = aug(i, c);
      for (std::size_t j = c; j <= cols; ++j) aug(i, j) -= f * aug(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i) {
    if (sgn(aug(i, cols)) != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols);
  return x;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw ParseError("not a rational number: \"" + s + "\"");
  }
  q.canonicalize();
  return q;
}

nlohmann::json matrix_to_json(const RationalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (const Rational& q : m.row(i)) r.push_back(rational_to_string(q));
    rows.push_back(std::move(r));
  }
  return rows;
}

RationalMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("matrix JSON must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : doc) {
    if (!r.is_array()) throw ParseError("matrix row must be an array");
    std::vector<Rational> row;
    for (const auto& e : r) {
      if (!e.is_string()) throw ParseError("matrix entry must be a \"num/den\" string");
      row.push_back(rational_from_string(e.get<std::string>()));
    }
    rows.push_back(std::move(row));
  }
  try {
    return RationalMatrix::from_rows(rows);
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace volrig
