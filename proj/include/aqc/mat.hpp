// Copyright 2026 The aqc developers
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

#ifndef AQC_MAT_HPP
#define AQC_MAT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "aqc/gf.hpp"

namespace aqc {

/// Dense row-major matrix over GF(2^t). Desk-scale sizes only (n <= 2^12),
/// so no sparse structure.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(FieldPtr f, std::size_t rows, std::size_t cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  Mat(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  const FieldPtr& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<Elem> row(std::size_t r) const;
  void set_row(std::size_t r, const std::vector<Elem>& v);

  Mat transposed() const;
  Mat vstack(const Mat& below) const;
  bool operator==(const Mat& o) const;

  static Mat identity(const FieldPtr& f, std::size_t n);
  static Mat from_rows(const FieldPtr& f, const std::vector<std::vector<Elem>>& rows);

 private:
  FieldPtr f_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

struct RrefResult {
  Mat mat;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form (deterministic: first nonzero pivot top-down).
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

Mat mat_mul(const Mat& a, const Mat& b);

/// v * m for a row vector v.
std::vector<Elem> row_vec_mul(const FieldPtr& f, const std::vector<Elem>& v, const Mat& m);

/// m * v for a column vector v.
std::vector<Elem> mat_vec_mul(const Mat& m, const std::vector<Elem>& v);

Elem dot(const FieldPtr& f, const std::vector<Elem>& a, const std::vector<Elem>& b);

/// Basis of {x : m x = 0}, rows in canonical (rref-derived) form.
Mat nullspace(const Mat& m);

/// Two matrices span the same row space.
bool same_row_space(const Mat& a, const Mat& b);

/// Lexicographically-smallest x with m x = b, or nullopt if inconsistent.
/// "Smallest" compares the entry sequence (x_1, x_2, ...) left to right.
std::optional<std::vector<Elem>> solve_lex_min(const Mat& m, const std::vector<Elem>& b);

}  // namespace aqc

#endif  // AQC_MAT_HPP
