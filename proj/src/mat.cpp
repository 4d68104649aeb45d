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

#include "aqc/mat.hpp"

#include <algorithm>
#include <utility>

namespace aqc {

Mat::Mat(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(data)) {
  if (a_.size() != rows_ * cols_) throw InvalidInput("matrix data size mismatch");
  for (Elem x : a_) {
    if (x >= f_->q()) throw InvalidInput("matrix entry outside field");
  }
}

std::vector<Elem> Mat::row(std::size_t r) const {
  return std::vector<Elem>(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                           a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Mat::set_row(std::size_t r, const std::vector<Elem>& v) {
  if (v.size() != cols_) throw InvalidInput("row length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

Mat Mat::transposed() const {
  Mat out(f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

Mat Mat::vstack(const Mat& below) const {
  if (below.cols_ != cols_) throw InvalidInput("vstack column mismatch");
  Mat out(f_, rows_ + below.rows_, cols_);
  std::copy(a_.begin(), a_.end(), out.a_.begin());
  std::copy(below.a_.begin(), below.a_.end(),
            out.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
  return out;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat Mat::identity(const FieldPtr& f, std::size_t n) {
  Mat out(f, n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

Mat Mat::from_rows(const FieldPtr& f, const std::vector<std::vector<Elem>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Mat out(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) out.set_row(r, rows[r]);
  return out;
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, 0, {}};
  Mat& a = res.mat;
  const Field& f = *m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && a.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(a.at(r, j), a.at(pivot, j));
    Elem scale = f.inv(a.at(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Elem factor = a.at(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        a.at(i, j) = f.add(a.at(i, j), f.mul(factor, a.at(r, j)));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product shape mismatch");
  const Field& f = *a.field();
  Mat out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Elem v = a.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(v, b.at(k, j)));
    }
  return out;
}

std::vector<Elem> row_vec_mul(const FieldPtr& f, const std::vector<Elem>& v, const Mat& m) {
  if (v.size() != m.rows()) throw InvalidInput("row-vector product shape mismatch");
  std::vector<Elem> out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[c] = f->add(out[c], f->mul(v[r], m.at(r, c)));
  }
  return out;
}

std::vector<Elem> mat_vec_mul(const Mat& m, const std::vector<Elem>& v) {
  if (v.size() != m.cols()) throw InvalidInput("matrix-vector product shape mismatch");
  const Field& f = *m.field();
  std::vector<Elem> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m.at(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

Elem dot(const FieldPtr& f, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  if (a.size() != b.size()) throw InvalidInput("dot product length mismatch");
  Elem acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f->add(acc, f->mul(a[i], b[i]));
  return acc;
}

Mat nullspace(const Mat& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<Elem> v(m.cols(), 0);
    v[c] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      // pivot variable = -(free column entry); char 2 absorbs the sign
      v[r.pivots[i]] = r.mat.at(i, c);
    }
    basis.push_back(std::move(v));
  }
  Mat out(m.field(), basis.size(), m.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) out.set_row(i, basis[i]);
  return out;
}

bool same_row_space(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) return false;
  RrefResult ra = rref(a);
  RrefResult rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (std::size_t i = 0; i < ra.rank; ++i)
    if (ra.mat.row(i) != rb.mat.row(i)) return false;
  return true;
}

std::optional<std::vector<Elem>> solve_lex_min(const Mat& m, const std::vector<Elem>& b) {
  if (b.size() != m.rows()) throw InvalidInput("solve shape mismatch");
  const Field& f = *m.field();
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  RrefResult ra = rref(aug);
  // Inconsistent iff some pivot lands in the augmented column.
  for (std::size_t p : ra.pivots)
    if (p == m.cols()) return std::nullopt;
  std::vector<Elem> x(m.cols(), 0);
  for (std::size_t i = 0; i < ra.rank; ++i) x[ra.pivots[i]] = ra.mat.at(i, m.cols());
  // Particular solution with all free variables zero. Reducing by the
  // nullspace rref rows zeroes their pivot coordinates, which is the
  // lexicographically-smallest coset element.
  Mat ns = nullspace(m);
  RrefResult rns = rref(ns);
  for (std::size_t i = 0; i < rns.rank; ++i) {
    Elem coeff = x[rns.pivots[i]];
    if (coeff == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      x[c] = f.add(x[c], f.mul(coeff, rns.mat.at(i, c)));
  }
  return x;
}

}  // namespace aqc
