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

#include "aqc/codes.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace aqc {

EvalPoints eval_points(const FieldPtr& f, std::vector<Elem> pts) {
  std::set<Elem> seen;
  for (Elem p : pts) {
    if (p >= f->q()) throw InvalidInput("evaluation point outside field");
    if (!seen.insert(p).second) throw InvalidInput("evaluation points must be distinct");
  }
  return EvalPoints{f, std::move(pts)};
}

Mat rs_generator(const EvalPoints& pts, std::size_t m) {
  std::size_t n = pts.points.size();
  if (m == 0 || m >= n) throw InvalidInput("Reed-Solomon dimension must satisfy 0 < m < N");
  const Field& f = *pts.field;
  Mat g(pts.field, m, n);
  for (std::size_t j = 0; j < n; ++j) {
    Elem p = 1;
    for (std::size_t a = 0; a < m; ++a) {
      g.at(a, j) = p;
      p = f.mul(p, pts.points[j]);
    }
  }
  return g;
}

namespace {

std::vector<std::size_t> validate_index_set(const Mat& m, const std::vector<std::size_t>& T) {
  std::vector<std::size_t> t = T;
  std::sort(t.begin(), t.end());
  if (std::adjacent_find(t.begin(), t.end()) != t.end())
    throw InvalidInput("index set contains duplicates");
  if (!t.empty() && t.back() >= m.cols()) throw InvalidInput("index out of range");
  return t;
}

}  // namespace

Mat puncture(const Mat& m, const std::vector<std::size_t>& T) {
  std::vector<std::size_t> t = validate_index_set(m, T);
  std::vector<bool> drop(m.cols(), false);
  for (std::size_t c : t) drop[c] = true;
  Mat out(m.field(), m.rows(), m.cols() - t.size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t j = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!drop[c]) out.at(r, j++) = m.at(r, c);
  }
  return out;
}

Mat shorten(const Mat& m, const std::vector<std::size_t>& T) {
  std::vector<std::size_t> t = validate_index_set(m, T);
  // Row basis first, then the coefficient vectors x with (xG)|_T = 0.
  RrefResult rr = rref(m);
  Mat basis(m.field(), rr.rank, m.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) basis.set_row(i, rr.mat.row(i));
  Mat restr(m.field(), rr.rank, t.size());
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t j = 0; j < t.size(); ++j) restr.at(i, j) = basis.at(i, t[j]);
  Mat coeffs = nullspace(restr.transposed());
  return puncture(mat_mul(coeffs, basis), t);
}

std::vector<Elem> grs_dual_coeffs(const EvalPoints& pts) {
  std::size_t n = pts.points.size();
  if (n < 2) throw InvalidInput("need at least two evaluation points");
  // Homogeneous system sum_i nu_i pts_i^j = 0, j = 0..N-2. The solution
  // space is one-dimensional for distinct points.
  Mat vand = rs_generator(pts, n - 1);
  Mat ns = nullspace(vand);
  if (ns.rows() != 1) throw InvalidInput("degenerate Vandermonde system");
  std::vector<Elem> nu = ns.row(0);
  const Field& f = *pts.field;
  Elem last = nu.back();
  if (last == 0) throw InvalidInput("dual coefficient vanished");
  Elem scale = f.inv(last);
  for (Elem& x : nu) x = f.mul(x, scale);
  for (Elem x : nu)
    if (x == 0) throw InvalidInput("dual coefficient vanished");
  return nu;
}

std::vector<Elem> interpolation_vector(const EvalPoints& pts, Elem target) {
  for (Elem p : pts.points)
    if (p == target) throw InvalidInput("interpolation target collides with a point");
  std::vector<Elem> all;
  all.reserve(pts.points.size() + 1);
  all.push_back(target);
  all.insert(all.end(), pts.points.begin(), pts.points.end());
  std::vector<Elem> nu = grs_dual_coeffs(eval_points(pts.field, std::move(all)));
  const Field& f = *pts.field;
  Elem scale = f.inv(nu[0]);
  std::vector<Elem> gamma(nu.begin() + 1, nu.end());
  for (Elem& x : gamma) x = f.mul(x, scale);
  return gamma;
}

std::pair<Mat, Mat> partially_systematic(const Mat& m, std::size_t k) {
  if (k > m.rows() || k > m.cols()) throw InvalidInput("k exceeds matrix dimensions");
  const Field& f = *m.field();
  Mat a = m;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < a.rows() && a.at(pivot, c) == 0) ++pivot;
    if (pivot == a.rows())
      throw InvalidInput("first " + std::to_string(k) + " columns are rank-deficient");
    if (pivot != c)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(c, j), a.at(pivot, j));
    Elem scale = f.inv(a.at(c, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(c, j) = f.mul(a.at(c, j), scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      Elem factor = a.at(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.at(i, j) = f.add(a.at(i, j), f.mul(factor, a.at(c, j)));
    }
  }
  std::size_t n = a.cols() - k;
  Mat g1(m.field(), k, n);
  Mat g0(m.field(), a.rows() - k, n);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      if (r < k)
        g1.at(r, j) = a.at(r, k + j);
      else
        g0.at(r - k, j) = a.at(r, k + j);
    }
  return {g1, g0};
}

std::size_t min_weight_bruteforce(const Mat& m, std::uint64_t budget) {
  RrefResult rr = rref(m);
  if (rr.rank == 0) return 0;
  const Field& f = *m.field();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rr.rank; ++i) {
    total *= f.q();
    if (total > budget)
      throw BudgetExceeded("codeword enumeration q^" + std::to_string(rr.rank) +
                           " exceeds budget " + std::to_string(budget));
  }
  std::size_t best = m.cols() + 1;
  std::vector<Elem> word(m.cols(), 0);
  std::vector<Elem> coeff(rr.rank, 0);
  // Plain lexicographic counter over coefficient vectors; each step updates
  // the running codeword by the digit delta.
  for (std::uint64_t it = 1; it < total; ++it) {
    std::size_t d = 0;
    while (true) {
      Elem before = coeff[d];
      coeff[d] = (coeff[d] + 1) % f.q();
      Elem delta = f.add(before, coeff[d]);
      for (std::size_t c = 0; c < m.cols(); ++c)
        word[c] = f.add(word[c], f.mul(delta, rr.mat.at(d, c)));
      if (coeff[d] != 0) break;
      ++d;
    }
    std::size_t w = 0;
    for (Elem x : word) w += (x != 0);
    best = std::min(best, w);
  }
  return best;
}

}  // namespace aqc
