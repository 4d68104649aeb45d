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

#include <doctest.h>

#include <algorithm>

#include "aqc/verify.hpp"

using namespace aqc;

namespace {

// Independent oracle: Lagrange basis polynomial L_i evaluated at the target.
Elem lagrange_at(const FieldPtr& f, const std::vector<Elem>& pts, std::size_t i,
                 Elem target) {
  Elem num = 1, den = 1;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j == i) continue;
    num = f->mul(num, f->add(target, pts[j]));
    den = f->mul(den, f->add(pts[i], pts[j]));
  }
  return f->mul(num, f->inv(den));
}

Elem poly_eval(const FieldPtr& f, const std::vector<Elem>& coeffs, Elem x) {
  Elem acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = f->add(f->mul(acc, x), *it);
  return acc;
}

std::vector<Elem> distinct_points(const FieldPtr& f, SplitMix64& rng, std::size_t n) {
  std::vector<Elem> all(f->q());
  for (Elem x = 0; x < f->q(); ++x) all[x] = x;
  for (std::size_t i = 0; i < n; ++i)
    std::swap(all[i], all[i + rng.below(all.size() - i)]);
  all.resize(n);
  return all;
}

}  // namespace

TEST_SUITE_BEGIN("codes");

TEST_CASE("rs_generator monomial rows") {
  FieldPtr f = field_new(2);
  Mat g = rs_generator(eval_points(f, {0, 1, 2}), 2);
  CHECK(g == Mat::from_rows(f, {{1, 1, 1}, {0, 1, 2}}));
  Mat ones = rs_generator(eval_points(f, {0, 1, 2}), 1);
  CHECK(ones == Mat::from_rows(f, {{1, 1, 1}}));
}

TEST_CASE("puncture shapes and duplicate rejection") {
  FieldPtr f = field_new(1);
  Mat id = Mat::identity(f, 3);
  Mat p = puncture(id, {1});
  CHECK(p.rows() == 3);
  CHECK(p.cols() == 2);
  CHECK_THROWS_AS(puncture(id, {0, 0}), InvalidInput);
}

TEST_CASE("shorten of dual equals dual of puncture") {
  SplitMix64 rng(23);
  for (unsigned t : {2u, 3u}) {
    FieldPtr f = field_new(t);
    for (int trial = 0; trial < 10; ++trial) {
      Mat m(f, 3, 6);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 6; ++c) m.at(r, c) = static_cast<Elem>(rng.below(f->q()));
      std::vector<std::size_t> T{0, 2};
      Mat lhs = shorten(nullspace(m), T);  // shr_T(C-perp) for C = rowspace(m)
      RrefResult rr = rref(m);
      Mat basis(f, rr.rank, 6);
      for (std::size_t i = 0; i < rr.rank; ++i) basis.set_row(i, rr.mat.row(i));
      Mat rhs = nullspace(puncture(basis, T));  // (punc_T C)-perp
      CHECK(same_row_space(lhs, rhs));
    }
  }
}

TEST_CASE("RS shortened dimension example") {
  // RS(N=4, m=2) over GF(4) shortened on one coordinate has dimension 1.
  FieldPtr f = field_new(2);
  Mat g = rs_generator(eval_points(f, {0, 1, 2, 3}), 2);
  Mat s = shorten(g, {0});
  CHECK(rank(s) == 1);
}

TEST_CASE("grs_dual_coeffs frozen GF(4) example") {
  FieldPtr f = field_new(2);
  // pts (0, 1, w): nu = (w^2, w, 1), normalized so the last entry is 1.
  auto nu = grs_dual_coeffs(eval_points(f, {0, 1, 2}));
  CHECK(nu == std::vector<Elem>{3, 2, 1});
}

TEST_CASE("grs_dual_coeffs over the full field is all-ones") {
  for (unsigned t : {2u, 3u, 4u}) {
    FieldPtr f = field_new(t);
    std::vector<Elem> pts(f->q());
    for (Elem x = 0; x < f->q(); ++x) pts[x] = x;
    auto nu = grs_dual_coeffs(eval_points(f, pts));
    CHECK(nu == std::vector<Elem>(f->q(), 1));
  }
}

TEST_CASE("grs_dual_coeffs annihilates random low-degree polynomials") {
  FieldPtr f = field_new(4);
  SplitMix64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 3 + rng.below(8);
    auto pts = distinct_points(f, rng, n);
    auto nu = grs_dual_coeffs(eval_points(f, pts));
    for (Elem x : nu) CHECK(x != 0);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<Elem> coeffs(n - 1);
      for (auto& c : coeffs) c = static_cast<Elem>(rng.below(f->q()));
      Elem acc = 0;
      for (std::size_t i = 0; i < n; ++i)
        acc = f->add(acc, f->mul(nu[i], poly_eval(f, coeffs, pts[i])));
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("interpolation_vector frozen GF(4) example") {
  FieldPtr f = field_new(2);
  // pts (0,1), target w: f(w) = w^2 f(0) + w f(1) for linear f.
  auto gamma = interpolation_vector(eval_points(f, {0, 1}), 2);
  CHECK(gamma == std::vector<Elem>{3, 2});
  CHECK_THROWS_AS(interpolation_vector(eval_points(f, {0, 1}), 1), InvalidInput);
}

TEST_CASE("interpolation_vector matches the Lagrange oracle") {
  SplitMix64 rng(47);
  for (unsigned t : {3u, 4u, 6u}) {
    FieldPtr f = field_new(t);
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t n = 2 + rng.below(7);
      auto pts = distinct_points(f, rng, n + 1);
      Elem target = pts.back();
      pts.pop_back();
      auto gamma = interpolation_vector(eval_points(f, pts), target);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(gamma[i] == lagrange_at(f, pts, i, target));
    }
  }
}

TEST_CASE("interpolation_vector reproduces every monomial below degree n") {
  FieldPtr f = field_new(4);
  std::vector<Elem> pts{1, 3, 7, 9, 12};
  Elem target = 5;
  auto gamma = interpolation_vector(eval_points(f, pts), target);
  for (std::size_t d = 0; d < pts.size(); ++d) {
    Elem lhs = f->pow(target, d);
    Elem rhs = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      rhs = f->add(rhs, f->mul(gamma[i], f->pow(pts[i], d)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("partially_systematic on the RS(3,2) example") {
  FieldPtr f = field_new(2);
  Mat g = rs_generator(eval_points(f, {0, 1, 2}), 2);
  auto [g1, g0] = partially_systematic(g, 1);
  CHECK(g1 == Mat::from_rows(f, {{1, 1}}));
  CHECK(g0 == Mat::from_rows(f, {{1, 2}}));
  // Already-systematic input is unchanged.
  Mat pre = Mat::from_rows(f, {{1, 0, 2, 3}, {0, 1, 1, 1}});
  auto [p1, p0] = partially_systematic(pre, 2);
  CHECK(p1 == Mat::from_rows(f, {{2, 3}, {1, 1}}));
  CHECK(p0.rows() == 0);
  // Rank-deficient first columns error.
  Mat bad = Mat::from_rows(f, {{0, 1, 1}, {0, 2, 3}});
  CHECK_THROWS_AS(partially_systematic(bad, 1), InvalidInput);
}

TEST_CASE("min_weight_bruteforce basics") {
  FieldPtr f = field_new(2);
  CHECK(min_weight_bruteforce(Mat::identity(f, 3), 1 << 10) == 1);
  Mat g = rs_generator(eval_points(f, {0, 1, 2}), 2);
  CHECK(min_weight_bruteforce(g, 1 << 10) == 2);  // N - m + 1
  CHECK_THROWS_AS(min_weight_bruteforce(Mat::identity(f, 12), 1 << 4), BudgetExceeded);
}

TEST_CASE("GRS distance equals N-m+1 on random small instances") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    unsigned t = 2 + static_cast<unsigned>(rng.below(3));
    FieldPtr f = field_new(t);
    std::size_t n = 3 + rng.below(std::min<std::uint64_t>(f->q() - 3, 5));
    std::size_t m = 1 + rng.below(n - 1);
    auto pts = distinct_points(f, rng, n);
    Mat g = rs_generator(eval_points(f, pts), m);
    CHECK(min_weight_bruteforce(g, 1 << 20) == n - m + 1);
  }
}

TEST_CASE("MDS spot check: square column submatrices of RS are invertible") {
  FieldPtr f = field_new(4);
  SplitMix64 rng(3);
  Mat g = rs_generator(eval_points(f, {0, 1, 2, 3, 4, 5, 6, 7}), 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> cols;
    while (cols.size() < 3) {
      std::size_t c = rng.below(8);
      if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
    }
    Mat sub(f, 3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) sub.at(r, c) = g.at(r, cols[c]);
    CHECK(rank(sub) == 3);
  }
}

TEST_SUITE_END();
