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

#include "aqc/ortho.hpp"

#include <doctest.h>

#include "aqc/verify.hpp"

using namespace aqc;

namespace {

OrthoWitness plain_witness(unsigned ell, std::vector<Elem> gamma, std::vector<Elem> tau) {
  OrthoWitness w;
  w.kind = OrthoKind::plain;
  w.ell = ell;
  w.gamma = {std::move(gamma)};
  w.tau = std::move(tau);
  return w;
}

// Direct restatement of the Bravyi-Haah parity conditions.
bool bravyi_haah_oracle(const Mat& g, std::size_t k) {
  auto overlap = [&](std::vector<std::size_t> rows) {
    std::size_t s = 0;
    for (std::size_t c = 0; c < g.cols(); ++c) {
      unsigned prod = 1;
      for (std::size_t r : rows) prod &= g.at(r, c);
      s += prod;
    }
    return s;
  };
  for (std::size_t a = 0; a < g.rows(); ++a) {
    bool odd = overlap({a}) % 2 == 1;
    if (odd != (a < k)) return false;
  }
  for (std::size_t a = 0; a < g.rows(); ++a)
    for (std::size_t b = a + 1; b < g.rows(); ++b)
      if (overlap({a, b}) % 2 != 0) return false;
  for (std::size_t a = 0; a < g.rows(); ++a)
    for (std::size_t b = a + 1; b < g.rows(); ++b)
      for (std::size_t c = b + 1; c < g.rows(); ++c)
        if (overlap({a, b, c}) % 2 != 0) return false;
  return true;
}

Mat random_binary_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  Mat m(field_new(1), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<Elem>(rng.below(2));
  return m;
}

Mat rm15_full() {
  FieldPtr f2 = field_new(1);
  Mat rm(f2, 6, 32);
  for (std::size_t p = 0; p < 32; ++p) {
    rm.at(0, p) = 1;
    for (unsigned i = 0; i < 5; ++i) rm.at(1 + i, p) = (p >> i) & 1;
  }
  return rm;
}

}  // namespace

TEST_SUITE_BEGIN("ortho");

TEST_CASE("single-entry matrix is plain ell-orthogonal for every ell") {
  FieldPtr f2 = field_new(1);
  Mat g = Mat::from_rows(f2, {{1}});
  for (unsigned ell = 1; ell <= 5; ++ell)
    CHECK(check_orthogonality(g, 1, plain_witness(ell, {1}, {1})).ok);
}

TEST_CASE("Bravyi-Haah coincidence against the parity oracle") {
  SplitMix64 rng(7);
  FieldPtr f2 = field_new(1);
  int agreements = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Mat g = random_binary_matrix(rng, 4, 8);
    std::size_t k = 1 + rng.below(3);
    bool pred =
        check_orthogonality(g, k, plain_witness(3, std::vector<Elem>(8, 1),
                                                std::vector<Elem>(k, 1)))
            .ok;
    CHECK(pred == bravyi_haah_oracle(g, k));
    agreements += pred;
  }
  // A hand-made passing instance so the equivalence is not vacuous.
  Mat good = Mat::from_rows(f2, {{1, 1, 1}, {0, 1, 1}});
  CHECK(bravyi_haah_oracle(good, 1));
  CHECK(check_orthogonality(good, 1, plain_witness(3, {1, 1, 1}, {1})).ok);
}

TEST_CASE("counterexample is the lexicographically-first violating tuple") {
  FieldPtr f2 = field_new(1);
  // Row 0 has even weight, so (0,0,0) already violates tau_0 = 1.
  Mat g = Mat::from_rows(f2, {{1, 1}, {1, 0}});
  OrthoCheck c = check_orthogonality(g, 2, plain_witness(3, {1, 1}, {1, 1}));
  REQUIRE_FALSE(c.ok);
  CHECK(c.counterexample->tuple == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("rs_addressable_matrix passes its own predicate") {
  FieldPtr f = field_new(6);
  auto [g, w] = rs_addressable_matrix(f, 10, 3, 2, 3);
  CHECK(w.kind == OrthoKind::addressable_strong);
  CHECK(check_orthogonality(g, 2, w).ok);

  // The summed Gamma gives the non-addressable strong witness.
  OrthoWitness strong = gamma_from_addressable(f, w);
  CHECK(strong.kind == OrthoKind::strong);
  CHECK(check_orthogonality(g, 2, strong).ok);
}

TEST_CASE("rs_addressable_matrix bounds") {
  // N=5, m=2, k=1, ell-bar=3: n = 4 and 3*(m-1) = 3 < 4, so the bound
  // m < 1 + n/ell-bar holds (real arithmetic) and the build succeeds.
  auto [g, w] = rs_addressable_matrix(field_new(4), 5, 2, 1, 3);
  CHECK(check_orthogonality(g, 1, w).ok);
  // One point fewer genuinely violates the bound.
  CHECK_THROWS_AS(rs_addressable_matrix(field_new(4), 4, 2, 1, 3), InvalidInput);
  CHECK_THROWS_AS(rs_addressable_matrix(field_new(4), 20, 3, 2, 3), InvalidInput);  // q < N
  CHECK_THROWS_AS(rs_addressable_matrix(field_new(6), 10, 3, 4, 3), InvalidInput);  // k > m
}

TEST_CASE("independence assumption holds on constructed witnesses") {
  // Plain ell-orthogonality (ell >= 2) forces rank G = rank G0 + k.
  FieldPtr f = field_new(6);
  auto [g, w] = rs_addressable_matrix(f, 12, 3, 2, 3);
  Mat g0(f, g.rows() - 2, g.cols());
  for (std::size_t r = 2; r < g.rows(); ++r) g0.set_row(r - 2, g.row(r));
  CHECK(rank(g) == rank(g0) + 2);
}

TEST_CASE("addressable round trip: summed then product witnesses") {
  FieldPtr f = field_new(6);
  auto [g, w] = rs_addressable_matrix(f, 12, 3, 2, 4);
  // addressable strong 4 -> strong 4 -> addressable strong 3
  OrthoWitness strong = gamma_from_addressable(f, w);
  CHECK(check_orthogonality(g, 2, strong).ok);
  OrthoWitness addr3 = addressable_from_ortho(g, 2, strong, 3);
  CHECK(addr3.kind == OrthoKind::addressable_strong);
  CHECK(addr3.ell == 3);
  CHECK(check_orthogonality(g, 2, addr3).ok);
  // plain ell-bar -> addressable ell < ell-bar
  OrthoWitness plain = strong;
  plain.kind = OrthoKind::plain;
  OrthoWitness addr2 = addressable_from_ortho(g, 2, plain, 2);
  CHECK(check_orthogonality(g, 2, addr2).ok);
  CHECK_THROWS_AS(addressable_from_ortho(g, 2, plain, 4), InvalidInput);
}

TEST_CASE("multiplication property of Reed-Solomon codes") {
  FieldPtr f = field_new(4);
  std::vector<Elem> pts{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  Mat c = rs_generator(eval_points(f, pts), 3);
  auto nu = grs_dual_coeffs(eval_points(f, pts));
  // deg products: 3 * (m-1) = 6 < N - 1 = 9
  CHECK(check_multiplication_property(c, 3, nu, true).ok);
  // Zero code passes vacuously.
  Mat z(f, 0, 10);
  CHECK(check_multiplication_property(z, 3, nu, true).ok);
}

TEST_CASE("all-ones vector upgrades plain to strong multiplication") {
  // Remark: if C contains 1^N, plain ell-mult implies strong ell-mult.
  SplitMix64 rng(13);
  FieldPtr f = field_new(3);
  for (int trial = 0; trial < 40; ++trial) {
    Mat c(f, 3, 6);
    for (std::size_t j = 0; j < 6; ++j) c.at(0, j) = 1;
    for (std::size_t r = 1; r < 3; ++r)
      for (std::size_t j = 0; j < 6; ++j) c.at(r, j) = static_cast<Elem>(rng.below(f->q()));
    std::vector<Elem> sigma(6);
    for (auto& s : sigma) s = static_cast<Elem>(rng.below(f->q()));
    if (check_multiplication_property(c, 3, sigma, false).ok)
      CHECK(check_multiplication_property(c, 3, sigma, true).ok);
  }
}

TEST_CASE("basis-tuple check equals the all-codeword definition on tiny codes") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    unsigned t = 1 + static_cast<unsigned>(rng.below(2));
    FieldPtr f = field_new(t);
    std::size_t dim = 2 + rng.below(2);
    Mat c(f, dim, 5);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t j = 0; j < 5; ++j) c.at(r, j) = static_cast<Elem>(rng.below(f->q()));
    std::vector<Elem> sigma(5);
    for (auto& s : sigma) s = static_cast<Elem>(rng.below(f->q()));
    unsigned ell = 2 + static_cast<unsigned>(rng.below(2));

    bool basis_ok = check_multiplication_property(c, ell, sigma, false).ok;

    // Oracle: enumerate every tuple of codewords directly.
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= f->q();
    std::vector<std::vector<Elem>> words;
    for (std::uint64_t enc = 0; enc < total; ++enc) {
      std::vector<Elem> word(5, 0);
      std::uint64_t e = enc;
      for (std::size_t r = 0; r < dim; ++r, e /= f->q()) {
        Elem coeff = static_cast<Elem>(e % f->q());
        for (std::size_t j = 0; j < 5; ++j)
          word[j] = f->add(word[j], f->mul(coeff, c.at(r, j)));
      }
      words.push_back(std::move(word));
    }
    bool all_ok = true;
    std::vector<std::size_t> idx(ell, 0);
    while (all_ok) {
      Elem acc = 0;
      for (std::size_t j = 0; j < 5; ++j) {
        Elem prod = sigma[j];
        for (std::size_t p = 0; p < ell; ++p) prod = f->mul(prod, words[idx[p]][j]);
        acc = f->add(acc, prod);
      }
      if (acc != 0) all_ok = false;
      std::size_t d = 0;
      while (d < ell && ++idx[d] == words.size()) idx[d++] = 0;
      if (d == ell) break;
    }
    CHECK(basis_ok == all_ok);
  }
}

TEST_CASE("mult_to_ortho on RS and on RM(1,5)") {
  // RS over GF(64): N=10, m=3, k=2, ell-bar=3.
  FieldPtr f = field_new(6);
  std::vector<Elem> pts{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  Mat c = rs_generator(eval_points(f, pts), 3);
  auto nu = grs_dual_coeffs(eval_points(f, pts));
  auto [g, w] = mult_to_ortho(c, 2, nu, 3, true);
  CHECK(check_orthogonality(g, 2, w).ok);

  // RM(1,5) full evaluation, sigma all-ones, ell-bar = 4.
  Mat rm = rm15_full();
  std::vector<Elem> ones(32, 1);
  CHECK(check_multiplication_property(rm, 4, ones, true).ok);
  auto [gb, wb] = mult_to_ortho(rm, 1, ones, 4, true);
  CHECK(check_orthogonality(gb, 1, wb).ok);

  // k = 0: no marked rows, empty tau.
  auto [g0, w0] = mult_to_ortho(c, 0, nu, 3, true);
  CHECK(w0.tau.empty());
  CHECK(check_orthogonality(g0, 0, w0).ok);
}

TEST_CASE("larger instance: GF(128) N=71 m=10 k=7 ell-bar=7") {
  FieldPtr f = field_new(7);
  auto [g, w] = rs_addressable_matrix(f, 71, 10, 7, 7);
  CHECK(g.rows() == 10);
  CHECK(g.cols() == 64);
  CHECK(check_orthogonality(g, 7, w).ok);
}

TEST_CASE("addressable witness with k = 0 passes vacuously") {
  FieldPtr f = field_new(2);
  Mat g = Mat::from_rows(f, {{1, 2, 3}});
  OrthoWitness w;
  w.kind = OrthoKind::addressable;
  w.ell = 3;
  CHECK(check_orthogonality(g, 0, w).ok);
  CHECK_THROWS_AS(gamma_from_addressable(f, w), InvalidInput);
}

TEST_CASE("corrupted gamma is caught") {
  FieldPtr f = field_new(6);
  auto [g, w] = rs_addressable_matrix(f, 10, 3, 2, 3);
  w.gamma[1][4] ^= 1;
  OrthoCheck c = check_orthogonality(g, 2, w);
  CHECK_FALSE(c.ok);
  CHECK(c.counterexample.has_value());
}

TEST_SUITE_END();
