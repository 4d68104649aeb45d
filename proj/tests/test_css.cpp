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

#include "aqc/css.hpp"

#include <doctest.h>

#include <set>

#include "aqc/address.hpp"
#include "aqc/codes.hpp"

using namespace aqc;

namespace {

void check_css_invariants(const CssCode& c) {
  const FieldPtr& f = c.field;
  // zdual rows orthogonal to g1 and g0.
  for (std::size_t z = 0; z < c.zdual.rows(); ++z) {
    for (std::size_t a = 0; a < c.g1.rows(); ++a)
      CHECK(dot(f, c.zdual.row(z), c.g1.row(a)) == 0);
    for (std::size_t a = 0; a < c.g0.rows(); ++a)
      CHECK(dot(f, c.zdual.row(z), c.g0.row(a)) == 0);
  }
  // g^a . h^b = delta; h orthogonal to g0.
  for (std::size_t a = 0; a < c.k; ++a)
    for (std::size_t b = 0; b < c.k; ++b)
      CHECK(dot(f, c.g1.row(a), c.h.row(b)) == (a == b ? 1u : 0u));
  for (std::size_t b = 0; b < c.k; ++b)
    for (std::size_t a = 0; a < c.g0.rows(); ++a)
      CHECK(dot(f, c.h.row(b), c.g0.row(a)) == 0);
}

}  // namespace

TEST_SUITE_BEGIN("css");

TEST_CASE("trivial code with k = 0") {
  FieldPtr f = field_new(2);
  CssCode c = build_css(Mat::identity(f, 3), 0);
  CHECK(c.k == 0);
  CHECK(c.n == 3);
  CHECK(c.zdual.rows() == 0);
  check_css_invariants(c);
  CHECK_THROWS_AS(quantum_distance_bruteforce(c), InvalidInput);
}

TEST_CASE("RS-derived [[4,1]] code over GF(16)") {
  AddressableRsCode code = build_rs_addressable(4, 2, 1);
  CHECK(code.code.n == 4);
  CHECK(code.code.k == 1);
  CHECK(code.code.d_lower.value == 2);  // min(n-m+1, m-k+1)
  CHECK(code.code.d_lower.provenance == "mds-bound");
  check_css_invariants(code.code);
  std::size_t d = quantum_distance_bruteforce(code.code);
  CHECK(d >= code.code.d_lower.value);
}

TEST_CASE("independence assumption violations are rejected") {
  FieldPtr f = field_new(2);
  // Duplicate row across the G1/G0 boundary.
  Mat bad = Mat::from_rows(f, {{1, 2, 3}, {1, 2, 3}});
  CHECK_THROWS_AS(build_css(bad, 1), InvalidInput);
  // Dependent G1 rows.
  Mat bad2 = Mat::from_rows(f, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
  CHECK_THROWS_AS(build_css(bad2, 2), InvalidInput);
}

TEST_CASE("stabilizer matrices are mutually orthogonal") {
  AddressableRsCode code = build_rs_addressable(8, 3, 2);
  auto [hx, hz] = stabilizer_matrices(code.code);
  for (std::size_t a = 0; a < hx.rows(); ++a)
    for (std::size_t b = 0; b < hz.rows(); ++b)
      CHECK(dot(code.field, hx.row(a), hz.row(b)) == 0);
  // rank(Hx) + rank(Hz) = n - k
  CHECK(rank(hx) + rank(hz) == code.code.n - code.code.k);
}

TEST_CASE("coset enumeration") {
  AddressableRsCode code = build_rs_addressable(4, 2, 1);
  const Field& f = *code.field;

  SUBCASE("size and first element") {
    CosetIter it = enumerate_coset(code.code, {5});
    CHECK(it.size() == 16);  // q^rank(G0), rank 1
    std::vector<Elem> first = it.value();
    std::vector<Elem> expect(code.code.n, 0);
    for (std::size_t c = 0; c < code.code.n; ++c)
      expect[c] = f.mul(5, code.code.g1.at(0, c));
    CHECK(first == expect);
  }

  SUBCASE("cosets of distinct u are disjoint and exhaust q^(k + r) vectors") {
    std::set<std::vector<Elem>> seen;
    for (Elem u = 0; u < f.q(); ++u) {
      std::size_t count = 0;
      for (CosetIter it = enumerate_coset(code.code, {u}); !it.done(); it.advance()) {
        CHECK(seen.insert(it.value()).second);
        ++count;
      }
      CHECK(count == 16);
    }
    CHECK(seen.size() == 256);
  }

  SUBCASE("empty G0 gives a single vector") {
    FieldPtr f2 = field_new(1);
    CssCode tiny = build_css(Mat::from_rows(f2, {{1, 1, 1}}), 1);
    CosetIter it = enumerate_coset(tiny, {0});
    CHECK(it.size() == 1);
    CHECK(it.value() == std::vector<Elem>{0, 0, 0});
  }
}

TEST_CASE("distance of a repetition-like binary toy is 1") {
  FieldPtr f2 = field_new(1);
  // G1 = (1,0,0), G0 = (1,1,1): the X logical can be reduced to weight 1.
  Mat g = Mat::from_rows(f2, {{1, 0, 0}, {1, 1, 1}});
  CssCode c = build_css(g, 1);
  check_css_invariants(c);
  CHECK(quantum_distance_bruteforce(c) == 1);
}

TEST_CASE("budget exceeded reported") {
  AddressableRsCode code = build_rs_addressable(8, 3, 2);
  CHECK_THROWS_AS(quantum_distance_bruteforce(code.code, 16), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_coset(code.code, {0, 0}, 2), BudgetExceeded);
}

TEST_CASE("distance lower bound is sharp on the [[4,1]] toy") {
  AddressableRsCode code = build_rs_addressable(4, 2, 1);
  // d_X >= n - m + 1 = 3 and d_Z >= m - k + 1 = 2; the true distance is 2.
  CHECK(quantum_distance_bruteforce(code.code) == 2);
}

TEST_SUITE_END();
