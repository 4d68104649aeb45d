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

#include "aqc/gf.hpp"

#include <doctest.h>

#include <set>

using namespace aqc;

TEST_SUITE_BEGIN("gf");

TEST_CASE("smallest irreducible polynomials") {
  CHECK(field_new(1)->irred_bits() == 0b10);
  CHECK(field_new(2)->irred_bits() == 0b111);
  CHECK(field_new(4)->irred_bits() == 0b10011);
}

TEST_CASE("GF(4) multiplication table") {
  FieldPtr f = field_new(2);
  // omega = 2, omega^2 = 3 under x^2 + x + 1
  CHECK(f->mul(2, 2) == 3);
  CHECK(f->mul(2, 3) == 1);
  CHECK(f->mul(3, 3) == 2);
  for (Elem a = 0; a < 4; ++a) CHECK(f->mul(a, 0) == 0);
}

TEST_CASE("inverse and pow") {
  FieldPtr f = field_new(4);
  for (Elem a = 1; a < f->q(); ++a) {
    CHECK(f->mul(a, f->inv(a)) == 1);
    CHECK(f->pow(a, f->q() - 1) == 1);
  }
  CHECK(f->pow(0, 0) == 1);
  CHECK(f->pow(0, 5) == 0);
  CHECK_THROWS_AS(f->inv(0), InvalidInput);
}

TEST_CASE("trace values in GF(4)") {
  FieldPtr f = field_new(2);
  CHECK(f->trace(0) == 0);
  CHECK(f->trace(1) == 0);  // 1 + 1^2 = 0
  CHECK(f->trace(2) == 1);  // omega + omega^2 = 1
  CHECK(f->trace(3) == 1);
}

TEST_CASE("trace linearity and Frobenius invariance, exhaustive t <= 8") {
  for (unsigned t = 1; t <= 8; ++t) {
    FieldPtr f = field_new(t);
    for (Elem x = 0; x < f->q(); ++x) {
      CHECK(f->trace(f->mul(x, x)) == f->trace(x));
      for (Elem y = 0; y < f->q(); ++y)
        CHECK(f->trace(f->add(x, y)) == (f->trace(x) ^ f->trace(y)));
    }
  }
}

TEST_CASE("subfield elements") {
  FieldPtr f16 = field_new(4);
  auto sub = f16->subfield_elements(4);
  REQUIRE(sub.size() == 4);
  std::set<Elem> s(sub.begin(), sub.end());
  CHECK(s.count(0) == 1);
  CHECK(s.count(1) == 1);
  for (Elem a : sub)
    for (Elem b : sub) {
      CHECK(s.count(f16->add(a, b)) == 1);
      CHECK(s.count(f16->mul(a, b)) == 1);
    }
  CHECK(f16->subfield_elements(2) == std::vector<Elem>{0, 1});
  CHECK_THROWS_AS(f16->subfield_elements(8), InvalidInput);
}

TEST_CASE("self-dual basis for small fields") {
  FieldPtr f4 = field_new(2);
  SelfDualBasis b = self_dual_basis(f4);
  CHECK(b.elems == std::vector<Elem>{2, 3});  // {omega, omega^2}

  SelfDualBasis b1 = self_dual_basis(field_new(1));
  CHECK(b1.elems == std::vector<Elem>{1});
}

TEST_CASE("self-dual basis Gram checks for t <= 8") {
  for (unsigned t = 1; t <= 8; ++t) {
    FieldPtr f = field_new(t);
    SelfDualBasis b = self_dual_basis(f);
    REQUIRE(b.elems.size() == t);
    for (unsigned i = 0; i < t; ++i)
      for (unsigned j = 0; j < t; ++j)
        CHECK(f->trace(f->mul(b.elems[i], b.elems[j])) == (i == j ? 1 : 0));
  }
}

TEST_CASE("decomp/recomp bijection, exhaustive t <= 8") {
  for (unsigned t = 1; t <= 8; ++t) {
    FieldPtr f = field_new(t);
    SelfDualBasis b = self_dual_basis(f);
    std::set<std::vector<std::uint8_t>> seen;
    for (Elem x = 0; x < f->q(); ++x) {
      auto s = decomp(b, x);
      CHECK(recomp(b, s) == x);
      seen.insert(s);
    }
    CHECK(seen.size() == f->q());
  }
}

TEST_CASE("decomp examples in GF(4)") {
  FieldPtr f = field_new(2);
  SelfDualBasis b = self_dual_basis(f);
  CHECK(decomp(b, 0) == std::vector<std::uint8_t>{0, 0});
  CHECK(decomp(b, 2) == std::vector<std::uint8_t>{1, 0});  // omega = basis[0]
  CHECK(decomp(b, 1) == std::vector<std::uint8_t>{1, 1});  // omega + omega^2 = 1
}

TEST_CASE("trace of product equals bit dot product under a self-dual basis") {
  for (unsigned t : {2u, 3u, 4u, 6u}) {
    FieldPtr f = field_new(t);
    SelfDualBasis b = self_dual_basis(f);
    for (Elem x = 0; x < f->q(); ++x)
      for (Elem y = 0; y < f->q(); ++y) {
        auto sx = decomp(b, x);
        auto sy = decomp(b, y);
        unsigned dot = 0;
        for (unsigned i = 0; i < t; ++i) dot ^= (sx[i] & sy[i]);
        CHECK(dot == f->trace(f->mul(x, y)));
      }
  }
}

TEST_CASE("field bounds") {
  CHECK_THROWS_AS(Field(0), InvalidInput);
  CHECK_THROWS_AS(Field(17), InvalidInput);
  CHECK(field_new(16)->q() == 65536);
}

TEST_CASE("self-dual bases up to the t = 16 cap") {
  for (unsigned t : {12u, 16u}) {
    FieldPtr f = field_new(t);
    SelfDualBasis b = self_dual_basis(f);
    REQUIRE(b.elems.size() == t);
    for (unsigned i = 0; i < t; ++i)
      for (unsigned j = 0; j < t; ++j)
        CHECK(f->trace(f->mul(b.elems[i], b.elems[j])) == (i == j ? 1 : 0));
  }
}

TEST_SUITE_END();
