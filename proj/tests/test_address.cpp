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

#include "aqc/address.hpp"

#include <doctest.h>

#include <set>

#include "aqc/verify.hpp"

using namespace aqc;

TEST_SUITE_BEGIN("address");

TEST_CASE("build_rs_addressable parameters") {
  AddressableRsCode c4 = build_rs_addressable(4, 2, 1);
  CHECK(c4.field->q() == 16);
  CHECK(c4.n() == 4);
  CHECK(c4.k() == 1);
  CHECK(c4.code.d_lower.value == 2);

  AddressableRsCode c8 = build_rs_addressable(8, 3, 2);
  CHECK(c8.field->q() == 64);
  CHECK(c8.n() == 8);
  CHECK(c8.k() == 2);
  CHECK(c8.code.d_lower.value == 2);
}

TEST_CASE("bound arithmetic: m < n/3 + 1") {
  CHECK_NOTHROW(build_rs_addressable(16, 6, 3));   // 6 < 16/3 + 1 = 6.33
  CHECK_THROWS_AS(build_rs_addressable(16, 7, 3), InvalidInput);
  CHECK_THROWS_AS(build_rs_addressable(5, 2, 1), InvalidInput);  // not a power of two
  CHECK_THROWS_AS(build_rs_addressable(4, 2, 3), InvalidInput);  // k > m
}

TEST_CASE("addresses live in zeta + K and shifts stay in K") {
  AddressableRsCode c = build_rs_addressable(8, 3, 3);
  std::set<Elem> kset(c.alphas.begin(), c.alphas.end());
  CHECK(kset.count(c.zeta) == 0);
  for (Elem beta : c.betas) CHECK(kset.count(beta ^ c.zeta) == 1);
  for (std::size_t a = 0; a < c.k(); ++a)
    for (std::size_t b = 0; b < c.k(); ++b) CHECK(kset.count(c.delta(a, b)) == 1);
}

TEST_CASE("monomial identities hold for every address triple") {
  AddressableRsCode c = build_rs_addressable(8, 3, 2);
  for (std::size_t A = 0; A < 2; ++A)
    for (std::size_t B = 0; B < 2; ++B)
      for (std::size_t C = 0; C < 2; ++C) {
        VerifyReport r = verify_rs_identities(c, A, B, C);
        CHECK(r.pass());
        CHECK(r.checked == 27);  // m^3
      }
}

TEST_CASE("intra schedule: depth <= 4 and per-qudit usage <= 3") {
  AddressableRsCode c = build_rs_addressable(8, 3, 3);
  SplitMix64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t A = rng.below(3), B = rng.below(3), C = rng.below(3);
    Elem gamma = static_cast<Elem>(1 + rng.below(c.field->q() - 1));
    GateSchedule s = intra_ccz_schedule(c, A, B, C, gamma);
    CHECK(layering_valid(s));
    CHECK(s.depth() <= 4);
    CHECK(max_leg_usage(s) <= 3);
  }
}

TEST_CASE("intra schedule with A = B = C has repeated legs") {
  AddressableRsCode c = build_rs_addressable(4, 2, 1);
  GateSchedule s = intra_ccz_schedule(c, 0, 0, 0, 1);
  CHECK(s.depth() == 1);  // all shifts zero, gates touch disjoint triples
  for (const auto& app : s.apps) {
    CHECK(app.legs[0] == app.legs[1]);
    CHECK(app.legs[1] == app.legs[2]);
  }
}

TEST_CASE("gamma = 0 gives an empty schedule") {
  AddressableRsCode c = build_rs_addressable(4, 2, 1);
  CHECK(intra_ccz_schedule(c, 0, 0, 0, 0).apps.empty());
}

TEST_CASE("inter schedule is depth 1 on distinct blocks") {
  AddressableRsCode c = build_rs_addressable(8, 3, 2);
  SplitMix64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t A = rng.below(2), B = rng.below(2), C = rng.below(2);
    Elem gamma = static_cast<Elem>(1 + rng.below(c.field->q() - 1));
    GateSchedule s = inter_ccz_schedule(c, A, B, C, gamma);
    CHECK(s.depth() == 1);
    CHECK(layering_valid(s));
    CHECK(max_leg_usage(s) == 1);
  }
}

TEST_CASE("two-block inter schedule is depth <= 2") {
  AddressableRsCode c = build_rs_addressable(8, 3, 2);
  GateSchedule s = inter_ccz_schedule(c, 0, 1, 0, 5, {0, 0, 1});
  CHECK(layering_valid(s));
  CHECK(s.depth() <= 2);
}

TEST_CASE("merged triples: equal shifts merge without extra depth") {
  AddressableRsCode c = build_rs_addressable(16, 5, 4);
  // Delta depends only on alpha_A + alpha_B; (0,1) and (2,3) share shifts
  // because alphas 0..3 of a subfield satisfy a0+a1 = a2+a3 here.
  REQUIRE(c.delta(0, 1) == c.delta(2, 3));
  std::vector<GateRequest> triples{{{0, 1, 0}, 3}, {{2, 3, 2}, 9}};
  REQUIRE(c.delta(0, 0) == c.delta(2, 2));
  GateSchedule merged = merged_triples_schedule(c, triples, {0, 1, 2});
  GateSchedule single = inter_ccz_schedule(c, 0, 1, 0, 3);
  CHECK(merged.depth() == single.depth());
  CHECK(layering_valid(merged));

  // Mismatched shifts are rejected.
  std::vector<GateRequest> bad{{{0, 1, 0}, 3}, {{0, 2, 0}, 9}};
  CHECK_THROWS_AS(merged_triples_schedule(c, bad, {0, 1, 2}), InvalidInput);
}

TEST_CASE("merged schedule applies the product of the two logical gates") {
  AddressableRsCode c = build_rs_addressable(16, 5, 4);
  std::vector<GateRequest> triples{{{0, 1, 1}, 7}, {{2, 3, 3}, 12}};
  GateSchedule s = merged_triples_schedule(c, triples, {0, 1, 2});
  LogicalSpec spec;
  spec.field = c.field;
  spec.blocks = 3;
  for (const auto& tr : triples) {
    LogicalSpec one = cnz_logical_spec(c.field, {0, 1, 2},
                                       {tr.addresses[0], tr.addresses[1], tr.addresses[2]},
                                       tr.gamma);
    for (auto& m : one.monomials) spec.monomials.push_back(m);
  }
  std::vector<const CssCode*> codes{&c.code, &c.code, &c.code};
  VerifyReport r = verify_sampled(codes, s, spec, 5000, 97);
  CHECK(r.pass());
}

TEST_CASE("single-index form [A,A,A] triples always merge") {
  AddressableRsCode c = build_rs_addressable(8, 3, 3);
  std::vector<GateRequest> triples{{{0, 0, 0}, 3}, {{1, 1, 1}, 7}, {{2, 2, 2}, 1}};
  GateSchedule s = merged_triples_schedule(c, triples, {0, 1, 2});
  CHECK(s.depth() == 1);
  CHECK(layering_valid(s));
}

TEST_CASE("C^(l-1)Z generalization enforces the tighter bound") {
  // n = 16, m = 5: fine for ell = 3 (15 < 16) but not ell = 4 (16 >= 16).
  AddressableRsCode c = build_rs_addressable(16, 5, 2);
  GateRequest req{{0, 1, 0, 1}, 3};
  CHECK_THROWS_AS(cnz_schedule(c, req, {0, 1, 2, 3}), InvalidInput);
  // n = 16, m = 4: ell = 4 passes and gives depth 1 across distinct blocks.
  AddressableRsCode c2 = build_rs_addressable(16, 4, 2);
  GateSchedule s = cnz_schedule(c2, req, {0, 1, 2, 3});
  CHECK(s.depth() == 1);
  CHECK(layering_valid(s));
}

TEST_CASE("polynomial gates through the shift construction") {
  // U_P across two blocks with P(x, y) = x^2 y + x y: addressed legs
  // (A1, A2) = (0, 1); degree 3 needs m < 1 + n/3, satisfied here.
  AddressableRsCode c = build_rs_addressable(8, 3, 2);
  PhasePoly p{c.field, 2, {{1, {2, 1}}, {1, {1, 1}}}};
  GateSchedule s = poly_shift_schedule(c, p, {0, 1}, 9, {0, 1});
  CHECK(layering_valid(s));
  CHECK(s.depth() == 1);  // distinct blocks
  LogicalSpec spec;
  spec.field = c.field;
  spec.blocks = 2;
  spec.monomials.push_back(LogicalMonomial{9, {LogicalFactor{0, 0, 2}, {1, 1, 1}}});
  spec.monomials.push_back(LogicalMonomial{9, {LogicalFactor{0, 0, 1}, {1, 1, 1}}});
  std::vector<const CssCode*> codes{&c.code, &c.code};
  VerifyReport r = verify_sampled(codes, s, spec, 5000, 61);
  CHECK(r.pass());
  // Degree-4 polynomial on this code violates the degree bound.
  PhasePoly p4{c.field, 2, {{1, {2, 2}}}};
  CHECK_THROWS_AS(poly_shift_schedule(c, p4, {0, 1}, 9, {0, 1}), InvalidInput);
}

TEST_CASE("single_index_schedule families and preconditions") {
  FieldPtr f = field_new(8);
  auto [g, w] = rs_addressable_matrix(f, 18, 5, 2, 3);

  GateSchedule u3 = single_index_schedule(g, 2, w, 0, SingleIndexFamily::uql, 7, 3);
  CHECK(u3.depth() == 1);
  for (const auto& app : u3.apps) CHECK(app.legs.size() == 1);

  GateSchedule ccz = single_index_schedule(g, 2, w, 1, SingleIndexFamily::cnz, 7, 3);
  CHECK(ccz.depth() == 1);
  CHECK(max_leg_usage(ccz) == 1);

  // Inhomogeneous degree-3 polynomial needs the strong witness: this one is
  // strong, so it passes; a plain addressable witness must be rejected.
  PhasePoly p{f, 2, {{1, {2, 1}}, {1, {1, 1}}}};
  CHECK_NOTHROW(single_index_schedule(g, 2, w, 0, SingleIndexFamily::upoly, 3, 0, &p));
  OrthoWitness plain = w;
  plain.kind = OrthoKind::addressable;
  CHECK_THROWS_AS(single_index_schedule(g, 2, plain, 0, SingleIndexFamily::upoly, 3, 0, &p),
                  InvalidInput);
  // Homogeneous degree-3 polynomial is exempt from the strong requirement.
  PhasePoly hom{f, 2, {{1, {2, 1}}}};
  CHECK_NOTHROW(single_index_schedule(g, 2, plain, 0, SingleIndexFamily::upoly, 3, 0, &hom));
  CHECK_THROWS_AS(single_index_schedule(g, 2, w, 5, SingleIndexFamily::uql, 1, 3),
                  InvalidInput);
}

TEST_CASE("schedules never contain zero-coefficient applications") {
  AddressableRsCode c = build_rs_addressable(8, 3, 2);
  SplitMix64 rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    GateSchedule s = intra_ccz_schedule(c, rng.below(2), rng.below(2), rng.below(2),
                                        static_cast<Elem>(rng.below(c.field->q())));
    for (const auto& app : s.apps) CHECK(app.beta != 0);
  }
}

TEST_SUITE_END();
