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

#include "aqc/verify.hpp"

#include <algorithm>

namespace aqc {

unsigned logical_phase(const LogicalSpec& spec, const std::vector<std::vector<Elem>>& u) {
  const Field& f = *spec.field;
  Elem acc = 0;
  for (const auto& m : spec.monomials) {
    Elem term = m.coeff;
    for (const auto& fac : m.factors) {
      if (term == 0) break;
      term = f.mul(term, f.pow(u.at(fac.block).at(fac.index), fac.exp));
    }
    acc = f.add(acc, term);
  }
  return f.trace(acc);
}

LogicalSpec cnz_logical_spec(const FieldPtr& f, const std::vector<std::size_t>& blocks,
                             const std::vector<std::size_t>& addresses, Elem gamma) {
  if (blocks.size() != addresses.size()) throw InvalidInput("blocks/addresses length mismatch");
  LogicalSpec spec;
  spec.field = f;
  spec.blocks = blocks.empty() ? 0 : *std::max_element(blocks.begin(), blocks.end()) + 1;
  LogicalMonomial mono;
  mono.coeff = gamma;
  // Repeated (block, address) legs merge into one factor with a higher
  // exponent, matching the degenerate-leg rule for physical gates.
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    bool merged = false;
    for (auto& fac : mono.factors) {
      if (fac.block == blocks[j] && fac.index == addresses[j]) {
        ++fac.exp;
        merged = true;
        break;
      }
    }
    if (!merged) mono.factors.push_back({blocks[j], addresses[j], 1});
  }
  if (gamma != 0) spec.monomials.push_back(std::move(mono));
  return spec;
}

void VerifyReport::record(VerifyFailure f) {
  ++failure_count;
  if (failures.size() < 32) failures.push_back(std::move(f));
}

namespace {

struct BlockEnumState {
  const CssCode* code;
  std::vector<Elem> u;      // logical counter
  std::vector<Elem> coset;  // G0 coefficient counter
};

// Advances the (u, coset) odometer of one block; returns false on wrap.
bool advance_block(BlockEnumState& b, std::vector<Elem>& state) {
  const Field& f = *b.code->field;
  const std::size_t n = b.code->n;
  for (std::size_t d = 0; d < b.coset.size(); ++d) {
    Elem before = b.coset[d];
    b.coset[d] = (b.coset[d] + 1) % f.q();
    Elem delta = f.add(before, b.coset[d]);
    for (std::size_t c = 0; c < n; ++c)
      state[c] = f.add(state[c], f.mul(delta, b.code->g0.at(d, c)));
    if (b.coset[d] != 0) return true;
  }
  for (std::size_t d = 0; d < b.u.size(); ++d) {
    Elem before = b.u[d];
    b.u[d] = (b.u[d] + 1) % f.q();
    Elem delta = f.add(before, b.u[d]);
    for (std::size_t c = 0; c < n; ++c)
      state[c] = f.add(state[c], f.mul(delta, b.code->g1.at(d, c)));
    if (b.u[d] != 0) return true;
  }
  return false;
}

std::vector<Elem> build_state(const CssCode& code, const std::vector<Elem>& u,
                              const std::vector<Elem>& coset) {
  const Field& f = *code.field;
  std::vector<Elem> state(code.n, 0);
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (u[a] == 0) continue;
    for (std::size_t c = 0; c < code.n; ++c)
      state[c] = f.add(state[c], f.mul(u[a], code.g1.at(a, c)));
  }
  for (std::size_t j = 0; j < coset.size(); ++j) {
    if (coset[j] == 0) continue;
    for (std::size_t c = 0; c < code.n; ++c)
      state[c] = f.add(state[c], f.mul(coset[j], code.g0.at(j, c)));
  }
  return state;
}

}  // namespace

VerifyReport verify_exhaustive(const std::vector<const CssCode*>& codes,
                               const GateSchedule& s, const LogicalSpec& spec,
                               std::uint64_t budget) {
  if (codes.empty()) throw InvalidInput("at least one code block required");
  std::uint64_t total = 1;
  for (const CssCode* c : codes) {
    std::uint64_t per = 1;
    for (std::size_t i = 0; i < c->k + c->g0.rows(); ++i) {
      per *= c->field->q();
      if (per > budget || total > budget / per)
        throw BudgetExceeded("exhaustive verification exceeds budget");
    }
    total *= per;
  }

  VerifyReport report;
  report.mode = "exhaustive";
  std::vector<BlockEnumState> blocks;
  BlockStates state;
  std::vector<std::vector<Elem>> logical;
  for (const CssCode* c : codes) {
    blocks.push_back(BlockEnumState{c, std::vector<Elem>(c->k, 0),
                                    std::vector<Elem>(c->g0.rows(), 0)});
    state.emplace_back(c->n, 0);
    logical.emplace_back(c->k, 0);
  }

  for (std::uint64_t it = 0; it < total; ++it) {
    unsigned got = schedule_apply(s, state);
    for (std::size_t b = 0; b < blocks.size(); ++b) logical[b] = blocks[b].u;
    unsigned want = logical_phase(spec, logical);
    ++report.checked;
    if (got != want) {
      VerifyFailure fail;
      fail.logical = logical;
      for (const auto& b : blocks) fail.coset.push_back(b.coset);
      fail.got = got;
      fail.want = want;
      report.record(std::move(fail));
    }
    // odometer across blocks
    std::size_t b = 0;
    while (b < blocks.size() && !advance_block(blocks[b], state[b])) ++b;
  }
  return report;
}

VerifyReport verify_sampled(const std::vector<const CssCode*>& codes, const GateSchedule& s,
                            const LogicalSpec& spec, std::uint64_t trials,
                            std::uint64_t seed) {
  if (codes.empty()) throw InvalidInput("at least one code block required");
  VerifyReport report;
  report.mode = "sampled";
  SplitMix64 rng(seed);
  BlockStates state(codes.size());
  std::vector<std::vector<Elem>> logical(codes.size());
  std::vector<std::vector<Elem>> coset(codes.size());
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    for (std::size_t b = 0; b < codes.size(); ++b) {
      const CssCode& c = *codes[b];
      logical[b].assign(c.k, 0);
      for (auto& x : logical[b]) x = static_cast<Elem>(rng.below(c.field->q()));
      coset[b].assign(c.g0.rows(), 0);
      for (auto& x : coset[b]) x = static_cast<Elem>(rng.below(c.field->q()));
      state[b] = build_state(c, logical[b], coset[b]);
    }
    unsigned got = schedule_apply(s, state);
    unsigned want = logical_phase(spec, logical);
    ++report.checked;
    if (got != want)
      report.record(VerifyFailure{logical, coset, got, want});
  }
  return report;
}

VerifyReport verify_rs_identities(const AddressableRsCode& c, std::size_t A, std::size_t B,
                                  std::size_t C) {
  if (A >= c.k() || B >= c.k() || C >= c.k())
    throw InvalidInput("logical address out of range");
  const Field& f = *c.field;
  const std::size_t n = c.n();
  const std::size_t k = c.k();
  Elem dab = c.delta(A, B);
  Elem dac = c.delta(A, C);
  VerifyReport report;
  report.mode = "identity";
  for (std::size_t a1 = 0; a1 < c.m; ++a1)
    for (std::size_t a2 = 0; a2 < c.m; ++a2)
      for (std::size_t a3 = 0; a3 < c.m; ++a3) {
        Elem sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
          Elem v1 = c.gtilde[a1][k + i];
          Elem v2 = c.gtilde[a2][k + c.qudit_of(c.alphas[i] ^ dab)];
          Elem v3 = c.gtilde[a3][k + c.qudit_of(c.alphas[i] ^ dac)];
          sum = f.add(sum, f.mul(c.gammas[A][i], f.mul(v1, f.mul(v2, v3))));
        }
        Elem want = (a1 == A && a2 == B && a3 == C) ? 1 : 0;
        ++report.checked;
        if (sum != want) {
          VerifyFailure fail;
          fail.logical = {{static_cast<Elem>(a1), static_cast<Elem>(a2),
                           static_cast<Elem>(a3)}};
          fail.got = sum;
          fail.want = want;
          report.record(std::move(fail));
        }
      }
  return report;
}

VerifyReport verify_witness_identities(const Mat& g, std::size_t k, const OrthoWitness& w) {
  VerifyReport report;
  report.mode = "identity";
  OrthoCheck check = check_orthogonality(g, k, w);
  report.checked = 1;
  if (!check.ok) {
    VerifyFailure fail;
    std::vector<Elem> tuple;
    for (std::size_t t : check.counterexample->tuple) tuple.push_back(static_cast<Elem>(t));
    fail.logical = {tuple};
    fail.got = check.counterexample->got;
    fail.want = check.counterexample->want;
    report.record(std::move(fail));
  }
  return report;
}

}  // namespace aqc
