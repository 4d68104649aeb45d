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

#include <algorithm>
#include <string>

namespace aqc {

CssCode build_css(const Mat& g, std::size_t k, std::optional<DistanceBound> bound) {
  if (k > g.rows()) throw InvalidInput("k exceeds row count");
  const FieldPtr& f = g.field();
  CssCode code;
  code.field = f;
  code.n = g.cols();
  code.k = k;

  Mat g1(f, k, g.cols());
  Mat g0_raw(f, g.rows() - k, g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (r < k)
      g1.set_row(r, g.row(r));
    else
      g0_raw.set_row(r - k, g.row(r));
  }
  // Independence assumption: rank G = rank G0 + k.
  RrefResult r0 = rref(g0_raw);
  if (rank(g1) != k || rank(g) != r0.rank + k)
    throw InvalidInput("independence assumption violated: G1 rows must be independent of "
                       "each other and of the G0 row space");
  Mat g0(f, r0.rank, g.cols());
  for (std::size_t i = 0; i < r0.rank; ++i) g0.set_row(i, r0.mat.row(i));

  code.g1 = g1;
  code.g0 = g0;
  code.zdual = nullspace(g1.vstack(g0));

  // h^b solves (G1; G0) h = e_b (delta against g^a, orthogonal to G0).
  Mat sys = g1.vstack(g0);
  Mat h(f, k, g.cols());
  for (std::size_t b = 0; b < k; ++b) {
    std::vector<Elem> rhs(sys.rows(), 0);
    rhs[b] = 1;
    auto sol = solve_lex_min(sys, rhs);
    if (!sol) throw InvalidInput("logical Z solve failed");  // unreachable given assumption
    h.set_row(b, *sol);
  }
  code.h = h;

  if (bound) code.d_lower = *bound;
  return code;
}

std::pair<Mat, Mat> stabilizer_matrices(const CssCode& code) {
  return {code.g0, code.zdual};
}

CosetIter::CosetIter(const CssCode& code, std::vector<Elem> u, std::uint64_t budget)
    : code_(&code) {
  if (u.size() != code.k) throw InvalidInput("logical vector length must equal k");
  const Field& f = *code.field;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.g0.rows(); ++i) {
    total *= f.q();
    if (total > budget) throw BudgetExceeded("coset enumeration exceeds budget");
  }
  total_ = total;
  coeff_.assign(code.g0.rows(), 0);
  current_.assign(code.n, 0);
  for (std::size_t a = 0; a < code.k; ++a) {
    if (u[a] == 0) continue;
    for (std::size_t c = 0; c < code.n; ++c)
      current_[c] = f.add(current_[c], f.mul(u[a], code.g1.at(a, c)));
  }
}

void CosetIter::advance() {
  const Field& f = *code_->field;
  ++idx_;
  if (done()) return;
  std::size_t d = 0;
  while (true) {
    Elem before = coeff_[d];
    coeff_[d] = (coeff_[d] + 1) % f.q();
    Elem delta = f.add(before, coeff_[d]);
    for (std::size_t c = 0; c < code_->n; ++c)
      current_[c] = f.add(current_[c], f.mul(delta, code_->g0.at(d, c)));
    if (coeff_[d] != 0) break;
    ++d;
  }
}

CosetIter enumerate_coset(const CssCode& code, const std::vector<Elem>& u,
                          std::uint64_t budget) {
  return CosetIter(code, u, budget);
}

namespace {

// Min weight over rowspace(span) \ rowspace-of-first-`mark`-rows-complement:
// enumerates coefficient vectors over all rows, skipping those whose first
// `mark` coefficients are all zero.
std::size_t min_weight_nontrivial(const Mat& span, std::size_t mark, std::uint64_t budget) {
  const Field& f = *span.field();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < span.rows(); ++i) {
    total *= f.q();
    if (total > budget) throw BudgetExceeded("distance enumeration exceeds budget");
  }
  std::size_t best = span.cols() + 1;
  std::vector<Elem> coeff(span.rows(), 0);
  std::vector<Elem> word(span.cols(), 0);
  for (std::uint64_t it = 1; it < total; ++it) {
    std::size_t d = 0;
    while (true) {
      Elem before = coeff[d];
      coeff[d] = (coeff[d] + 1) % f.q();
      Elem delta = f.add(before, coeff[d]);
      for (std::size_t c = 0; c < span.cols(); ++c)
        word[c] = f.add(word[c], f.mul(delta, span.at(d, c)));
      if (coeff[d] != 0) break;
      ++d;
    }
    bool logical = false;
    for (std::size_t a = 0; a < mark; ++a)
      if (coeff[a] != 0) {
        logical = true;
        break;
      }
    if (!logical) continue;
    std::size_t w = 0;
    for (Elem x : word) w += (x != 0);
    best = std::min(best, w);
  }
  return best;
}

}  // namespace

std::size_t quantum_distance_bruteforce(const CssCode& code, std::uint64_t budget) {
  if (code.k == 0)
    throw InvalidInput("code has no logical qudits; distance of the logical class undefined");
  // d_X: min weight over G-rowspace vectors outside the G0 rowspace.
  std::size_t dx = min_weight_nontrivial(code.g1.vstack(code.g0), code.k, budget);
  // d_Z: min weight over G0-dual vectors outside the G-dual. A basis of
  // G0^perp splits as (h rows, zdual rows); membership in G^perp is exactly
  // "no h contribution".
  std::size_t dz = min_weight_nontrivial(code.h.vstack(code.zdual), code.k, budget);
  return std::min(dx, dz);
}

}  // namespace aqc
