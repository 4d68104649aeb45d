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

#include "aqc/designed.hpp"

namespace aqc {

const std::array<std::array<unsigned, 7>, 3> kDesignedM = {{
    {1, 1, 1, 0, 1, 0, 0},
    {1, 1, 0, 1, 0, 1, 0},
    {1, 0, 1, 1, 0, 0, 1},
}};

DesignedCode build_designed(const Mat& g, const OrthoWitness& w, std::size_t k) {
  if (w.kind != OrthoKind::addressable_strong || w.ell < 7)
    throw InvalidInput("an addressable strong 7-orthogonal witness is required");
  for (Elem t : w.tau)
    if (t != 1) throw InvalidInput("tau = 1^k is required");
  if (w.gamma.size() != k) throw InvalidInput("witness does not cover k addresses");
  if (k > g.rows()) throw InvalidInput("k exceeds row count");

  DesignedCode d;
  d.field = g.field();
  d.kprime = k / 7;
  d.k = 7 * d.kprime;
  // Leftover G1 rows become G0 rows (their logical qudits are dropped); the
  // base matrix itself is unchanged, so the witness sums still hold. With
  // fewer than seven marked rows everything folds and no triple remains.
  d.g = g;
  d.gammas.assign(w.gamma.begin(), w.gamma.begin() + static_cast<std::ptrdiff_t>(d.k));

  const std::size_t n = g.cols();
  const std::size_t m = g.rows();
  d.mprime = 3 * d.kprime + (m - d.k);
  Mat h(d.field, d.mprime, n);
  const Field& f = *d.field;
  for (std::size_t B = 0; B < d.kprime; ++B)
    for (std::size_t e = 0; e < 3; ++e) {
      std::vector<Elem> row(n, 0);
      for (std::size_t j = 0; j < 7; ++j) {
        if (!kDesignedM[e][j]) continue;
        for (std::size_t c = 0; c < n; ++c) row[c] = f.add(row[c], g.at(7 * B + j, c));
      }
      h.set_row(3 * B + e, row);
    }
  for (std::size_t r = d.k; r < m; ++r) h.set_row(3 * d.kprime + (r - d.k), g.row(r));
  d.h = h;
  d.codeM = build_css(h, 3 * d.kprime);

  for (std::size_t A = 0; A < d.kprime; ++A) {
    std::vector<Elem> lam(n, 0);
    for (std::size_t j = 0; j < 7; ++j)
      for (std::size_t c = 0; c < n; ++c) lam[c] = f.add(lam[c], d.gammas[7 * A + j][c]);
    d.lambdas.push_back(std::move(lam));
  }
  return d;
}

DesignedCheck check_extended_orthogonality(const DesignedCode& d) {
  const Field& f = *d.field;
  const std::size_t n = d.h.cols();
  DesignedCheck res;
  for (std::size_t A = 0; A < d.kprime; ++A) {
    for (unsigned d1 = 0; d1 <= 7; ++d1)
      for (unsigned d2 = 0; d1 + d2 <= 7; ++d2) {
        unsigned d3 = 7 - d1 - d2;
        for (std::size_t a = 0; a < d.mprime; ++a)
          for (std::size_t b = 0; b < d.mprime; ++b)
            for (std::size_t c = 0; c < d.mprime; ++c) {
              Elem sum = 0;
              for (std::size_t i = 0; i < n; ++i) {
                Elem term = d.lambdas[A][i];
                if (d1) term = f.mul(term, f.pow(d.h.at(a, i), d1));
                if (d2) term = f.mul(term, f.pow(d.h.at(b, i), d2));
                if (d3) term = f.mul(term, f.pow(d.h.at(c, i), d3));
                sum = f.add(sum, term);
              }
              bool designated = d1 && d2 && d3 &&
                                std::min({a, b, c}) == 3 * A &&
                                std::max({a, b, c}) == 3 * A + 2 &&
                                a + b + c == 9 * A + 3 && a != b && b != c && a != c;
              Elem want = designated ? 1 : 0;
              ++res.checked;
              if (sum != want) {
                res.ok = false;
                if (!res.counterexample)
                  res.counterexample =
                      DesignedCounterexample{A, {d1, d2, d3}, {a, b, c}, sum, want};
              }
            }
      }
  }
  return res;
}

GateSchedule designed_w_schedule(const DesignedCode& d, std::size_t A, Elem beta) {
  if (A >= d.kprime) throw InvalidInput("designed triple index out of range");
  if (beta >= d.field->q()) throw InvalidInput("beta outside the field");
  GateSchedule s;
  const Field& f = *d.field;
  for (std::size_t i = 0; i < d.h.cols(); ++i) {
    Elem coeff = f.mul(beta, d.lambdas[A][i]);
    if (coeff == 0) continue;
    Application app;
    app.gate = "U7";
    app.beta = coeff;
    app.poly = PhasePoly::uql(d.field, 7, coeff);
    app.legs = {Leg{0, i}};
    app.layer = 0;
    s.apps.push_back(std::move(app));
  }
  return s;
}

Elem pow7_expand(const FieldPtr& f, const std::vector<Elem>& coeffs,
                 const std::vector<Elem>& values) {
  if (coeffs.size() != values.size()) throw InvalidInput("coefficient/value length mismatch");
  const std::size_t m = coeffs.size();
  Elem acc = 0;
  auto term = [&](std::size_t a, unsigned ea) {
    return f->mul(f->pow(coeffs[a], ea), f->pow(values[a], ea));
  };
  for (std::size_t a = 0; a < m; ++a) acc = f->add(acc, term(a, 7));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      acc = f->add(acc, f->mul(term(a, 6), term(b, 1)));
      acc = f->add(acc, f->mul(term(a, 5), term(b, 2)));
      acc = f->add(acc, f->mul(term(a, 4), term(b, 3)));
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        if (a == b || b == c || a == c) continue;
        acc = f->add(acc, f->mul(f->mul(term(a, 4), term(b, 2)), term(c, 1)));
      }
  return acc;
}

}  // namespace aqc
