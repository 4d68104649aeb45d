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

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace aqc {

std::size_t AddressableRsCode::qudit_of(Elem alpha) const {
  auto it = std::lower_bound(alphas.begin(), alphas.end(), alpha);
  if (it == alphas.end() || *it != alpha) throw InvalidInput("element not in K");
  return static_cast<std::size_t>(it - alphas.begin());
}

Elem AddressableRsCode::delta(std::size_t A, std::size_t B) const {
  return betas.at(A) ^ betas.at(B);
}

AddressableRsCode build_rs_addressable(std::size_t n, std::size_t m, std::size_t k) {
  if (n < 2 || (n & (n - 1)) != 0) throw InvalidInput("n must be a power of two");
  unsigned logn = 0;
  while ((1u << logn) < n) ++logn;
  unsigned t = 2 * logn;
  if (t > 16) throw InvalidInput("q = n^2 needs t = 2 log2(n) <= 16");
  if (3 * (m - 1) >= n || m == 0) throw InvalidInput("m < n/3 + 1 violated");
  if (k == 0 || k > m) throw InvalidInput("k in [1, m] required");

  AddressableRsCode out;
  out.field = field_new(t);
  out.m = m;
  out.alphas = out.field->subfield_elements(static_cast<std::uint32_t>(n));
  std::set<Elem> kset(out.alphas.begin(), out.alphas.end());
  Elem zeta = 0;
  while (kset.count(zeta)) ++zeta;
  out.zeta = zeta;
  for (std::size_t a = 0; a < k; ++a) out.betas.push_back(zeta ^ out.alphas[a]);

  // RS over the N = k + n points (betas first), split systematically.
  std::vector<Elem> pts = out.betas;
  pts.insert(pts.end(), out.alphas.begin(), out.alphas.end());
  Mat rs = rs_generator(eval_points(out.field, pts), m);
  auto [g1, g0] = partially_systematic(rs, k);
  Mat g = g1.vstack(g0);

  // Keep the full systematic rows (over all N points) for identity checks.
  Mat sys(out.field, m, k + n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < k; ++c) sys.at(r, c) = (r == c) ? 1 : 0;
    for (std::size_t c = 0; c < n; ++c) sys.at(r, k + c) = g.at(r, c);
  }
  for (std::size_t r = 0; r < m; ++r) out.gtilde.push_back(sys.row(r));

  EvalPoints alpha_pts = eval_points(out.field, out.alphas);
  for (std::size_t a = 0; a < k; ++a)
    out.gammas.push_back(interpolation_vector(alpha_pts, out.betas[a]));

  std::size_t d_bound = std::min(n - m + 1, m - k + 1);
  out.code = build_css(g, k, DistanceBound{d_bound, "mds-bound"});
  return out;
}

namespace {

void check_address(const AddressableRsCode& c, std::size_t A) {
  if (A >= c.k()) throw InvalidInput("logical address out of range");
}

// Layer by position within the coset alpha + span{deltas}: gates in
// different cosets touch disjoint qudits, gates inside one coset get
// distinct layers.
void layer_by_coset(const AddressableRsCode& c, GateSchedule& s,
                    const std::vector<Elem>& deltas) {
  std::vector<Elem> span{0};
  for (Elem d : deltas) {
    std::vector<Elem> next = span;
    for (Elem v : span)
      if (std::find(next.begin(), next.end(), static_cast<Elem>(v ^ d)) == next.end())
        next.push_back(v ^ d);
    span = next;
  }
  std::sort(span.begin(), span.end());
  for (auto& app : s.apps) {
    Elem alpha = c.alphas[app.legs.front().index];
    Elem rep = alpha;
    for (Elem v : span) rep = std::min(rep, static_cast<Elem>(alpha ^ v));
    Elem offset = alpha ^ rep;
    auto it = std::find(span.begin(), span.end(), offset);
    app.layer = static_cast<int>(it - span.begin());
  }
}

GateSchedule shifted_cnz(const AddressableRsCode& c, const std::vector<std::size_t>& addrs,
                         Elem gamma, const std::vector<std::size_t>& blocks,
                         bool intra) {
  const std::size_t ell = addrs.size();
  if (ell < 2 || ell > 5) throw InvalidInput("C^(l-1)Z supported for 2 <= ell <= 5");
  if (blocks.size() != ell) throw InvalidInput("one block per gate leg required");
  for (std::size_t a : addrs) check_address(c, a);
  if (ell * (c.m - 1) >= c.n())
    throw InvalidInput("m < 1 + n/" + std::to_string(ell) + " violated for this gate");

  if (gamma >= c.field->q()) throw InvalidInput("gamma outside the field");
  const std::size_t A = addrs[0];
  std::vector<Elem> deltas(ell);
  for (std::size_t j = 0; j < ell; ++j) deltas[j] = c.delta(A, addrs[j]);

  GateSchedule s;
  std::string name = ell == 3 ? "CCZ" : (ell == 2 ? "CZ" : "C" + std::to_string(ell - 1) + "Z");
  for (std::size_t i = 0; i < c.n(); ++i) {
    Elem coeff = c.field->mul(gamma, c.gammas[A][i]);
    if (coeff == 0) continue;
    Application app;
    app.gate = name;
    app.beta = coeff;
    app.poly = PhasePoly::cnz(c.field, static_cast<unsigned>(ell), coeff);
    for (std::size_t j = 0; j < ell; ++j)
      app.legs.push_back(Leg{blocks[j], c.qudit_of(c.alphas[i] ^ deltas[j])});
    s.apps.push_back(std::move(app));
  }
  if (intra) {
    std::vector<Elem> nonzero;
    for (std::size_t j = 1; j < ell; ++j)
      if (deltas[j] != 0) nonzero.push_back(deltas[j]);
    layer_by_coset(c, s, nonzero);
  } else {
    schedule_layer_greedy(s);
  }
  return s;
}

}  // namespace

GateSchedule intra_ccz_schedule(const AddressableRsCode& c, std::size_t A, std::size_t B,
                                std::size_t C, Elem gamma) {
  return shifted_cnz(c, {A, B, C}, gamma, {0, 0, 0}, /*intra=*/true);
}

GateSchedule inter_ccz_schedule(const AddressableRsCode& c, std::size_t A, std::size_t B,
                                std::size_t C, Elem gamma,
                                const std::vector<std::size_t>& blocks) {
  return shifted_cnz(c, {A, B, C}, gamma, blocks, /*intra=*/false);
}

GateSchedule cnz_schedule(const AddressableRsCode& c, const GateRequest& req,
                          const std::vector<std::size_t>& blocks) {
  bool intra = std::set<std::size_t>(blocks.begin(), blocks.end()).size() == 1;
  return shifted_cnz(c, req.addresses, req.gamma, blocks, intra);
}

GateSchedule poly_shift_schedule(const AddressableRsCode& c, const PhasePoly& p,
                                 const std::vector<std::size_t>& addresses, Elem gamma,
                                 const std::vector<std::size_t>& blocks) {
  const std::size_t e = addresses.size();
  if (p.arity != e) throw InvalidInput("polynomial arity must match the address count");
  if (blocks.size() != e) throw InvalidInput("one block per gate leg required");
  if (gamma >= c.field->q()) throw InvalidInput("gamma outside the field");
  for (std::size_t a : addresses) check_address(c, a);
  unsigned deg = p.degree();
  if (deg == 0 || deg > 5) throw InvalidInput("polynomial degree must be in [1, 5]");
  if (static_cast<std::size_t>(deg) * (c.m - 1) >= c.n())
    throw InvalidInput("m < 1 + n/" + std::to_string(deg) + " violated for this gate");

  const std::size_t A = addresses[0];
  std::vector<Elem> deltas(e);
  for (std::size_t j = 0; j < e; ++j) deltas[j] = c.delta(A, addresses[j]);

  GateSchedule s;
  for (std::size_t i = 0; i < c.n(); ++i) {
    Elem coeff = c.field->mul(gamma, c.gammas[A][i]);
    if (coeff == 0) continue;
    Application app;
    app.gate = "UP";
    app.beta = coeff;
    app.poly = p.scaled(coeff);
    if (app.poly.monomials.empty()) continue;
    for (std::size_t j = 0; j < e; ++j)
      app.legs.push_back(Leg{blocks[j], c.qudit_of(c.alphas[i] ^ deltas[j])});
    s.apps.push_back(std::move(app));
  }
  bool intra = std::set<std::size_t>(blocks.begin(), blocks.end()).size() == 1;
  if (intra) {
    std::vector<Elem> nonzero;
    for (std::size_t j = 1; j < e; ++j)
      if (deltas[j] != 0) nonzero.push_back(deltas[j]);
    layer_by_coset(c, s, nonzero);
  } else {
    schedule_layer_greedy(s);
  }
  return s;
}

GateSchedule merged_triples_schedule(const AddressableRsCode& c,
                                     const std::vector<GateRequest>& triples,
                                     const std::vector<std::size_t>& blocks) {
  if (triples.empty()) return GateSchedule{};
  const std::size_t ell = triples[0].addresses.size();
  if (blocks.size() != ell) throw InvalidInput("one block per gate leg required");
  std::vector<Elem> deltas(ell);
  for (std::size_t j = 0; j < ell; ++j)
    deltas[j] = c.delta(triples[0].addresses[0], triples[0].addresses[j]);
  for (const auto& tr : triples) {
    if (tr.gamma >= c.field->q()) throw InvalidInput("gamma outside the field");
    if (tr.addresses.size() != ell) throw InvalidInput("mixed gate arities cannot merge");
    for (std::size_t j = 0; j < ell; ++j)
      if (c.delta(tr.addresses[0], tr.addresses[j]) != deltas[j])
        throw InvalidInput("triples with different Delta shifts cannot merge");
    for (std::size_t a : tr.addresses) check_address(c, a);
  }
  if (ell * (c.m - 1) >= c.n())
    throw InvalidInput("m < 1 + n/" + std::to_string(ell) + " violated for this gate");

  GateSchedule s;
  std::string name = ell == 3 ? "CCZ" : (ell == 2 ? "CZ" : "C" + std::to_string(ell - 1) + "Z");
  for (std::size_t i = 0; i < c.n(); ++i) {
    Elem coeff = 0;
    for (const auto& tr : triples)
      coeff = c.field->add(coeff, c.field->mul(tr.gamma, c.gammas[tr.addresses[0]][i]));
    if (coeff == 0) continue;
    Application app;
    app.gate = name;
    app.beta = coeff;
    app.poly = PhasePoly::cnz(c.field, static_cast<unsigned>(ell), coeff);
    for (std::size_t j = 0; j < ell; ++j)
      app.legs.push_back(Leg{blocks[j], c.qudit_of(c.alphas[i] ^ deltas[j])});
    s.apps.push_back(std::move(app));
  }
  bool intra = std::set<std::size_t>(blocks.begin(), blocks.end()).size() == 1;
  if (intra) {
    std::vector<Elem> nonzero;
    for (std::size_t j = 1; j < ell; ++j)
      if (deltas[j] != 0) nonzero.push_back(deltas[j]);
    layer_by_coset(c, s, nonzero);
  } else {
    schedule_layer_greedy(s);
  }
  return s;
}

GateSchedule single_index_schedule(const Mat& g, std::size_t k, const OrthoWitness& w,
                                   std::size_t A, SingleIndexFamily family, Elem beta,
                                   unsigned ell, const PhasePoly* poly) {
  if (A >= k) throw InvalidInput("logical address out of range");
  if (!w.is_addressable()) throw InvalidInput("an addressable witness is required");
  const FieldPtr& f = g.field();
  if (beta >= f->q()) throw InvalidInput("beta outside the field");

  PhasePoly base;
  std::string name;
  switch (family) {
    case SingleIndexFamily::uql:
      if (w.ell < ell || (!w.is_strong() && w.ell != ell))
        throw InvalidInput("addressable ell witness required for U_ell");
      base = PhasePoly::uql(f, ell, 1);
      name = "U" + std::to_string(ell);
      break;
    case SingleIndexFamily::cnz:
      if (w.ell < ell || (!w.is_strong() && w.ell != ell))
        throw InvalidInput("addressable ell witness required for C^(l-1)Z");
      base = PhasePoly::cnz(f, ell, 1);
      name = ell == 3 ? "CCZ" : "C" + std::to_string(ell - 1) + "Z";
      break;
    case SingleIndexFamily::upoly: {
      if (poly == nullptr) throw InvalidInput("polynomial gate needs a polynomial");
      unsigned deg = poly->degree();
      if (poly->homogeneous_of_degree(deg)) {
        if (w.ell < deg || (!w.is_strong() && w.ell != deg))
          throw InvalidInput("addressable degree-ell witness required");
      } else if (!w.is_strong() || w.ell < deg) {
        throw InvalidInput("inhomogeneous polynomial gates need an addressable strong "
                           "witness of at least the polynomial degree");
      }
      base = *poly;
      name = "UP";
      break;
    }
  }

  GateSchedule s;
  for (std::size_t i = 0; i < g.cols(); ++i) {
    Elem coeff = f->mul(beta, w.gamma[A][i]);
    if (coeff == 0) continue;
    Application app;
    app.gate = name;
    app.beta = coeff;
    app.poly = base.scaled(coeff);
    for (unsigned b = 0; b < base.arity; ++b) app.legs.push_back(Leg{b, i});
    app.layer = 0;
    s.apps.push_back(std::move(app));
  }
  return s;
}

}  // namespace aqc
