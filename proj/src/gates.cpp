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

#include "aqc/gates.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace aqc {

PhasePoly PhasePoly::cnz(const FieldPtr& f, unsigned ell, Elem beta) {
  if (beta >= f->q()) throw InvalidInput("gate coefficient outside the field");
  PhasePoly p{f, ell, {}};
  if (beta != 0) p.monomials.push_back({beta, std::vector<unsigned>(ell, 1)});
  return p;
}

PhasePoly PhasePoly::uql(const FieldPtr& f, unsigned ell, Elem beta) {
  if (beta >= f->q()) throw InvalidInput("gate coefficient outside the field");
  PhasePoly p{f, 1, {}};
  if (beta != 0) p.monomials.push_back({beta, {ell}});
  return p;
}

PhasePoly PhasePoly::w_gate(const FieldPtr& f, Elem beta) {
  if (beta >= f->q()) throw InvalidInput("gate coefficient outside the field");
  PhasePoly p{f, 3, {}};
  if (beta == 0) return p;
  unsigned perm[6][3] = {{4, 2, 1}, {4, 1, 2}, {2, 4, 1}, {1, 4, 2}, {2, 1, 4}, {1, 2, 4}};
  for (auto& e : perm) p.monomials.push_back({beta, {e[0], e[1], e[2]}});
  return p;
}

PhasePoly PhasePoly::scaled(Elem beta) const {
  PhasePoly out{field, arity, {}};
  for (const auto& m : monomials) {
    Elem c = field->mul(m.coeff, beta);
    if (c != 0) out.monomials.push_back({c, m.exps});
  }
  return out;
}

bool PhasePoly::homogeneous_of_degree(unsigned ell) const {
  for (const auto& m : monomials) {
    unsigned d = std::accumulate(m.exps.begin(), m.exps.end(), 0u);
    if (d != ell) return false;
  }
  return true;
}

unsigned PhasePoly::degree() const {
  unsigned d = 0;
  for (const auto& m : monomials)
    d = std::max(d, std::accumulate(m.exps.begin(), m.exps.end(), 0u));
  return d;
}

unsigned eval_phase(const PhasePoly& g, const std::vector<Elem>& eta) {
  if (eta.size() != g.arity) throw InvalidInput("phase evaluation arity mismatch");
  const Field& f = *g.field;
  Elem acc = 0;
  for (const auto& m : g.monomials) {
    Elem term = m.coeff;
    for (unsigned j = 0; j < g.arity && term != 0; ++j) {
      if (m.exps[j] != 0) term = f.mul(term, f.pow(eta[j], m.exps[j]));
    }
    acc = f.add(acc, term);
  }
  return f.trace(acc);
}

int GateSchedule::depth() const {
  int d = 0;
  for (const auto& a : apps) d = std::max(d, a.layer + 1);
  return d;
}

void schedule_layer_greedy(GateSchedule& s) {
  std::vector<std::size_t> order(s.apps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s.apps[a].legs.front() < s.apps[b].legs.front();
  });
  // layers[l] = set of occupied legs
  std::vector<std::set<Leg>> layers;
  for (std::size_t idx : order) {
    Application& app = s.apps[idx];
    std::set<Leg> mine(app.legs.begin(), app.legs.end());
    std::size_t l = 0;
    for (; l < layers.size(); ++l) {
      bool clash = false;
      for (const Leg& leg : mine)
        if (layers[l].count(leg)) {
          clash = true;
          break;
        }
      if (!clash) break;
    }
    if (l == layers.size()) layers.emplace_back();
    layers[l].insert(mine.begin(), mine.end());
    app.layer = static_cast<int>(l);
  }
}

std::size_t max_leg_usage(const GateSchedule& s) {
  std::map<Leg, std::size_t> uses;
  for (const auto& a : s.apps) {
    std::set<Leg> mine(a.legs.begin(), a.legs.end());
    for (const Leg& leg : mine) ++uses[leg];
  }
  std::size_t best = 0;
  for (const auto& [leg, c] : uses) best = std::max(best, c);
  return best;
}

bool layering_valid(const GateSchedule& s) {
  std::map<std::pair<int, Leg>, bool> seen;
  for (const auto& a : s.apps) {
    if (a.layer < 0) return false;
    std::set<Leg> mine(a.legs.begin(), a.legs.end());
    for (const Leg& leg : mine) {
      auto key = std::make_pair(a.layer, leg);
      if (seen.count(key)) return false;
      seen[key] = true;
    }
  }
  return true;
}

namespace {

Elem leg_value(const GateSchedule& s, const BlockStates& state, const Leg& leg) {
  const std::vector<Elem>& block = state.at(leg.block);
  if (s.granularity == LegGranularity::qudit) return block.at(leg.index);
  // q-block decode: bits block[index*t .. index*t+t-1] through the basis
  Elem x = 0;
  const std::size_t t = s.block_size;
  for (std::size_t i = 0; i < t; ++i) {
    if (block.at(leg.index * t + i) & 1) x ^= s.decode_basis.elems[i];
  }
  return x;
}

}  // namespace

unsigned schedule_apply(const GateSchedule& s, const BlockStates& state) {
  unsigned phase = 0;
  std::vector<Elem> eta;
  for (const auto& app : s.apps) {
    eta.clear();
    for (const Leg& leg : app.legs) eta.push_back(leg_value(s, state, leg));
    phase ^= eval_phase(app.poly, eta);
  }
  return phase;
}

}  // namespace aqc
