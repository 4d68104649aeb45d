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

#ifndef AQC_GATES_HPP
#define AQC_GATES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "aqc/gf.hpp"

namespace aqc {

/// One monomial of a diagonal phase polynomial: coeff * prod_j x_j^exps[j].
struct PhaseMonomial {
  Elem coeff = 0;
  std::vector<unsigned> exps;
};

/// A diagonal gate on `arity` qudits with +-1 entries: the phase on input
/// (eta_1..eta_e) is (-1)^tr(sum of monomials evaluated at eta).
struct PhasePoly {
  FieldPtr field;
  unsigned arity = 0;
  std::vector<PhaseMonomial> monomials;

  /// beta * x1 x2 ... xl (CZ-family; l = 3 is CCZ).
  static PhasePoly cnz(const FieldPtr& f, unsigned ell, Elem beta);
  /// beta * x^ell on one qudit.
  static PhasePoly uql(const FieldPtr& f, unsigned ell, Elem beta);
  /// beta * sum over permutations {a,b,c} = {1,2,3} of x_a^4 x_b^2 x_c.
  static PhasePoly w_gate(const FieldPtr& f, Elem beta);

  PhasePoly scaled(Elem beta) const;
  bool homogeneous_of_degree(unsigned ell) const;
  unsigned degree() const;
};

/// Exponent of -1 on the given input tuple.
unsigned eval_phase(const PhasePoly& g, const std::vector<Elem>& eta);

struct Leg {
  std::size_t block = 0;
  std::size_t index = 0;  // qudit index, or q-block index (see granularity)
  bool operator==(const Leg& o) const { return block == o.block && index == o.index; }
  bool operator<(const Leg& o) const {
    return block != o.block ? block < o.block : index < o.index;
  }
};

struct Application {
  std::string gate;  // family label for serialization ("CCZ", "U7", "V", ...)
  Elem beta = 0;
  PhasePoly poly;    // semantics, with beta folded in
  std::vector<Leg> legs;
  int layer = -1;
};

/// How an application's legs address the state: plain qudit indices, or
/// q-block indices into a qubit code where each block of `block_size` bits
/// decodes to a field element through the self-dual basis.
enum class LegGranularity { qudit, qblock };

/// A list of diagonal gate applications with a layer assignment. Repeated
/// legs within one application are legal (they merge exponents) and count as
/// a single usage for layering.
struct GateSchedule {
  std::vector<Application> apps;
  LegGranularity granularity = LegGranularity::qudit;
  // Set for qblock granularity: the decode basis and block size.
  SelfDualBasis decode_basis;
  std::size_t block_size = 0;

  int depth() const;
};

/// Greedy conflict-graph layering: applications sorted by first leg, each
/// placed in the lowest layer that shares no (block, index) with it.
void schedule_layer_greedy(GateSchedule& s);

/// Largest number of applications any single (block, index) occurs in.
std::size_t max_leg_usage(const GateSchedule& s);

/// True when no two applications in one layer share a leg and all layers
/// are assigned.
bool layering_valid(const GateSchedule& s);

/// Per-block state: state[b] is the vector addressed by block b's legs.
using BlockStates = std::vector<std::vector<Elem>>;

/// Total phase bit of the schedule on the given state; order-independent
/// since every gate is diagonal.
unsigned schedule_apply(const GateSchedule& s, const BlockStates& state);

}  // namespace aqc

#endif  // AQC_GATES_HPP
