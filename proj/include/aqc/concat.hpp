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

#ifndef AQC_CONCAT_HPP
#define AQC_CONCAT_HPP

#include <array>
#include <string>
#include <vector>

#include "aqc/address.hpp"
#include "aqc/css.hpp"
#include "aqc/designed.hpp"
#include "aqc/gates.hpp"

namespace aqc {

/// A qubit CSS code whose physical qubits are grouped into blocks that each
/// descend from one qudit of an earlier stage.
struct QubitCssCode {
  CssCode code;             // over GF(2)
  std::size_t block_size = 0;
  std::size_t n_blocks = 0;
  std::string stage;        // "Q1", "Q2", "Q3", "Q3p"
};

/// Self-dual-basis expansion: every qudit becomes t qubits, every stabilizer
/// and logical representative w becomes the images B(alpha_i * w). Preserves
/// commutation because B(x).B(y) = tr(xy).
QubitCssCode qudit_to_qubit(const CssCode& qudit, const SelfDualBasis& basis);

/// Promotes, per logical q-block, every logical Z except the retained one
/// into the Z stabilizers, hardcoding those logical qubits to |0>. pattern
/// gives the retained in-block index (0-based) for each logical q-block.
QubitCssCode gauge_fix(const QubitCssCode& qc, const SelfDualBasis& basis,
                       const std::vector<std::size_t>& pattern);

/// alpha_1^{-1}: V^(alpha_1^{-1}) on uniformly gauge-fixed triples applies
/// (-1)^(b1 b2 b3), by self-duality of the basis.
Elem gauge_coefficient_ccz(const SelfDualBasis& b);

/// Any beta with tr(beta * sum_{perm {a,b,c}} alpha_a^4 alpha_b^2 alpha_c)
/// = 1 over the given basis triple (0-based indices), found by scanning the
/// field. Errors when the target sum vanishes, naming a substitute triple.
Elem gauge_coefficient_w(const SelfDualBasis& b, const std::array<std::size_t, 3>& triple);

/// First basis triple (lexicographic) whose W target sum is nonzero.
std::array<std::size_t, 3> find_w_triple(const SelfDualBasis& b);

/// Degree-3 multiplication-friendly embedding of GF(2^t) into GF(2)^r.
///
/// Base construction (r = t^3): coordinates are index triples (i,j,k);
/// embed(alpha) repeats coordinate i of B(alpha), the three permutations
/// pull back (i,j,k) from (i,j,k), (j,k,i), (k,i,j), so the star product at
/// (i,j,k) is a_i b_j c_k and extraction against alpha_i alpha_j alpha_k
/// recovers the field product by trilinearity. Duplication repeats the
/// embedding `copies` times; extraction reads copy 0.
struct Mfe {
  SelfDualBasis basis;
  std::size_t base_r = 0;
  std::size_t copies = 1;
  std::array<std::vector<std::size_t>, 3> sigma;  // pullback pi_e^{-1}, size base_r
  std::vector<Elem> extract_elems;                // ME_{2->q}(e_x), copy 0 only
  Mat tmat;                                       // matrix of B o ME_{2->q}, t x r

  unsigned t() const { return basis.field->t(); }
  std::size_t r() const { return base_r * copies; }

  std::vector<std::uint8_t> embed_bits(Elem alpha) const;        // length r
  Elem extract(const std::vector<std::uint8_t>& v) const;        // ME_{2->q}
  /// Lambda(beta) = B(beta) * T, the CCZ coefficient vector (length r).
  std::vector<std::uint8_t> lambda(Elem beta) const;
  std::vector<std::uint8_t> lambda_base(Elem beta) const;        // length base_r
  /// Product identity on one triple: extract(perm-star) == a1 a2 a3.
  bool check_triple(Elem a1, Elem a2, Elem a3) const;
};

Mfe mfe_degree3(const SelfDualBasis& basis);
Mfe mfe_duplicate(const Mfe& m, std::size_t copies);

/// A gauge-fixed code whose q-blocks are further encoded through phi =
/// ME_{q->2} o B^{-1}; V gates lower to depth-1 CCZ lists with coefficients
/// Lambda(beta).
struct OuterCode {
  QubitCssCode code;
  Mfe mfe;
};

/// materialize_inner_duals controls whether the per-block C_out-dual Z
/// stabilizers are appended to zdual; larger pipelines keep them implicit
/// (they are n_blocks * (r - t) rows that no schedule check consults).
OuterCode outer_encode(const QubitCssCode& qc, const SelfDualBasis& basis, const Mfe& m,
                       bool materialize_inner_duals = true);

/// Lowers a V-gate schedule (q-block legs) to physical CCZ gates on the
/// outer code. With a duplicated MFE, layer l lands in copy l, so the result
/// is always a single layer.
GateSchedule transform_v_schedule(const OuterCode& outer, const GateSchedule& v);

/// kappa bit tables of the Z/CZ/CCZ circuit reproducing the qubit action of
/// U_7^gamma on one q-block: phase(u) = sum kappa_i u_i + sum kappa_ij
/// u_i u_j + sum kappa_ijk u_i u_j u_k = tr(gamma (B^{-1}(u))^7).
struct SigmaTables {
  unsigned t = 0;
  Elem gamma = 0;
  std::vector<unsigned> z;                    // [i]
  std::vector<unsigned> cz;                   // [i*t+j], i<j
  std::vector<unsigned> ccz;                  // [(i*t+j)*t+k], i<j<k
  unsigned phase(const std::vector<std::uint8_t>& u) const;
};

SigmaTables sigma_decompose(const SelfDualBasis& b, Elem gamma);

/// Repetition-encode every physical qubit `omega` times (Z-basis). Qubit j
/// of a block occupies copies j*omega .. j*omega+omega-1. X rows act on all
/// copies, Z rows on copy 0. With materialize_rep_z the per-qubit pair
/// stabilizers Z_{j,0} Z_{j,c} are appended to zdual; desk-scale pipelines
/// leave them implicit to keep the matrices small.
QubitCssCode duplicate_code(const QubitCssCode& qc, std::size_t omega,
                            bool materialize_rep_z = true);

/// omega = 1 + t(t-1)/2, the worst-case number of gates touching one qubit
/// in a sigma circuit.
std::size_t sigma_duplication_factor(unsigned t);

/// Depth-1 Z/CZ/CCZ schedule realizing Sigma^{gammas[i]} on q-block i of an
/// omega-duplicated code: every gate takes a fresh copy of each qubit it
/// touches, so all gates share layer 0. Legs address block 0 with qubit
/// layout (qblock * t + j) * omega + copy.
GateSchedule sigma_duplicated_schedule(const SelfDualBasis& b,
                                       const std::vector<Elem>& gammas,
                                       std::size_t omega);

/// Fully addressable qubit CCZ route: RS base over GF(n^2) -> self-dual
/// qubit expansion -> uniform gauge fix -> outer MFE encoding (plain for
/// inter-only depth 1, 4-fold duplicated for intra depth 1).
struct RsCczPipeline {
  AddressableRsCode base;
  SelfDualBasis basis;
  QubitCssCode q1, q2;
  OuterCode q3;      // plain MFE
  OuterCode q3dup;   // duplicated MFE (4 copies)
  Elem ccz_gauge;    // alpha_1^{-1}
};

RsCczPipeline build_rs_ccz_pipeline(std::size_t n, std::size_t m, std::size_t k);

/// The V-gate schedule on Q2 implementing logical CCZ on the addressed
/// triple: the qudit CCZ schedule with gamma = alpha_1^{-1}, reinterpreted
/// on q-blocks.
GateSchedule rs_pipeline_v_schedule(const RsCczPipeline& p, std::size_t A, std::size_t B,
                                   std::size_t C, const std::vector<std::size_t>& blocks);

/// The physical CCZ schedule on Q3 (plain MFE, inter-block requests) or
/// Q3' (duplicated MFE, any request); always depth 1.
GateSchedule rs_pipeline_ccz_schedule(const RsCczPipeline& p, std::size_t A, std::size_t B,
                                     std::size_t C, const std::vector<std::size_t>& blocks,
                                     bool duplicated);

/// Pre-designed triples route, instantiated on the Reed-Solomon base (the
/// algebraic-geometry base that would make it asymptotically good is out of
/// scope here), so outputs are near-good and carry the provenance note.
struct DesignedWPipeline {
  Mat base_g;
  OrthoWitness base_w;
  DesignedCode designed;
  SelfDualBasis basis;
  std::array<std::size_t, 3> w_triple;  // basis indices backing the W gauge
  Elem beta_hat;
  QubitCssCode q1, q2;  // staggered gauge fix
  std::size_t omega = 0;
  QubitCssCode q3;      // omega-fold duplicated
  std::string provenance = "near-good (RS base)";
};

DesignedWPipeline build_designed_w_pipeline(std::size_t N, std::size_t m, std::size_t k, unsigned t);

/// Sigma-gate schedule on Q2 (q-block legs) addressing designed triple A.
GateSchedule designed_pipeline_sigma_schedule(const DesignedWPipeline& p, std::size_t A);

/// Depth-1 Z/CZ/CCZ schedule on the duplicated code Q3 for triple A.
GateSchedule designed_pipeline_zczccz_schedule(const DesignedWPipeline& p, std::size_t A);

}  // namespace aqc

#endif  // AQC_CONCAT_HPP
