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

#ifndef AQC_ADDRESS_HPP
#define AQC_ADDRESS_HPP

#include <vector>

#include "aqc/css.hpp"
#include "aqc/gates.hpp"
#include "aqc/ortho.hpp"

namespace aqc {

/// The Reed-Solomon code over GF(n^2) whose physical qudits are the order-n
/// subfield K and whose logical addresses live in the coset zeta + K. Any
/// logical triple can be hit with CCZ because the shifts Delta_{A,B} between
/// addresses stay inside K and permute the physical qudits.
///
/// Logical addresses are 0-based here; the CLI surface is 1-based.
struct AddressableRsCode {
  FieldPtr field;              // q = n^2
  CssCode code;
  std::size_t m = 0;           // RS dimension
  std::vector<Elem> alphas;    // the subfield K, sorted by encoding
  Elem zeta = 0;               // smallest element outside K
  std::vector<Elem> betas;     // beta_A = zeta + alphas[A], A in [0,k)
  std::vector<std::vector<Elem>> gammas;  // Gamma^A, length n each
  std::vector<std::vector<Elem>> gtilde;  // rows of the partially systematic
                                          // generator over all N points
                                          // (beta columns first)

  std::size_t n() const { return alphas.size(); }
  std::size_t k() const { return betas.size(); }
  std::size_t qudit_of(Elem alpha) const;
  Elem delta(std::size_t A, std::size_t B) const;  // beta_A + beta_B, in K
};

/// n a power of two, q = n^2 (t = 2 log2 n <= 16), m < n/3 + 1, k <= m.
AddressableRsCode build_rs_addressable(std::size_t n, std::size_t m, std::size_t k);

/// One logical C^(l-1)Z triple/tuple request: ell addresses plus gamma.
struct GateRequest {
  std::vector<std::size_t> addresses;  // A_1..A_ell, 0-based
  Elem gamma = 0;
};

/// Intra-block CCZ^gamma[A,B,C]: n physical CCZ gates shifted by Delta_{A,B}
/// and Delta_{A,C}, layered by the coset of span{Delta_AB, Delta_AC} (depth
/// <= 4, each qudit used <= 3 times). Zero-coefficient gates are dropped.
GateSchedule intra_ccz_schedule(const AddressableRsCode& c, std::size_t A, std::size_t B,
                                std::size_t C, Elem gamma);

/// Inter-block CCZ^gamma_{b1 b2 b3}[A,B,C]; depth 1 for distinct blocks,
/// depth <= 2 when two blocks coincide.
GateSchedule inter_ccz_schedule(const AddressableRsCode& c, std::size_t A, std::size_t B,
                                std::size_t C, Elem gamma,
                                const std::vector<std::size_t>& blocks = {0, 1, 2});

/// Generalization to C^(l-1)Z for ell <= 5 (requires m < 1 + n/ell).
GateSchedule cnz_schedule(const AddressableRsCode& c, const GateRequest& req,
                          const std::vector<std::size_t>& blocks);

/// Further generalization to polynomial gates U_P on e addressed legs: the
/// same Delta shifts carry every monomial at once, since the legs depend
/// only on the addresses. Requires deg(P) * (m - 1) < n and deg(P) <= 5.
GateSchedule poly_shift_schedule(const AddressableRsCode& c, const PhasePoly& p,
                                 const std::vector<std::size_t>& addresses, Elem gamma,
                                 const std::vector<std::size_t>& blocks);

/// Several triples sharing the same (Delta_AB, Delta_AC) merge into one
/// schedule with summed coefficients and unchanged depth.
GateSchedule merged_triples_schedule(const AddressableRsCode& c,
                                     const std::vector<GateRequest>& triples,
                                     const std::vector<std::size_t>& blocks);

enum class SingleIndexFamily { uql, cnz, upoly };

/// Single-index addressing from an orthogonality witness: one application
/// per column with coefficient beta * Gamma^A_i, depth 1. The logical effect
/// carries the tau_A factor: U^{beta tau_A} on index A.
///
/// Witness requirements: addressable ell for U_ell and C^(l-1)Z; addressable
/// strong ell for a general degree-ell polynomial; a homogeneous degree-ell
/// polynomial is exempt and accepts a plain addressable ell witness.
GateSchedule single_index_schedule(const Mat& g, std::size_t k, const OrthoWitness& w,
                                   std::size_t A, SingleIndexFamily family, Elem beta,
                                   unsigned ell, const PhasePoly* poly = nullptr);

}  // namespace aqc

#endif  // AQC_ADDRESS_HPP
