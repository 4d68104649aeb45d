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

#ifndef AQC_TRI_T_HPP
#define AQC_TRI_T_HPP

#include <cstdint>
#include <vector>

#include "aqc/mat.hpp"
#include "aqc/verify.hpp"

namespace aqc {

/// Addressable triorthogonal data over GF(2): the matrix, the per-address
/// vectors Gamma^A, and the coefficient-recovery matrix B with B G^T = I
/// (rows of G must be independent; prune G0 to a basis first).
struct TriWitness {
  Mat g;
  std::size_t k = 0;
  std::vector<std::vector<Elem>> gammas;
  Mat bmat;
};

/// Defining-sum check: sum_i Gamma^A_i g^a1_i g^a2_i g^a3_i = 1 exactly when
/// a1 = a2 = a3 = A.
bool is_addressable_triorthogonal(const Mat& g, std::size_t k,
                                  const std::vector<std::vector<Elem>>& gammas);

/// Desk-scale instantiation (not from any published construction): puncture
/// the full RM(1, m_) evaluation matrix on k independent coordinates; the
/// all-ones sigma gives strong 4-multiplication for m_ >= 5, and the
/// componentwise-product lemma turns the resulting strong 4-orthogonality
/// into addressable strong 3. Requires k <= m_ + 1 and k < 2^(m_-1).
std::pair<Mat, std::vector<std::vector<Elem>>> rm_tri_matrix(unsigned m_, std::size_t k);

TriWitness make_tri_witness(const Mat& g, std::size_t k,
                            const std::vector<std::vector<Elem>>& gammas);

/// The Clifford correction U_A = prod_i (Sdg[i])^kappa_i prod_{i<j}
/// CZ[i,j]^kappa_ij cancelling the junk phase of T^{Gamma^A}. kappa_i is
/// mod 4 (powers of S-dagger), kappa_ij mod 2.
struct CliffordCorrection {
  std::vector<unsigned> kappa_i;      // size n, values mod 4
  std::vector<unsigned> kappa_ij;     // flattened i*n+j for i<j, values mod 2
  std::size_t n = 0;
};

CliffordCorrection clifford_correction(const TriWitness& w, std::size_t A);

/// Exhaustive Z_8 phase check over every coefficient vector u in F_2^m:
/// with f = sum u_a g^a, the total exponent of exp(i pi/4) accumulated by
/// U_A T^{Gamma^A} on |f> must equal u_A mod 8. Integer arithmetic only.
VerifyReport verify_t_addressing(const TriWitness& w, std::size_t A,
                                 std::uint64_t budget = (1ull << 24));

/// Same check with an externally supplied correction (for sensitivity
/// probes on corrupted kappa tables).
VerifyReport verify_t_addressing_with(const TriWitness& w, std::size_t A,
                                      const CliffordCorrection& corr,
                                      std::uint64_t budget = (1ull << 24));

}  // namespace aqc

#endif  // AQC_TRI_T_HPP
