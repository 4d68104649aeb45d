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

#ifndef AQC_ORTHO_HPP
#define AQC_ORTHO_HPP

#include <optional>
#include <string>
#include <vector>

#include "aqc/codes.hpp"
#include "aqc/mat.hpp"

namespace aqc {

enum class OrthoKind { plain, strong, addressable, addressable_strong };

std::string to_string(OrthoKind k);
OrthoKind ortho_kind_from_string(const std::string& s);

/// Witness for one of the four orthogonality properties of a partitioned
/// matrix G = [G1; G0] with k marked rows.
///
/// gamma holds a single vector for the plain/strong kinds and one vector per
/// A in [k] for the addressable kinds. tau has k nonzero entries; the
/// defining sums must hit tau_{a} on the all-equal index tuples and vanish
/// elsewhere.
struct OrthoWitness {
  OrthoKind kind = OrthoKind::plain;
  unsigned ell = 0;  // ell for plain/addressable, ell-bar for strong kinds
  std::vector<std::vector<Elem>> gamma;
  std::vector<Elem> tau;

  bool is_addressable() const {
    return kind == OrthoKind::addressable || kind == OrthoKind::addressable_strong;
  }
  bool is_strong() const {
    return kind == OrthoKind::strong || kind == OrthoKind::addressable_strong;
  }
};

/// First violating tuple of an orthogonality or multiplication check.
struct OrthoCounterexample {
  std::size_t address = 0;  // A (0-based), meaningful for addressable kinds
  std::vector<std::size_t> tuple;  // row indices (0-based), nondecreasing
  Elem got = 0;
  Elem want = 0;
};

struct OrthoCheck {
  bool ok = true;
  std::optional<OrthoCounterexample> counterexample;
};

/// Evaluates the defining sums of the witness's kind over all (multisets of)
/// row tuples, all lengths <= ell for strong kinds, and all addresses for
/// addressable kinds. Returns the lexicographically-first violation.
OrthoCheck check_orthogonality(const Mat& g, std::size_t k, const OrthoWitness& w);

/// Gamma = sum_A Gamma^A turns an addressable witness into the plain/strong
/// witness of the same ell.
OrthoWitness gamma_from_addressable(const FieldPtr& f, const OrthoWitness& w);

/// Componentwise-product construction: a plain ell-bar witness yields an
/// addressable ell witness for any ell < ell-bar; a strong (ell-bar+1)
/// witness yields an addressable strong ell-bar witness.
OrthoWitness addressable_from_ortho(const Mat& g, std::size_t k, const OrthoWitness& w,
                                    unsigned ell);

/// sum_i sigma_i c^1_i ... c^l_i = 0 for all tuples of basis codewords
/// (sufficient by multilinearity); strong checks every length <= ell.
OrthoCheck check_multiplication_property(const Mat& basis, unsigned ell,
                                         const std::vector<Elem>& sigma, bool strong);

/// A code with the (strong) ell-multiplication property w.r.t. sigma,
/// with sigma nonzero on the first k coordinates, yields the partitioned
/// matrix G of the punctured code with the (strong) ell-orthogonality
/// property w.r.t. Gamma = sigma restricted off the first k coordinates and
/// tau = sigma on them.
std::pair<Mat, OrthoWitness> mult_to_ortho(const Mat& c, std::size_t k,
                                           const std::vector<Elem>& sigma, unsigned ell,
                                           bool strong);

/// Reed-Solomon construction of an addressable strong ell-bar-orthogonal
/// matrix with tau = 1^k: points are the first N field elements, the code is
/// split systematically on the first k of them, and Gamma^A interpolates
/// the A-th point from the remaining n. Requires m < 1 + n/ell-bar, k <= m,
/// q >= N.
std::pair<Mat, OrthoWitness> rs_addressable_matrix(const FieldPtr& f, std::size_t N,
                                                   std::size_t m, std::size_t k,
                                                   unsigned ellbar);

}  // namespace aqc

#endif  // AQC_ORTHO_HPP
