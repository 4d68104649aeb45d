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

#ifndef AQC_DESIGNED_HPP
#define AQC_DESIGNED_HPP

#include <array>
#include <optional>

#include "aqc/css.hpp"
#include "aqc/gates.hpp"
#include "aqc/ortho.hpp"

namespace aqc {

/// The fixed 3x7 binary matrix whose rows have even weight, even pairwise
/// overlap and odd triple overlap; those four parities are all the designed
/// construction uses.
extern const std::array<std::array<unsigned, 7>, 3> kDesignedM;

/// Code with pre-designed intra-block triples addressed by the 3-qudit W
/// gate through transversal U_7 circuits. Built from an addressable strong
/// 7-orthogonal base (tau = 1^k) by compressing each group of seven G1 rows
/// into three M-combinations.
struct DesignedCode {
  FieldPtr field;
  Mat g;                 // base matrix (rows possibly refolded so k = 7k')
  std::size_t k = 0;     // marked rows of the base, = 7 k'
  std::size_t kprime = 0;
  std::size_t mprime = 0;  // rows of H = 3k' + (m - 7k')
  Mat h;                 // [H1; G0]
  CssCode codeM;         // CSS code on H with 3k' logical qudits
  std::vector<std::vector<Elem>> gammas;   // Gamma^A of the base, A in [k]
  std::vector<std::vector<Elem>> lambdas;  // Lambda^A = sum_{j} Gamma^{7A+j}
};

/// Wrong witness kind errors; k not divisible by 7 folds the leftover G1
/// rows into G0 (dropping those logical qudits) before building.
DesignedCode build_designed(const Mat& g, const OrthoWitness& w, std::size_t k);

struct DesignedCounterexample {
  std::size_t A = 0;
  std::array<unsigned, 3> degrees{};  // D1 + D2 + D3 = 7
  std::array<std::size_t, 3> rows{};  // a, b, c (0-based into H)
  Elem got = 0;
  Elem want = 0;
};

struct DesignedCheck {
  bool ok = true;
  std::uint64_t checked = 0;
  std::optional<DesignedCounterexample> counterexample;
};

/// All 36 degree-7 exponent triples against all (a,b,c) in [m']^3 and every
/// designed address: the sum over Lambda^A must be 1 exactly on the
/// designated triple with all exponents nonzero, 0 otherwise (including
/// every zero-exponent case).
DesignedCheck check_extended_orthogonality(const DesignedCode& d);

/// Depth-1 schedule of single-qudit U_7^{beta Lambda^A_i} gates whose
/// logical action is W^beta on qudits (3A+1, 3A+2, 3A+3). A is 0-based.
GateSchedule designed_w_schedule(const DesignedCode& d, std::size_t A, Elem beta);

/// The characteristic-2 expansion of (sum_a u_a h_a)^7 into the 7th-power,
/// (6,1)/(5,2)/(4,3) pair, and (4,2,1) triple terms; equals the direct
/// seventh power for every input.
Elem pow7_expand(const FieldPtr& f, const std::vector<Elem>& coeffs,
                 const std::vector<Elem>& values);

}  // namespace aqc

#endif  // AQC_DESIGNED_HPP
