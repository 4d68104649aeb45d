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

#ifndef AQC_VERIFY_HPP
#define AQC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "aqc/address.hpp"
#include "aqc/css.hpp"
#include "aqc/gates.hpp"

namespace aqc {

/// Deterministic PRNG shared by every sampled check. One 64-bit word of
/// state; the update and output constants are fixed so any implementation
/// reproduces the same trial sequence:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
///   z = (z ^ z>>27) * 0x94D049BB133111EB; output z ^ z>>31
/// Bounded draws are `next() % bound`.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// One factor u[block][index]^exp of an expected logical phase monomial.
struct LogicalFactor {
  std::size_t block = 0;
  std::size_t index = 0;
  unsigned exp = 1;
};

struct LogicalMonomial {
  Elem coeff = 0;
  std::vector<LogicalFactor> factors;
};

/// Expected logical action of a diagonal schedule: the phase on logical
/// values (u^(1), ..., u^(e)) is (-1)^tr(sum of monomials).
struct LogicalSpec {
  FieldPtr field;
  std::size_t blocks = 1;
  std::vector<LogicalMonomial> monomials;
};

unsigned logical_phase(const LogicalSpec& spec, const std::vector<std::vector<Elem>>& u);

/// tr(gamma * u_{A1} u_{A2} ... u_{Al}) with one factor per block.
LogicalSpec cnz_logical_spec(const FieldPtr& f, const std::vector<std::size_t>& blocks,
                             const std::vector<std::size_t>& addresses, Elem gamma);

struct VerifyFailure {
  std::vector<std::vector<Elem>> logical;  // per block
  std::vector<std::vector<Elem>> coset;    // per block, G0 coefficients
  unsigned got = 0;
  unsigned want = 0;
};

struct VerifyReport {
  std::string mode;  // "exhaustive" | "sampled" | "identity"
  std::uint64_t checked = 0;
  std::vector<VerifyFailure> failures;  // capped at 32 entries
  std::uint64_t failure_count = 0;

  bool pass() const { return failure_count == 0; }
  void record(VerifyFailure f);
};

/// Enumerates every tuple of logical values and coset coefficients per
/// block, applies the schedule to the physical vectors and compares against
/// the spec's phase. Because the expected phase depends only on the logical
/// values, a pass certifies coset-constancy (codespace preservation for
/// diagonal gates) along with the logical action.
VerifyReport verify_exhaustive(const std::vector<const CssCode*>& codes,
                               const GateSchedule& s, const LogicalSpec& spec,
                               std::uint64_t budget = (1ull << 26));

/// Seeded random (logical, coset) tuples with exact phase comparison.
VerifyReport verify_sampled(const std::vector<const CssCode*>& codes, const GateSchedule& s,
                            const LogicalSpec& spec, std::uint64_t trials,
                            std::uint64_t seed);

/// The finite monomial-sum identities the paper's proofs reduce to, for the
/// Reed-Solomon addressing route: for all row triples (a1,a2,a3), the
/// Delta-shifted product sum against Gamma^A must be 1 exactly on
/// (a1,a2,a3) = (A,B,C) and 0 elsewhere.
VerifyReport verify_rs_identities(const AddressableRsCode& c, std::size_t A, std::size_t B,
                                  std::size_t C);

/// Orthogonality-witness identities (delegates to check_orthogonality).
VerifyReport verify_witness_identities(const Mat& g, std::size_t k, const OrthoWitness& w);

}  // namespace aqc

#endif  // AQC_VERIFY_HPP
