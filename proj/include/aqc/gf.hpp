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

#ifndef AQC_GF_HPP
#define AQC_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "aqc/error.hpp"

namespace aqc {

/// A field element of GF(2^t), encoded as the bit-vector of its coefficients
/// in the polynomial basis of the field's modulus. Always < 2^t.
using Elem = std::uint32_t;

/// Exact arithmetic in GF(2^t) for 1 <= t <= 16.
///
/// The modulus is the lexicographically-smallest (by bit-encoding)
/// irreducible polynomial of degree t, found by exhaustive scan, so a Field
/// is fully determined by t and every run reproduces the same encodings.
/// Multiplication and inversion go through exp/log tables built from the
/// smallest multiplicative generator.
///
/// Immutable after construction; all operations are pure.
class Field {
 public:
  explicit Field(unsigned t);

  unsigned t() const { return t_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t irred_bits() const { return irred_; }

  Elem add(Elem a, Elem b) const { return a ^ b; }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }

  Elem inv(Elem a) const {
    if (a == 0) throw InvalidInput("inv(0) is undefined");
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
  }

  /// a^e with the convention 0^0 = 1.
  Elem pow(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (q_ == 2) return 1;
    return exp_[static_cast<std::uint32_t>((log_[a] * e) % (q_ - 1))];
  }

  /// tr(x) = sum_{i<t} x^(2^i), always in {0,1}.
  unsigned trace(Elem x) const { return trace_[x]; }

  /// The n = 2^s elements with x^n = x, sorted by encoding. Requires s | t.
  std::vector<Elem> subfield_elements(std::uint32_t n) const;

  bool operator==(const Field& o) const {
    return t_ == o.t_ && irred_ == o.irred_;
  }

 private:
  unsigned t_;
  std::uint32_t q_;
  std::uint32_t irred_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i
  std::vector<std::uint8_t> trace_;

  // Table-free product, used only while bootstrapping the tables.
  Elem mul_slow(Elem a, Elem b) const;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Returns the process-wide shared context for GF(2^t).
FieldPtr field_new(unsigned t);

/// A basis {a_1..a_t} of GF(2^t) over GF(2) with tr(a_i a_j) = delta_ij.
///
/// Found deterministically: for t <= 5 a pruned depth-first scan returns the
/// lexicographically-smallest tuple; for t >= 6 the Gram matrix of a normal
/// basis seed is symmetrized to the identity. Either way the result is
/// re-verified against all t^2 trace checks before being returned.
struct SelfDualBasis {
  FieldPtr field;
  std::vector<Elem> elems;
};

SelfDualBasis self_dual_basis(const FieldPtr& f);

/// Coordinates of x in a self-dual basis: s_i = tr(x * a_i).
std::vector<std::uint8_t> decomp(const SelfDualBasis& b, Elem x);

/// Inverse of decomp: sum of s_i * a_i.
Elem recomp(const SelfDualBasis& b, const std::vector<std::uint8_t>& s);

}  // namespace aqc

#endif  // AQC_GF_HPP
