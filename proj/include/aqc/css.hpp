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

#ifndef AQC_CSS_HPP
#define AQC_CSS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aqc/mat.hpp"

namespace aqc {

/// Where a code's distance lower bound came from.
struct DistanceBound {
  std::size_t value = 0;
  std::string provenance;  // "exact" | "mds-bound" | "inherited"
};

/// CSS(X, G0-rowspace; Z, nullspace(G)) with k logical qudits.
///
/// g1 holds the logical-X representatives g^a (k rows), g0 a row basis of
/// the X stabilizers, zdual a basis of the Z stabilizers, and h the logical
/// Z representatives with g^a . h^b = delta_ab. h rows are the canonical
/// (lexicographically-smallest) solutions, but nothing downstream may depend
/// on that choice.
struct CssCode {
  FieldPtr field;
  std::size_t n = 0;
  std::size_t k = 0;
  Mat g1;
  Mat g0;
  Mat zdual;
  Mat h;
  DistanceBound d_lower;
};

/// Builds the quantum code from a partitioned matrix G = [G1; G0] (first k
/// rows are G1). Verifies the independence assumption (rows of G1 are
/// independent and meet the G0 row space only in 0) and solves for the
/// logical Z representatives. An analytic distance bound may be attached;
/// otherwise the bound is left at 0/"none".
CssCode build_css(const Mat& g, std::size_t k,
                  std::optional<DistanceBound> bound = std::nullopt);

std::pair<Mat, Mat> stabilizer_matrices(const CssCode& code);  // (Hx, Hz)

/// Cursor over the X-coset of logical value u: yields sum_a u_a g^a + g for
/// every g in the G0 row space, in coefficient-counter order (first element
/// has g = 0).
class CosetIter {
 public:
  CosetIter(const CssCode& code, std::vector<Elem> u, std::uint64_t budget);

  bool done() const { return idx_ >= total_; }
  std::uint64_t size() const { return total_; }
  const std::vector<Elem>& value() const { return current_; }
  void advance();

 private:
  const CssCode* code_;
  std::vector<Elem> coeff_;
  std::vector<Elem> current_;
  std::uint64_t idx_ = 0;
  std::uint64_t total_ = 1;
};

CosetIter enumerate_coset(const CssCode& code, const std::vector<Elem>& u,
                          std::uint64_t budget = (1ull << 24));

/// Exact distance min(d_X, d_Z) over the logical (non-stabilizer) classes by
/// full enumeration. Errors when k = 0 (no logical class) or over budget.
std::size_t quantum_distance_bruteforce(const CssCode& code,
                                        std::uint64_t budget = (1ull << 24));

}  // namespace aqc

#endif  // AQC_CSS_HPP
