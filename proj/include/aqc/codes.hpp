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

#ifndef AQC_CODES_HPP
#define AQC_CODES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "aqc/mat.hpp"

namespace aqc {

/// Distinct evaluation points in GF(q).
struct EvalPoints {
  FieldPtr field;
  std::vector<Elem> points;
};

EvalPoints eval_points(const FieldPtr& f, std::vector<Elem> pts);

/// Generator of RS_{N,m}: row a holds the evaluations of x^(a-1).
Mat rs_generator(const EvalPoints& pts, std::size_t m);

/// Remove the columns in T (indices into [0, cols)).
Mat puncture(const Mat& m, const std::vector<std::size_t>& T);

/// Basis of {c in rowspace(m) : c|_T = 0}, with the T columns removed.
Mat shorten(const Mat& m, const std::vector<std::size_t>& T);

/// The nonzero weights nu with sum_i nu_i f(pts_i) = 0 for every polynomial
/// of degree < N-1, normalized so the last coefficient is 1. Solved from the
/// (N-1) x N Vandermonde system in the monomial basis.
std::vector<Elem> grs_dual_coeffs(const EvalPoints& pts);

/// Coefficients with f(target) = sum_i Gamma_i f(pts_i) for all polynomials
/// of degree < |pts|; the target coefficient is normalized to 1.
std::vector<Elem> interpolation_vector(const EvalPoints& pts, Elem target);

/// Row-reduce so the first k columns become (I_k; 0); returns the remaining
/// columns split into the first k rows (G1) and the rest (G0).
std::pair<Mat, Mat> partially_systematic(const Mat& m, std::size_t k);

/// Exact minimum Hamming weight of the row space by full enumeration.
/// Refuses when q^rank exceeds the budget.
std::size_t min_weight_bruteforce(const Mat& m, std::uint64_t budget);

}  // namespace aqc

#endif  // AQC_CODES_HPP
