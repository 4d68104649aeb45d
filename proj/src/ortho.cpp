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

#include "aqc/ortho.hpp"

#include <algorithm>

namespace aqc {

std::string to_string(OrthoKind k) {
  switch (k) {
    case OrthoKind::plain: return "plain";
    case OrthoKind::strong: return "strong";
    case OrthoKind::addressable: return "addressable";
    case OrthoKind::addressable_strong: return "addressable_strong";
  }
  return "?";
}

OrthoKind ortho_kind_from_string(const std::string& s) {
  if (s == "plain") return OrthoKind::plain;
  if (s == "strong") return OrthoKind::strong;
  if (s == "addressable") return OrthoKind::addressable;
  if (s == "addressable_strong") return OrthoKind::addressable_strong;
  throw InvalidInput("unknown orthogonality kind: " + s);
}

namespace {

// All defining sums are symmetric in the row tuple, so it suffices to
// enumerate nondecreasing tuples; the first violating nondecreasing tuple is
// also the lexicographically-first violating tuple overall. The recursion
// carries the running componentwise product so prefixes (needed for the
// strong kinds) come for free.
struct TupleChecker {
  const Mat& g;
  std::size_t k;
  const std::vector<Elem>& gamma;
  const std::vector<Elem>& tau;
  std::size_t address;      // 0-based A; k means "non-addressable"
  unsigned max_len;
  bool check_prefixes;      // strong kinds check every length <= max_len
  OrthoCheck* out;

  bool violated(const std::vector<std::size_t>& tuple, Elem got) {
    const std::size_t a1 = tuple.front();
    bool all_equal = std::all_of(tuple.begin(), tuple.end(),
                                 [&](std::size_t a) { return a == a1; });
    Elem want = 0;
    if (all_equal) {
      if (address < k) {
        if (a1 == address) want = tau[a1];
      } else if (a1 < k) {
        want = tau[a1];
      }
    }
    if (got == want) return false;
    out->ok = false;
    out->counterexample = OrthoCounterexample{address < k ? address : 0, tuple, got, want};
    return true;
  }

  // products[i] = prod of g rows chosen so far at column i.
  bool recurse(std::vector<std::size_t>& tuple, std::vector<Elem>& products,
               std::size_t from) {
    const Field& f = *g.field();
    if (!tuple.empty() && (check_prefixes || tuple.size() == max_len)) {
      Elem got = 0;
      for (std::size_t i = 0; i < g.cols(); ++i)
        got = f.add(got, f.mul(gamma[i], products[i]));
      if (violated(tuple, got)) return true;
    }
    if (tuple.size() == max_len) return false;
    for (std::size_t a = from; a < g.rows(); ++a) {
      std::vector<Elem> next(g.cols());
      for (std::size_t i = 0; i < g.cols(); ++i) next[i] = f.mul(products[i], g.at(a, i));
      tuple.push_back(a);
      if (recurse(tuple, next, a)) return true;
      tuple.pop_back();
    }
    return false;
  }
};

}  // namespace

OrthoCheck check_orthogonality(const Mat& g, std::size_t k, const OrthoWitness& w) {
  if (k > g.rows()) throw InvalidInput("k exceeds row count");
  if (w.tau.size() != k) throw InvalidInput("tau length must equal k");
  std::size_t expected_gammas = w.is_addressable() ? k : 1;
  if (w.gamma.size() != expected_gammas)
    throw InvalidInput("witness gamma family has wrong size");
  for (const auto& gm : w.gamma)
    if (gm.size() != g.cols()) throw InvalidInput("gamma length must equal column count");
  for (Elem t : w.tau)
    if (t == 0) throw InvalidInput("tau entries must be nonzero");

  OrthoCheck res;
  std::vector<std::size_t> addresses;
  if (w.is_addressable()) {
    for (std::size_t a = 0; a < k; ++a) addresses.push_back(a);
  } else {
    addresses.push_back(k);  // sentinel: non-addressable case split
  }
  for (std::size_t a : addresses) {
    const std::vector<Elem>& gamma = w.is_addressable() ? w.gamma[a] : w.gamma[0];
    TupleChecker checker{g, k, gamma, w.tau, a, w.ell, w.is_strong(), &res};
    std::vector<std::size_t> tuple;
    std::vector<Elem> products(g.cols(), 1);
    if (checker.recurse(tuple, products, 0)) return res;
  }
  return res;
}

OrthoWitness gamma_from_addressable(const FieldPtr& f, const OrthoWitness& w) {
  if (!w.is_addressable()) throw InvalidInput("witness is not addressable");
  if (w.gamma.empty()) throw InvalidInput("cannot sum an empty witness family");
  std::vector<Elem> sum(w.gamma[0].size(), 0);
  for (const auto& gm : w.gamma)
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = f->add(sum[i], gm[i]);
  OrthoWitness out;
  out.kind = w.kind == OrthoKind::addressable_strong ? OrthoKind::strong : OrthoKind::plain;
  out.ell = w.ell;
  out.gamma = {std::move(sum)};
  out.tau = w.tau;
  return out;
}

OrthoWitness addressable_from_ortho(const Mat& g, std::size_t k, const OrthoWitness& w,
                                    unsigned ell) {
  if (w.is_addressable()) throw InvalidInput("witness is already addressable");
  const Field& f = *g.field();
  OrthoWitness out;
  out.tau = w.tau;
  if (w.kind == OrthoKind::strong) {
    // strong (ell-bar + 1) -> addressable strong ell-bar, Gamma^A = Gamma * g^A
    if (ell + 1 != w.ell)
      throw InvalidInput("strong witness of ell-bar+1 required for addressable strong ell-bar");
    out.kind = OrthoKind::addressable_strong;
    out.ell = ell;
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<Elem> gm(g.cols());
      for (std::size_t i = 0; i < g.cols(); ++i) gm[i] = f.mul(w.gamma[0][i], g.at(a, i));
      out.gamma.push_back(std::move(gm));
    }
    return out;
  }
  // plain ell-bar -> addressable ell for ell < ell-bar,
  // Gamma^A = Gamma * g^A * ... * g^A (ell-bar - ell copies)
  if (ell >= w.ell) throw InvalidInput("requested ell must be below the witness ell");
  out.kind = OrthoKind::addressable;
  out.ell = ell;
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Elem> gm = w.gamma[0];
    for (unsigned c = 0; c < w.ell - ell; ++c)
      for (std::size_t i = 0; i < g.cols(); ++i) gm[i] = f.mul(gm[i], g.at(a, i));
    out.gamma.push_back(std::move(gm));
  }
  return out;
}

OrthoCheck check_multiplication_property(const Mat& basis, unsigned ell,
                                         const std::vector<Elem>& sigma, bool strong) {
  if (sigma.size() != basis.cols()) throw InvalidInput("sigma length must equal code length");
  OrthoCheck res;
  // Reuse the tuple walker with k = 0: every sum must vanish.
  std::vector<Elem> tau;
  TupleChecker checker{basis, 0, sigma, tau, 0, ell, strong, &res};
  std::vector<std::size_t> tuple;
  std::vector<Elem> products(basis.cols(), 1);
  checker.recurse(tuple, products, 0);
  return res;
}

std::pair<Mat, OrthoWitness> mult_to_ortho(const Mat& c, std::size_t k,
                                           const std::vector<Elem>& sigma, unsigned ell,
                                           bool strong) {
  if (sigma.size() != c.cols()) throw InvalidInput("sigma length must equal code length");
  for (std::size_t i = 0; i < k; ++i)
    if (sigma[i] == 0) throw InvalidInput("sigma must be nonzero on the punctured coordinates");
  auto [g1, g0] = partially_systematic(c, k);
  Mat g = g1.vstack(g0);
  OrthoWitness w;
  w.kind = strong ? OrthoKind::strong : OrthoKind::plain;
  w.ell = ell;
  w.gamma = {std::vector<Elem>(sigma.begin() + static_cast<std::ptrdiff_t>(k), sigma.end())};
  w.tau = std::vector<Elem>(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(k));
  return {g, w};
}

std::pair<Mat, OrthoWitness> rs_addressable_matrix(const FieldPtr& f, std::size_t N,
                                                   std::size_t m, std::size_t k,
                                                   unsigned ellbar) {
  if (N > f->q()) throw InvalidInput("q >= N required");
  if (k > m) throw InvalidInput("k <= m required");
  if (k == 0 || m >= N) throw InvalidInput("0 < k <= m < N required");
  std::size_t n = N - k;
  // m < 1 + n/ell-bar, exactly: ell-bar * (m-1) < n
  if (static_cast<std::size_t>(ellbar) * (m - 1) >= n)
    throw InvalidInput("m < 1 + n/ell-bar violated");
  std::vector<Elem> all_pts(N);
  for (std::size_t i = 0; i < N; ++i) all_pts[i] = static_cast<Elem>(i);
  Mat rs = rs_generator(eval_points(f, all_pts), m);
  auto [g1, g0] = partially_systematic(rs, k);
  Mat g = g1.vstack(g0);
  std::vector<Elem> tail(all_pts.begin() + static_cast<std::ptrdiff_t>(k), all_pts.end());
  EvalPoints rest = eval_points(f, tail);
  OrthoWitness w;
  w.kind = OrthoKind::addressable_strong;
  w.ell = ellbar;
  w.tau.assign(k, 1);
  for (std::size_t a = 0; a < k; ++a)
    w.gamma.push_back(interpolation_vector(rest, all_pts[a]));
  return {g, w};
}

}  // namespace aqc
