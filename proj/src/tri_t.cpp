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

#include "aqc/tri_t.hpp"

#include <algorithm>
#include <numeric>

#include "aqc/ortho.hpp"

namespace aqc {

bool is_addressable_triorthogonal(const Mat& g, std::size_t k,
                                  const std::vector<std::vector<Elem>>& gammas) {
  if (g.field()->q() != 2) throw InvalidInput("addressable triorthogonality is binary");
  OrthoWitness w;
  w.kind = OrthoKind::addressable;
  w.ell = 3;
  w.gamma = gammas;
  w.tau.assign(k, 1);
  return check_orthogonality(g, k, w).ok;
}

std::pair<Mat, std::vector<std::vector<Elem>>> rm_tri_matrix(unsigned m_, std::size_t k) {
  FieldPtr f2 = field_new(1);
  const std::size_t N = 1ull << m_;
  // The top degree-4 monomial must have even weight over F_2^{m_}, or
  // degree-4 products of rows escape the multiplication property.
  if (m_ < 3) throw InvalidInput("m_ too small");
  {
    unsigned parity = 0;
    for (std::size_t p = 0; p < N; ++p) {
      unsigned prod = (p & 1) && (p >> 1 & 1) && (p >> 2 & 1) && (m_ >= 4 ? (p >> 3 & 1) : 1);
      parity ^= prod;
    }
    if (parity)
      throw InvalidInput("RM(1," + std::to_string(m_) +
                         ") lacks strong 4-multiplication: the degree-4 monomial has odd "
                         "weight; need m_ >= 5");
  }
  if (k > m_ + 1) throw InvalidInput("k exceeds the RM(1,m_) dimension");
  if (k >= (N >> 1)) throw InvalidInput("k must stay below the code distance 2^(m_-1)");

  // Full evaluation matrix: all-ones row plus the m_ coordinate rows.
  Mat rm(f2, m_ + 1, N);
  for (std::size_t p = 0; p < N; ++p) {
    rm.at(0, p) = 1;
    for (unsigned i = 0; i < m_; ++i) rm.at(1 + i, p) = (p >> i) & 1;
  }
  // Move k independent columns to the front: the points 0, 1, 2, 4, 8, ...
  std::vector<std::size_t> front;
  front.push_back(0);
  for (unsigned i = 0; front.size() < k; ++i) front.push_back(1ull << i);
  std::vector<std::size_t> order = front;
  {
    std::vector<bool> used(N, false);
    for (std::size_t p : front) used[p] = true;
    for (std::size_t p = 0; p < N; ++p)
      if (!used[p]) order.push_back(p);
  }
  Mat perm(f2, m_ + 1, N);
  for (std::size_t r = 0; r < rm.rows(); ++r)
    for (std::size_t c = 0; c < N; ++c) perm.at(r, c) = rm.at(r, order[c]);

  std::vector<Elem> sigma(N, 1);
  auto [g, w] = mult_to_ortho(perm, k, sigma, 4, /*strong=*/true);
  OrthoWitness addr = addressable_from_ortho(g, k, w, 3);
  return {g, addr.gamma};
}

TriWitness make_tri_witness(const Mat& g, std::size_t k,
                            const std::vector<std::vector<Elem>>& gammas) {
  if (gammas.size() != k) throw InvalidInput("one Gamma vector per address required");
  // Prune dependent G0 rows; the defining sums keep holding on any subset.
  Mat g1(g.field(), k, g.cols());
  for (std::size_t r = 0; r < k; ++r) g1.set_row(r, g.row(r));
  Mat g0(g.field(), g.rows() - k, g.cols());
  for (std::size_t r = k; r < g.rows(); ++r) g0.set_row(r - k, g.row(r));
  RrefResult r0 = rref(g0);
  Mat pruned(g.field(), k + r0.rank, g.cols());
  for (std::size_t r = 0; r < k; ++r) pruned.set_row(r, g1.row(r));
  for (std::size_t r = 0; r < r0.rank; ++r) pruned.set_row(k + r, r0.mat.row(r));
  if (rank(pruned) != pruned.rows())
    throw InvalidInput("matrix rows are not independent after pruning");

  TriWitness w;
  w.g = pruned;
  w.k = k;
  w.gammas = gammas;
  // B with B G^T = I: row a solves G x = e_a.
  Mat bmat(g.field(), pruned.rows(), g.cols());
  for (std::size_t a = 0; a < pruned.rows(); ++a) {
    std::vector<Elem> rhs(pruned.rows(), 0);
    rhs[a] = 1;
    auto sol = solve_lex_min(pruned, rhs);
    if (!sol) throw InvalidInput("coefficient-recovery solve failed");
    bmat.set_row(a, *sol);
  }
  w.bmat = bmat;
  return w;
}

CliffordCorrection clifford_correction(const TriWitness& w, std::size_t A) {
  if (A >= w.k) throw InvalidInput("address out of range");
  const std::size_t m = w.g.rows();
  const std::size_t n = w.g.cols();
  const std::vector<Elem>& gamma = w.gammas[A];

  // Integer identities: sum_i Gamma_i g^a_i = 2 Lambda_a + [a == A],
  // sum_i Gamma_i g^a_i g^b_i = 2 Lambda_ab.
  std::vector<long long> lam(m);
  for (std::size_t a = 0; a < m; ++a) {
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += gamma[i] & w.g.at(a, i) & 1;
    long long bias = (a == A) ? 1 : 0;
    if ((s - bias) % 2 != 0) throw InvalidInput("witness violates the row-sum parity");
    lam[a] = (s - bias) / 2;
  }
  std::vector<long long> lam2(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      long long s = 0;
      for (std::size_t i = 0; i < n; ++i) s += gamma[i] & w.g.at(a, i) & w.g.at(b, i) & 1;
      if (s % 2 != 0) throw InvalidInput("witness violates the pair-sum parity");
      lam2[a * m + b] = s / 2;
    }

  CliffordCorrection corr;
  corr.n = n;
  corr.kappa_i.assign(n, 0);
  corr.kappa_ij.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long long kap = 0;
    for (std::size_t a = 0; a < m; ++a) kap += w.bmat.at(a, i) * lam[a];
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        kap += 2 * lam2[a * m + b] * w.bmat.at(a, i) * w.bmat.at(b, i);
    corr.kappa_i[i] = static_cast<unsigned>(kap % 4);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long long kap = 0;
      for (std::size_t a = 0; a < m; ++a) kap += lam[a] * w.bmat.at(a, i) * w.bmat.at(a, j);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
          kap += lam2[a * m + b] * (w.bmat.at(a, i) * w.bmat.at(b, j) +
                                    w.bmat.at(a, j) * w.bmat.at(b, i));
      corr.kappa_ij[i * n + j] = static_cast<unsigned>(kap % 2);
    }
  return corr;
}

VerifyReport verify_t_addressing(const TriWitness& w, std::size_t A, std::uint64_t budget) {
  return verify_t_addressing_with(w, A, clifford_correction(w, A), budget);
}

VerifyReport verify_t_addressing_with(const TriWitness& w, std::size_t A,
                                      const CliffordCorrection& corr,
                                      std::uint64_t budget) {
  const std::size_t m = w.g.rows();
  const std::size_t n = w.g.cols();
  if (m >= 63 || (1ull << m) > budget)
    throw BudgetExceeded("coefficient enumeration 2^" + std::to_string(m) +
                         " exceeds budget");
  const std::vector<Elem>& gamma = w.gammas[A];

  VerifyReport report;
  report.mode = "exhaustive";
  std::vector<std::uint8_t> f(n);
  for (std::uint64_t u = 0; u < (1ull << m); ++u) {
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t a = 0; a < m; ++a) {
      if (!(u >> a & 1)) continue;
      for (std::size_t i = 0; i < n; ++i) f[i] ^= w.g.at(a, i) & 1;
    }
    // Z_8 exponent: T gives +1 per Gamma_i f_i, S-dagger gives -2 == 6 per
    // power, CZ gives +4 per activated pair.
    unsigned e = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!f[i]) continue;
      e = (e + (gamma[i] & 1) + 6 * corr.kappa_i[i]) % 8;
      for (std::size_t j = i + 1; j < n; ++j)
        if (f[j]) e = (e + 4 * corr.kappa_ij[i * n + j]) % 8;
    }
    unsigned want = static_cast<unsigned>(u >> A & 1);
    ++report.checked;
    if (e != want) {
      VerifyFailure fail;
      std::vector<Elem> uvec(m);
      for (std::size_t a = 0; a < m; ++a) uvec[a] = static_cast<Elem>(u >> a & 1);
      fail.logical = {uvec};
      fail.got = e;
      fail.want = want;
      report.record(std::move(fail));
    }
  }
  return report;
}

}  // namespace aqc
