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

#include "aqc/concat.hpp"

#include <algorithm>
#include <string>

namespace aqc {

namespace {

// B-image of a field vector: t bits per coordinate.
std::vector<Elem> b_image(const SelfDualBasis& basis, const std::vector<Elem>& v) {
  const Field& f = *basis.field;
  const unsigned t = f.t();
  std::vector<Elem> out(v.size() * t);
  for (std::size_t c = 0; c < v.size(); ++c)
    for (unsigned i = 0; i < t; ++i)
      out[c * t + i] = f.trace(f.mul(v[c], basis.elems[i]));
  return out;
}

// Rows {B(alpha_i * w) : w row of src, i in [t]}, grouped by source row.
Mat expand_rows(const SelfDualBasis& basis, const Mat& src, const FieldPtr& f2) {
  const Field& f = *basis.field;
  const unsigned t = f.t();
  Mat out(f2, src.rows() * t, src.cols() * t);
  for (std::size_t r = 0; r < src.rows(); ++r) {
    std::vector<Elem> row = src.row(r);
    for (unsigned i = 0; i < t; ++i) {
      std::vector<Elem> scaled(row.size());
      for (std::size_t c = 0; c < row.size(); ++c) scaled[c] = f.mul(basis.elems[i], row[c]);
      out.set_row(r * t + i, b_image(basis, scaled));
    }
  }
  return out;
}

}  // namespace

QubitCssCode qudit_to_qubit(const CssCode& qudit, const SelfDualBasis& basis) {
  if (!(*qudit.field == *basis.field)) throw InvalidInput("basis field mismatch");
  FieldPtr f2 = field_new(1);
  const unsigned t = qudit.field->t();
  QubitCssCode qc;
  qc.block_size = t;
  qc.n_blocks = qudit.n;
  qc.stage = "Q1";
  qc.code.field = f2;
  qc.code.n = qudit.n * t;
  qc.code.k = qudit.k * t;
  qc.code.g1 = expand_rows(basis, qudit.g1, f2);
  qc.code.g0 = expand_rows(basis, qudit.g0, f2);
  qc.code.zdual = expand_rows(basis, qudit.zdual, f2);
  qc.code.h = expand_rows(basis, qudit.h, f2);
  qc.code.d_lower = DistanceBound{qudit.d_lower.value, "inherited"};
  return qc;
}

QubitCssCode gauge_fix(const QubitCssCode& qc, const SelfDualBasis& basis,
                       const std::vector<std::size_t>& pattern) {
  const unsigned t = basis.field->t();
  if (qc.code.k % t != 0) throw InvalidInput("code is not organized in logical q-blocks");
  const std::size_t k0 = qc.code.k / t;
  if (pattern.size() != k0) throw InvalidInput("pattern must give one retained index per block");
  for (std::size_t r : pattern)
    if (r >= t) throw InvalidInput("retained index outside the q-block");

  QubitCssCode out = qc;
  out.stage = "Q2";
  out.code.k = k0;
  Mat g1(qc.code.field, k0, qc.code.n);
  Mat h(qc.code.field, k0, qc.code.n);
  std::vector<std::vector<Elem>> extra_z;
  for (std::size_t b = 0; b < k0; ++b) {
    g1.set_row(b, qc.code.g1.row(b * t + pattern[b]));
    h.set_row(b, qc.code.h.row(b * t + pattern[b]));
    for (unsigned j = 0; j < t; ++j)
      if (j != pattern[b]) extra_z.push_back(qc.code.h.row(b * t + j));
  }
  Mat zd(qc.code.field, qc.code.zdual.rows() + extra_z.size(), qc.code.n);
  for (std::size_t r = 0; r < qc.code.zdual.rows(); ++r) zd.set_row(r, qc.code.zdual.row(r));
  for (std::size_t r = 0; r < extra_z.size(); ++r)
    zd.set_row(qc.code.zdual.rows() + r, extra_z[r]);
  out.code.g1 = g1;
  out.code.h = h;
  out.code.zdual = zd;
  return out;
}

Elem gauge_coefficient_ccz(const SelfDualBasis& b) { return b.field->inv(b.elems[0]); }

namespace {

Elem w_target_sum(const SelfDualBasis& b, const std::array<std::size_t, 3>& triple) {
  const Field& f = *b.field;
  Elem a1 = b.elems.at(triple[0]);
  Elem a2 = b.elems.at(triple[1]);
  Elem a3 = b.elems.at(triple[2]);
  Elem s = 0;
  const std::array<std::array<Elem, 3>, 6> perms = {{{a1, a2, a3},
                                                     {a1, a3, a2},
                                                     {a2, a1, a3},
                                                     {a2, a3, a1},
                                                     {a3, a1, a2},
                                                     {a3, a2, a1}}};
  for (const auto& p : perms)
    s = f.add(s, f.mul(f.pow(p[0], 4), f.mul(f.pow(p[1], 2), p[2])));
  return s;
}

}  // namespace

std::array<std::size_t, 3> find_w_triple(const SelfDualBasis& b) {
  const unsigned t = b.field->t();
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j)
      for (std::size_t k = j + 1; k < t; ++k)
        if (w_target_sum(b, {i, j, k}) != 0) return {i, j, k};
  throw InvalidInput("no basis triple with nonzero W target sum");
}

Elem gauge_coefficient_w(const SelfDualBasis& b, const std::array<std::size_t, 3>& triple) {
  const Field& f = *b.field;
  Elem s = w_target_sum(b, triple);
  if (s == 0) {
    auto sub = find_w_triple(b);
    throw InvalidInput("W target sum vanishes on basis triple (" +
                       std::to_string(triple[0]) + "," + std::to_string(triple[1]) + "," +
                       std::to_string(triple[2]) + "); substitute basis triple (" +
                       std::to_string(sub[0]) + "," + std::to_string(sub[1]) + "," +
                       std::to_string(sub[2]) + ")");
  }
  for (Elem beta = 1; beta < f.q(); ++beta)
    if (f.trace(f.mul(beta, s)) == 1) return beta;
  throw InvalidInput("no beta with tr(beta*s) = 1");  // unreachable for s != 0
}

std::vector<std::uint8_t> Mfe::embed_bits(Elem alpha) const {
  const Field& f = *basis.field;
  const unsigned tt = t();
  std::vector<std::uint8_t> bits(tt);
  for (unsigned i = 0; i < tt; ++i)
    bits[i] = static_cast<std::uint8_t>(f.trace(f.mul(alpha, basis.elems[i])));
  std::vector<std::uint8_t> out(r());
  const std::size_t t3 = base_r;
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t x = 0; x < t3; ++x) {
      std::size_t i = x / (tt * tt);  // embed coordinate (i,j,k) carries bit i
      out[c * t3 + x] = bits[i];
    }
  return out;
}

Elem Mfe::extract(const std::vector<std::uint8_t>& v) const {
  const Field& f = *basis.field;
  Elem acc = 0;
  for (std::size_t x = 0; x < base_r; ++x)
    if (v.at(x) & 1) acc = f.add(acc, extract_elems[x]);
  return acc;
}

std::vector<std::uint8_t> Mfe::lambda(Elem beta) const {
  const Field& f = *basis.field;
  const unsigned tt = t();
  std::vector<Elem> b(tt);
  for (unsigned i = 0; i < tt; ++i)
    b[i] = f.trace(f.mul(beta, basis.elems[i]));
  std::vector<Elem> lam = row_vec_mul(tmat.field(), b, tmat);
  return std::vector<std::uint8_t>(lam.begin(), lam.end());
}

std::vector<std::uint8_t> Mfe::lambda_base(Elem beta) const {
  std::vector<std::uint8_t> lam = lambda(beta);
  lam.resize(base_r);
  return lam;
}

bool Mfe::check_triple(Elem a1, Elem a2, Elem a3) const {
  const Field& f = *basis.field;
  std::array<std::vector<std::uint8_t>, 3> e = {embed_bits(a1), embed_bits(a2),
                                                embed_bits(a3)};
  std::vector<std::uint8_t> star(r());
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t x = 0; x < base_r; ++x) {
      std::size_t j = c * base_r + x;
      star[j] = e[0][c * base_r + sigma[0][x]] & e[1][c * base_r + sigma[1][x]] &
                e[2][c * base_r + sigma[2][x]];
    }
  return extract(star) == f.mul(a1, f.mul(a2, a3));
}

Mfe mfe_degree3(const SelfDualBasis& basis) {
  const Field& f = *basis.field;
  const std::size_t t = f.t();
  Mfe m;
  m.basis = basis;
  m.base_r = t * t * t;
  m.copies = 1;
  // Pullbacks: position (i,j,k) reads (i,j,k), (j,k,i), (k,i,j).
  for (auto& s : m.sigma) s.resize(m.base_r);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t k = 0; k < t; ++k) {
        std::size_t x = (i * t + j) * t + k;
        m.sigma[0][x] = x;
        m.sigma[1][x] = (j * t + k) * t + i;
        m.sigma[2][x] = (k * t + i) * t + j;
      }
  m.extract_elems.resize(m.base_r);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t k = 0; k < t; ++k)
        m.extract_elems[(i * t + j) * t + k] =
            f.mul(basis.elems[i], f.mul(basis.elems[j], basis.elems[k]));
  FieldPtr f2 = field_new(1);
  Mat tmat(f2, t, m.r());
  for (std::size_t x = 0; x < m.base_r; ++x)
    for (std::size_t i = 0; i < t; ++i)
      tmat.at(i, x) = f.trace(f.mul(m.extract_elems[x], basis.elems[i]));
  m.tmat = tmat;
  return m;
}

Mfe mfe_duplicate(const Mfe& src, std::size_t copies) {
  if (copies < 1) throw InvalidInput("copies must be >= 1");
  if (src.copies != 1) throw InvalidInput("duplicate the base embedding");
  Mfe m = src;
  m.copies = copies;
  FieldPtr f2 = field_new(1);
  Mat tmat(f2, src.t(), m.r());
  for (std::size_t x = 0; x < src.base_r; ++x)
    for (std::size_t i = 0; i < src.t(); ++i) tmat.at(i, x) = src.tmat.at(i, x);
  m.tmat = tmat;  // zero beyond copy 0: ME'_{2->q} reads the first r bits
  return m;
}

OuterCode outer_encode(const QubitCssCode& qc, const SelfDualBasis& basis, const Mfe& m,
                       bool materialize_inner_duals) {
  if (qc.block_size != m.t()) throw InvalidInput("q-block size does not match the MFE");
  const std::size_t t = qc.block_size;
  const std::size_t R = m.r();
  FieldPtr f2 = qc.code.field;

  // phi = ME_{q->2} o B^{-1} as an R x t bit matrix.
  Mat embed(f2, R, t);
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<std::uint8_t> img = m.embed_bits(basis.elems[i]);
    for (std::size_t x = 0; x < R; ++x) embed.at(x, i) = img[x];
  }
  Mat embed_t = embed.transposed();

  auto phi_rows = [&](const Mat& src) {
    Mat out(f2, src.rows(), qc.n_blocks * R);
    for (std::size_t r = 0; r < src.rows(); ++r)
      for (std::size_t b = 0; b < qc.n_blocks; ++b) {
        std::vector<Elem> u(t);
        for (std::size_t i = 0; i < t; ++i) u[i] = src.at(r, b * t + i);
        std::vector<Elem> img = mat_vec_mul(embed, u);
        for (std::size_t x = 0; x < R; ++x) out.at(r, b * R + x) = img[x];
      }
    return out;
  };
  // Z-type rows lift through any z~ with embed^T z~ = z, block by block.
  auto lift_rows = [&](const Mat& src) {
    Mat out(f2, src.rows(), qc.n_blocks * R);
    for (std::size_t r = 0; r < src.rows(); ++r)
      for (std::size_t b = 0; b < qc.n_blocks; ++b) {
        std::vector<Elem> z(t);
        for (std::size_t i = 0; i < t; ++i) z[i] = src.at(r, b * t + i);
        if (std::all_of(z.begin(), z.end(), [](Elem e) { return e == 0; })) continue;
        auto zt = solve_lex_min(embed_t, z);
        if (!zt) throw InvalidInput("Z lift failed: embedding not surjective onto duals");
        for (std::size_t x = 0; x < R; ++x) out.at(r, b * R + x) = (*zt)[x];
      }
    return out;
  };

  OuterCode oc;
  oc.mfe = m;
  oc.code.block_size = R;
  oc.code.n_blocks = qc.n_blocks;
  oc.code.stage = m.copies > 1 ? "Q3p" : "Q3";
  CssCode& c = oc.code.code;
  c.field = f2;
  c.n = qc.n_blocks * R;
  c.k = qc.code.k;
  c.g1 = phi_rows(qc.code.g1);
  c.g0 = phi_rows(qc.code.g0);
  c.h = lift_rows(qc.code.h);
  Mat inner_duals = nullspace(embed_t);  // C_out^perp per block
  std::size_t inner_rows = materialize_inner_duals ? qc.n_blocks * inner_duals.rows() : 0;
  Mat zd(f2, qc.code.zdual.rows() + inner_rows, c.n);
  {
    Mat lifted = lift_rows(qc.code.zdual);
    for (std::size_t r = 0; r < lifted.rows(); ++r) zd.set_row(r, lifted.row(r));
    std::size_t at = qc.code.zdual.rows();
    if (materialize_inner_duals)
      for (std::size_t b = 0; b < qc.n_blocks; ++b)
        for (std::size_t r = 0; r < inner_duals.rows(); ++r, ++at)
          for (std::size_t x = 0; x < R; ++x) zd.at(at, b * R + x) = inner_duals.at(r, x);
  }
  c.zdual = zd;
  c.d_lower = DistanceBound{qc.code.d_lower.value, "inherited"};
  return oc;
}

GateSchedule transform_v_schedule(const OuterCode& outer, const GateSchedule& v) {
  const Mfe& m = outer.mfe;
  const std::size_t R = m.r();
  FieldPtr f2 = outer.code.code.field;
  GateSchedule out;
  out.granularity = LegGranularity::qudit;
  for (const auto& app : v.apps) {
    if (app.legs.size() != 3) throw InvalidInput("V lowering expects 3-leg applications");
    // Each (layer, leg slot) pair gets its own embedding copy. Legs that
    // repeat a q-block (degenerate intra gates) take consecutive slots, so
    // their CCZ coordinates never collide and the result stays depth 1.
    std::array<std::size_t, 3> slot{0, 0, 0};
    std::size_t mult = 1;
    for (unsigned e = 0; e < 3; ++e) {
      for (unsigned p = 0; p < e; ++p)
        if (app.legs[p] == app.legs[e]) ++slot[e];
      mult = std::max(mult, slot[e] + 1);
    }
    std::size_t layer = 0;
    if (app.layer > 0) layer = static_cast<std::size_t>(app.layer);
    std::vector<std::uint8_t> lam = m.lambda_base(app.beta);
    for (std::size_t x = 0; x < m.base_r; ++x) {
      if (!lam[x]) continue;
      Application ccz;
      ccz.gate = "CCZ";
      ccz.beta = 1;
      ccz.poly = PhasePoly::cnz(f2, 3, 1);
      for (unsigned e = 0; e < 3; ++e) {
        std::size_t copy = layer * mult + slot[e];
        if (copy >= m.copies)
          throw InvalidInput("schedule needs more embedding copies than the MFE provides "
                             "(layer " + std::to_string(layer) + ", repeated legs " +
                             std::to_string(mult) + ")");
        ccz.legs.push_back(Leg{app.legs[e].block,
                               app.legs[e].index * R + copy * m.base_r + m.sigma[e][x]});
      }
      ccz.layer = 0;
      out.apps.push_back(std::move(ccz));
    }
  }
  return out;
}

unsigned SigmaTables::phase(const std::vector<std::uint8_t>& u) const {
  unsigned p = 0;
  for (unsigned i = 0; i < t; ++i) {
    if (!(u[i] & 1)) continue;
    p ^= z[i] & 1;
    for (unsigned j = i + 1; j < t; ++j) {
      if (!(u[j] & 1)) continue;
      p ^= cz[i * t + j] & 1;
      for (unsigned k = j + 1; k < t; ++k)
        if (u[k] & 1) p ^= ccz[(i * t + j) * t + k] & 1;
    }
  }
  return p;
}

SigmaTables sigma_decompose(const SelfDualBasis& b, Elem gamma) {
  const Field& f = *b.field;
  const unsigned t = f.t();
  SigmaTables tab;
  tab.t = t;
  tab.gamma = gamma;
  tab.z.assign(t, 0);
  tab.cz.assign(t * t, 0);
  tab.ccz.assign(t * t * t, 0);
  auto p = [&](std::size_t i, unsigned e) { return f.pow(b.elems[i], e); };
  for (unsigned i = 0; i < t; ++i) tab.z[i] = f.trace(f.mul(gamma, p(i, 7)));
  for (unsigned i = 0; i < t; ++i)
    for (unsigned j = i + 1; j < t; ++j) {
      Elem s = 0;
      for (unsigned e = 1; e <= 6; ++e) s = f.add(s, f.mul(p(i, e), p(j, 7 - e)));
      tab.cz[i * t + j] = f.trace(f.mul(gamma, s));
    }
  for (unsigned i = 0; i < t; ++i)
    for (unsigned j = i + 1; j < t; ++j)
      for (unsigned k = j + 1; k < t; ++k) {
        Elem s = 0;
        const unsigned pat[6][3] = {{4, 2, 1}, {4, 1, 2}, {2, 4, 1},
                                    {1, 4, 2}, {2, 1, 4}, {1, 2, 4}};
        for (const auto& e : pat)
          s = f.add(s, f.mul(p(i, e[0]), f.mul(p(j, e[1]), p(k, e[2]))));
        tab.ccz[(i * t + j) * t + k] = f.trace(f.mul(gamma, s));
      }
  return tab;
}

QubitCssCode duplicate_code(const QubitCssCode& qc, std::size_t omega,
                            bool materialize_rep_z) {
  if (omega < 1) throw InvalidInput("duplication factor must be >= 1");
  FieldPtr f2 = qc.code.field;
  const std::size_t n = qc.code.n;
  QubitCssCode out;
  out.block_size = qc.block_size * omega;
  out.n_blocks = qc.n_blocks;
  out.stage = "Q3";
  CssCode& c = out.code;
  c.field = f2;
  c.n = n * omega;
  c.k = qc.code.k;
  auto spread_x = [&](const Mat& src) {
    Mat m(f2, src.rows(), n * omega);
    for (std::size_t r = 0; r < src.rows(); ++r)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t cpy = 0; cpy < omega; ++cpy) m.at(r, q * omega + cpy) = src.at(r, q);
    return m;
  };
  auto copy0_z = [&](const Mat& src) {
    Mat m(f2, src.rows(), n * omega);
    for (std::size_t r = 0; r < src.rows(); ++r)
      for (std::size_t q = 0; q < n; ++q) m.at(r, q * omega) = src.at(r, q);
    return m;
  };
  c.g1 = spread_x(qc.code.g1);
  c.g0 = spread_x(qc.code.g0);
  c.h = copy0_z(qc.code.h);
  std::size_t rep_rows = materialize_rep_z ? n * (omega - 1) : 0;
  Mat zd(f2, qc.code.zdual.rows() + rep_rows, n * omega);
  {
    Mat lifted = copy0_z(qc.code.zdual);
    for (std::size_t r = 0; r < lifted.rows(); ++r) zd.set_row(r, lifted.row(r));
    std::size_t at = lifted.rows();
    if (materialize_rep_z)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t cpy = 1; cpy < omega; ++cpy, ++at) {
          zd.at(at, q * omega) = 1;
          zd.at(at, q * omega + cpy) = 1;
        }
  }
  c.zdual = zd;
  c.d_lower = DistanceBound{qc.code.d_lower.value, "inherited"};
  return out;
}

std::size_t sigma_duplication_factor(unsigned t) { return 1 + t * (t - 1) / 2; }

RsCczPipeline build_rs_ccz_pipeline(std::size_t n, std::size_t m, std::size_t k) {
  RsCczPipeline p;
  p.base = build_rs_addressable(n, m, k);
  p.basis = self_dual_basis(p.base.field);
  p.q1 = qudit_to_qubit(p.base.code, p.basis);
  p.q2 = gauge_fix(p.q1, p.basis, std::vector<std::size_t>(k, 0));
  Mfe base_mfe = mfe_degree3(p.basis);
  // Inner duals are n_blocks * (r - t) rows; keep them implicit once the
  // outer code grows past a few thousand qubits.
  std::size_t r3 = base_mfe.r();
  p.q3 = outer_encode(p.q2, p.basis, base_mfe, n * r3 <= 4096);
  p.q3dup = outer_encode(p.q2, p.basis, mfe_duplicate(base_mfe, 4), n * 4 * r3 <= 4096);
  p.ccz_gauge = gauge_coefficient_ccz(p.basis);
  return p;
}

GateSchedule rs_pipeline_v_schedule(const RsCczPipeline& p, std::size_t A, std::size_t B,
                                   std::size_t C, const std::vector<std::size_t>& blocks) {
  bool intra = blocks.size() == 3 && blocks[0] == blocks[1] && blocks[0] == blocks[2];
  GateSchedule qudit_sched =
      intra ? intra_ccz_schedule(p.base, A, B, C, p.ccz_gauge)
            : inter_ccz_schedule(p.base, A, B, C, p.ccz_gauge, blocks);
  GateSchedule v = qudit_sched;
  v.granularity = LegGranularity::qblock;
  v.decode_basis = p.basis;
  v.block_size = p.basis.field->t();
  for (auto& app : v.apps) app.gate = "V";
  return v;
}

GateSchedule rs_pipeline_ccz_schedule(const RsCczPipeline& p, std::size_t A, std::size_t B,
                                     std::size_t C, const std::vector<std::size_t>& blocks,
                                     bool duplicated) {
  GateSchedule v = rs_pipeline_v_schedule(p, A, B, C, blocks);
  const OuterCode& outer = duplicated ? p.q3dup : p.q3;
  if (!duplicated && v.depth() > 1)
    throw InvalidInput("plain MFE lowers only depth-1 (inter-block) V schedules; "
                       "use the duplicated code for intra-block gates");
  return transform_v_schedule(outer, v);
}

DesignedWPipeline build_designed_w_pipeline(std::size_t N, std::size_t m, std::size_t k, unsigned t) {
  DesignedWPipeline p;
  FieldPtr f = field_new(t);
  auto [g, w] = rs_addressable_matrix(f, N, m, k, 7);
  p.base_g = g;
  p.base_w = w;
  p.designed = build_designed(g, w, k);
  std::size_t n = N - k;
  p.designed.codeM.d_lower = DistanceBound{std::min(n - m + 1, m - k + 1), "mds-bound"};
  p.basis = self_dual_basis(f);
  p.w_triple = {0, 1, 2};
  if (w_target_sum(p.basis, p.w_triple) == 0) p.w_triple = find_w_triple(p.basis);
  p.beta_hat = gauge_coefficient_w(p.basis, p.w_triple);
  p.q1 = qudit_to_qubit(p.designed.codeM, p.basis);
  // Staggered pattern: block 3A+e retains basis index w_triple[e].
  std::vector<std::size_t> pattern(p.designed.codeM.k);
  for (std::size_t b = 0; b < pattern.size(); ++b) pattern[b] = p.w_triple[b % 3];
  p.q2 = gauge_fix(p.q1, p.basis, pattern);
  p.omega = sigma_duplication_factor(t);
  // Repetition pairs stay implicit: at desk scale they would dominate the
  // stabilizer matrix without being consulted by any check.
  p.q3 = duplicate_code(p.q2, p.omega, /*materialize_rep_z=*/false);
  return p;
}

GateSchedule designed_pipeline_sigma_schedule(const DesignedWPipeline& p, std::size_t A) {
  GateSchedule w = designed_w_schedule(p.designed, A, p.beta_hat);
  w.granularity = LegGranularity::qblock;
  w.decode_basis = p.basis;
  w.block_size = p.basis.field->t();
  for (auto& app : w.apps) app.gate = "Sigma";
  return w;
}

GateSchedule sigma_duplicated_schedule(const SelfDualBasis& b,
                                       const std::vector<Elem>& gammas,
                                       std::size_t omega) {
  const unsigned t = b.field->t();
  FieldPtr f2 = field_new(1);
  GateSchedule out;
  std::vector<std::size_t> next_copy(gammas.size() * t, 0);
  auto qubit = [&](std::size_t block, unsigned j) {
    std::size_t flat = block * t + j;
    std::size_t cpy = next_copy[flat]++;
    if (cpy >= omega) throw InvalidInput("duplication factor exceeded");
    return flat * omega + cpy;
  };
  for (std::size_t block = 0; block < gammas.size(); ++block) {
    if (gammas[block] == 0) continue;
    SigmaTables tab = sigma_decompose(b, gammas[block]);
    for (unsigned i = 0; i < t; ++i) {
      if (!tab.z[i]) continue;
      Application a;
      a.gate = "Z";
      a.beta = 1;
      a.poly = PhasePoly::cnz(f2, 1, 1);
      a.legs = {Leg{0, qubit(block, i)}};
      a.layer = 0;
      out.apps.push_back(std::move(a));
    }
    for (unsigned i = 0; i < t; ++i)
      for (unsigned j = i + 1; j < t; ++j) {
        if (!tab.cz[i * t + j]) continue;
        Application a;
        a.gate = "CZ";
        a.beta = 1;
        a.poly = PhasePoly::cnz(f2, 2, 1);
        a.legs = {Leg{0, qubit(block, i)}, Leg{0, qubit(block, j)}};
        a.layer = 0;
        out.apps.push_back(std::move(a));
      }
    for (unsigned i = 0; i < t; ++i)
      for (unsigned j = i + 1; j < t; ++j)
        for (unsigned k = j + 1; k < t; ++k) {
          if (!tab.ccz[(i * t + j) * t + k]) continue;
          Application a;
          a.gate = "CCZ";
          a.beta = 1;
          a.poly = PhasePoly::cnz(f2, 3, 1);
          a.legs = {Leg{0, qubit(block, i)}, Leg{0, qubit(block, j)},
                    Leg{0, qubit(block, k)}};
          a.layer = 0;
          out.apps.push_back(std::move(a));
        }
  }
  return out;
}

GateSchedule designed_pipeline_zczccz_schedule(const DesignedWPipeline& p, std::size_t A) {
  GateSchedule sig = designed_pipeline_sigma_schedule(p, A);
  std::vector<Elem> gammas(p.q2.n_blocks, 0);
  for (const auto& app : sig.apps) gammas[app.legs[0].index] = app.beta;
  return sigma_duplicated_schedule(p.basis, gammas, p.omega);
}

}  // namespace aqc
