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

#include "aqc/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "aqc/concat.hpp"
#include "aqc/json_io.hpp"

namespace aqc {

namespace {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("AQC_BUDGET")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw InvalidInput("AQC_BUDGET must be a positive integer");
  }
  return 1ull << 26;
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty())
    std::cout << payload << "\n";
  else
    write_file(out_path, payload);
}

// CLI logical addresses are 1-based; everything internal is 0-based.
std::size_t to_index(std::size_t one_based, const char* what) {
  if (one_based == 0) throw InvalidInput(std::string(what) + " addresses are 1-based");
  return one_based - 1;
}

struct TripleArg {
  std::size_t a, b, c;
  Elem gamma;
};

TripleArg parse_triple(const std::string& s) {
  TripleArg t{};
  unsigned long a = 0, b = 0, c = 0, g = 0;
  if (std::sscanf(s.c_str(), "%lu,%lu,%lu,%lu", &a, &b, &c, &g) != 4)
    throw InvalidInput("triple must be A,B,C,gamma: " + s);
  t.a = to_index(a, "logical");
  t.b = to_index(b, "logical");
  t.c = to_index(c, "logical");
  t.gamma = static_cast<Elem>(g);
  return t;
}

PhasePoly parse_poly(const FieldPtr& f, const std::string& s) {
  // "coeff:e1,e2,...;coeff:e1,e2,..."
  PhasePoly p{f, 0, {}};
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, ';')) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw InvalidInput("polynomial monomial needs coeff:exps");
    PhaseMonomial m;
    m.coeff = static_cast<Elem>(std::stoul(part.substr(0, colon)));
    std::istringstream exps(part.substr(colon + 1));
    std::string e;
    while (std::getline(exps, e, ',')) m.exps.push_back(static_cast<unsigned>(std::stoul(e)));
    if (p.arity && p.arity != m.exps.size())
      throw InvalidInput("polynomial monomials must share an arity");
    p.arity = static_cast<unsigned>(m.exps.size());
    p.monomials.push_back(std::move(m));
  }
  if (p.monomials.empty()) throw InvalidInput("empty polynomial");
  return p;
}

LogicalSpec w_logical_spec(const FieldPtr& f, std::size_t A, Elem beta) {
  LogicalSpec spec;
  spec.field = f;
  spec.blocks = 1;
  const unsigned pat[6][3] = {{4, 2, 1}, {4, 1, 2}, {2, 4, 1}, {1, 4, 2}, {2, 1, 4}, {1, 2, 4}};
  for (const auto& e : pat) {
    LogicalMonomial m;
    m.coeff = beta;
    for (unsigned j = 0; j < 3; ++j) m.factors.push_back({0, 3 * A + j, e[j]});
    spec.monomials.push_back(std::move(m));
  }
  return spec;
}

int report_exit(const VerifyReport& r) {
  std::cout << report_to_json(r).dump(2) << "\n";
  return r.pass() ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"Constructs CSS codes with transversal, addressable non-Clifford gates "
               "from Reed-Solomon ingredients and verifies every claimed logical action "
               "by exact arithmetic."};
  app.require_subcommand(1);

  // ---- build-rs ----
  std::size_t rs_n = 0, rs_m = 0, rs_k = 0;
  std::string out_path, in_path, sched_path, format = "json";
  auto* build_rs = app.add_subcommand("build-rs", "Build the addressable RS CCZ code");
  build_rs->add_option("--n", rs_n, "physical qudits (power of two)")->required();
  build_rs->add_option("--m", rs_m, "RS dimension, m < n/3 + 1")->required();
  build_rs->add_option("--k", rs_k, "logical qudits, k <= m")->required();
  build_rs->add_option("--out", out_path, "output file (stdout if omitted)");
  build_rs->add_option("--format", format)->check(CLI::IsMember({"json"}));

  // ---- ortho ----
  unsigned field_t = 0, ellbar = 3, ell = 3;
  std::size_t num_points = 0;
  auto* ortho = app.add_subcommand("ortho", "Addressable orthogonality witnesses");
  auto* ortho_build = ortho->add_subcommand("build", "RS addressable strong matrix");
  ortho_build->add_option("--t", field_t, "field exponent")->required();
  ortho_build->add_option("--num-points", num_points, "N evaluation points")->required();
  ortho_build->add_option("--m", rs_m)->required();
  ortho_build->add_option("--k", rs_k)->required();
  ortho_build->add_option("--ellbar", ellbar)->required();
  ortho_build->add_option("--out", out_path);
  auto* ortho_check = ortho->add_subcommand("check", "Re-verify a witness bundle");
  ortho_check->add_option("--in", in_path)->required();

  // ---- designed ----
  std::size_t des_a = 0;
  Elem beta = 1;
  auto* designed = app.add_subcommand("designed", "Pre-designed intra-block W gates");
  auto* des_build = designed->add_subcommand("build", "RS base + M-compression");
  des_build->add_option("--t", field_t)->required();
  des_build->add_option("--num-points", num_points)->required();
  des_build->add_option("--m", rs_m)->required();
  des_build->add_option("--k", rs_k)->required();
  des_build->add_option("--out", out_path);
  auto* des_check = designed->add_subcommand("check", "Extended-orthogonality identities");
  des_check->add_option("--in", in_path)->required();
  auto* des_sched = designed->add_subcommand("schedule", "U7 schedule for one triple");
  des_sched->add_option("--in", in_path)->required();
  des_sched->add_option("--a", des_a, "designed triple index (1-based)")->required();
  des_sched->add_option("--beta", beta);
  des_sched->add_option("--out", out_path);

  // ---- schedule ----
  std::size_t addr_a = 0, addr_b = 0, addr_c = 0;
  Elem gamma = 1;
  std::vector<std::size_t> blocks{1, 2, 3};
  std::vector<std::string> triples;
  std::string family = "ccz", poly_str;
  auto* sched = app.add_subcommand("schedule", "Emit a layered physical gate schedule");
  auto* intra = sched->add_subcommand("intra", "Intra-block CCZ");
  auto* inter = sched->add_subcommand("inter", "Inter-block CCZ");
  auto* merged = sched->add_subcommand("merged", "Equal-shift merged triples");
  auto* single = sched->add_subcommand("single-index", "Witness-based single-index gate");
  for (auto* sc : {intra, inter}) {
    sc->add_option("--in", in_path)->required();
    sc->add_option("--a", addr_a, "logical address (1-based)")->required();
    sc->add_option("--b", addr_b)->required();
    sc->add_option("--c", addr_c)->required();
    sc->add_option("--gamma", gamma);
    sc->add_option("--out", out_path);
  }
  inter->add_option("--blocks", blocks, "code block ids (1-based)");
  merged->add_option("--in", in_path)->required();
  merged->add_option("--triple", triples, "A,B,C,gamma (repeatable)")->required();
  merged->add_option("--blocks", blocks);
  merged->add_option("--out", out_path);
  single->add_option("--in", in_path)->required();
  single->add_option("--a", addr_a)->required();
  single->add_option("--family", family)->check(CLI::IsMember({"uql", "cnz", "up"}));
  single->add_option("--ell", ell);
  single->add_option("--beta", beta);
  single->add_option("--poly", poly_str, "coeff:e1,e2;coeff:e1,e2 for --family up");
  single->add_option("--out", out_path);

  // ---- verify ----
  std::string mode = "exhaustive";
  std::uint64_t trials = 100000, seed = 1, budget = 0;
  auto* verify = app.add_subcommand("verify", "Check a schedule's logical action");
  verify->add_option("--in", in_path)->required();
  verify->add_option("--schedule", sched_path, "schedule JSONL (omit for identity mode)");
  verify->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled", "identity"}));
  verify->add_option("--family", family);
  verify->add_option("--a", addr_a);
  verify->add_option("--b", addr_b);
  verify->add_option("--c", addr_c);
  verify->add_option("--gamma", gamma);
  verify->add_option("--beta", beta);
  verify->add_option("--ell", ell);
  verify->add_option("--poly", poly_str);
  verify->add_option("--blocks", blocks);
  verify->add_option("--triple", triples);
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);
  verify->add_option("--budget", budget);

  // ---- concat ----
  auto* concat = app.add_subcommand("concat", "Qudit-to-qubit pipelines");
  auto* t61 = concat->add_subcommand("t61", "RS base, addressable qubit CCZ");
  t61->add_option("--n", rs_n)->required();
  t61->add_option("--m", rs_m)->required();
  t61->add_option("--k", rs_k)->required();
  t61->add_option("--out", out_path);
  auto* t62 = concat->add_subcommand("t62", "designed base, Z/CZ/CCZ triples");
  t62->add_option("--t", field_t)->required();
  t62->add_option("--num-points", num_points)->required();
  t62->add_option("--m", rs_m)->required();
  t62->add_option("--k", rs_k)->required();
  t62->add_option("--out", out_path);

  // ---- tri-t ----
  unsigned rm_m = 5;
  auto* tri = app.add_subcommand("tri-t", "Addressable triorthogonality / T gate");
  auto* tri_build = tri->add_subcommand("build", "RM(1,m_) desk-scale witness");
  tri_build->add_option("--rm-m", rm_m, "RM(1, m_) parameter, m_ >= 5")->required();
  tri_build->add_option("--k", rs_k)->required();
  tri_build->add_option("--out", out_path);
  auto* tri_check = tri->add_subcommand("check", "Defining-sum predicate");
  tri_check->add_option("--in", in_path)->required();
  auto* tri_verify = tri->add_subcommand("verify", "Exhaustive Z8 phase check");
  tri_verify->add_option("--in", in_path)->required();
  tri_verify->add_option("--a", addr_a)->required();
  tri_verify->add_option("--correction-out", out_path, "write the Clifford correction");

  // ---- export ----
  std::string export_out;
  auto* exp = app.add_subcommand("export", "Re-serialize a bundle canonically");
  exp->add_option("--in", in_path)->required();
  exp->add_option("--out", export_out)->required();

  std::vector<std::string> argv(args);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help() << "\n";
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (budget == 0) budget = default_budget();

    if (build_rs->parsed()) {
      AddressableRsCode code = build_rs_addressable(rs_n, rs_m, rs_k);
      emit(out_path, rs_code_to_json(code).dump(2));
      return 0;
    }

    if (ortho_build->parsed()) {
      auto [g, w] = rs_addressable_matrix(field_new(field_t), num_points, rs_m, rs_k, ellbar);
      emit(out_path, ortho_bundle_to_json(g, rs_k, w).dump(2));
      return 0;
    }
    if (ortho_check->parsed()) {
      Mat g;
      std::size_t k = 0;
      OrthoWitness w;
      ortho_bundle_from_json(Json::parse(read_file(in_path)), g, k, w);
      return report_exit(verify_witness_identities(g, k, w));
    }

    if (des_build->parsed()) {
      FieldPtr f = field_new(field_t);
      auto [g, w] = rs_addressable_matrix(f, num_points, rs_m, rs_k, 7);
      DesignedCode d = build_designed(g, w, rs_k);
      std::size_t n = num_points - rs_k;
      d.codeM.d_lower = DistanceBound{std::min(n - rs_m + 1, rs_m - rs_k + 1), "mds-bound"};
      emit(out_path, designed_to_json(d).dump(2));
      return 0;
    }
    if (des_check->parsed()) {
      DesignedCode d = designed_from_json(Json::parse(read_file(in_path)));
      DesignedCheck c = check_extended_orthogonality(d);
      VerifyReport r;
      r.mode = "identity";
      r.checked = c.checked;
      if (!c.ok) r.failure_count = 1;
      return report_exit(r);
    }
    if (des_sched->parsed()) {
      DesignedCode d = designed_from_json(Json::parse(read_file(in_path)));
      GateSchedule s = designed_w_schedule(d, to_index(des_a, "designed triple"), beta);
      emit(out_path, schedule_to_jsonl(s, d.field));
      return 0;
    }

    if (intra->parsed() || inter->parsed()) {
      AddressableRsCode code = rs_code_from_json(Json::parse(read_file(in_path)));
      GateSchedule s;
      if (intra->parsed()) {
        s = intra_ccz_schedule(code, to_index(addr_a, "logical"), to_index(addr_b, "logical"),
                               to_index(addr_c, "logical"), gamma);
      } else {
        std::vector<std::size_t> blk;
        for (std::size_t b : blocks) blk.push_back(to_index(b, "block"));
        s = inter_ccz_schedule(code, to_index(addr_a, "logical"), to_index(addr_b, "logical"),
                               to_index(addr_c, "logical"), gamma, blk);
      }
      emit(out_path, schedule_to_jsonl(s, code.field));
      return 0;
    }
    if (merged->parsed()) {
      AddressableRsCode code = rs_code_from_json(Json::parse(read_file(in_path)));
      std::vector<GateRequest> reqs;
      for (const auto& t : triples) {
        TripleArg ta = parse_triple(t);
        reqs.push_back(GateRequest{{ta.a, ta.b, ta.c}, ta.gamma});
      }
      std::vector<std::size_t> blk;
      for (std::size_t b : blocks) blk.push_back(to_index(b, "block"));
      GateSchedule s = merged_triples_schedule(code, reqs, blk);
      emit(out_path, schedule_to_jsonl(s, code.field));
      return 0;
    }
    if (single->parsed()) {
      Mat g;
      std::size_t k = 0;
      OrthoWitness w;
      ortho_bundle_from_json(Json::parse(read_file(in_path)), g, k, w);
      GateSchedule s;
      std::size_t A = to_index(addr_a, "logical");
      if (family == "uql")
        s = single_index_schedule(g, k, w, A, SingleIndexFamily::uql, beta, ell);
      else if (family == "cnz")
        s = single_index_schedule(g, k, w, A, SingleIndexFamily::cnz, beta, ell);
      else {
        PhasePoly p = parse_poly(g.field(), poly_str);
        s = single_index_schedule(g, k, w, A, SingleIndexFamily::upoly, beta, 0, &p);
      }
      emit(out_path, schedule_to_jsonl(s, g.field()));
      return 0;
    }

    if (verify->parsed()) {
      Json bundle = Json::parse(read_file(in_path));
      check_format_version(bundle);
      std::string kind = bundle.at("kind").get<std::string>();
      if (mode == "identity") {
        if (kind == "rs-address") {
          AddressableRsCode code = rs_code_from_json(bundle);
          return report_exit(verify_rs_identities(code, to_index(addr_a, "logical"),
                                                  to_index(addr_b, "logical"),
                                                  to_index(addr_c, "logical")));
        }
        if (kind == "ortho") {
          Mat g;
          std::size_t k = 0;
          OrthoWitness w;
          ortho_bundle_from_json(bundle, g, k, w);
          return report_exit(verify_witness_identities(g, k, w));
        }
        if (kind == "designed") {
          DesignedCode d = designed_from_json(bundle);
          DesignedCheck c = check_extended_orthogonality(d);
          VerifyReport r;
          r.mode = "identity";
          r.checked = c.checked;
          if (!c.ok) r.failure_count = 1;
          return report_exit(r);
        }
        throw InvalidInput("identity mode does not support bundle kind " + kind);
      }
      GateSchedule s = schedule_from_jsonl(read_file(sched_path));
      LogicalSpec spec;
      std::vector<const CssCode*> codes;
      AddressableRsCode rs;
      DesignedCode des;
      CssCode ortho_code;
      if (kind == "rs-address") {
        rs = rs_code_from_json(bundle);
        std::vector<std::size_t> blk;
        for (std::size_t b : blocks) blk.push_back(to_index(b, "block"));
        std::size_t nblocks = 1;
        for (std::size_t b : blk) nblocks = std::max(nblocks, b + 1);
        if (family == "intra") {
          spec = cnz_logical_spec(rs.field, {0, 0, 0},
                                  {to_index(addr_a, "logical"), to_index(addr_b, "logical"),
                                   to_index(addr_c, "logical")},
                                  gamma);
          nblocks = 1;
        } else if (family == "merged") {
          spec.field = rs.field;
          spec.blocks = nblocks;
          for (const auto& t : triples) {
            TripleArg ta = parse_triple(t);
            LogicalSpec one = cnz_logical_spec(rs.field, blk, {ta.a, ta.b, ta.c}, ta.gamma);
            for (auto& m : one.monomials) spec.monomials.push_back(m);
          }
        } else {  // inter ccz
          spec = cnz_logical_spec(rs.field, blk,
                                  {to_index(addr_a, "logical"), to_index(addr_b, "logical"),
                                   to_index(addr_c, "logical")},
                                  gamma);
        }
        for (std::size_t b = 0; b < std::max<std::size_t>(nblocks, spec.blocks); ++b)
          codes.push_back(&rs.code);
        spec.blocks = codes.size();
      } else if (kind == "designed") {
        des = designed_from_json(bundle);
        spec = w_logical_spec(des.field, to_index(addr_a, "designed triple"), beta);
        codes.push_back(&des.codeM);
      } else if (kind == "ortho") {
        // Single-index schedules: logical action U^{beta tau_A} on index A.
        Mat g;
        std::size_t k = 0;
        OrthoWitness w;
        ortho_bundle_from_json(bundle, g, k, w);
        ortho_code = build_css(g, k);
        std::size_t A = to_index(addr_a, "logical");
        Elem coeff = g.field()->mul(beta, w.tau.at(A));
        spec.field = g.field();
        if (family == "uql") {
          spec.blocks = 1;
          spec.monomials.push_back(LogicalMonomial{coeff, {LogicalFactor{0, A, ell}}});
        } else if (family == "cnz") {
          std::vector<std::size_t> blk(ell), addr(ell, A);
          for (unsigned b = 0; b < ell; ++b) blk[b] = b;
          spec = cnz_logical_spec(g.field(), blk, addr, coeff);
        } else if (family == "up") {
          PhasePoly p = parse_poly(g.field(), poly_str);
          spec.blocks = p.arity;
          for (const auto& mono : p.monomials) {
            LogicalMonomial lm;
            lm.coeff = g.field()->mul(coeff, mono.coeff);
            for (unsigned v = 0; v < p.arity; ++v)
              if (mono.exps[v]) lm.factors.push_back({v, A, mono.exps[v]});
            spec.monomials.push_back(std::move(lm));
          }
        } else {
          throw InvalidInput("ortho bundles verify families uql, cnz, up");
        }
        for (std::size_t b = 0; b < spec.blocks; ++b) codes.push_back(&ortho_code);
      } else {
        throw InvalidInput("verify does not support bundle kind " + kind);
      }
      VerifyReport r = mode == "exhaustive"
                           ? verify_exhaustive(codes, s, spec, budget)
                           : verify_sampled(codes, s, spec, trials, seed);
      return report_exit(r);
    }

    if (t61->parsed()) {
      RsCczPipeline p = build_rs_ccz_pipeline(rs_n, rs_m, rs_k);
      Json j{{"format_version", kFormatVersion},
             {"kind", "rs-ccz-pipeline"},
             {"stages",
              Json{{"q0", {{"n", p.base.code.n}, {"k", p.base.code.k}}},
                   {"q1", {{"n", p.q1.code.n}, {"k", p.q1.code.k}}},
                   {"q2", {{"n", p.q2.code.n}, {"k", p.q2.code.k}}},
                   {"q3", {{"n", p.q3.code.code.n}, {"k", p.q3.code.code.k}}},
                   {"q3dup", {{"n", p.q3dup.code.code.n}, {"k", p.q3dup.code.code.k}}}}},
             {"ccz_gauge", p.ccz_gauge},
             {"basis", p.basis.elems},
             {"q3", css_to_json(p.q3.code.code)}};
      emit(out_path, j.dump(2));
      return 0;
    }
    if (t62->parsed()) {
      DesignedWPipeline p = build_designed_w_pipeline(num_points, rs_m, rs_k, field_t);
      Json j{{"format_version", kFormatVersion},
             {"kind", "designed-w-pipeline"},
             {"provenance", p.provenance},
             {"stages",
              Json{{"q0", {{"n", p.designed.codeM.n}, {"k", p.designed.codeM.k}}},
                   {"q1", {{"n", p.q1.code.n}, {"k", p.q1.code.k}}},
                   {"q2", {{"n", p.q2.code.n}, {"k", p.q2.code.k}}},
                   {"q3", {{"n", p.q3.code.n}, {"k", p.q3.code.k}}}}},
             {"omega", p.omega},
             {"beta_hat", p.beta_hat},
             {"w_triple", p.w_triple},
             {"basis", p.basis.elems},
             {"q2", css_to_json(p.q2.code)}};
      emit(out_path, j.dump(2));
      return 0;
    }

    if (tri_build->parsed()) {
      auto [g, gammas] = rm_tri_matrix(rm_m, rs_k);
      TriWitness w = make_tri_witness(g, rs_k, gammas);
      emit(out_path, tri_witness_to_json(w).dump(2));
      return 0;
    }
    if (tri_check->parsed()) {
      TriWitness w = tri_witness_from_json(Json::parse(read_file(in_path)));
      bool ok = is_addressable_triorthogonal(w.g, w.k, w.gammas);
      VerifyReport r;
      r.mode = "identity";
      r.checked = 1;
      if (!ok) r.failure_count = 1;
      return report_exit(r);
    }
    if (tri_verify->parsed()) {
      TriWitness w = tri_witness_from_json(Json::parse(read_file(in_path)));
      std::size_t A = to_index(addr_a, "logical");
      if (!out_path.empty())
        write_file(out_path, correction_to_json(clifford_correction(w, A)).dump(2));
      return report_exit(verify_t_addressing(w, A, budget));
    }

    if (exp->parsed()) {
      Json j = Json::parse(read_file(in_path));
      check_format_version(j);
      std::string kind = j.at("kind").get<std::string>();
      Json round;
      if (kind == "rs-address")
        round = rs_code_to_json(rs_code_from_json(j));
      else if (kind == "ortho") {
        Mat g;
        std::size_t k = 0;
        OrthoWitness w;
        ortho_bundle_from_json(j, g, k, w);
        round = ortho_bundle_to_json(g, k, w);
      } else if (kind == "designed")
        round = designed_to_json(designed_from_json(j));
      else if (kind == "tri-t")
        round = tri_witness_to_json(tri_witness_from_json(j));
      else
        throw InvalidInput("export does not support bundle kind " + kind);
      write_file(export_out, round.dump(2));
      return 0;
    }

    std::cerr << "no subcommand executed\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what()
              << " (hint: use --mode sampled or raise --budget)\n";
    return 3;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace aqc
