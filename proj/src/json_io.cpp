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

#include "aqc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace aqc {

void check_format_version(const Json& j) {
  if (!j.contains("format_version")) throw InvalidInput("missing format_version");
  std::string v = j["format_version"].get<std::string>();
  std::string major = v.substr(0, v.find('.'));
  std::string expected(kFormatVersion);
  if (major != expected.substr(0, expected.find('.')))
    throw InvalidInput("unsupported format_version " + v);
}

Json field_to_json(const Field& f) {
  return Json{{"t", f.t()}, {"irred_bits", f.irred_bits()}};
}

FieldPtr field_from_json(const Json& j) {
  FieldPtr f = field_new(j.at("t").get<unsigned>());
  if (j.contains("irred_bits") && j["irred_bits"].get<std::uint32_t>() != f->irred_bits())
    throw InvalidInput("field modulus mismatch: this build uses the smallest irreducible");
  return f;
}

Json mat_to_json(const Mat& m) {
  Json data = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) data.push_back(m.row(r));
  return Json{{"field", field_to_json(*m.field())},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"data", data}};
}

Mat mat_from_json(const Json& j) {
  FieldPtr f = field_from_json(j.at("field"));
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  std::vector<Elem> data;
  data.reserve(rows * cols);
  for (const auto& row : j.at("data")) {
    if (row.size() != cols) throw InvalidInput("matrix row length mismatch");
    for (const auto& x : row) data.push_back(x.get<Elem>());
  }
  return Mat(f, rows, cols, std::move(data));
}

Json witness_to_json(const OrthoWitness& w) {
  return Json{{"kind", to_string(w.kind)},
              {"ell", w.ell},
              {"tau", w.tau},
              {"gamma", w.gamma}};
}

OrthoWitness witness_from_json(const Json& j) {
  OrthoWitness w;
  w.kind = ortho_kind_from_string(j.at("kind").get<std::string>());
  w.ell = j.at("ell").get<unsigned>();
  w.tau = j.at("tau").get<std::vector<Elem>>();
  w.gamma = j.at("gamma").get<std::vector<std::vector<Elem>>>();
  return w;
}

Json css_to_json(const CssCode& c) {
  return Json{{"field", field_to_json(*c.field)},
              {"n", c.n},
              {"k", c.k},
              {"g1", mat_to_json(c.g1)},
              {"g0", mat_to_json(c.g0)},
              {"zdual", mat_to_json(c.zdual)},
              {"h", mat_to_json(c.h)},
              {"d_lower", c.d_lower.value},
              {"d_provenance", c.d_lower.provenance}};
}

CssCode css_from_json(const Json& j) {
  CssCode c;
  c.field = field_from_json(j.at("field"));
  c.n = j.at("n").get<std::size_t>();
  c.k = j.at("k").get<std::size_t>();
  c.g1 = mat_from_json(j.at("g1"));
  c.g0 = mat_from_json(j.at("g0"));
  c.zdual = mat_from_json(j.at("zdual"));
  c.h = mat_from_json(j.at("h"));
  c.d_lower.value = j.at("d_lower").get<std::size_t>();
  c.d_lower.provenance = j.at("d_provenance").get<std::string>();
  return c;
}

Json rs_code_to_json(const AddressableRsCode& c) {
  return Json{{"format_version", kFormatVersion},
              {"kind", "rs-address"},
              {"field", field_to_json(*c.field)},
              {"code", css_to_json(c.code)},
              {"m", c.m},
              {"alphas", c.alphas},
              {"zeta", c.zeta},
              {"betas", c.betas},
              {"gammas", c.gammas},
              {"gtilde", c.gtilde}};
}

AddressableRsCode rs_code_from_json(const Json& j) {
  check_format_version(j);
  if (j.at("kind") != "rs-address") throw InvalidInput("bundle is not an rs-address code");
  AddressableRsCode c;
  c.field = field_from_json(j.at("field"));
  c.code = css_from_json(j.at("code"));
  c.m = j.at("m").get<std::size_t>();
  c.alphas = j.at("alphas").get<std::vector<Elem>>();
  c.zeta = j.at("zeta").get<Elem>();
  c.betas = j.at("betas").get<std::vector<Elem>>();
  c.gammas = j.at("gammas").get<std::vector<std::vector<Elem>>>();
  c.gtilde = j.at("gtilde").get<std::vector<std::vector<Elem>>>();
  return c;
}

Json ortho_bundle_to_json(const Mat& g, std::size_t k, const OrthoWitness& w) {
  return Json{{"format_version", kFormatVersion},
              {"kind", "ortho"},
              {"g", mat_to_json(g)},
              {"k", k},
              {"witness", witness_to_json(w)}};
}

void ortho_bundle_from_json(const Json& j, Mat& g, std::size_t& k, OrthoWitness& w) {
  check_format_version(j);
  if (j.at("kind") != "ortho") throw InvalidInput("bundle is not an orthogonality witness");
  g = mat_from_json(j.at("g"));
  k = j.at("k").get<std::size_t>();
  w = witness_from_json(j.at("witness"));
}

Json designed_to_json(const DesignedCode& d) {
  return Json{{"format_version", kFormatVersion},
              {"kind", "designed"},
              {"field", field_to_json(*d.field)},
              {"g", mat_to_json(d.g)},
              {"k", d.k},
              {"kprime", d.kprime},
              {"mprime", d.mprime},
              {"h", mat_to_json(d.h)},
              {"codeM", css_to_json(d.codeM)},
              {"gammas", d.gammas},
              {"lambdas", d.lambdas}};
}

DesignedCode designed_from_json(const Json& j) {
  check_format_version(j);
  if (j.at("kind") != "designed") throw InvalidInput("bundle is not a designed code");
  DesignedCode d;
  d.field = field_from_json(j.at("field"));
  d.g = mat_from_json(j.at("g"));
  d.k = j.at("k").get<std::size_t>();
  d.kprime = j.at("kprime").get<std::size_t>();
  d.mprime = j.at("mprime").get<std::size_t>();
  d.h = mat_from_json(j.at("h"));
  d.codeM = css_from_json(j.at("codeM"));
  d.gammas = j.at("gammas").get<std::vector<std::vector<Elem>>>();
  d.lambdas = j.at("lambdas").get<std::vector<std::vector<Elem>>>();
  return d;
}

Json tri_witness_to_json(const TriWitness& w) {
  return Json{{"format_version", kFormatVersion},
              {"kind", "tri-t"},
              {"note", "desk-scale instantiation, not from paper"},
              {"g", mat_to_json(w.g)},
              {"k", w.k},
              {"gammas", w.gammas},
              {"bmat", mat_to_json(w.bmat)}};
}

TriWitness tri_witness_from_json(const Json& j) {
  check_format_version(j);
  if (j.at("kind") != "tri-t") throw InvalidInput("bundle is not a tri-t witness");
  TriWitness w;
  w.g = mat_from_json(j.at("g"));
  w.k = j.at("k").get<std::size_t>();
  w.gammas = j.at("gammas").get<std::vector<std::vector<Elem>>>();
  w.bmat = mat_from_json(j.at("bmat"));
  return w;
}

Json report_to_json(const VerifyReport& r) {
  Json fails = Json::array();
  for (const auto& f : r.failures)
    fails.push_back(Json{{"logical", f.logical},
                         {"coset", f.coset},
                         {"got", f.got},
                         {"want", f.want}});
  return Json{{"format_version", kFormatVersion},
              {"mode", r.mode},
              {"checked", r.checked},
              {"failure_count", r.failure_count},
              {"verdict", r.pass() ? "pass" : "fail"},
              {"failures", fails}};
}

Json correction_to_json(const CliffordCorrection& c) {
  Json gates = Json::array();
  for (std::size_t i = 0; i < c.n; ++i)
    if (c.kappa_i[i] % 4 != 0)
      gates.push_back(Json{{"gate", "Sdg"}, {"power", c.kappa_i[i] % 4}, {"legs", {i}}});
  for (std::size_t i = 0; i < c.n; ++i)
    for (std::size_t j = i + 1; j < c.n; ++j)
      if (c.kappa_ij[i * c.n + j] % 2 != 0)
        gates.push_back(Json{{"gate", "CZ"}, {"power", 1}, {"legs", {i, j}}});
  return gates;
}

namespace {

PhasePoly poly_for_gate(const FieldPtr& f, const std::string& gate, Elem beta,
                        const Json* monomials) {
  if (gate == "UP") {
    if (monomials == nullptr) throw InvalidInput("UP applications need monomials");
    PhasePoly p{f, 0, {}};
    for (const auto& m : *monomials) {
      PhaseMonomial mono;
      mono.coeff = m.at("coeff").get<Elem>();
      mono.exps = m.at("exps").get<std::vector<unsigned>>();
      p.arity = static_cast<unsigned>(mono.exps.size());
      p.monomials.push_back(std::move(mono));
    }
    return p;
  }
  if (gate == "W") return PhasePoly::w_gate(f, beta);
  if (gate == "Z") return PhasePoly::cnz(f, 1, beta);
  if (gate == "CZ") return PhasePoly::cnz(f, 2, beta);
  if (gate == "CCZ" || gate == "V") return PhasePoly::cnz(f, 3, beta);
  if (gate.size() > 1 && gate[0] == 'C' && gate.back() == 'Z')
    return PhasePoly::cnz(f, static_cast<unsigned>(std::stoul(gate.substr(1))) + 1, beta);
  if (gate == "Sigma") return PhasePoly::uql(f, 7, beta);
  if (gate.size() > 1 && gate[0] == 'U')
    return PhasePoly::uql(f, static_cast<unsigned>(std::stoul(gate.substr(1))), beta);
  throw InvalidInput("unknown gate family: " + gate);
}

}  // namespace

std::string schedule_to_jsonl(const GateSchedule& s, const FieldPtr& gate_field) {
  std::ostringstream out;
  Json header{{"type", "schedule"},
              {"format_version", kFormatVersion},
              {"field", field_to_json(*gate_field)},
              {"depth", s.depth()},
              {"applications", s.apps.size()},
              {"granularity", s.granularity == LegGranularity::qudit ? "qudit" : "qblock"}};
  if (s.granularity == LegGranularity::qblock) {
    header["block_size"] = s.block_size;
    header["basis"] = s.decode_basis.elems;
  }
  for (const auto& app : s.apps) {
    bool repeated = false;
    for (std::size_t i = 0; i < app.legs.size() && !repeated; ++i)
      for (std::size_t j = i + 1; j < app.legs.size(); ++j)
        if (app.legs[i] == app.legs[j]) {
          repeated = true;
          break;
        }
    if (repeated) {
      header["note"] = "applications with repeated legs lower to smaller-arity gates";
      break;
    }
  }
  out << header.dump() << "\n";
  for (const auto& app : s.apps) {
    Json legs = Json::array();
    for (const Leg& l : app.legs) legs.push_back({l.block, l.index});
    Json line{{"gate", app.gate}, {"beta", app.beta}, {"legs", legs}, {"layer", app.layer}};
    if (app.gate == "UP") {
      Json monos = Json::array();
      for (const auto& m : app.poly.monomials)
        monos.push_back(Json{{"coeff", m.coeff}, {"exps", m.exps}});
      line["monomials"] = monos;
    }
    out << line.dump() << "\n";
  }
  return out.str();
}

GateSchedule schedule_from_jsonl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("empty schedule file");
  Json header = Json::parse(line);
  check_format_version(header);
  if (header.at("type") != "schedule") throw InvalidInput("not a schedule file");
  FieldPtr f = field_from_json(header.at("field"));
  GateSchedule s;
  if (header.at("granularity") == "qblock") {
    s.granularity = LegGranularity::qblock;
    s.block_size = header.at("block_size").get<std::size_t>();
    SelfDualBasis b;
    b.field = f;
    b.elems = header.at("basis").get<std::vector<Elem>>();
    s.decode_basis = b;
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j = Json::parse(line);
    Application app;
    app.gate = j.at("gate").get<std::string>();
    app.beta = j.at("beta").get<Elem>();
    const Json* monos = j.contains("monomials") ? &j["monomials"] : nullptr;
    app.poly = poly_for_gate(f, app.gate, app.beta, monos);
    for (const auto& l : j.at("legs"))
      app.legs.push_back(Leg{l.at(0).get<std::size_t>(), l.at(1).get<std::size_t>()});
    app.layer = j.at("layer").get<int>();
    s.apps.push_back(std::move(app));
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << contents;
}

}  // namespace aqc
