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

#ifndef AQC_JSON_IO_HPP
#define AQC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "aqc/address.hpp"
#include "aqc/css.hpp"
#include "aqc/designed.hpp"
#include "aqc/gates.hpp"
#include "aqc/ortho.hpp"
#include "aqc/tri_t.hpp"
#include "aqc/verify.hpp"

namespace aqc {

using Json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1.0";

/// Refuses any payload whose format_version has a different major part.
void check_format_version(const Json& j);

Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json witness_to_json(const OrthoWitness& w);
OrthoWitness witness_from_json(const Json& j);

Json css_to_json(const CssCode& c);
CssCode css_from_json(const Json& j);

/// Bundles carry "kind": "rs-address" | "ortho" | "designed" | "tri-t".
Json rs_code_to_json(const AddressableRsCode& c);
AddressableRsCode rs_code_from_json(const Json& j);

Json ortho_bundle_to_json(const Mat& g, std::size_t k, const OrthoWitness& w);
void ortho_bundle_from_json(const Json& j, Mat& g, std::size_t& k, OrthoWitness& w);

Json designed_to_json(const DesignedCode& d);
DesignedCode designed_from_json(const Json& j);

Json tri_witness_to_json(const TriWitness& w);
TriWitness tri_witness_from_json(const Json& j);

Json report_to_json(const VerifyReport& r);

Json correction_to_json(const CliffordCorrection& c);

/// JSON-lines: a header object with the depth, then one application per
/// line. Legs and blocks are 0-based.
std::string schedule_to_jsonl(const GateSchedule& s, const FieldPtr& gate_field);
GateSchedule schedule_from_jsonl(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace aqc

#endif  // AQC_JSON_IO_HPP
