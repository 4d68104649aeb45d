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

#ifndef AQC_CLI_HPP
#define AQC_CLI_HPP

#include <string>
#include <vector>

namespace aqc {

/// Exit codes: 0 pass, 1 verification failure, 2 invalid input/bounds,
/// 3 budget exceeded. AQC_BUDGET overrides the default enumeration budget.
int cli_main(const std::vector<std::string>& args);

}  // namespace aqc

#endif  // AQC_CLI_HPP
