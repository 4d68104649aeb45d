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

#ifndef AQC_ERROR_HPP
#define AQC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace aqc {

/// Violated precondition, bound, or malformed input. CLI exit code 2.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

/// An enumeration would exceed the caller's budget. CLI exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace aqc

#endif  // AQC_ERROR_HPP
