// Copyright 2026 The qeq developers
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

#pragma once

#include <stdexcept>
#include <string>

namespace qeq {

/// Thrown when a computation exhausts one of its resource budgets.
/// Callers that implement timeout semantics catch this and report a
/// resource-limit outcome instead of a verdict.
class ResourceLimitError : public std::runtime_error {
 public:
  enum class Kind { nodes, time, support };

  ResourceLimitError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  [[nodiscard]] Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace qeq
