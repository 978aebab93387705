// Copyright 2026 The shadowcut developers
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

namespace shadowcut {

/// Malformed input: bad indices, inconsistent dimensions, invalid cuts.
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A request exceeds the dense-simulation guardrails. The CLI maps this
/// to exit code 3.
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Dense statevectors are refused beyond this register size.
inline constexpr int kMaxStatevectorQubits = 14;

/// Dense density matrices are refused beyond this register size.
inline constexpr int kMaxDensityMatrixQubits = 8;

}  // namespace shadowcut
