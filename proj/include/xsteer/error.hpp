// Copyright 2026 The xsteer Authors
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

namespace xsteer {

/// Raised when an argument lies outside the domain of an operation
/// (angle out of range, negative probability, non-positive state, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a closed-form reference expression does not exist for the
/// requested family/channel combination.
class NoClosedFormError : public std::logic_error {
 public:
  explicit NoClosedFormError(const std::string& what) : std::logic_error(what) {}
};

/// Raised on malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xsteer
