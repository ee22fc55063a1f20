// Copyright 2026 The extlp Authors
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

namespace extlp {

// Operand shapes disagree (vector lengths, matrix columns vs. weights, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented domain, e.g. an extended
// Farkas system that breaks one of its four hypotheses.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A proven invariant failed to hold. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_same_size(std::size_t lhs, std::size_t rhs,
                              const char* what) {
  if (lhs != rhs) {
    throw DimensionError(std::string(what) + ": size " + std::to_string(lhs) +
                         " does not match " + std::to_string(rhs));
  }
}

}  // namespace extlp
