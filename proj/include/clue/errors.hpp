// Copyright 2026 The clue Authors
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

namespace clue {

/** Invalid input: wrong dimensions, out-of-range keys, non-density states. */
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/** A request that no object of the requested kind can satisfy. */
class UnsatisfiableRequest : public std::invalid_argument {
 public:
  explicit UnsatisfiableRequest(const std::string& what)
      : std::invalid_argument(what) {}
};

/** An iterative numerical routine did not converge. */
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what)
      : std::runtime_error(what) {}
};

/** A combinatorial structure could not be assembled consistently. */
class ConstructionError : public std::logic_error {
 public:
  explicit ConstructionError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace clue
