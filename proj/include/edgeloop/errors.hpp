// Copyright 2026 The Edgeloop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDGELOOP_ERRORS_HPP
#define EDGELOOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edgeloop {

// Base class for all errors raised by this library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A parameter is outside the mathematical domain of an operation
// (e.g. an outage probability outside (0, 1)).
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what) {}
};

// An iterative numeric routine failed to converge, or a constructed
// model violates a validity condition it depends on.
class numeric_error : public error {
 public:
  explicit numeric_error(const std::string& what) : error(what) {}
};

// A scenario file is malformed: unknown keys, missing keys, bad units.
class config_error : public error {
 public:
  explicit config_error(const std::string& what) : error(what) {}
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

}  // namespace detail

}  // namespace edgeloop

#endif  // EDGELOOP_ERRORS_HPP
