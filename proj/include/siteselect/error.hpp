// Copyright 2026 The siteselect Authors
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

#ifndef SITESELECT_ERROR_HPP_
#define SITESELECT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace siteselect {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input bytes or a file that violates the documented format.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The campaign cannot be satisfied: fewer feasible sites than requested.
class InfeasibleError : public Error {
 public:
  InfeasibleError(std::size_t feasible_count, std::size_t requested)
      : Error("infeasible: requested m exceeds feasible sites (" +
              std::to_string(feasible_count) + " feasible sites, " +
              std::to_string(requested) + " requested)"),
        feasible_count_(feasible_count),
        requested_(requested) {}

  std::size_t feasible_count() const { return feasible_count_; }
  std::size_t requested() const { return requested_; }

 private:
  std::size_t feasible_count_;
  std::size_t requested_;
};

// An exact oracle refused to run because its enumeration guard tripped.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace siteselect

#endif  // SITESELECT_ERROR_HPP_
