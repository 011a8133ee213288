// Copyright 2026 The Authors.
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

namespace spm {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad file contents, out-of-range indices, bad parameters.
// `line()` is the 1-based line number for parse errors, 0 otherwise.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// The instance does not satisfy a solver's structural requirement
// (degree profile, existence of an A-perfect matching, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine refused to run because the search space is too big.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace spm
