// Copyright 2026 The pflab Authors.
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

#ifndef PFLAB_ERRORS_HPP_
#define PFLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pflab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or input outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DomainError {
 public:
  ParseError(int line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Input exceeds a configured size limit or a search budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An internally verified postcondition failed. Always a bug or a
// counterexample; never an input problem.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace pflab

#endif  // PFLAB_ERRORS_HPP_
