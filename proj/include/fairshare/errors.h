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

#ifndef FAIRSHARE_ERRORS_H_
#define FAIRSHARE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fairshare {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract arguments (unknown node ids, empty sets,
// unbalanced totals, bad distributions).
class InputError : public Error {
 public:
  using Error::Error;
};

// A file could not be parsed. `context` names the line or JSON field.
class ParseError : public InputError {
 public:
  ParseError(const std::string& context, const std::string& message)
      : InputError(context + ": " + message), context_(context) {}
  const std::string& context() const { return context_; }

 private:
  std::string context_;
};

// An exhaustive procedure was asked to run above its size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A randomized generator ran out of attempts (e.g. never connected).
class GenerationError : public CapacityError {
 public:
  using CapacityError::CapacityError;
};

// The instance violates a structural assumption of the model, e.g. an
// isolated node with positive endowment inside a peeling domain.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A consistency check that must hold by construction did not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fairshare

#endif  // FAIRSHARE_ERRORS_H_
