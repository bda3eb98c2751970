/* Copyright 2026 The Pavelka Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Exception hierarchy. Each class corresponds to one CLI exit status, so
// callers can catch by category without inspecting messages.

#ifndef PAVELKA_ERRORS_H_
#define PAVELKA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pavelka {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 1-based position in a source text.
struct SourceSpan {
  int line = 1;
  int column = 1;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : Error(std::to_string(span.line) + ":" + std::to_string(span.column) +
              ": " + message),
        span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

// An evaluation lacks a value for an atom the formula mentions.
class UnboundAtomError : public Error {
 public:
  using Error::Error;
};

// A construct outside the fragment an operation supports (e.g. a product
// of two non-constant subformulas in an LP encoding).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A configured resource limit (variables, binaries, budget) was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

// The theory has no model.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// The positivity proviso for conditional bounds does not hold.
class ProvisoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pavelka

#endif  // PAVELKA_ERRORS_H_
