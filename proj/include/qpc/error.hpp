/* Copyright 2026 The qpc Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QPC_ERROR_HPP
#define QPC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qpc {

/// Error families. The numeric values double as CLI exit codes and C API
/// status codes.
enum class ErrorKind : int {
  Parse = 2,
  Precondition = 3,
  Budget = 4,
  Internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what)
      : Error(ErrorKind::Parse, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::Precondition, what) {}
};

// The reduction of a modulus mod p has a repeated factor. Every structural
// result in this library assumes it does not.
class NotSquareFreeError : public PreconditionError {
 public:
  explicit NotSquareFreeError(const std::string& what)
      : PreconditionError(what) {}
};

// The generator does not meet the non-zero-divisor hypothesis of the
// minimal generating set construction.
class HypothesisError : public PreconditionError {
 public:
  explicit HypothesisError(const std::string& what)
      : PreconditionError("generating hypothesis not met: " + what) {}
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what)
      : Error(ErrorKind::Budget, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::Internal, what) {}
};

}  // namespace qpc

#endif  // QPC_ERROR_HPP
