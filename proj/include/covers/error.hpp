// Copyright 2026 The covers Authors
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

#ifndef COVERS_ERROR_HPP_
#define COVERS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace covers {

// Every failure raised by the library derives from Error. The C API maps
// each subclass onto one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: n = 0, an inadmissible (group, type) pair, an unknown
// generator, an absent table cell.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A checked 64-bit operation would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A lookup (table cell, entry selector) named something that does not exist.
class NotFound : public Error {
 public:
  using Error::Error;
};

// Malformed Dirichlet expression text; position() is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Something that cannot happen unless a formula was transcribed wrongly,
// e.g. a Burnside average that is not an integer.
class InternalError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] inline void fail_invalid(const std::string& msg) {
  throw InvalidArgument(msg);
}

}  // namespace covers

#endif  // COVERS_ERROR_HPP_
