// Copyright 2026 The mubwit Authors
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

#include <locale>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mubwit {

/// Short, locale-independent rendering of a number for error messages.
inline std::string to_text(double x) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << x;
  return out.str();
}

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside the domain of a construction (d < 2, x <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Matrix dimensions do not fit the requested operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A dimension product exceeds the configured maximum.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A numerical precondition failed (non-Hermitian input, complex trace, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The witness recipe is inconsistent with the basis set it refers to.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// The requested construction has no implementation for this dimension.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// File or stream could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mubwit
