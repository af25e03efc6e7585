// Copyright 2026 The qgt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGT_ERROR_HPP
#define QGT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qgt {

/// Bad input: unknown labels, invalid weights, mismatched dimensions,
/// non-unitary operators, malformed files.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// An exhaustive construction would exceed its configured size cap.
class SizeLimitError : public ValidationError {
 public:
  explicit SizeLimitError(const std::string& what) : ValidationError(what) {}
};

/// A consistency check between two computation routes failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qgt

#endif  // QGT_ERROR_HPP
