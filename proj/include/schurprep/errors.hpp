// Copyright 2026 The schurprep Authors
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

#ifndef SCHURPREP_ERRORS_HPP
#define SCHURPREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schurprep {

/// Bad user input: malformed labels, schema violations, out-of-range
/// parameters. CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested dense computation exceeds the configured d^N cap.
/// CLI exit code 2.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed (numerical labeling ambiguity, broken
/// orthonormality, ...). CLI exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace schurprep

#endif
