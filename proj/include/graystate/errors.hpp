// Copyright 2026 The graystate developers
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

namespace graystate {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed problem parameters (n, k, two_s) or inputs inconsistent with them.
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// The requested digit-sum sector contains no ditstrings (k > n * two_s).
class EmptySectorError : public InvalidSpecError {
 public:
  using InvalidSpecError::InvalidSpecError;
};

/// Heuristic path search exhausted all branches without covering the sector.
class SearchFailureError : public Error {
 public:
  using Error::Error;
};

/// Data fails a structural check: broken adjacency, bad amplitude list,
/// out-of-range gate levels, mismatched lengths.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A size cap was exceeded (sector dimension, statevector entries, magnon count).
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// File or stream could not be read, written, or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace graystate
