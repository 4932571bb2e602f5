// Copyright 2026 The agshare Authors
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

namespace agshare {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad config values, out-of-range indices, points off the curve.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Elements or points from two different fields were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the supported regime (e.g. m >= |D|, trivial dual).
class UnsupportedParameters : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The secret coordinate is not embedded (g_0 = 0).
class DegenerateScheme : public Error {
 public:
  using Error::Error;
};

/// The reconstruction code has a weight-1 word, so qualification is not
/// characterised by dual codewords.
class RecoveryHypothesisViolated : public Error {
 public:
  using Error::Error;
};

class NotQualified : public Error {
 public:
  using Error::Error;
};

/// A computed scheme contradicts one of the structural results the analysis
/// module checks (bound chain, subgroup MDS, sufficient MDS condition).
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace agshare
