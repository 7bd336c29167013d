// Copyright 2026 The nilorb Authors
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

#ifndef NILORB_PERM_ERRORS_H
#define NILORB_PERM_ERRORS_H

#include <stdexcept>
#include <string>

namespace nilorb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad permutation text, degree mismatch, non-prime
/// characteristic, singular matrix and similar contract violations.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// An exact integer left its representable range.
class OverflowError : public Error {
  public:
    using Error::Error;
};

/// A configured size cap (element enumeration, field size, ambient order)
/// would be exceeded.
class CapExceeded : public Error {
  public:
    using Error::Error;
};

/// A persisted file is unreadable, has the wrong schema version, or fails its
/// integrity re-check.
class FormatError : public Error {
  public:
    using Error::Error;
};

/// An invariant the library relies on did not hold. Always a bug.
class InternalError : public Error {
  public:
    using Error::Error;
};

/// Cooperative cancellation after a runtime budget ran out.
class DeadlineExceeded : public Error {
  public:
    using Error::Error;
};

}  // namespace nilorb

#endif
