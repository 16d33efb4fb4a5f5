// Copyright 2026 The tricorr Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace tricorr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (shape, range, normalization).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// An iterative solver did not converge. Partial results are never returned.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string &what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

/// Canonical form could not be reached for either quadratic root.
class CanonicalizationError : public Error {
  public:
    CanonicalizationError(const std::string &what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

/// Measured data is inconsistent with the assumptions of the pipeline.
class InconsistentData : public Error {
  public:
    using Error::Error;
};

/// A file does not follow its schema. The message names the offending key.
class SchemaError : public Error {
  public:
    using Error::Error;
};

} // namespace tricorr
