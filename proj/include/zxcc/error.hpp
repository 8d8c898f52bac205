// Copyright 2026 The zxcc authors
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

namespace zxcc {

/** Base class for all zxcc errors. */
class ZXError : public std::runtime_error {
 public:
  explicit ZXError(const std::string& msg) : std::runtime_error(msg) {}
};

/** Composition or generator arity mismatch. */
class ArityError : public ZXError {
 public:
  using ZXError::ZXError;
};

/** Malformed file or JSON payload. */
class FormatError : public ZXError {
 public:
  using ZXError::ZXError;
};

/** Evaluation exceeded the configured intermediate-dimension cap. */
class ResourceError : public ZXError {
 public:
  using ZXError::ZXError;
};

/** A simproc exceeded its step budget. */
class BudgetError : public ZXError {
 public:
  using ZXError::ZXError;
};

/** A match was applied to a diagram other than the one it was found on. */
class StaleMatchError : public ZXError {
 public:
  using ZXError::ZXError;
};

}  // namespace zxcc
