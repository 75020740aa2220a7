// Copyright 2026 The spaug Authors
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
#include <string_view>

namespace spaug {

enum class ErrorCode {
  kInvalidSpec,
  kInvalidArgument,
  kEmptySentence,
  kEmptyFeature,
  kShape,
  kDegenerateEmbedding,
  kProtocol,
  kFormat,
  kTruncated,
  kSchema,
  kValidation,
  kIo,
  kTransport,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception type. The code is
// what callers (and the CLI exit-code mapping) dispatch on; the message is
// for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by translator clients. Carries the sentence that could not be
// translated so callers can fall back to it.
class TransportError : public Error {
 public:
  TransportError(const std::string& message, std::string untranslated)
      : Error(ErrorCode::kTransport, message),
        untranslated_(std::move(untranslated)) {}

  const std::string& untranslated() const noexcept { return untranslated_; }

 private:
  std::string untranslated_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace spaug
