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

#include "spaug/common/error.hpp"

namespace spaug {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSpec: return "invalid-spec";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kEmptySentence: return "empty-sentence";
    case ErrorCode::kEmptyFeature: return "empty-feature";
    case ErrorCode::kShape: return "shape";
    case ErrorCode::kDegenerateEmbedding: return "degenerate-embedding";
    case ErrorCode::kProtocol: return "protocol";
    case ErrorCode::kFormat: return "format";
    case ErrorCode::kTruncated: return "truncated";
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kTransport: return "transport";
  }
  return "unknown";
}

}  // namespace spaug
