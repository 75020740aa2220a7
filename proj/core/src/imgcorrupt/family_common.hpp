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

#include <string>

#include "spaug/common/error.hpp"
#include "spaug/common/seed.hpp"
#include "spaug/imgcorrupt/corrupt.hpp"

namespace spaug::detail {

[[noreturn]] inline void wrong_family(CorruptionKind kind, const char* family) {
  fail(ErrorCode::kInvalidSpec,
       std::string(to_string(kind)) + " is not handled by the " + family + " family");
}

// Every operator draws from its own stream so that the same spec seed used for
// different kinds does not produce correlated noise.
inline Rng stream_for(CorruptionKind kind, std::uint64_t seed, const char* label = "") {
  return Rng(derive_subseed(seed, std::string(to_string(kind)) + "/" + label));
}

void check_kernel_radius(const Image& image, int radius, CorruptionKind kind);

}  // namespace spaug::detail
