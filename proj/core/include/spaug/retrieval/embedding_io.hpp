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

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "spaug/retrieval/embedding.hpp"

namespace spaug {

/// Binary container, little-endian: "VSEB", u16 version (1), u32 count,
/// u32 dim, then `count` records of (u64 id, dim x f32).
inline constexpr std::uint16_t kEmbeddingFormatVersion = 1;

/// Throws kShape when the embeddings do not share one dimension.
std::vector<std::uint8_t> encode_embeddings(std::span<const Embedding> embeddings);
/// Throws kFormat (bad magic/version, trailing bytes, non-finite values) or
/// kTruncated. Never returns a partial result.
std::vector<Embedding> decode_embeddings(std::span<const std::uint8_t> bytes);

void save_embeddings(const std::filesystem::path& path, std::span<const Embedding> embeddings);
std::vector<Embedding> load_embeddings(const std::filesystem::path& path);

}  // namespace spaug
