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

#include "spaug/retrieval/embedding_io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "spaug/common/error.hpp"
#include "spaug/imgcorrupt/image_io.hpp"

namespace spaug {
namespace {

constexpr char kMagic[4] = {'V', 'S', 'E', 'B'};
constexpr std::size_t kHeaderSize = 4 + 2 + 4 + 4;

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  }
}

template <typename T>
T get_le(const std::uint8_t* p) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(static_cast<T>(p[i]) << (8 * i));
  return v;
}

}  // namespace

std::vector<std::uint8_t> encode_embeddings(std::span<const Embedding> embeddings) {
  const std::size_t dim = embeddings.empty() ? 0 : embeddings.front().dim();
  for (const auto& e : embeddings) {
    if (e.dim() != dim) {
      fail(ErrorCode::kShape, "embedding " + std::to_string(e.id) + " has dimension " +
                                  std::to_string(e.dim()) + ", expected " + std::to_string(dim));
    }
  }
  if (embeddings.size() > 0xFFFFFFFFu || dim > 0xFFFFFFFFu) {
    fail(ErrorCode::kShape, "embedding collection too large for the container");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + embeddings.size() * (8 + 4 * dim));
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put_le<std::uint16_t>(out, kEmbeddingFormatVersion);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(embeddings.size()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(dim));
  for (const auto& e : embeddings) {
    put_le<std::uint64_t>(out, e.id);
    for (float v : e.values) put_le<std::uint32_t>(out, std::bit_cast<std::uint32_t>(v));
  }
  return out;
}

std::vector<Embedding> decode_embeddings(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    fail(bytes.size() < 4 ? ErrorCode::kTruncated : ErrorCode::kFormat,
         "not an embedding container (bad magic)");
  }
  if (bytes.size() < kHeaderSize) fail(ErrorCode::kTruncated, "embedding header is truncated");
  const auto version = get_le<std::uint16_t>(bytes.data() + 4);
  if (version != kEmbeddingFormatVersion) {
    fail(ErrorCode::kFormat, "unsupported embedding container version " + std::to_string(version));
  }
  const std::uint64_t count = get_le<std::uint32_t>(bytes.data() + 6);
  const std::uint64_t dim = get_le<std::uint32_t>(bytes.data() + 10);
  const std::uint64_t record = 8 + 4 * dim;
  const std::uint64_t expected = kHeaderSize + count * record;
  if (bytes.size() < expected) {
    fail(ErrorCode::kTruncated, "embedding payload is truncated: expected " +
                                    std::to_string(expected) + " bytes, found " +
                                    std::to_string(bytes.size()));
  }
  if (bytes.size() > expected) {
    fail(ErrorCode::kFormat, "embedding container has " + std::to_string(bytes.size() - expected) +
                                 " trailing bytes; header dimension or count is wrong");
  }
  std::vector<Embedding> out(count);
  const std::uint8_t* p = bytes.data() + kHeaderSize;
  for (auto& e : out) {
    e.id = get_le<std::uint64_t>(p);
    p += 8;
    e.values.resize(dim);
    for (auto& v : e.values) {
      v = std::bit_cast<float>(get_le<std::uint32_t>(p));
      p += 4;
      if (!std::isfinite(v)) {
        fail(ErrorCode::kFormat, "embedding " + std::to_string(e.id) + " has a non-finite entry");
      }
    }
  }
  return out;
}

void save_embeddings(const std::filesystem::path& path, std::span<const Embedding> embeddings) {
  write_file_bytes(path, encode_embeddings(embeddings));
}

std::vector<Embedding> load_embeddings(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  try {
    return decode_embeddings(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace spaug
