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

#include "spaug/imgcorrupt/image.hpp"

namespace spaug {

/// 8-bit RGB PNG, no ancillary chunks, fixed zlib level: identical images
/// always encode to identical bytes.
std::vector<std::uint8_t> encode_png(const Image& image);

/// Any PNG libpng understands, converted to 8-bit RGB (alpha dropped).
Image decode_png(std::span<const std::uint8_t> bytes);

/// Reads a PNG or baseline JPEG file, chosen by its signature.
Image read_image(const std::filesystem::path& path);

/// Writes an 8-bit RGB PNG.
void write_png(const Image& image, const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace spaug
