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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "spaug/imgcorrupt/image.hpp"

namespace spaug {

/// Baseline sequential JPEG (JFIF) at the given quality (1..100): YCbCr with
/// 4:2:0 chroma subsampling, the standard Annex K quantization tables scaled
/// with the IJG quality formula, and the standard Huffman tables. Output is a
/// pure function of the 8-bit quantized input and the quality.
std::vector<std::uint8_t> encode_jpeg(const Image& image, int quality);

/// Decodes baseline / extended-sequential Huffman JPEG with 1 or 3 components,
/// any 1..2 sampling factors, restart intervals and multiple scans.
/// Progressive and arithmetic-coded files are rejected with a format error.
/// Chroma is upsampled by pixel replication.
Image decode_jpeg(std::span<const std::uint8_t> bytes);

/// Annex K table (natural order) scaled for `quality`, entries in 1..255.
std::array<std::uint16_t, 64> jpeg_quant_table(bool chroma, int quality);

}  // namespace spaug
