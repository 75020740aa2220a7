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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "expect_error.hpp"
#include "spaug/imgcorrupt/image_io.hpp"
#include "spaug/imgcorrupt/jpeg.hpp"
#include "synthetic.hpp"

namespace spaug {
namespace {

const std::filesystem::path kData = std::filesystem::path(SPAUG_SOURCE_DIR) / "tests" / "data";

// Annex K luminance and chrominance tables, natural order.
constexpr int kLuma[64] = {16, 11, 10, 16, 24,  40,  51,  61,  12, 12, 14, 19, 26,  58,  60,  55,
                           14, 13, 16, 24, 40,  57,  69,  56,  14, 17, 22, 29, 51,  87,  80,  62,
                           18, 22, 37, 56, 68,  109, 103, 77,  24, 35, 55, 64, 81,  104, 113, 92,
                           49, 64, 78, 87, 103, 121, 120, 101, 72, 92, 95, 98, 112, 100, 103, 99};
constexpr int kChroma[64] = {17, 18, 24, 47, 99, 99, 99, 99, 18, 21, 26, 66, 99, 99, 99, 99,
                             24, 26, 56, 99, 99, 99, 99, 99, 47, 66, 99, 99, 99, 99, 99, 99,
                             99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99,
                             99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99};

int ijg_scaled(int base, int quality) {
  const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
  return std::clamp((base * scale + 50) / 100, 1, 255);
}

TEST(Jpeg, QuantTablesFollowTheQualityFormula) {
  for (int q : {1, 10, 25, 50, 75, 90, 100}) {
    const auto luma = jpeg_quant_table(false, q);
    const auto chroma = jpeg_quant_table(true, q);
    for (int i = 0; i < 64; ++i) {
      EXPECT_EQ(luma[i], ijg_scaled(kLuma[i], q)) << q << " " << i;
      EXPECT_EQ(chroma[i], ijg_scaled(kChroma[i], q)) << q << " " << i;
    }
  }
  const auto base = jpeg_quant_table(false, 50);
  for (int i = 0; i < 64; ++i) EXPECT_EQ(base[i], kLuma[i]);
  for (auto v : jpeg_quant_table(true, 100)) EXPECT_EQ(v, 1);
}

TEST(Jpeg, RoundTripQualityAndShape) {
  const auto img = testing::synthetic_image(0, 61);  // odd size exercises padding
  const auto bytes = encode_jpeg(img, 95);
  ASSERT_GE(bytes.size(), 4u);
  EXPECT_EQ(bytes[0], 0xFF);
  EXPECT_EQ(bytes[1], 0xD8);
  EXPECT_EQ(bytes[bytes.size() - 2], 0xFF);
  EXPECT_EQ(bytes[bytes.size() - 1], 0xD9);
  const auto back = decode_jpeg(bytes);
  ASSERT_TRUE(back.same_shape(img));
  EXPECT_GT(psnr(img, back), 30.0);
  EXPECT_EQ(encode_jpeg(img, 95), bytes);
}

TEST(Jpeg, LowerQualityGivesSmallerFiles) {
  const auto img = testing::synthetic_image(1, 96);
  EXPECT_GT(encode_jpeg(img, 90).size(), encode_jpeg(img, 50).size());
  EXPECT_GT(encode_jpeg(img, 50).size(), encode_jpeg(img, 10).size());
}

TEST(Jpeg, InvalidQualityAndCorruptStreams) {
  const auto img = testing::synthetic_image(2, 16);
  EXPECT_SPAUG_ERROR(encode_jpeg(img, 0), ErrorCode::kInvalidSpec);
  EXPECT_SPAUG_ERROR(encode_jpeg(img, 101), ErrorCode::kInvalidSpec);
  const std::vector<std::uint8_t> garbage = {0x12, 0x34, 0x56};
  EXPECT_SPAUG_ERROR(decode_jpeg(garbage), ErrorCode::kFormat);
  auto bytes = encode_jpeg(img, 80);
  bytes.resize(bytes.size() / 2);
  EXPECT_SPAUG_ERROR(decode_jpeg(bytes), ErrorCode::kFormat);
}

void expect_close_to_reference(const std::string& jpg, const std::string& png, double mean_tol,
                               int max_tol) {
  const auto ours = decode_jpeg(read_file_bytes(kData / jpg));
  const auto ref = read_image(kData / png);
  ASSERT_TRUE(ours.same_shape(ref));
  double sum = 0.0;
  int worst = 0;
  for (std::size_t i = 0; i < ours.data().size(); ++i) {
    const int a = static_cast<int>(std::lround(ours.data()[i] * 255.0f));
    const int b = static_cast<int>(std::lround(ref.data()[i] * 255.0f));
    sum += std::abs(a - b);
    worst = std::max(worst, std::abs(a - b));
  }
  EXPECT_LE(sum / static_cast<double>(ours.data().size()), mean_tol) << jpg;
  EXPECT_LE(worst, max_tol) << jpg;
}

// Reference pixels come from an independent decoder (libjpeg via Pillow).
// Only IDCT and upsampling rounding may differ.
TEST(Jpeg, DecodesThirdPartyFiles) {
  expect_close_to_reference("pillow_q90_444.jpg", "pillow_q90_444.png", 0.6, 3);
  expect_close_to_reference("pillow_gray.jpg", "pillow_gray.png", 0.6, 3);
  expect_close_to_reference("pillow_q80_420.jpg", "pillow_q80_420.png", 0.6, 3);
}

TEST(Jpeg, RejectsProgressive) {
  EXPECT_SPAUG_ERROR(decode_jpeg(read_file_bytes(kData / "pillow_progressive.jpg")),
                     ErrorCode::kFormat);
}

}  // namespace
}  // namespace spaug
