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

#include "spaug/imgcorrupt/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "spaug/common/error.hpp"
#include "spaug/imgcorrupt/jpeg.hpp"

namespace spaug {
namespace {

struct PngReadSource {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;
};

[[noreturn]] void png_error_handler(png_structp, png_const_charp message) {
  throw Error(ErrorCode::kFormat, std::string("png: ") + message);
}

void png_warning_handler(png_structp, png_const_charp) {}

void png_read_callback(png_structp png, png_bytep out, png_size_t length) {
  auto* src = static_cast<PngReadSource*>(png_get_io_ptr(png));
  if (src->pos + length > src->bytes.size()) png_error(png, "truncated data");
  std::memcpy(out, src->bytes.data() + src->pos, length);
  src->pos += length;
}

void png_write_callback(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + length);
}

void png_flush_callback(png_structp) {}

std::uint8_t to_byte(float v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0f, 1.0f) * 255.0f));
}

}  // namespace

std::vector<std::uint8_t> encode_png(const Image& image) {
  std::vector<std::uint8_t> out;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            png_error_handler, png_warning_handler);
  if (!png) fail(ErrorCode::kIo, "png: cannot allocate writer");
  png_infop info = png_create_info_struct(png);
  std::vector<std::uint8_t> row(static_cast<std::size_t>(image.width()) * 3);
  try {
    if (!info) fail(ErrorCode::kIo, "png: cannot allocate info");
    png_set_write_fn(png, &out, png_write_callback, png_flush_callback);
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.width()),
                 static_cast<png_uint_32>(image.height()), 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_set_compression_level(png, 6);
    png_write_info(png, info);
    for (int y = 0; y < image.height(); ++y) {
      for (int x = 0; x < image.width(); ++x) {
        for (int c = 0; c < 3; ++c) row[static_cast<std::size_t>(x) * 3 + c] = to_byte(image.at(y, x, c));
      }
      png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
  } catch (...) {
    png_destroy_write_struct(&png, &info);
    throw;
  }
  png_destroy_write_struct(&png, &info);
  return out;
}

Image decode_png(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
    fail(ErrorCode::kFormat, "png: bad signature");
  }
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                           png_error_handler, png_warning_handler);
  if (!png) fail(ErrorCode::kIo, "png: cannot allocate reader");
  png_infop info = png_create_info_struct(png);
  PngReadSource src{bytes, 0};
  Image image;
  try {
    if (!info) fail(ErrorCode::kIo, "png: cannot allocate info");
    png_set_read_fn(png, &src, png_read_callback);
    png_read_info(png, info);
    const auto color = png_get_color_type(png, info);
    const auto depth = png_get_bit_depth(png, info);
    if (depth == 16) png_set_strip_16(png);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA) png_set_gray_to_rgb(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);
    const int w = static_cast<int>(png_get_image_width(png, info));
    const int h = static_cast<int>(png_get_image_height(png, info));
    const auto rowbytes = png_get_rowbytes(png, info);
    if (rowbytes != static_cast<std::size_t>(w) * 3) fail(ErrorCode::kFormat, "png: unexpected row layout");
    std::vector<std::uint8_t> pixels(rowbytes * static_cast<std::size_t>(h));
    std::vector<png_bytep> rows(static_cast<std::size_t>(h));
    for (int y = 0; y < h; ++y) rows[static_cast<std::size_t>(y)] = pixels.data() + rowbytes * y;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    std::vector<float> data(pixels.size());
    for (std::size_t i = 0; i < pixels.size(); ++i) data[i] = static_cast<float>(pixels[i]) / 255.0f;
    image = Image(h, w, std::move(data));
  } catch (...) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw;
  }
  png_destroy_read_struct(&png, &info, nullptr);
  return image;
}

Image read_image(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  if (bytes.size() >= 2 && bytes[0] == 0xFF && bytes[1] == 0xD8) return decode_jpeg(bytes);
  if (bytes.size() >= 8 && png_sig_cmp(bytes.data(), 0, 8) == 0) return decode_png(bytes);
  fail(ErrorCode::kFormat, path.string() + ": not a PNG or JPEG file");
}

void write_png(const Image& image, const std::filesystem::path& path) {
  write_file_bytes(path, encode_png(image));
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) fail(ErrorCode::kIo, "error reading " + path.string());
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorCode::kIo, "error writing " + path.string());
}

}  // namespace spaug
