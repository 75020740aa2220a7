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

#include "spaug/imgcorrupt/jpeg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spaug/common/error.hpp"

namespace spaug {
namespace {

constexpr std::array<std::uint8_t, 64> kZigzag = {
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,
    12, 19, 26, 33, 40, 48, 41, 34, 27, 20, 13, 6,  7,  14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63};

constexpr std::array<std::uint8_t, 64> kLumaQuant = {
    16, 11, 10, 16, 24,  40,  51,  61,  12, 12, 14, 19, 26,  58,  60,  55,
    14, 13, 16, 24, 40,  57,  69,  56,  14, 17, 22, 29, 51,  87,  80,  62,
    18, 22, 37, 56, 68,  109, 103, 77,  24, 35, 55, 64, 81,  104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101, 72, 92, 95, 98, 112, 100, 103, 99};

constexpr std::array<std::uint8_t, 64> kChromaQuant = {
    17, 18, 24, 47, 99, 99, 99, 99, 18, 21, 26, 66, 99, 99, 99, 99,
    24, 26, 56, 99, 99, 99, 99, 99, 47, 66, 99, 99, 99, 99, 99, 99,
    99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99,
    99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99};

struct HuffmanSpec {
  std::array<std::uint8_t, 16> counts;
  std::vector<std::uint8_t> values;
};

const HuffmanSpec kDcLuma = {{0, 1, 5, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
                             {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
const HuffmanSpec kDcChroma = {{0, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
                               {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
const HuffmanSpec kAcLuma = {
    {0, 2, 1, 3, 3, 2, 4, 3, 5, 5, 4, 4, 0, 0, 1, 0x7d},
    {0x01, 0x02, 0x03, 0x00, 0x04, 0x11, 0x05, 0x12, 0x21, 0x31, 0x41, 0x06, 0x13, 0x51, 0x61,
     0x07, 0x22, 0x71, 0x14, 0x32, 0x81, 0x91, 0xa1, 0x08, 0x23, 0x42, 0xb1, 0xc1, 0x15, 0x52,
     0xd1, 0xf0, 0x24, 0x33, 0x62, 0x72, 0x82, 0x09, 0x0a, 0x16, 0x17, 0x18, 0x19, 0x1a, 0x25,
     0x26, 0x27, 0x28, 0x29, 0x2a, 0x34, 0x35, 0x36, 0x37, 0x38, 0x39, 0x3a, 0x43, 0x44, 0x45,
     0x46, 0x47, 0x48, 0x49, 0x4a, 0x53, 0x54, 0x55, 0x56, 0x57, 0x58, 0x59, 0x5a, 0x63, 0x64,
     0x65, 0x66, 0x67, 0x68, 0x69, 0x6a, 0x73, 0x74, 0x75, 0x76, 0x77, 0x78, 0x79, 0x7a, 0x83,
     0x84, 0x85, 0x86, 0x87, 0x88, 0x89, 0x8a, 0x92, 0x93, 0x94, 0x95, 0x96, 0x97, 0x98, 0x99,
     0x9a, 0xa2, 0xa3, 0xa4, 0xa5, 0xa6, 0xa7, 0xa8, 0xa9, 0xaa, 0xb2, 0xb3, 0xb4, 0xb5, 0xb6,
     0xb7, 0xb8, 0xb9, 0xba, 0xc2, 0xc3, 0xc4, 0xc5, 0xc6, 0xc7, 0xc8, 0xc9, 0xca, 0xd2, 0xd3,
     0xd4, 0xd5, 0xd6, 0xd7, 0xd8, 0xd9, 0xda, 0xe1, 0xe2, 0xe3, 0xe4, 0xe5, 0xe6, 0xe7, 0xe8,
     0xe9, 0xea, 0xf1, 0xf2, 0xf3, 0xf4, 0xf5, 0xf6, 0xf7, 0xf8, 0xf9, 0xfa}};
const HuffmanSpec kAcChroma = {
    {0, 2, 1, 2, 4, 4, 3, 4, 7, 5, 4, 4, 0, 1, 2, 0x77},
    {0x00, 0x01, 0x02, 0x03, 0x11, 0x04, 0x05, 0x21, 0x31, 0x06, 0x12, 0x41, 0x51, 0x07, 0x61,
     0x71, 0x13, 0x22, 0x32, 0x81, 0x08, 0x14, 0x42, 0x91, 0xa1, 0xb1, 0xc1, 0x09, 0x23, 0x33,
     0x52, 0xf0, 0x15, 0x62, 0x72, 0xd1, 0x0a, 0x16, 0x24, 0x34, 0xe1, 0x25, 0xf1, 0x17, 0x18,
     0x19, 0x1a, 0x26, 0x27, 0x28, 0x29, 0x2a, 0x35, 0x36, 0x37, 0x38, 0x39, 0x3a, 0x43, 0x44,
     0x45, 0x46, 0x47, 0x48, 0x49, 0x4a, 0x53, 0x54, 0x55, 0x56, 0x57, 0x58, 0x59, 0x5a, 0x63,
     0x64, 0x65, 0x66, 0x67, 0x68, 0x69, 0x6a, 0x73, 0x74, 0x75, 0x76, 0x77, 0x78, 0x79, 0x7a,
     0x82, 0x83, 0x84, 0x85, 0x86, 0x87, 0x88, 0x89, 0x8a, 0x92, 0x93, 0x94, 0x95, 0x96, 0x97,
     0x98, 0x99, 0x9a, 0xa2, 0xa3, 0xa4, 0xa5, 0xa6, 0xa7, 0xa8, 0xa9, 0xaa, 0xb2, 0xb3, 0xb4,
     0xb5, 0xb6, 0xb7, 0xb8, 0xb9, 0xba, 0xc2, 0xc3, 0xc4, 0xc5, 0xc6, 0xc7, 0xc8, 0xc9, 0xca,
     0xd2, 0xd3, 0xd4, 0xd5, 0xd6, 0xd7, 0xd8, 0xd9, 0xda, 0xe2, 0xe3, 0xe4, 0xe5, 0xe6, 0xe7,
     0xe8, 0xe9, 0xea, 0xf2, 0xf3, 0xf4, 0xf5, 0xf6, 0xf7, 0xf8, 0xf9, 0xfa}};

// c[u][x] = C(u)/2 * cos((2x + 1) u pi / 16), C(0) = 1/sqrt(2).
struct DctBasis {
  DctBasis() {
    for (int u = 0; u < 8; ++u) {
      const double cu = u == 0 ? std::numbers::sqrt2 / 2.0 : 1.0;
      for (int x = 0; x < 8; ++x) {
        c[u][x] = cu / 2.0 * std::cos((2 * x + 1) * u * std::numbers::pi / 16.0);
      }
    }
  }
  double c[8][8];
};

const DctBasis& basis() {
  static const DctBasis b;
  return b;
}

void forward_dct(const double in[64], double out[64]) {
  const auto& c = basis().c;
  double tmp[64];
  for (int y = 0; y < 8; ++y) {
    for (int u = 0; u < 8; ++u) {
      double s = 0.0;
      for (int x = 0; x < 8; ++x) s += c[u][x] * in[y * 8 + x];
      tmp[y * 8 + u] = s;
    }
  }
  for (int v = 0; v < 8; ++v) {
    for (int u = 0; u < 8; ++u) {
      double s = 0.0;
      for (int y = 0; y < 8; ++y) s += c[v][y] * tmp[y * 8 + u];
      out[v * 8 + u] = s;
    }
  }
}

void inverse_dct(const double in[64], double out[64]) {
  const auto& c = basis().c;
  double tmp[64];
  for (int v = 0; v < 8; ++v) {
    for (int x = 0; x < 8; ++x) {
      double s = 0.0;
      for (int u = 0; u < 8; ++u) s += c[u][x] * in[v * 8 + u];
      tmp[v * 8 + x] = s;
    }
  }
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      double s = 0.0;
      for (int v = 0; v < 8; ++v) s += c[v][y] * tmp[v * 8 + x];
      out[y * 8 + x] = s;
    }
  }
}

int bit_length(int v) {
  v = std::abs(v);
  int n = 0;
  while (v) {
    ++n;
    v >>= 1;
  }
  return n;
}

// ---------------------------------------------------------------- encoder

struct HuffmanCode {
  std::array<std::uint16_t, 256> code{};
  std::array<std::uint8_t, 256> length{};
};

HuffmanCode build_codes(const HuffmanSpec& spec) {
  HuffmanCode out;
  std::uint16_t code = 0;
  std::size_t k = 0;
  for (int len = 1; len <= 16; ++len) {
    for (int i = 0; i < spec.counts[len - 1]; ++i) {
      out.code[spec.values[k]] = code++;
      out.length[spec.values[k]] = static_cast<std::uint8_t>(len);
      ++k;
    }
    code <<= 1;
  }
  return out;
}

class BitWriter {
 public:
  explicit BitWriter(std::vector<std::uint8_t>& out) : out_(out) {}

  void put(std::uint32_t bits, int count) {
    for (int i = count - 1; i >= 0; --i) {
      acc_ = static_cast<std::uint8_t>((acc_ << 1) | ((bits >> i) & 1u));
      if (++filled_ == 8) emit();
    }
  }

  void flush() {
    while (filled_ != 0) put(1, 1);
  }

 private:
  void emit() {
    out_.push_back(acc_);
    if (acc_ == 0xFF) out_.push_back(0x00);
    acc_ = 0;
    filled_ = 0;
  }

  std::vector<std::uint8_t>& out_;
  std::uint8_t acc_ = 0;
  int filled_ = 0;
};

void put_u16(std::vector<std::uint8_t>& out, int v) {
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void write_dht(std::vector<std::uint8_t>& out, int table_class, int id, const HuffmanSpec& spec) {
  out.push_back(0xFF);
  out.push_back(0xC4);
  put_u16(out, 2 + 1 + 16 + static_cast<int>(spec.values.size()));
  out.push_back(static_cast<std::uint8_t>((table_class << 4) | id));
  out.insert(out.end(), spec.counts.begin(), spec.counts.end());
  out.insert(out.end(), spec.values.begin(), spec.values.end());
}

void encode_block(BitWriter& bw, const double samples[64], const std::array<std::uint16_t, 64>& quant,
                  const HuffmanCode& dc, const HuffmanCode& ac, int& dc_pred) {
  double coef[64];
  forward_dct(samples, coef);
  int q[64];
  for (int i = 0; i < 64; ++i) {
    const int n = kZigzag[i];
    q[i] = static_cast<int>(std::lround(coef[n] / quant[n]));
  }
  const int diff = q[0] - dc_pred;
  dc_pred = q[0];
  const int cat = bit_length(diff);
  bw.put(dc.code[cat], dc.length[cat]);
  if (cat) bw.put(static_cast<std::uint32_t>(diff < 0 ? diff + (1 << cat) - 1 : diff), cat);

  int run = 0;
  for (int i = 1; i < 64; ++i) {
    if (q[i] == 0) {
      ++run;
      continue;
    }
    while (run > 15) {
      bw.put(ac.code[0xF0], ac.length[0xF0]);
      run -= 16;
    }
    const int size = bit_length(q[i]);
    const int sym = (run << 4) | size;
    bw.put(ac.code[sym], ac.length[sym]);
    bw.put(static_cast<std::uint32_t>(q[i] < 0 ? q[i] + (1 << size) - 1 : q[i]), size);
    run = 0;
  }
  if (run > 0) bw.put(ac.code[0x00], ac.length[0x00]);
}

// ---------------------------------------------------------------- decoder

struct HuffmanTable {
  bool defined = false;
  std::array<std::int32_t, 18> maxcode{};
  std::array<std::int32_t, 17> mincode{};
  std::array<std::int32_t, 17> valptr{};
  std::vector<std::uint8_t> values;
};

HuffmanTable build_decoder(const std::uint8_t counts[16], std::vector<std::uint8_t> values) {
  HuffmanTable t;
  t.defined = true;
  t.values = std::move(values);
  std::int32_t code = 0;
  std::int32_t k = 0;
  for (int len = 1; len <= 16; ++len) {
    const int n = counts[len - 1];
    if (n == 0) {
      t.maxcode[len] = -1;
    } else {
      t.valptr[len] = k;
      t.mincode[len] = code;
      code += n;
      k += n;
      t.maxcode[len] = code - 1;
    }
    code <<= 1;
  }
  t.maxcode[17] = 0x7FFFFFFF;
  return t;
}

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::kFormat, "jpeg: " + what); }

class BitReader {
 public:
  BitReader(std::span<const std::uint8_t> data, std::size_t pos) : data_(data), pos_(pos) {}

  int bit() {
    if (count_ == 0) fill();
    --count_;
    return (acc_ >> count_) & 1;
  }

  int bits(int n) {
    int v = 0;
    for (int i = 0; i < n; ++i) v = (v << 1) | bit();
    return v;
  }

  int decode(const HuffmanTable& t) {
    if (!t.defined) bad("scan references an undefined Huffman table");
    std::int32_t code = bit();
    int len = 1;
    while (code > t.maxcode[len]) {
      code = (code << 1) | bit();
      if (++len > 16) bad("invalid Huffman code");
    }
    const auto idx = static_cast<std::size_t>(t.valptr[len] + code - t.mincode[len]);
    if (idx >= t.values.size()) bad("Huffman value index out of range");
    return t.values[idx];
  }

  // Drops buffered bits and consumes an RSTn marker.
  void restart() {
    count_ = 0;
    acc_ = 0;
    if (pos_ + 1 < data_.size() && data_[pos_] == 0xFF && data_[pos_ + 1] >= 0xD0 &&
        data_[pos_ + 1] <= 0xD7) {
      pos_ += 2;
    } else {
      bad("missing restart marker");
    }
  }

  // Position of the next unread byte (a marker once the scan is exhausted).
  std::size_t end_position() const { return pos_; }

 private:
  void fill() {
    std::uint8_t byte = 0;
    if (pos_ < data_.size()) {
      byte = data_[pos_];
      if (byte == 0xFF) {
        const std::uint8_t next = pos_ + 1 < data_.size() ? data_[pos_ + 1] : 0xD9;
        if (next == 0x00) {
          pos_ += 2;
        } else {
          byte = 0;  // marker: feed zeros, do not advance
        }
      } else {
        ++pos_;
      }
    }
    acc_ = byte;
    count_ = 8;
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_;
  std::uint32_t acc_ = 0;
  int count_ = 0;
};

int extend(int v, int s) { return v < (1 << (s - 1)) ? v - (1 << s) + 1 : v; }

struct Component {
  int id = 0;
  int h = 1;
  int v = 1;
  int tq = 0;
  int td = 0;
  int ta = 0;
  int blocks_w = 0;  // blocks per line in the padded plane
  int blocks_h = 0;
  std::vector<std::uint8_t> plane;  // blocks_w*8 x blocks_h*8 samples
  int dc_pred = 0;
};

struct Decoder {
  std::span<const std::uint8_t> data;
  std::array<std::array<std::uint16_t, 64>, 4> quant{};
  std::array<bool, 4> quant_defined{};
  std::array<HuffmanTable, 4> dc_tables;
  std::array<HuffmanTable, 4> ac_tables;
  std::vector<Component> comps;
  int width = 0;
  int height = 0;
  int hmax = 1;
  int vmax = 1;
  int mcus_x = 0;
  int mcus_y = 0;
  int restart_interval = 0;
  bool frame_seen = false;

  int u16(std::size_t pos) const {
    if (pos + 1 >= data.size()) bad("truncated segment");
    return (data[pos] << 8) | data[pos + 1];
  }

  void read_dqt(std::size_t pos, std::size_t end) {
    while (pos < end) {
      const int pq = data[pos] >> 4;
      const int tq = data[pos] & 15;
      if (tq > 3) bad("bad quantization table id");
      ++pos;
      for (int i = 0; i < 64; ++i) {
        int v;
        if (pq == 0) {
          if (pos >= end) bad("truncated DQT");
          v = data[pos++];
        } else {
          v = u16(pos);
          pos += 2;
        }
        quant[tq][kZigzag[i]] = static_cast<std::uint16_t>(v);
      }
      quant_defined[tq] = true;
    }
  }

  void read_dht(std::size_t pos, std::size_t end) {
    while (pos < end) {
      const int tc = data[pos] >> 4;
      const int th = data[pos] & 15;
      if (tc > 1 || th > 3) bad("bad Huffman table id");
      if (pos + 17 > end) bad("truncated DHT");
      std::uint8_t counts[16];
      int total = 0;
      for (int i = 0; i < 16; ++i) {
        counts[i] = data[pos + 1 + i];
        total += counts[i];
      }
      pos += 17;
      if (pos + total > end || total > 256) bad("truncated DHT");
      std::vector<std::uint8_t> values(data.begin() + static_cast<std::ptrdiff_t>(pos),
                                       data.begin() + static_cast<std::ptrdiff_t>(pos + total));
      pos += total;
      (tc == 0 ? dc_tables : ac_tables)[th] = build_decoder(counts, std::move(values));
    }
  }

  void read_sof(std::size_t pos, std::size_t end) {
    if (frame_seen) bad("multiple frames");
    frame_seen = true;
    if (end - pos < 6) bad("truncated SOF");
    if (data[pos] != 8) bad("only 8-bit precision is supported");
    height = u16(pos + 1);
    width = u16(pos + 3);
    const int n = data[pos + 5];
    if (height == 0 || width == 0) bad("zero image dimension");
    if (n != 1 && n != 3) bad("only 1- or 3-component images are supported");
    if (pos + 6 + 3 * static_cast<std::size_t>(n) > end) bad("truncated SOF");
    for (int i = 0; i < n; ++i) {
      Component c;
      c.id = data[pos + 6 + 3 * i];
      c.h = data[pos + 7 + 3 * i] >> 4;
      c.v = data[pos + 7 + 3 * i] & 15;
      c.tq = data[pos + 8 + 3 * i];
      if (c.h < 1 || c.h > 2 || c.v < 1 || c.v > 2 || c.tq > 3) bad("unsupported sampling factors");
      comps.push_back(c);
    }
    for (const auto& c : comps) {
      hmax = std::max(hmax, c.h);
      vmax = std::max(vmax, c.v);
    }
    mcus_x = (width + 8 * hmax - 1) / (8 * hmax);
    mcus_y = (height + 8 * vmax - 1) / (8 * vmax);
    for (auto& c : comps) {
      c.blocks_w = mcus_x * c.h;
      c.blocks_h = mcus_y * c.v;
      c.plane.assign(static_cast<std::size_t>(c.blocks_w) * c.blocks_h * 64, 0);
    }
  }

  void decode_block(BitReader& br, Component& c, int by, int bx) {
    if (!quant_defined[c.tq]) bad("undefined quantization table");
    double coef[64] = {};
    const int t = br.decode(dc_tables[c.td]);
    if (t > 11) bad("DC magnitude category out of range");
    const int diff = t == 0 ? 0 : extend(br.bits(t), t);
    c.dc_pred += diff;
    const auto& q = quant[c.tq];
    coef[0] = static_cast<double>(c.dc_pred) * q[0];
    for (int k = 1; k < 64;) {
      const int rs = br.decode(ac_tables[c.ta]);
      const int r = rs >> 4;
      const int s = rs & 15;
      if (s == 0) {
        if (r != 15) break;
        k += 16;
        continue;
      }
      k += r;
      if (k > 63) bad("AC coefficient index out of range");
      const int n = kZigzag[k];
      coef[n] = static_cast<double>(extend(br.bits(s), s)) * q[n];
      ++k;
    }
    double px[64];
    inverse_dct(coef, px);
    const int stride = c.blocks_w * 8;
    for (int y = 0; y < 8; ++y) {
      for (int x = 0; x < 8; ++x) {
        const long v = std::lround(px[y * 8 + x] + 128.0);
        c.plane[static_cast<std::size_t>(by * 8 + y) * stride + bx * 8 + x] =
            static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
      }
    }
  }

  std::size_t read_scan(std::size_t pos, std::size_t end) {
    const int n = data[pos];
    if (n < 1 || n > 4 || pos + 1 + 2 * static_cast<std::size_t>(n) + 3 > end) bad("bad SOS");
    std::vector<Component*> scan;
    for (int i = 0; i < n; ++i) {
      const int id = data[pos + 1 + 2 * i];
      const int tables = data[pos + 2 + 2 * i];
      auto it = std::find_if(comps.begin(), comps.end(), [&](const Component& c) { return c.id == id; });
      if (it == comps.end()) bad("scan references unknown component");
      it->td = tables >> 4;
      it->ta = tables & 15;
      if (it->td > 3 || it->ta > 3) bad("bad table selector");
      scan.push_back(&*it);
    }
    BitReader br(data, end);
    for (auto* c : scan) c->dc_pred = 0;
    int mcu_count = 0;
    auto maybe_restart = [&](int total) {
      ++mcu_count;
      if (restart_interval > 0 && mcu_count % restart_interval == 0 && mcu_count < total) {
        br.restart();
        for (auto* c : scan) c->dc_pred = 0;
      }
    };
    if (scan.size() == 1) {
      Component& c = *scan[0];
      const int cw = (width * c.h + hmax - 1) / hmax;
      const int ch = (height * c.v + vmax - 1) / vmax;
      const int bw = (cw + 7) / 8;
      const int bh = (ch + 7) / 8;
      for (int by = 0; by < bh; ++by) {
        for (int bx = 0; bx < bw; ++bx) {
          decode_block(br, c, by, bx);
          maybe_restart(bw * bh);
        }
      }
    } else {
      for (int my = 0; my < mcus_y; ++my) {
        for (int mx = 0; mx < mcus_x; ++mx) {
          for (auto* c : scan) {
            for (int v = 0; v < c->v; ++v) {
              for (int h = 0; h < c->h; ++h) decode_block(br, *c, my * c->v + v, mx * c->h + h);
            }
          }
          maybe_restart(mcus_x * mcus_y);
        }
      }
    }
    return br.end_position();
  }

  Image run() {
    if (data.size() < 4 || data[0] != 0xFF || data[1] != 0xD8) bad("missing SOI marker");
    std::size_t pos = 2;
    bool scanned = false;
    while (pos < data.size()) {
      if (data[pos] != 0xFF) {
        ++pos;  // tolerate fill bytes / garbage between segments
        continue;
      }
      if (pos + 1 >= data.size()) break;
      const int marker = data[pos + 1];
      pos += 2;
      if (marker == 0xFF) {
        --pos;
        continue;
      }
      if (marker == 0xD9) break;
      if (marker == 0x01 || (marker >= 0xD0 && marker <= 0xD7)) continue;
      const int len = u16(pos);
      if (len < 2 || pos + len > data.size()) bad("truncated segment");
      const std::size_t body = pos + 2;
      const std::size_t end = pos + static_cast<std::size_t>(len);
      switch (marker) {
        case 0xDB: read_dqt(body, end); break;
        case 0xC4: read_dht(body, end); break;
        case 0xC0:
        case 0xC1: read_sof(body, end); break;
        case 0xC2:
        case 0xC6:
        case 0xCA:
        case 0xCE: bad("progressive JPEG is not supported");
        case 0xC3:
        case 0xC5:
        case 0xC7:
        case 0xCB:
        case 0xCD:
        case 0xCF:
        case 0xC9: bad("lossless, hierarchical or arithmetic-coded JPEG is not supported");
        case 0xDD: restart_interval = u16(body); break;
        case 0xDA:
          if (!frame_seen) bad("scan before frame header");
          pos = read_scan(body, end);
          scanned = true;
          continue;
        default: break;  // APPn, COM, ...
      }
      pos = end;
    }
    if (!scanned) bad("no scan data");
    return to_image();
  }

  Image to_image() const {
    if (height < Image::kMinSide || width < Image::kMinSide) {
      fail(ErrorCode::kShape, "jpeg: image smaller than the 8x8 minimum");
    }
    Image out(height, width, 0.0f);
    // Subsampled planes are upsampled with a centred triangle filter, the
    // same weights libjpeg uses for its default 2x path.
    auto sample = [&](const Component& c, int y, int x) -> double {
      const auto stride = static_cast<std::size_t>(c.blocks_w) * 8;
      if (c.h == hmax && c.v == vmax) return c.plane[static_cast<std::size_t>(y) * stride + x];
      const int cw = (width * c.h + hmax - 1) / hmax;
      const int ch = (height * c.v + vmax - 1) / vmax;
      const double fy = (y + 0.5) * c.v / vmax - 0.5;
      const double fx = (x + 0.5) * c.h / hmax - 0.5;
      const int y0 = static_cast<int>(std::floor(fy));
      const int x0 = static_cast<int>(std::floor(fx));
      const double ty = fy - y0;
      const double tx = fx - x0;
      auto px = [&](int yy, int xx) {
        yy = std::clamp(yy, 0, ch - 1);
        xx = std::clamp(xx, 0, cw - 1);
        return c.plane[static_cast<std::size_t>(yy) * stride + xx];
      };
      const double top = (1 - tx) * px(y0, x0) + tx * px(y0, x0 + 1);
      const double bottom = (1 - tx) * px(y0 + 1, x0) + tx * px(y0 + 1, x0 + 1);
      return (1 - ty) * top + ty * bottom;
    };
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        double rgb[3];
        if (comps.size() == 1) {
          rgb[0] = rgb[1] = rgb[2] = sample(comps[0], y, x);
        } else {
          const double yy = sample(comps[0], y, x);
          const double cb = sample(comps[1], y, x) - 128.0;
          const double cr = sample(comps[2], y, x) - 128.0;
          rgb[0] = yy + 1.402 * cr;
          rgb[1] = yy - 0.344136 * cb - 0.714136 * cr;
          rgb[2] = yy + 1.772 * cb;
        }
        for (int c = 0; c < 3; ++c) {
          const long v = std::clamp(std::lround(rgb[c]), 0L, 255L);
          out.at(y, x, c) = static_cast<float>(v) / 255.0f;
        }
      }
    }
    return out;
  }
};

}  // namespace

std::array<std::uint16_t, 64> jpeg_quant_table(bool chroma, int quality) {
  quality = std::clamp(quality, 1, 100);
  const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
  const auto& base = chroma ? kChromaQuant : kLumaQuant;
  std::array<std::uint16_t, 64> out{};
  for (int i = 0; i < 64; ++i) {
    out[i] = static_cast<std::uint16_t>(std::clamp((base[i] * scale + 50) / 100, 1, 255));
  }
  return out;
}

std::vector<std::uint8_t> encode_jpeg(const Image& image, int quality) {
  if (quality < 1 || quality > 100) {
    fail(ErrorCode::kInvalidSpec, "jpeg quality " + std::to_string(quality) + " outside 1..100");
  }
  const int h = image.height();
  const int w = image.width();
  if (h < 1 || w < 1 || h > 65535 || w > 65535) fail(ErrorCode::kShape, "jpeg: bad image size");

  // 8-bit RGB -> full-range YCbCr planes, padded to whole MCUs by replication.
  const int mcus_x = (w + 15) / 16;
  const int mcus_y = (h + 15) / 16;
  const int pw = mcus_x * 16;
  const int ph = mcus_y * 16;
  std::vector<double> ys(static_cast<std::size_t>(pw) * ph);
  std::vector<double> cbs(ys.size());
  std::vector<double> crs(ys.size());
  for (int y = 0; y < ph; ++y) {
    const int sy = std::min(y, h - 1);
    for (int x = 0; x < pw; ++x) {
      const int sx = std::min(x, w - 1);
      double rgb[3];
      for (int c = 0; c < 3; ++c) {
        rgb[c] = static_cast<double>(std::lround(std::clamp(image.at(sy, sx, c), 0.0f, 1.0f) * 255.0f));
      }
      const std::size_t i = static_cast<std::size_t>(y) * pw + x;
      ys[i] = 0.299 * rgb[0] + 0.587 * rgb[1] + 0.114 * rgb[2];
      cbs[i] = -0.168736 * rgb[0] - 0.331264 * rgb[1] + 0.5 * rgb[2] + 128.0;
      crs[i] = 0.5 * rgb[0] - 0.418688 * rgb[1] - 0.081312 * rgb[2] + 128.0;
    }
  }

  const auto luma_q = jpeg_quant_table(false, quality);
  const auto chroma_q = jpeg_quant_table(true, quality);

  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(w) * h / 4 + 1024);
  out.insert(out.end(), {0xFF, 0xD8});
  out.insert(out.end(), {0xFF, 0xE0, 0x00, 0x10, 'J', 'F', 'I', 'F', 0x00, 0x01, 0x01,
                         0x00, 0x00, 0x01, 0x00, 0x01, 0x00, 0x00});
  out.insert(out.end(), {0xFF, 0xDB});
  put_u16(out, 2 + 2 * 65);
  out.push_back(0x00);
  for (int i = 0; i < 64; ++i) out.push_back(static_cast<std::uint8_t>(luma_q[kZigzag[i]]));
  out.push_back(0x01);
  for (int i = 0; i < 64; ++i) out.push_back(static_cast<std::uint8_t>(chroma_q[kZigzag[i]]));
  out.insert(out.end(), {0xFF, 0xC0});
  put_u16(out, 17);
  out.push_back(8);
  put_u16(out, h);
  put_u16(out, w);
  out.insert(out.end(), {3, 1, 0x22, 0, 2, 0x11, 1, 3, 0x11, 1});
  write_dht(out, 0, 0, kDcLuma);
  write_dht(out, 1, 0, kAcLuma);
  write_dht(out, 0, 1, kDcChroma);
  write_dht(out, 1, 1, kAcChroma);
  out.insert(out.end(), {0xFF, 0xDA});
  put_u16(out, 12);
  out.insert(out.end(), {3, 1, 0x00, 2, 0x11, 3, 0x11, 0, 63, 0});

  static const HuffmanCode dc_luma = build_codes(kDcLuma);
  static const HuffmanCode ac_luma = build_codes(kAcLuma);
  static const HuffmanCode dc_chroma = build_codes(kDcChroma);
  static const HuffmanCode ac_chroma = build_codes(kAcChroma);

  BitWriter bw(out);
  int pred_y = 0;
  int pred_cb = 0;
  int pred_cr = 0;
  double block[64];
  for (int my = 0; my < mcus_y; ++my) {
    for (int mx = 0; mx < mcus_x; ++mx) {
      for (int by = 0; by < 2; ++by) {
        for (int bx = 0; bx < 2; ++bx) {
          for (int y = 0; y < 8; ++y) {
            for (int x = 0; x < 8; ++x) {
              const int py = my * 16 + by * 8 + y;
              const int px = mx * 16 + bx * 8 + x;
              block[y * 8 + x] = ys[static_cast<std::size_t>(py) * pw + px] - 128.0;
            }
          }
          encode_block(bw, block, luma_q, dc_luma, ac_luma, pred_y);
        }
      }
      for (int plane = 0; plane < 2; ++plane) {
        const auto& src = plane == 0 ? cbs : crs;
        for (int y = 0; y < 8; ++y) {
          for (int x = 0; x < 8; ++x) {
            const std::size_t py = static_cast<std::size_t>(my) * 16 + 2 * y;
            const std::size_t px = static_cast<std::size_t>(mx) * 16 + 2 * x;
            const double avg = (src[py * pw + px] + src[py * pw + px + 1] +
                                src[(py + 1) * pw + px] + src[(py + 1) * pw + px + 1]) / 4.0;
            block[y * 8 + x] = avg - 128.0;
          }
        }
        encode_block(bw, block, chroma_q, dc_chroma, ac_chroma, plane == 0 ? pred_cb : pred_cr);
      }
    }
  }
  bw.flush();
  out.insert(out.end(), {0xFF, 0xD9});
  return out;
}

Image decode_jpeg(std::span<const std::uint8_t> bytes) {
  Decoder d;
  d.data = bytes;
  return d.run();
}

}  // namespace spaug
