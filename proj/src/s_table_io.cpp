// Copyright 2026 The skt Authors
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

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "skt/s_table.hpp"

namespace skt {

namespace {

constexpr std::array<unsigned char, 4> kMagic = {'S', 'K', 'T', '1'};
constexpr std::size_t kHeaderBytes = 4 + 4 + 8 + 8 + 1;
constexpr std::size_t kChunkValues = 1 << 16;

template <typename T>
void put_le(std::vector<unsigned char>& buf, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) buf.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

template <typename T>
T get_le(const unsigned char* p) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(p[i]) << (8 * i);
  return v;
}

// Streams bytes out while keeping the running checksum.
class HashingWriter {
 public:
  explicit HashingWriter(std::ostream& os) : os_(os) {}

  void write(const std::vector<unsigned char>& bytes) {
    hash_ = fnv1a64(bytes, hash_);
    os_.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!os_) throw STableIoError("write_stable: stream write failed");
  }

  std::uint64_t hash() const noexcept { return hash_; }

 private:
  std::ostream& os_;
  std::uint64_t hash_ = fnv1a64({});
};

void read_exact(std::istream& is, unsigned char* dst, std::size_t n, const char* what) {
  is.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(is.gcount()) != n)
    throw STableFormatError(std::string("read_stable: truncated ") + what);
}

}  // namespace

std::uint64_t fnv1a64(std::span<const unsigned char> bytes, std::uint64_t state) noexcept {
  for (unsigned char b : bytes) {
    state ^= b;
    state *= 0x100000001b3ULL;
  }
  return state;
}

void write_stable(std::ostream& os, const STable& table) {
  if (table.lo == 0 || table.hi < table.lo || table.values.size() != table.hi - table.lo + 1)
    throw std::invalid_argument("write_stable: inconsistent table");

  HashingWriter out(os);
  std::vector<unsigned char> buf(kMagic.begin(), kMagic.end());
  put_le(buf, kSTableVersion);
  put_le(buf, table.lo);
  put_le(buf, table.hi);
  buf.push_back(static_cast<unsigned char>(table.conv.s_of_one));
  out.write(buf);

  for (std::size_t begin = 0; begin < table.values.size(); begin += kChunkValues) {
    buf.clear();
    const std::size_t end = std::min(table.values.size(), begin + kChunkValues);
    for (std::size_t i = begin; i < end; ++i) put_le(buf, table.values[i]);
    out.write(buf);
  }

  buf.clear();
  put_le(buf, out.hash());
  os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!os) throw STableIoError("write_stable: stream write failed");
}

STable read_stable(std::istream& is) {
  std::array<unsigned char, kHeaderBytes> header{};
  read_exact(is, header.data(), header.size(), "header");
  if (!std::equal(kMagic.begin(), kMagic.end(), header.begin()))
    throw STableFormatError("read_stable: bad magic");

  std::uint64_t hash = fnv1a64(header);
  const auto version = get_le<std::uint32_t>(header.data() + 4);
  if (version != kSTableVersion)
    throw STableFormatError("read_stable: unsupported version " + std::to_string(version));

  STable table;
  table.lo = get_le<std::uint64_t>(header.data() + 8);
  table.hi = get_le<std::uint64_t>(header.data() + 16);
  const unsigned char conv = header[24];
  if (conv > 1) throw STableFormatError("read_stable: bad convention byte");
  table.conv.s_of_one = static_cast<SOfOne>(conv);
  if (table.lo == 0 || table.hi < table.lo) throw STableFormatError("read_stable: bad range");

  // Read in chunks so a corrupt length cannot force a huge allocation up front.
  const std::uint64_t count = table.hi - table.lo + 1;
  std::vector<unsigned char> buf;
  for (std::uint64_t done = 0; done < count;) {
    const auto n = static_cast<std::size_t>(std::min<std::uint64_t>(kChunkValues, count - done));
    buf.resize(n * 8);
    read_exact(is, buf.data(), buf.size(), "values");
    hash = fnv1a64(buf, hash);
    for (std::size_t i = 0; i < n; ++i) table.values.push_back(get_le<std::uint64_t>(buf.data() + 8 * i));
    done += n;
  }

  std::array<unsigned char, 8> footer{};
  read_exact(is, footer.data(), footer.size(), "checksum");
  if (get_le<std::uint64_t>(footer.data()) != hash) throw STableFormatError("read_stable: checksum mismatch");
  if (is.peek() != std::char_traits<char>::eof()) throw STableFormatError("read_stable: trailing bytes");
  return table;
}

void save_stable(const std::filesystem::path& path, const STable& table) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw STableIoError("cannot open " + path.string() + " for writing");
  write_stable(os, table);
  os.close();
  if (!os) throw STableIoError("error closing " + path.string());
}

STable load_stable(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw STableIoError("cannot open " + path.string());
  return read_stable(is);
}

}  // namespace skt
