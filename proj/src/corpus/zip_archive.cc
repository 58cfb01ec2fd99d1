// Copyright 2026 The polex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "corpus/zip_archive.h"

#include <zlib.h>

#include <algorithm>

#include "polex/errors.h"

namespace polex::corpus {
namespace {

constexpr std::uint32_t kEndOfCentralDir = 0x06054b50;
constexpr std::uint32_t kCentralHeader = 0x02014b50;
constexpr std::uint32_t kLocalHeader = 0x04034b50;
constexpr std::size_t kEndRecordSize = 22;
constexpr std::size_t kCentralHeaderSize = 46;
constexpr std::size_t kLocalHeaderSize = 30;

std::uint16_t u16(const std::string& b, std::size_t at) {
  if (at + 2 > b.size()) throw MalformedArchive("truncated zip structure");
  return static_cast<std::uint16_t>(static_cast<unsigned char>(b[at]) |
                                    static_cast<unsigned char>(b[at + 1]) << 8);
}

std::uint32_t u32(const std::string& b, std::size_t at) {
  return static_cast<std::uint32_t>(u16(b, at)) |
         static_cast<std::uint32_t>(u16(b, at + 2)) << 16;
}

std::string inflate_raw(std::string_view in, std::size_t expected) {
  std::string out(expected, '\0');
  z_stream zs{};
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) {
    throw MalformedArchive("cannot initialise inflater");
  }
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
  zs.avail_in = static_cast<uInt>(in.size());
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&zs, Z_FINISH);
  const auto produced = zs.total_out;
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || produced != expected) {
    throw MalformedArchive("corrupt deflate stream");
  }
  return out;
}

}  // namespace

ZipArchive::ZipArchive(std::string bytes) : bytes_(std::move(bytes)) {
  if (bytes_.size() < kEndRecordSize) {
    throw MalformedArchive("file too small to be a zip archive");
  }
  // The end record sits in the last 64 KiB + 22 bytes (comment is <= 64 KiB).
  const std::size_t lowest =
      bytes_.size() > kEndRecordSize + 0xFFFF ? bytes_.size() - kEndRecordSize - 0xFFFF : 0;
  std::size_t eocd = std::string::npos;
  for (std::size_t at = bytes_.size() - kEndRecordSize + 1; at-- > lowest;) {
    if (u32(bytes_, at) == kEndOfCentralDir) {
      eocd = at;
      break;
    }
  }
  if (eocd == std::string::npos) {
    throw MalformedArchive("end of central directory not found");
  }
  const std::uint16_t count = u16(bytes_, eocd + 10);
  const std::uint32_t dir_size = u32(bytes_, eocd + 12);
  const std::uint32_t dir_offset = u32(bytes_, eocd + 16);
  if (dir_offset == 0xFFFFFFFFu || count == 0xFFFF) {
    throw MalformedArchive("ZIP64 archives are not supported");
  }
  if (static_cast<std::size_t>(dir_offset) + dir_size > eocd) {
    throw MalformedArchive("central directory out of bounds");
  }

  std::size_t at = dir_offset;
  entries_.reserve(count);
  for (std::uint16_t i = 0; i < count; ++i) {
    if (u32(bytes_, at) != kCentralHeader) {
      throw MalformedArchive("bad central directory header");
    }
    Entry e;
    e.method = u16(bytes_, at + 10);
    e.crc32 = u32(bytes_, at + 16);
    e.compressed_size = u32(bytes_, at + 20);
    e.uncompressed_size = u32(bytes_, at + 24);
    const std::uint16_t name_len = u16(bytes_, at + 28);
    const std::uint16_t extra_len = u16(bytes_, at + 30);
    const std::uint16_t comment_len = u16(bytes_, at + 32);
    e.local_header_offset = u32(bytes_, at + 42);
    if (at + kCentralHeaderSize + name_len > bytes_.size()) {
      throw MalformedArchive("truncated central directory entry");
    }
    e.name = bytes_.substr(at + kCentralHeaderSize, name_len);
    entries_.push_back(std::move(e));
    at += kCentralHeaderSize + name_len + extra_len + comment_len;
  }
}

const ZipArchive::Entry* ZipArchive::find(std::string_view name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const Entry& e) { return e.name == name; });
  return it == entries_.end() ? nullptr : &*it;
}

bool ZipArchive::contains(std::string_view name) const {
  return find(name) != nullptr;
}

std::vector<std::string> ZipArchive::entry_names() const {
  std::vector<std::string> names;
  names.reserve(entries_.size());
  for (const auto& e : entries_) names.push_back(e.name);
  return names;
}

std::optional<std::string> ZipArchive::read(std::string_view name) const {
  const Entry* e = find(name);
  if (e == nullptr) return std::nullopt;

  const std::size_t at = e->local_header_offset;
  if (u32(bytes_, at) != kLocalHeader) {
    throw MalformedArchive("bad local header for " + e->name);
  }
  const std::size_t data =
      at + kLocalHeaderSize + u16(bytes_, at + 26) + u16(bytes_, at + 28);
  if (data + e->compressed_size > bytes_.size()) {
    throw MalformedArchive("entry data out of bounds: " + e->name);
  }
  const std::string_view raw(bytes_.data() + data, e->compressed_size);

  std::string out;
  switch (e->method) {
    case 0:
      out.assign(raw);
      break;
    case 8:
      out = inflate_raw(raw, e->uncompressed_size);
      break;
    default:
      throw MalformedArchive("unsupported compression method " +
                             std::to_string(e->method) + " for " + e->name);
  }
  const auto crc = ::crc32(0L, reinterpret_cast<const Bytef*>(out.data()),
                           static_cast<uInt>(out.size()));
  if (crc != e->crc32) throw MalformedArchive("CRC mismatch in " + e->name);
  return out;
}

}  // namespace polex::corpus
