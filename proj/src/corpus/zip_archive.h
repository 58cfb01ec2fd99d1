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

#ifndef POLEX_CORPUS_ZIP_ARCHIVE_H_
#define POLEX_CORPUS_ZIP_ARCHIVE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polex::corpus {

// Read-only view of a zip archive held in memory. Supports stored and
// deflated entries; ZIP64 archives are rejected. All structural problems
// raise MalformedArchive.
class ZipArchive {
 public:
  explicit ZipArchive(std::string bytes);

  bool contains(std::string_view name) const;

  // Returns the decompressed, CRC-checked entry, or nullopt if absent.
  std::optional<std::string> read(std::string_view name) const;

  std::vector<std::string> entry_names() const;

 private:
  struct Entry {
    std::string name;
    std::uint16_t method;
    std::uint32_t crc32;
    std::uint32_t compressed_size;
    std::uint32_t uncompressed_size;
    std::uint32_t local_header_offset;
  };

  const Entry* find(std::string_view name) const;

  std::string bytes_;
  std::vector<Entry> entries_;
};

}  // namespace polex::corpus

#endif  // POLEX_CORPUS_ZIP_ARCHIVE_H_
