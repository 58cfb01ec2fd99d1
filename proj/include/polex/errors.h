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

#ifndef POLEX_ERRORS_H_
#define POLEX_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace polex {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POLEX_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

// corpus
POLEX_DEFINE_ERROR(FileNotFound);
POLEX_DEFINE_ERROR(DirectoryNotFound);
POLEX_DEFINE_ERROR(MalformedArchive);
POLEX_DEFINE_ERROR(EncodingError);

// extractor
POLEX_DEFINE_ERROR(IoError);

// goldstore
POLEX_DEFINE_ERROR(DuplicateAnnotation);

// eval
POLEX_DEFINE_ERROR(DocMismatch);
POLEX_DEFINE_ERROR(GoldMismatch);

// llm adapter
POLEX_DEFINE_ERROR(TransportError);
POLEX_DEFINE_ERROR(BudgetExceeded);
POLEX_DEFINE_ERROR(EmptyResponse);

#undef POLEX_DEFINE_ERROR

// Raised when a JSON document does not follow the expected schema. The
// pointer names the offending field (RFC 6901).
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : Error(pointer.empty() ? message : pointer + ": " + message),
        pointer_(std::move(pointer)) {}

  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// Raised by the citation parser. `token` is the first input token the
// grammar could not consume (empty when input ended prematurely).
class UnparseableCitation : public Error {
 public:
  UnparseableCitation(std::string token, std::size_t offset,
                      const std::string& message)
      : Error(message), token_(std::move(token)), offset_(offset) {}

  const std::string& token() const { return token_; }
  std::size_t offset() const { return offset_; }

 private:
  std::string token_;
  std::size_t offset_;
};

}  // namespace polex

#endif  // POLEX_ERRORS_H_
