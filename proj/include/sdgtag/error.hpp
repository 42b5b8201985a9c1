// Copyright 2026 The sdgtag Authors.
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

#ifndef SDGTAG_ERROR_HPP_
#define SDGTAG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sdgtag {

// Base class for every error raised by the library. The CLI maps these to
// exit code 2 (data error); the service maps them to 4xx/5xx responses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A term that normalizes to nothing (only punctuation or whitespace).
class EmptyTermError : public Error {
 public:
  using Error::Error;
};

// SDG number outside 1..17.
class InvalidSdgError : public Error {
 public:
  using Error::Error;
};

// Unreadable or malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

class DuplicateSourceError : public Error {
 public:
  using Error::Error;
};

// similarity_ratio of two empty strings.
class UndefinedRatioError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

class DuplicateFosError : public Error {
 public:
  using Error::Error;
};

class InvalidDoiError : public Error {
 public:
  using Error::Error;
};

// Invalid thresholds, manifest, service config, or an index snapshot built
// with a different tokenizer configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sdgtag

#endif  // SDGTAG_ERROR_HPP_
