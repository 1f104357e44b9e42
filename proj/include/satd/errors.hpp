// Copyright 2026 The satd-scope Authors
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

#ifndef SATD_ERRORS_HPP_
#define SATD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace satd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A source file could not be read.
class FileError : public Error {
 public:
  FileError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// An API was called outside its contract.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Bad configuration: corpus config, pattern file, plan file. Maps to exit 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// External label data could not be ingested.
class IngestionError : public Error {
 public:
  using Error::Error;
};

// Sample has too few values or zero variance for a normality test.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

}  // namespace satd

#endif  // SATD_ERRORS_HPP_
