// Copyright 2026 The Paradise Authors.
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

#ifndef PARADISE_ERROR_H_
#define PARADISE_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace paradise {

// Base of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The caller asked for something ill-formed: a mismatched scenario, an
// unknown attribute, a missing input value. Maps to CLI exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

// The data cannot support the requested computation. Maps to exit status 1.
class DataError : public Error {
 public:
  using Error::Error;
};

// A ratio measure was requested over an empty matrix (T == 0).
class UndefinedMeasureError : public DataError {
 public:
  using DataError::DataError;
};

// Chance agreement is 1: every key observation falls in a single column.
class DegenerateChanceError : public DataError {
 public:
  explicit DegenerateChanceError(const std::string &what,
                                 std::string attribute = {})
      : DataError(what), attribute_(std::move(attribute)) {}
  const std::string &attribute() const { return attribute_; }

 private:
  std::string attribute_;
};

// A series has zero spread (or fewer than two points) so it cannot be
// Z-normalized.
class DegenerateScaleError : public DataError {
 public:
  using DataError::DataError;
};

// The regression design matrix is rank deficient.
class CollinearityError : public DataError {
 public:
  CollinearityError(const std::string &what, std::vector<std::string> columns)
      : DataError(what), columns_(std::move(columns)) {}
  const std::vector<std::string> &columns() const { return columns_; }

 private:
  std::vector<std::string> columns_;
};

// Too few observations for the number of predictors.
class InsufficientDataError : public DataError {
 public:
  using DataError::DataError;
};

// Every predictor was pruned from the performance model.
class EmptyModelError : public DataError {
 public:
  using DataError::DataError;
};

// A normalization pool has fewer than two distinct members.
class DegeneratePoolError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace paradise

#endif  // PARADISE_ERROR_H_
