// Copyright 2026 The dyckcluster Authors.
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

#ifndef DYCKCLUSTER_ERROR_HPP_
#define DYCKCLUSTER_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dyckcluster {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter is outside its documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured size limit. Results are never
// silently truncated.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Exact Laurent division left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

// A 64-bit intermediate overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A structural identity that must hold did not. Always indicates a bug.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

}  // namespace checked

// Size limits shared by every enumerator.
struct Limits {
  static constexpr std::uint64_t kDefaultMaxObjects = std::uint64_t{1} << 23;
  static constexpr std::uint64_t kDefaultMaxSubsets = std::uint64_t{1} << 26;

  // Maximum number of objects an enumeration may emit.
  std::uint64_t max_objects = kDefaultMaxObjects;
  // Maximum number of subsets a brute-force scan may visit.
  std::uint64_t max_subsets = kDefaultMaxSubsets;
};

}  // namespace dyckcluster

#endif  // DYCKCLUSTER_ERROR_HPP_
