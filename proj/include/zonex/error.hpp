// Copyright 2026 The Zonex Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace zonex {

/// Base of every exception the engine throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (dec beyond a pole,
/// negative radius, zero workers, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Bad or inconsistent data: unreadable files, malformed headers, too many
/// rejected rows, indexes built with different zone configurations.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace zonex
