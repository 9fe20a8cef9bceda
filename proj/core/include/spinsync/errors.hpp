// Copyright 2026 The spinsync Authors
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

namespace spinsync {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad model file, out-of-range probability, unknown vertex.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (enumeration states, paths, subsets) would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A bound or operation whose hypotheses the model does not meet.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace spinsync
