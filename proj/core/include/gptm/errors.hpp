// Copyright 2026 The gptm authors.
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

namespace gptm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SystemMismatch : Error {
  using Error::Error;
};

struct InvalidDimension : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

// Requesting a resolution of the identity (or an LOCC decomposition) for a
// non-simplex system. This refusal is the computational content of the
// classicality condition: only simplex systems admit the decomposition.
struct NotClassical : Error {
  using Error::Error;
};

struct NotPositive : Error {
  using Error::Error;
};

struct NotCP : Error {
  using Error::Error;
};

struct InvalidCircuit : Error {
  using Error::Error;
};

struct TrajectoryBlowup : Error {
  using Error::Error;
};

struct ArityMismatch : Error {
  using Error::Error;
};

struct InvalidGeometry : Error {
  using Error::Error;
};

struct UnsupportedMethod : Error {
  using Error::Error;
};

}  // namespace gptm
