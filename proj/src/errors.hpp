/*
 * This file is part of the kohmoto spectral toolkit.
 *
 * Copyright 2026 the kohmoto authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>

namespace kohmoto {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied input was violated.
struct InvalidArgument : Error {
  using Error::Error;
};

/// Exact integer arithmetic exceeded the 128-bit working width.
struct OverflowError : Error {
  using Error::Error;
};

/// A numerical computation failed (eigen-solver breakdown, resource limit).
struct ComputeError : Error {
  using Error::Error;
};

}  // namespace kohmoto
