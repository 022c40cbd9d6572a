/*
 * Copyright (C) 2026 The angvel authors
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
#include <string>

namespace angvel {

/// Base for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition (non-SPD inertia, NaN input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed scenario file, CSV table, or CLI argument.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Non-finite state or degenerate attitude rows during a simulation.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double t)
      : Error(what + " at t=" + std::to_string(t)), t_(t) {}

  double time() const noexcept { return t_; }

 private:
  double t_;
};

}  // namespace angvel
