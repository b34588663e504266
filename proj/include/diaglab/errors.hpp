/*
 * Copyright 2026 The diaglab Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

#include "diaglab/nat.hpp"

namespace diaglab {

// An index fed to the diagonal engine as "total" failed to halt within the
// meta budget.  Maps to process exit code 2 in the CLI.
struct TotalityViolationError : std::runtime_error {
  TotalityViolationError(std::uint64_t step, Nat index, std::uint64_t input)
      : std::runtime_error("stream machine at step " + std::to_string(step) +
                           " (code " + index.get_str() +
                           ") did not halt on input " + std::to_string(input)),
        step_index(step),
        source_index(std::move(index)),
        input_value(input) {}
  std::uint64_t step_index;
  Nat source_index;
  std::uint64_t input_value;
};

// The swap scan ran out of candidate positions.  CLI exit code 3.
struct ScanCeilingError : std::runtime_error {
  ScanCeilingError(std::uint64_t step, std::uint64_t ceiling)
      : std::runtime_error("no accepting machine found while scanning " +
                           std::to_string(ceiling) +
                           " positions at diagonal step " +
                           std::to_string(step)),
        step_index(step),
        ceiling(ceiling) {}
  std::uint64_t step_index;
  std::uint64_t ceiling;
};

// A brute-force enumeration would exceed its configured ceiling.  CLI exit
// code 4.
struct InfeasibleBoundError : std::runtime_error {
  explicit InfeasibleBoundError(const std::string& what)
      : std::runtime_error(what) {}
};

// Bounded witness search found no accepted word.
struct NoWitnessError : std::runtime_error {
  explicit NoWitnessError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace diaglab
