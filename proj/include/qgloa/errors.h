// Copyright 2026 The qgloa Authors
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

#ifndef QGLOA_ERRORS_H
#define QGLOA_ERRORS_H

#include <stdexcept>

namespace qgloa {

// Two matrices of different order met in a binary operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A controlled-gate placement or register embedding that cannot exist.
class PlacementError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A gene field outside its legal range.
class GenotypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad user configuration: unknown gate names, flags, inconsistent settings.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qgloa

#endif  // QGLOA_ERRORS_H
