// Copyright 2026 The Bargmann Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace bargmann {

enum class ErrorKind {
    Dimension,
    Capacity,
    Parameter,
    State,
    Povm,
    UnsupportedDimension,
    InternalConsistency,
};

const char *error_kind_name(ErrorKind kind);

/// Base of every exception thrown by the library. The kind maps one-to-one
/// onto the error codes of the C API.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

#define BARGMANN_DEFINE_ERROR(Name, Kind)                                      \
    class Name : public Error {                                                \
      public:                                                                  \
        explicit Name(const std::string &message)                              \
            : Error(ErrorKind::Kind, message) {}                               \
    };

BARGMANN_DEFINE_ERROR(DimensionError, Dimension)
BARGMANN_DEFINE_ERROR(CapacityError, Capacity)
BARGMANN_DEFINE_ERROR(ParameterError, Parameter)
BARGMANN_DEFINE_ERROR(StateError, State)
BARGMANN_DEFINE_ERROR(PovmError, Povm)
BARGMANN_DEFINE_ERROR(UnsupportedDimension, UnsupportedDimension)
BARGMANN_DEFINE_ERROR(InternalConsistencyError, InternalConsistency)

#undef BARGMANN_DEFINE_ERROR

}  // namespace bargmann
