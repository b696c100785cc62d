// ristr - RIS-enabled time reversal link simulator for near-field channels
// Copyright (C) 2026 ristr developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace ristr {

enum class ErrorCode {
    invalid_argument,
    even_dimension,
    nonpositive_spacing,
    endpoint_at_origin,
    outside_near_field,
    empty_path_set,
    zero_channel,
    tap_out_of_range,
    unknown_index,
    length_mismatch,
    parse_error,
    schema_error,
    unit_error,
    replication_mismatch,
    io_error,
};

/// Exception carrying a stable error code so the C boundary can map it.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

const char *error_code_name(ErrorCode code);

} // namespace ristr
