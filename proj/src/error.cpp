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

#include "error.hpp"

namespace ristr {

const char *error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::even_dimension: return "EvenDimension";
    case ErrorCode::nonpositive_spacing: return "NonPositiveSpacing";
    case ErrorCode::endpoint_at_origin: return "EndpointAtOrigin";
    case ErrorCode::outside_near_field: return "OutsideNearField";
    case ErrorCode::empty_path_set: return "EmptyPathSet";
    case ErrorCode::zero_channel: return "ZeroChannel";
    case ErrorCode::tap_out_of_range: return "TapOutOfRange";
    case ErrorCode::unknown_index: return "UnknownIndex";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::schema_error: return "SchemaError";
    case ErrorCode::unit_error: return "UnitError";
    case ErrorCode::replication_mismatch: return "ReplicationMismatch";
    case ErrorCode::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace ristr
