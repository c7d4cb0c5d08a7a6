/*
 * Copyright 2026 The wallcross Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
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

namespace wallcross {

/// Root of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define WALLCROSS_DEFINE_ERROR(name)                                           \
    class name : public error {                                                \
    public:                                                                    \
        using error::error;                                                    \
    }

WALLCROSS_DEFINE_ERROR(parse_error);
WALLCROSS_DEFINE_ERROR(zero_denominator);
WALLCROSS_DEFINE_ERROR(invalid_geometry);
WALLCROSS_DEFINE_ERROR(geometry_mismatch);
WALLCROSS_DEFINE_ERROR(nonzero_constant_term);
WALLCROSS_DEFINE_ERROR(constant_term_not_one);
WALLCROSS_DEFINE_ERROR(out_of_truncation);
WALLCROSS_DEFINE_ERROR(inadmissible_key);
WALLCROSS_DEFINE_ERROR(bad_primitive_table);
WALLCROSS_DEFINE_ERROR(non_positive_support);
WALLCROSS_DEFINE_ERROR(malformed_filtration);
WALLCROSS_DEFINE_ERROR(not_proper_subspace);
WALLCROSS_DEFINE_ERROR(invalid_model);

#undef WALLCROSS_DEFINE_ERROR

} // namespace wallcross
