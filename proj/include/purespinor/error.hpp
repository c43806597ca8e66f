// Copyright 2026 The purespinor Authors
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
#include <string_view>

namespace purespinor {

/// Distinct failure outcomes of the library operations.
enum class Errc {
    dimension_mismatch,
    non_finite,
    not_clifford,
    no_volume_element,
    non_real_bilinear,
    undefined_purity,
    incompatible_weyl_halves,
    undefined_residual,
    normalize_first,
    unsupported_set,
    zero_state,
};

inline std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::dimension_mismatch:
            return "dimension mismatch";
        case Errc::non_finite:
            return "non-finite value";
        case Errc::not_clifford:
            return "not a Clifford set";
        case Errc::no_volume_element:
            return "no volume element";
        case Errc::non_real_bilinear:
            return "non-real bilinear";
        case Errc::undefined_purity:
            return "undefined purity";
        case Errc::incompatible_weyl_halves:
            return "incompatible Weyl halves";
        case Errc::undefined_residual:
            return "undefined residual";
        case Errc::normalize_first:
            return "normalize first";
        case Errc::unsupported_set:
            return "unsupported generator set";
        case Errc::zero_state:
            return "zero state";
    }
    return "unknown";
}

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string &detail)
        : std::runtime_error(std::string(errc_name(code)) + (detail.empty() ? "" : ": " + detail)), code_(code) {
    }
    explicit Error(Errc code) : Error(code, "") {
    }

    Errc code() const noexcept {
        return code_;
    }

   private:
    Errc code_;
};

}  // namespace purespinor
