/*
   Copyright 2026 The psi-umbral Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PSI_UMBRAL_ERROR_HPP
#define PSI_UMBRAL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace psi {

/// Machine-readable error categories. The CLI prints the code name next to
/// the human message.
enum class ErrorCode {
    parse,
    validation,
    inadmissible,
    division_by_zero,
    composition_undefined,
    not_invertible,
    cap_exhausted,
    not_degree_lowering,
    not_shift_invariant,
    domain,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::parse: return "parse_error";
        case ErrorCode::validation: return "validation_error";
        case ErrorCode::inadmissible: return "inadmissible_sequence";
        case ErrorCode::division_by_zero: return "division_by_zero";
        case ErrorCode::composition_undefined: return "composition_undefined";
        case ErrorCode::not_invertible: return "not_invertible";
        case ErrorCode::cap_exhausted: return "cap_exhausted";
        case ErrorCode::not_degree_lowering: return "not_degree_lowering";
        case ErrorCode::not_shift_invariant: return "not_shift_invariant";
        case ErrorCode::domain: return "domain_error";
    }
    return "unknown_error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace psi

#endif // PSI_UMBRAL_ERROR_HPP
