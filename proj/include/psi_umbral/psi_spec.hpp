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

#ifndef PSI_UMBRAL_PSI_SPEC_HPP
#define PSI_UMBRAL_PSI_SPEC_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "psi_sequence.hpp"

namespace psi {

/// Description of a psi sequence that can be materialized at any cap.
/// Custom lists are the exception: they stop where the list stops.
struct PsiSpec {
    enum class Kind { classical, q, divided_difference, custom, squares, rational };

    Kind kind = Kind::classical;
    Rational q;
    RationalFunction r;
    std::vector<Rational> n_values; ///< custom weights for n = 1, 2, ...

    PsiSequence materialize(std::size_t cap) const {
        switch (kind) {
            case Kind::classical: return PsiSequence::classical(cap);
            case Kind::q: return PsiSequence::jackson(q, cap);
            case Kind::divided_difference: return PsiSequence::divided_difference(cap);
            case Kind::custom: return PsiSequence::custom(n_values);
            case Kind::squares: return squares_sequence(cap);
            case Kind::rational: return PsiSequence::rational_function(r, q, cap);
        }
        throw Error(ErrorCode::validation, "unknown psi kind");
    }

    /// Longest cap this spec can reach; custom lists are finite.
    std::size_t max_cap() const noexcept {
        return kind == Kind::custom ? n_values.size() : static_cast<std::size_t>(-1) / 4;
    }

    std::string name() const {
        switch (kind) {
            case Kind::classical: return "classical";
            case Kind::q: return "q:" + q.str();
            case Kind::divided_difference: return "dd";
            case Kind::squares: return "squares";
            case Kind::rational: return "rational";
            case Kind::custom: {
                std::string out = "custom:";
                for (std::size_t i = 0; i < n_values.size(); ++i) out += (i ? "," : "") + n_values[i].str();
                return out;
            }
        }
        return "?";
    }

    static PsiSpec classical() { return {}; }
    static PsiSpec jackson(const Rational& q) { return {Kind::q, q, {}, {}}; }

    /// Command-line shorthand: classical, dd, squares, q:<r>, custom:<r>,<r>,...
    static PsiSpec parse_shorthand(std::string_view text) {
        if (text == "classical") return {};
        if (text == "dd" || text == "divided_difference") return {Kind::divided_difference, {}, {}, {}};
        if (text == "squares") return {Kind::squares, {}, {}, {}};
        if (text.starts_with("q:")) return jackson(Rational::parse(text.substr(2)));
        if (text.starts_with("custom:")) {
            PsiSpec s{Kind::custom, {}, {}, {}};
            std::string_view rest = text.substr(7);
            while (true) {
                const auto comma = rest.find(',');
                s.n_values.push_back(Rational::parse(rest.substr(0, comma)));
                if (comma == std::string_view::npos) break;
                rest = rest.substr(comma + 1);
            }
            return s;
        }
        throw Error(ErrorCode::parse, "unknown psi '" + std::string(text) +
                                          "'; expected classical, dd, squares, q:<r>, custom:<r>,... or a JSON object");
    }
};

} // namespace psi

#endif // PSI_UMBRAL_PSI_SPEC_HPP
