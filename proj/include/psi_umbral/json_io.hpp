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

#ifndef PSI_UMBRAL_JSON_IO_HPP
#define PSI_UMBRAL_JSON_IO_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "expansion.hpp"
#include "psi_spec.hpp"

namespace psi {

// Scalars travel as "p/q" strings so nothing is ever rounded.
using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void json_fail(ErrorCode code, const std::string& pointer, const std::string& what) {
    throw Error(code, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

inline std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
inline std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

/// Throws on any key of obj outside allowed.
inline void reject_unknown_keys(const Json& obj, const std::string& pointer, std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed) known = known || item.key() == k;
        if (!known) json_fail(ErrorCode::validation, child(pointer, item.key()), "unknown key '" + item.key() + "'");
    }
}

inline const Json& require_key(const Json& obj, const std::string& pointer, const char* key) {
    if (!obj.contains(key)) json_fail(ErrorCode::validation, child(pointer, key), "missing required key");
    return obj.at(key);
}

} // namespace detail

inline Json to_json(const Rational& r) { return r.str(); }

/// Accepts "p/q" strings and JSON integers.
inline Rational rational_from_json(const Json& j, const std::string& pointer = "") {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) detail::json_fail(ErrorCode::validation, pointer, "expected a rational string such as \"-3/4\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        detail::json_fail(e.code(), pointer, e.what());
    }
}

inline Json to_json(const Polynomial& p) {
    Json out = Json::array();
    if (p.is_zero()) out.push_back("0");
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

inline Polynomial polynomial_from_json(const Json& j, const std::string& pointer = "") {
    if (!j.is_array()) detail::json_fail(ErrorCode::validation, pointer, "expected an array of coefficients");
    std::vector<Rational> cs;
    for (std::size_t i = 0; i < j.size(); ++i) cs.push_back(rational_from_json(j[i], detail::child(pointer, i)));
    return Polynomial(std::move(cs));
}

inline Json to_json(const TruncatedSeries& s) {
    Json cs = Json::array();
    for (std::size_t n = 0; n <= s.cap(); ++n) cs.push_back(to_json(s[n]));
    return Json{{"cap", s.cap()}, {"coeffs", std::move(cs)}};
}

inline TruncatedSeries series_from_json(const Json& j, const std::string& pointer = "") {
    if (!j.is_object()) detail::json_fail(ErrorCode::validation, pointer, "expected a series object");
    detail::reject_unknown_keys(j, pointer, {"cap", "coeffs"});
    const Json& cap = detail::require_key(j, pointer, "cap");
    if (!cap.is_number_unsigned()) detail::json_fail(ErrorCode::validation, detail::child(pointer, "cap"), "expected a natural number");
    const Json& cs = detail::require_key(j, pointer, "coeffs");
    if (!cs.is_array() || cs.size() != cap.get<std::size_t>() + 1)
        detail::json_fail(ErrorCode::validation, detail::child(pointer, "coeffs"), "expected cap + 1 coefficients");
    std::vector<Rational> v;
    for (std::size_t i = 0; i < cs.size(); ++i) v.push_back(rational_from_json(cs[i], detail::child(pointer, "coeffs/" + std::to_string(i))));
    return {std::move(v), cap.get<std::size_t>()};
}

inline Json to_json(const PsiSpec& s) {
    switch (s.kind) {
        case PsiSpec::Kind::classical: return Json{{"kind", "classical"}};
        case PsiSpec::Kind::q: return Json{{"kind", "q"}, {"q", to_json(s.q)}};
        case PsiSpec::Kind::divided_difference: return Json{{"kind", "divided_difference"}};
        case PsiSpec::Kind::squares: return Json{{"kind", "squares"}};
        case PsiSpec::Kind::custom: {
            Json ns = Json::array();
            for (const auto& v : s.n_values) ns.push_back(to_json(v));
            return Json{{"kind", "custom"}, {"n_psi", std::move(ns)}};
        }
        case PsiSpec::Kind::rational:
            return Json{{"kind", "rational"}, {"R_num", to_json(s.r.num)}, {"R_den", to_json(s.r.den)}, {"q", to_json(s.q)}};
    }
    return {};
}

/// {"kind": "classical" | "q" | "divided_difference" | "squares" | "custom" | "rational", ...}
inline PsiSpec psi_spec_from_json(const Json& j, const std::string& pointer = "") {
    if (!j.is_object()) detail::json_fail(ErrorCode::validation, pointer, "expected a psi object");
    const Json& kind = detail::require_key(j, pointer, "kind");
    if (!kind.is_string()) detail::json_fail(ErrorCode::validation, detail::child(pointer, "kind"), "expected a string");
    const std::string k = kind.get<std::string>();
    PsiSpec s;
    if (k == "classical" || k == "divided_difference" || k == "squares") {
        detail::reject_unknown_keys(j, pointer, {"kind"});
        s.kind = k == "classical" ? PsiSpec::Kind::classical
                 : k == "squares" ? PsiSpec::Kind::squares
                                  : PsiSpec::Kind::divided_difference;
    } else if (k == "q") {
        detail::reject_unknown_keys(j, pointer, {"kind", "q"});
        s.kind = PsiSpec::Kind::q;
        s.q = rational_from_json(detail::require_key(j, pointer, "q"), detail::child(pointer, "q"));
    } else if (k == "custom") {
        detail::reject_unknown_keys(j, pointer, {"kind", "n_psi"});
        s.kind = PsiSpec::Kind::custom;
        const std::string at = detail::child(pointer, "n_psi");
        const Json& ns = detail::require_key(j, pointer, "n_psi");
        if (!ns.is_array() || ns.empty()) detail::json_fail(ErrorCode::validation, at, "expected a nonempty array of n_psi for n = 1, 2, ...");
        for (std::size_t i = 0; i < ns.size(); ++i) s.n_values.push_back(rational_from_json(ns[i], detail::child(at, i)));
    } else if (k == "rational") {
        detail::reject_unknown_keys(j, pointer, {"kind", "R_num", "R_den", "q"});
        s.kind = PsiSpec::Kind::rational;
        s.r.num = polynomial_from_json(detail::require_key(j, pointer, "R_num"), detail::child(pointer, "R_num"));
        s.r.den = j.contains("R_den") ? polynomial_from_json(j.at("R_den"), detail::child(pointer, "R_den")) : Polynomial(1);
        if (s.r.den.is_zero()) detail::json_fail(ErrorCode::validation, detail::child(pointer, "R_den"), "denominator is the zero polynomial");
        s.q = rational_from_json(detail::require_key(j, pointer, "q"), detail::child(pointer, "q"));
    } else {
        detail::json_fail(ErrorCode::validation, detail::child(pointer, "kind"), "unknown psi kind '" + k + "'");
    }
    return s;
}

inline Json to_json(const OperatorExpansion& e) {
    Json cs = Json::array();
    for (const auto& p : e.q_polys) cs.push_back(to_json(p));
    return Json{{"base", e.base},
                {"form", e.form == ExpansionForm::dual ? "dual" : "multiplication"},
                {"coeffs", std::move(cs)}};
}

inline OperatorExpansion expansion_from_json(const Json& j, const std::string& pointer = "") {
    if (!j.is_object()) detail::json_fail(ErrorCode::validation, pointer, "expected an expansion object");
    detail::reject_unknown_keys(j, pointer, {"base", "form", "coeffs"});
    OperatorExpansion e;
    const Json& base = detail::require_key(j, pointer, "base");
    if (!base.is_string()) detail::json_fail(ErrorCode::validation, detail::child(pointer, "base"), "expected a string");
    e.base = base.get<std::string>();
    if (j.contains("form")) {
        const Json& f = j.at("form");
        if (f == "dual") e.form = ExpansionForm::dual;
        else if (f != "multiplication") detail::json_fail(ErrorCode::validation, detail::child(pointer, "form"), "expected \"multiplication\" or \"dual\"");
    }
    const Json& cs = detail::require_key(j, pointer, "coeffs");
    if (!cs.is_array() || cs.empty()) detail::json_fail(ErrorCode::validation, detail::child(pointer, "coeffs"), "expected a nonempty array");
    for (std::size_t i = 0; i < cs.size(); ++i) e.q_polys.push_back(polynomial_from_json(cs[i], detail::child(pointer, "coeffs/" + std::to_string(i))));
    return e;
}

inline Json to_json(const BasicSequence& b) {
    Json out = Json::array();
    for (const auto& p : b.polys) out.push_back(to_json(p));
    return out;
}

inline Json to_json(const GradedOperator& t) {
    Json images = Json::array();
    for (const auto& p : t.images()) images.push_back(to_json(p));
    return Json{{"cap", t.cap()}, {"effective_cap", t.effective_cap()}, {"images", std::move(images)}};
}

} // namespace psi

#endif // PSI_UMBRAL_JSON_IO_HPP
