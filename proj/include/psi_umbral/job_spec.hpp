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

#ifndef PSI_UMBRAL_JOB_SPEC_HPP
#define PSI_UMBRAL_JOB_SPEC_HPP

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace psi {

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"basic", "expand", "detect", "verify", "integrate", "translate", "table"};
    return names;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ghw",         "binomial", "rodrigues", "expansion",
                                                "leibniz",     "integration", "poisson", "special"};
    return names;
}

constexpr std::size_t default_cap = 16;

/// Largest cap accepted from users; exact arithmetic past this is slow.
constexpr std::size_t max_user_cap = 512;

/// A validated job. Every field is optional so command-line flags can fill
/// in or override what a spec file leaves out.
struct JobSpec {
    std::optional<std::string> command;
    std::optional<std::size_t> cap;
    std::optional<PsiSpec> psi;
    std::optional<std::string> op, t, q;
    std::optional<std::size_t> n;
    std::optional<int> formula;
    std::optional<Rational> y, lambda;
    std::optional<Polynomial> poly;
    std::optional<std::vector<std::string>> suites;
    std::optional<std::string> format;
};

/// Throws unless psi is admissible for every n <= cap.
inline void validate_psi(const PsiSpec& psi, std::size_t cap, const std::string& pointer) {
    if (psi.kind == PsiSpec::Kind::q && psi.q.is_one())
        detail::json_fail(ErrorCode::inadmissible, detail::child(pointer, "q"),
                          "q = 1 is not admissible: (1 - q^n) / (1 - q) has a zero divisor");
    if (psi.kind == PsiSpec::Kind::custom && psi.n_values.size() < cap)
        detail::json_fail(ErrorCode::validation, detail::child(pointer, "n_psi"),
                          "custom list gives n_psi only up to n = " + std::to_string(psi.n_values.size()) +
                              ", cap is " + std::to_string(cap));
    const PsiSequence s = psi.materialize(std::min(cap, psi.max_cap()));
    if (const auto v = validate_admissible(s, cap))
        detail::json_fail(ErrorCode::inadmissible, pointer, "psi " + psi.name() + " is not admissible: " + v->reason);
}

namespace detail {

inline std::size_t natural_from_json(const Json& j, const std::string& pointer) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        json_fail(ErrorCode::validation, pointer, "expected a natural number");
    return j.get<std::size_t>();
}

inline std::string string_from_json(const Json& j, const std::string& pointer) {
    if (!j.is_string()) json_fail(ErrorCode::validation, pointer, "expected a string");
    return j.get<std::string>();
}

inline void require_one_of(const std::string& value, const std::vector<std::string>& allowed, const std::string& pointer) {
    if (std::find(allowed.begin(), allowed.end(), value) == allowed.end()) {
        std::string list;
        for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
        json_fail(ErrorCode::validation, pointer, "'" + value + "' is not one of " + list);
    }
}

} // namespace detail

inline JobSpec job_spec_from_json(const Json& j) {
    using detail::child;
    if (!j.is_object()) detail::json_fail(ErrorCode::validation, "", "job spec must be a JSON object");
    detail::reject_unknown_keys(j, "", {"command", "cap", "psi", "op", "t", "q", "n", "formula", "y", "lambda",
                                        "poly", "suite", "format"});
    JobSpec s;
    if (j.contains("command")) {
        s.command = detail::string_from_json(j["command"], "/command");
        detail::require_one_of(*s.command, command_names(), "/command");
    }
    if (j.contains("cap")) {
        s.cap = detail::natural_from_json(j["cap"], "/cap");
        if (*s.cap > max_user_cap)
            detail::json_fail(ErrorCode::validation, "/cap", "cap above " + std::to_string(max_user_cap));
    }
    if (j.contains("psi")) s.psi = psi_spec_from_json(j["psi"], "/psi");
    for (const char* key : {"op", "t", "q"}) {
        if (!j.contains(key)) continue;
        const std::string v = detail::string_from_json(j[key], child("", key));
        (key[0] == 'o' ? s.op : key[0] == 't' ? s.t : s.q) = v;
    }
    if (j.contains("n")) s.n = detail::natural_from_json(j["n"], "/n");
    if (j.contains("formula")) {
        const std::size_t f = detail::natural_from_json(j["formula"], "/formula");
        if (f < 1 || f > 4) detail::json_fail(ErrorCode::validation, "/formula", "formula must be 1, 2, 3 or 4");
        s.formula = static_cast<int>(f);
    }
    if (j.contains("y")) s.y = rational_from_json(j["y"], "/y");
    if (j.contains("lambda")) s.lambda = rational_from_json(j["lambda"], "/lambda");
    if (j.contains("poly")) s.poly = polynomial_from_json(j["poly"], "/poly");
    if (j.contains("suite")) {
        const Json& v = j["suite"];
        std::vector<std::string> names;
        if (v.is_string()) {
            names.push_back(v.get<std::string>());
        } else if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i) names.push_back(detail::string_from_json(v[i], child("/suite", i)));
        } else {
            detail::json_fail(ErrorCode::validation, "/suite", "expected a suite name or an array of names");
        }
        std::vector<std::string> allowed = suite_names();
        allowed.push_back("all");
        for (std::size_t i = 0; i < names.size(); ++i)
            detail::require_one_of(names[i], allowed, v.is_string() ? "/suite" : child("/suite", i));
        s.suites = names;
    }
    if (j.contains("format")) {
        s.format = detail::string_from_json(j["format"], "/format");
        detail::require_one_of(*s.format, {"text", "json", "csv"}, "/format");
    }
    if (s.psi) validate_psi(*s.psi, s.cap.value_or(default_cap), "/psi");
    return s;
}

inline JobSpec parse_job_spec(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::parse, std::string("job spec is not valid JSON: ") + e.what());
    }
    return job_spec_from_json(j);
}

inline JobSpec load_job_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::validation, "cannot open job spec '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_job_spec(buf.str());
}

inline Json to_json(const JobSpec& s) {
    Json j = Json::object();
    if (s.command) j["command"] = *s.command;
    if (s.cap) j["cap"] = *s.cap;
    if (s.psi) j["psi"] = to_json(*s.psi);
    if (s.op) j["op"] = *s.op;
    if (s.t) j["t"] = *s.t;
    if (s.q) j["q"] = *s.q;
    if (s.n) j["n"] = *s.n;
    if (s.formula) j["formula"] = *s.formula;
    if (s.y) j["y"] = to_json(*s.y);
    if (s.lambda) j["lambda"] = to_json(*s.lambda);
    if (s.poly) j["poly"] = to_json(*s.poly);
    if (s.suites) j["suite"] = *s.suites;
    if (s.format) j["format"] = *s.format;
    return j;
}

} // namespace psi

#endif // PSI_UMBRAL_JOB_SPEC_HPP
