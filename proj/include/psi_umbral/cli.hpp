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

#ifndef PSI_UMBRAL_CLI_HPP
#define PSI_UMBRAL_CLI_HPP

// Command-line front end. Needs CLI11 on the include path in addition to the
// library's own dependencies.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "expr_parser.hpp"
#include "job_spec.hpp"
#include "verify.hpp"

namespace psi {

namespace cli {

enum ExitCode : int { exit_pass = 0, exit_check_failed = 1, exit_usage = 2 };

/// What a command produced: a JSON document plus the same content as a table.
struct Output {
    Json doc = Json::object();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
    bool passed = true;
};

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline void render(const Output& o, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << o.doc.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
            out << '\n';
        };
        line(o.header);
        for (const auto& r : o.rows) line(r);
        return;
    }
    std::vector<std::size_t> width(o.header.size());
    for (std::size_t i = 0; i < o.header.size(); ++i) width[i] = o.header[i].size();
    for (const auto& r : o.rows)
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            s += cells[i];
            if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        s.erase(s.find_last_not_of(' ') + 1);
        out << s << '\n';
    };
    line(o.header);
    for (const auto& r : o.rows) line(r);
    for (const auto& n : o.notes) out << n << '\n';
}

/// Fully resolved job: every field the commands read has a value or is
/// checked for presence by the command.
struct Job {
    std::string command;
    std::size_t cap = default_cap;
    PsiSpec psi;
    JobSpec raw;
    std::string format = "text";
    bool parallel = true;

    ExprContext context() const { return {psi, cap}; }
    PsiSequence sequence(std::size_t extra = 2) const { return psi.materialize(std::min(cap + extra, psi.max_cap())); }

    const std::string& need(const std::optional<std::string>& v, const char* flag) const {
        if (!v) throw Error(ErrorCode::validation, std::string("command '") + command + "' needs " + flag);
        return *v;
    }
};

inline Json header_doc(const Job& job) {
    return Json{{"command", job.command}, {"psi", to_json(job.psi)}, {"cap", job.cap}};
}

inline Output cmd_basic(const Job& job) {
    const std::string& src = job.need(job.raw.op, "--op");
    const std::size_t n_max = job.raw.n.value_or(job.cap);
    if (n_max > job.cap) throw Error(ErrorCode::validation, "--n exceeds --cap");
    const int formula = job.raw.formula.value_or(1);
    const PsiSequence psi = job.sequence();
    const GradedOperator q = parse_operator_expr(src, job.context());
    const BasicSequence b = basic_sequence_solve(q, psi, n_max);

    Output o;
    o.doc = header_doc(job);
    o.doc["op"] = src;
    o.doc["sequence"] = to_json(b);
    o.header = {"n", "p_n(x)"};
    for (std::size_t n = 0; n <= n_max; ++n) o.rows.push_back({std::to_string(n), b[n].str()});

    std::optional<DeltaOperator> qd;
    try {
        qd = make_delta_operator(q, psi);
    } catch (const Error& e) {
        o.notes.push_back("rodrigues: skipped, Q is not a psi-delta operator (" + std::string(e.what()) + ")");
        o.doc["rodrigues"] = nullptr;
    }
    if (qd) {
        const bool agree = basic_sequence_rodrigues(*qd, n_max, formula).polys == b.polys;
        o.doc["rodrigues"] = Json{{"formula", formula}, {"agree", agree}};
        o.notes.push_back("rodrigues formula " + std::to_string(formula) + ": " + (agree ? "agree" : "DISAGREE"));
        o.passed = agree;
    }
    return o;
}

inline Output cmd_expand(const Job& job) {
    const std::string& t_src = job.need(job.raw.t, "--t");
    const std::string& q_src = job.need(job.raw.q, "--q");
    const GradedOperator t = parse_operator_expr(t_src, job.context());
    const GradedOperator q = parse_operator_expr(q_src, job.context());
    const OperatorExpansion e = expand_in_q(t, q, q_src);
    const bool round_trip = same_action(reconstruct(e, q), t);

    Output o;
    o.doc = header_doc(job);
    o.doc["t"] = t_src;
    o.doc["expansion"] = to_json(e);
    o.doc["reconstructs"] = round_trip;
    o.header = {"n", "q_n(x)"};
    for (std::size_t n = 0; n <= e.order(); ++n) o.rows.push_back({std::to_string(n), e.q_polys[n].str()});
    o.notes.push_back(std::string("reconstruction: ") + (round_trip ? "pass" : "FAIL"));
    o.passed = round_trip;
    if (job.raw.lambda) {
        const auto rep = conjugate_indicator_check(t, q, {*job.raw.lambda});
        o.doc["indicator_check"] = Json{{"lambda", to_json(*job.raw.lambda)}, {"ok", rep.ok}};
        o.notes.push_back("indicator conjugation at lambda = " + job.raw.lambda->str() + ": " + (rep.ok ? "pass" : "FAIL"));
        o.passed = o.passed && rep.ok;
    }
    return o;
}

inline Output cmd_detect(const Job& job) {
    const std::string& src = job.need(job.raw.op, "--op");
    const auto d = detect_psi_series(parse_operator_expr(src, job.context()));

    Output o;
    o.doc = header_doc(job);
    o.doc["op"] = src;
    o.doc["is_series"] = d.is_series;
    o.doc["scale"] = to_json(d.scale);
    if (d.is_series) {
        Json ns = Json::array(), qs = Json::array();
        o.header = {"n", "n_psi", "q_n"};
        for (std::size_t n = 1; n <= d.psi->cap(); ++n) {
            ns.push_back(to_json(d.psi->n(n)));
            qs.push_back(to_json((*d.q_coeffs)[n]));
            o.rows.push_back({std::to_string(n), d.psi->n(n).str(), (*d.q_coeffs)[n].str()});
        }
        o.doc["n_psi"] = std::move(ns);
        o.doc["q_coeffs"] = std::move(qs);
        o.notes.push_back("psi-series in Dpsi, normalized by scale " + d.scale.str());
    } else {
        o.doc["witness"] = Json{{"n", d.witness->first}, {"k", d.witness->second}};
        o.header = {"n", "k"};
        o.rows.push_back({std::to_string(d.witness->first), std::to_string(d.witness->second)});
        o.notes.push_back("not a psi-series: b(n,k) != (n k)_psi b(k,k) at the listed (n, k)");
    }
    return o;
}

inline Output cmd_verify(const Job& job) {
    std::vector<std::string> names = job.raw.suites.value_or(std::vector<std::string>{"all"});
    if (std::find(names.begin(), names.end(), "all") != names.end()) names = suite_names();
    const auto results = run_suites(names, job.psi, job.cap, job.parallel);

    Output o;
    o.doc = header_doc(job);
    o.doc["suites"] = Json::array();
    o.header = {"suite", "check", "result", "detail"};
    std::size_t failed = 0, total = 0;
    for (const auto& r : results) {
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            o.rows.push_back({r.suite, c.name, c.passed ? "pass" : "FAIL", c.detail});
            ++total;
            if (!c.passed) ++failed;
        }
        o.doc["suites"].push_back(Json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", std::move(checks)}});
    }
    o.passed = failed == 0;
    o.doc["passed"] = o.passed;
    o.notes.push_back(std::to_string(total - failed) + "/" + std::to_string(total) + " checks passed");
    return o;
}

inline Output cmd_integrate(const Job& job) {
    if (!job.raw.poly) throw Error(ErrorCode::validation, "command 'integrate' needs --poly");
    const Polynomial& p = *job.raw.poly;
    if (p.degree() >= static_cast<long>(job.cap)) throw Error(ErrorCode::validation, "--poly degree must be below --cap");
    const PsiSequence psi = job.sequence();
    const Polynomial r = psi_integral(psi, p);
    const bool right_inverse = build_Dpsi(psi, job.cap)(r) == p;

    Output o;
    o.doc = header_doc(job);
    o.doc["poly"] = to_json(p);
    o.doc["integral"] = to_json(r);
    o.doc["right_inverse"] = right_inverse;
    o.header = {"input", "integral"};
    o.rows.push_back({p.str(), r.str()});
    o.notes.push_back(std::string("Dpsi of the integral returns the input: ") + (right_inverse ? "pass" : "FAIL"));
    o.passed = right_inverse;
    return o;
}

inline Output cmd_translate(const Job& job) {
    if (!job.raw.poly) throw Error(ErrorCode::validation, "command 'translate' needs --poly");
    if (!job.raw.y) throw Error(ErrorCode::validation, "command 'translate' needs --y");
    const Polynomial& p = *job.raw.poly;
    if (p.degree() > static_cast<long>(job.cap)) throw Error(ErrorCode::validation, "--poly degree exceeds --cap");
    const Polynomial r = translate(job.sequence(), *job.raw.y, p);

    Output o;
    o.doc = header_doc(job);
    o.doc["poly"] = to_json(p);
    o.doc["y"] = to_json(*job.raw.y);
    o.doc["translate"] = to_json(r);
    o.header = {"input", "y", "E^y(Dpsi) input"};
    o.rows.push_back({p.str(), job.raw.y->str(), r.str()});
    return o;
}

inline Output cmd_table(const Job& job) {
    const std::size_t n_max = job.raw.n.value_or(job.cap);
    if (n_max > job.cap) throw Error(ErrorCode::validation, "--n exceeds --cap");
    const PsiSequence psi = job.sequence(0);

    Output o;
    o.doc = header_doc(job);
    Json ns = Json::array(), fs = Json::array(), bs = Json::array();
    o.header = {"n", "n_psi", "n_psi!", "(n k)_psi, k = 0..n"};
    for (std::size_t n = 0; n <= n_max; ++n) {
        Json row = Json::array();
        std::string text;
        for (std::size_t k = 0; k <= n; ++k) {
            row.push_back(to_json(psi.binomial(n, k)));
            text += (k ? " " : "") + psi.binomial(n, k).str();
        }
        ns.push_back(to_json(psi.n(n)));
        fs.push_back(to_json(psi.factorial(n)));
        bs.push_back(std::move(row));
        o.rows.push_back({std::to_string(n), psi.n(n).str(), psi.factorial(n).str(), text});
    }
    o.doc["n_psi"] = std::move(ns);
    o.doc["factorial"] = std::move(fs);
    o.doc["binomial"] = std::move(bs);
    return o;
}

inline Output dispatch(const Job& job) {
    if (job.command == "basic") return cmd_basic(job);
    if (job.command == "expand") return cmd_expand(job);
    if (job.command == "detect") return cmd_detect(job);
    if (job.command == "verify") return cmd_verify(job);
    if (job.command == "integrate") return cmd_integrate(job);
    if (job.command == "translate") return cmd_translate(job);
    if (job.command == "table") return cmd_table(job);
    throw Error(ErrorCode::validation, "unknown command '" + job.command + "'");
}

inline PsiSpec psi_from_flag(const std::string& text) {
    if (!text.empty() && text.front() == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::parse, std::string("--psi is not valid JSON: ") + e.what());
        }
        return psi_spec_from_json(j, "--psi");
    }
    return PsiSpec::parse_shorthand(text);
}

/// "1,0,-1/2" or a JSON array of rational strings, constant term first.
inline Polynomial poly_from_flag(const std::string& text) {
    if (!text.empty() && text.front() == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::parse, std::string("--poly is not valid JSON: ") + e.what());
        }
        return polynomial_from_json(j, "--poly");
    }
    std::vector<Rational> cs;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        cs.push_back(Rational::parse(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return Polynomial(std::move(cs));
}

inline std::size_t cap_from_env() {
    const char* env = std::getenv("PSI_UMBRAL_CAP");
    if (!env || !*env) return default_cap;
    const std::string s(env);
    if (s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw Error(ErrorCode::validation, "PSI_UMBRAL_CAP must be a natural number, got '" + s + "'");
    return std::stoul(s);
}

inline void report_error(const Error& e, const std::string& format, std::ostream& err) {
    if (format == "json")
        err << Json{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}}.dump() << '\n';
    else
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
}

} // namespace cli

/// Runs one CLI invocation; args exclude the program name. Returns the exit
/// code: 0 pass, 1 check failure, 2 usage or input error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli;

    CLI::App app{"Exact psi-umbral calculus: basic sequences, operator expansions, verification suites.",
                 "psi-umbral"};
    std::string command, psi_text, poly_text, y_text, lambda_text, spec_path, format;
    std::string op, t, q, suite;
    std::size_t cap = 0, n = 0;
    int formula = 0;
    bool serial = false;

    app.add_option("command", command, "basic | expand | detect | verify | integrate | translate | table");
    app.add_option("--psi", psi_text, "classical, dd, squares, q:<r>, custom:<r>,<r>,... or a JSON object");
    app.add_option("--cap", cap, "highest degree handled (default $PSI_UMBRAL_CAP or 16)");
    app.add_option("--op", op, "operator expression for basic and detect");
    app.add_option("--t", t, "operator to expand");
    app.add_option("--q", q, "degree-lowering operator to expand in");
    app.add_option("--n", n, "last index for basic and table");
    app.add_option("--formula", formula, "Rodrigues formula 1-4 to cross-check in basic")->check(CLI::Range(1, 4));
    app.add_option("--y", y_text, "translation amount, a rational");
    app.add_option("--lambda", lambda_text, "eigenvalue sample for the indicator check");
    app.add_option("--poly", poly_text, "coefficients constant term first: 1,0,-1/2 or a JSON array");
    app.add_option("--suite", suite, "verify suites, comma separated, or all");
    app.add_option("--spec", spec_path, "JSON job spec; flags override its fields");
    app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--serial", serial, "run verify suites one after another");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << '\n' << "run with --help for the list of flags\n";
        return exit_usage;
    }

    const std::string fmt_hint = format.empty() ? "text" : format;
    try {
        Job job;
        if (!spec_path.empty()) job.raw = load_job_spec(spec_path);
        JobSpec& r = job.raw;
        if (app.count("--psi")) r.psi = psi_from_flag(psi_text);
        if (app.count("--cap")) {
            if (cap > max_user_cap) throw Error(ErrorCode::validation, "--cap above " + std::to_string(max_user_cap));
            r.cap = cap;
        }
        if (app.count("--op")) r.op = op;
        if (app.count("--t")) r.t = t;
        if (app.count("--q")) r.q = q;
        if (app.count("--n")) r.n = n;
        if (app.count("--formula")) r.formula = formula;
        if (app.count("--y")) r.y = Rational::parse(y_text);
        if (app.count("--lambda")) r.lambda = Rational::parse(lambda_text);
        if (app.count("--poly")) r.poly = poly_from_flag(poly_text);
        if (app.count("--format")) r.format = format;
        if (app.count("--suite")) {
            std::vector<std::string> names;
            std::string_view rest = suite;
            while (true) {
                const auto comma = rest.find(',');
                names.emplace_back(rest.substr(0, comma));
                if (comma == std::string_view::npos) break;
                rest = rest.substr(comma + 1);
            }
            std::vector<std::string> allowed = suite_names();
            allowed.push_back("all");
            for (const auto& s : names)
                if (std::find(allowed.begin(), allowed.end(), s) == allowed.end())
                    throw Error(ErrorCode::validation, "unknown suite '" + s + "'");
            r.suites = names;
        }
        if (!command.empty()) r.command = command;

        if (!r.command) throw Error(ErrorCode::validation, "no command given; try --help");
        if (std::find(command_names().begin(), command_names().end(), *r.command) == command_names().end())
            throw Error(ErrorCode::validation, "unknown command '" + *r.command + "'");
        job.command = *r.command;
        job.cap = r.cap ? *r.cap : cap_from_env();
        job.psi = r.psi.value_or(PsiSpec::classical());
        job.format = r.format.value_or("text");
        job.parallel = !serial;
        validate_psi(job.psi, job.cap, "psi");

        const Output o = dispatch(job);
        render(o, job.format, out);
        return o.passed ? exit_pass : exit_check_failed;
    } catch (const Error& e) {
        report_error(e, fmt_hint, err);
        return exit_usage;
    } catch (const std::exception& e) {
        report_error(Error(ErrorCode::domain, e.what()), fmt_hint, err);
        return exit_usage;
    }
}

} // namespace psi

#endif // PSI_UMBRAL_CLI_HPP
