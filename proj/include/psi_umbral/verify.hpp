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

#ifndef PSI_UMBRAL_VERIFY_HPP
#define PSI_UMBRAL_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <random>
#include <string>
#include <vector>

#include "expansion.hpp"
#include "integration.hpp"
#include "psi_product.hpp"
#include "psi_spec.hpp"
#include "special_functions.hpp"

namespace psi {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::string psi;
    std::size_t cap = 0;
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

namespace detail {

/// Records one check; a library error inside it counts as a failure.
inline void check(SuiteResult& r, std::string name, const std::function<std::string()>& body) {
    try {
        std::string failure = body();
        r.checks.push_back({std::move(name), failure.empty(), std::move(failure)});
    } catch (const Error& e) {
        r.checks.push_back({std::move(name), false, std::string(to_string(e.code())) + ": " + e.what()});
    }
}

inline std::string at(const std::string& what, std::size_t a) { return what + " fails at " + std::to_string(a); }

/// Deterministic small rationals and random operators for the randomized checks.
class SuiteRng {
public:
    explicit SuiteRng(unsigned seed) : rng_(seed) {}
    long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<unsigned long>(hi - lo + 1)); }
    Rational rational() { return Rational(integer(-9, 9), integer(1, 5)); }
    Polynomial polynomial(std::size_t max_degree) {
        std::vector<Rational> cs(static_cast<std::size_t>(integer(0, static_cast<long>(max_degree))) + 1);
        for (auto& c : cs) c = rational();
        return Polynomial(std::move(cs));
    }
    GradedOperator op(std::size_t cap, long shift) {
        return GradedOperator::from_function(cap, [&](std::size_t n) {
            return polynomial(static_cast<std::size_t>(std::max(0L, static_cast<long>(n) + integer(-2, shift))));
        });
    }

private:
    std::mt19937 rng_;
};

inline std::vector<TruncatedSeries> s_factor_indicators(const PsiSequence& psi, std::size_t cap) {
    TruncatedSeries id(cap), plus(cap), shift(cap);
    id[1] = Rational(1);
    plus[1] = plus[2] = Rational(1);
    for (std::size_t k = 1; k <= cap; ++k) shift[k] = psi.factorial(k - 1).inverse();
    return {id, plus, shift};
}

inline void suite_ghw(SuiteResult& r, const PsiSpec& spec, std::size_t cap) {
    check(r, "[Dpsi, Xpsi] = id on x^0..x^" + std::to_string(cap), [&] {
        const PsiSequence psi = spec.materialize(cap + 2);
        const auto c = op_commutator(build_Dpsi(psi, cap + 1), build_Xpsi(psi, cap + 1)).restricted(cap);
        if (c.effective_cap() < cap) return std::string("commutator known only to x^") + std::to_string(c.effective_cap());
        for (std::size_t n = 0; n <= cap; ++n)
            if (c.image(n) != Polynomial::monomial(n)) return at("x^n for n", n);
        return std::string();
    });
}

inline void suite_binomial(SuiteResult& r, const PsiSpec& spec, std::size_t cap) {
    const std::size_t n_max = std::min<std::size_t>(10, cap);
    const char* labels[] = {"Dpsi", "Delta", "Dpsi + Dpsi^3"};
    for (int which = 0; which < 3; ++which)
        check(r, std::string("psi-binomial recurrence for Q = ") + labels[which], [&] {
            const PsiSequence psi = spec.materialize(cap + 1);
            const auto d = build_Dpsi(psi, cap);
            const GradedOperator q = which == 0 ? d : which == 1 ? build_Delta(psi, cap) : d + op_power(d, 3);
            const auto b = basic_sequence_solve(q, psi, n_max);
            for (std::size_t n = 0; n <= n_max; ++n)
                for (long i = 0; i <= static_cast<long>(n_max); ++i) {
                    const Rational y(i % 2 == 0 ? i + 1 : -i, i + 2);
                    Polynomial rhs;
                    for (std::size_t k = 0; k <= n; ++k) rhs += b[k] * (psi.binomial(n, k) * b[n - k].eval(y));
                    if (translate(psi, y, b[n]) != rhs) return at("degree", n);
                }
            return std::string();
        });
    check(r, "odd alternating sums (1 +psi (-1))^n vanish", [&] {
        const PsiSequence psi = spec.materialize(cap);
        for (std::size_t n = 1; n <= cap; n += 2) {
            Rational sum;
            for (std::size_t k = 0; k <= n; ++k) sum += psi.binomial(n, k) * Rational(k % 2 == 0 ? 1 : -1);
            if (!sum.is_zero()) return at("n", n);
        }
        return std::string();
    });
}

inline void suite_rodrigues(SuiteResult& r, const PsiSpec& spec, std::size_t cap) {
    const std::size_t n_max = std::min<std::size_t>(8, cap);
    const char* labels[] = {"id", "id + Dpsi", "E^1(Dpsi)"};
    for (int which = 0; which < 3; ++which)
        check(r, std::string("formulas 1-4 match triangular solve, S = ") + labels[which], [&] {
            // the formulas give up a degree or two of effective cap
            const std::size_t build = n_max + 2;
            const PsiSequence psi = spec.materialize(build + 2);
            const auto qd = delta_from_series(s_factor_indicators(psi, build)[static_cast<std::size_t>(which)], psi, build);
            const auto reference = basic_sequence_solve(qd.op, psi, n_max);
            for (int f = 1; f <= 4; ++f) {
                const auto b = basic_sequence_rodrigues(qd, n_max, f);
                if (b.polys != reference.polys) return at("formula", static_cast<std::size_t>(f));
            }
            return std::string();
        });
}

inline void suite_expansion(SuiteResult& r, const PsiSpec& spec, std::size_t cap) {
    const std::size_t order = std::min<std::size_t>(10, cap);
    check(r, "round trip of 20 random operators in Delta_psi", [&] {
        const PsiSequence psi = spec.materialize(cap + 1);
        const auto q = build_Delta(psi, cap);
        SuiteRng rng(20240611u);
        for (std::size_t i = 0; i < 20; ++i) {
            const auto t = rng.op(order, 2);
            if (!same_action(reconstruct(expand_in_q(t, q), q), t)) return at("operator", i);
        }
        return std::string();
    });
    check(r, "indicator equals Phi^(-1) T Phi at 3 lambda", [&] {
        const PsiSequence psi = spec.materialize(cap + 1);
        const auto q = build_Delta(psi, cap);
        SuiteRng rng(77u);
        for (std::size_t i = 0; i < 20; ++i) {
            const auto t = rng.op(order, 2);
            if (!conjugate_indicator_check(t, q, {rng.rational(), rng.rational(), rng.rational()}).ok)
                return at("operator", i);
        }
        return std::string();
    });
    if (spec.kind == PsiSpec::Kind::classical)
        check(r, "D in powers of Delta is (-1)^(k-1)/k; Delta in D is 1/n!", [&] {
            const PsiSequence psi = spec.materialize(cap);
            const auto d = build_D(cap), delta = build_Delta(psi, cap);
            const auto e1 = expand_in_q(d, delta), e2 = expand_in_q(delta, d);
            for (long k = 1; k <= static_cast<long>(cap); ++k) {
                const auto uk = static_cast<std::size_t>(k);
                if (e1.q_polys[uk] != Polynomial(Rational(k % 2 == 1 ? 1 : -1, k))) return at("D coefficient", uk);
                if (e2.q_polys[uk] != Polynomial(factorial(k).inverse())) return at("Delta coefficient", uk);
            }
            return std::string();
        });
}

/// T^0 .. T^k.
inline std::vector<GradedOperator> powers(const GradedOperator& t, unsigned k) {
    std::vector<GradedOperator> out{GradedOperator::identity(t.cap())};
    for (unsigned i = 1; i <= k; ++i) out.push_back(op_compose(t, out.back()));
    return out;
}

inline void suite_leibniz(SuiteResult& r, const PsiSpec& spec, std::size_t cap) {
    const std::size_t j_max = std::min<std::size_t>(6, cap);
    check(r, "Dpsi^n Xpsi^m normal ordering, n, m <= 5", [&] {
        const std::size_t c = j_max + 5;
        const PsiSequence psi = spec.materialize(c + 1);
        const auto dp = powers(build_Dpsi(psi, c), 5), xp = powers(build_Xpsi(psi, c), 5);
        for (unsigned n = 0; n <= 5; ++n)
            for (unsigned m = 0; m <= 5; ++m)
                for (std::size_t j = 0; j <= j_max; ++j) {
                    const Polynomial xj = Polynomial::monomial(j);
                    Polynomial rhs;
                    for (unsigned k = 0; k <= std::min(n, m); ++k)
                        rhs += xp[m - k](dp[n - k](xj)) * (binomial(n, k) * binomial(m, k) * factorial(k));
                    if (dp[n](xp[m](xj)) != rhs) return at("x^j for j", j);
                }
        return std::string();
    });
    check(r, "exp{t Dpsi} exp{a Xpsi} = exp{at} exp{a Xpsi} exp{t Dpsi}, order 10", [&] {
        constexpr unsigned order = 10;
        const std::size_t c = j_max + order + 1;
        const PsiSequence psi = spec.materialize(c + 1);
        const auto dp = powers(build_Dpsi(psi, c), order), xp = powers(build_Xpsi(psi, c), order);
        for (std::size_t j = 0; j <= j_max; ++j) {
            const Polynomial xj = Polynomial::monomial(j);
            for (unsigned i = 0; i <= order; ++i)
                for (unsigned l = 0; i + l <= order; ++l) {
                    const Polynomial lhs = dp[i](xp[l](xj)) / (factorial(i) * factorial(l));
                    Polynomial rhs;
                    for (unsigned s = 0; s <= std::min(i, l); ++s)
                        rhs += xp[l - s](dp[i - s](xj)) / (factorial(s) * factorial(l - s) * factorial(i - s));
                    if (lhs != rhs) return at("x^j for j", j);
                }
        }
        return std::string();
    });
    check(r, "Dpsi(f g) = Nhat{(D0 f) g + f(0) D0 g} on random pairs", [&] {
        const PsiSequence psi = spec.materialize(18);
        const auto d = build_Dpsi(psi, 17);
        SuiteRng rng(5u);
        for (std::size_t i = 0; i < 20; ++i) {
            const Polynomial f = rng.polynomial(8), g = rng.polynomial(8);
            if (d(f * g) != leibniz_product(PsiRule{psi}, f, g)) return at("pair", i);
            if (spec.kind == PsiSpec::Kind::q && d(f * g) != leibniz_product(JacksonRule{spec.q}, f, g))
                return at("Jackson pair", i);
        }
        return std::string();
    });
}

inline void suite_integration(SuiteResult& r, const PsiSpec& spec, std::size_t cap) {
    check(r, "Dpsi o psi-integral = id on x^0..x^" + std::to_string(cap == 0 ? 0 : cap - 1), [&] {
        const PsiSequence psi = spec.materialize(cap);
        const auto d = build_Dpsi(psi, cap);
        for (std::size_t n = 0; n + 1 <= cap; ++n)
            if (d(psi_integral(psi, Polynomial::monomial(n))) != Polynomial::monomial(n)) return at("n", n);
        return std::string();
    });
    check(r, "psi-integral is not a left inverse", [&] {
        const PsiSequence psi = spec.materialize(std::max<std::size_t>(cap, 2));
        const Polynomial p = Polynomial::x() + Polynomial(1);
        return psi_integral(psi, build_Dpsi(psi, 2)(p)) == p ? std::string("constant survived") : std::string();
    });
    check(r, "Dpsi = Nhat o D0", [&] {
        const PsiSequence psi = spec.materialize(cap + 1);
        return same_action(build_Dpsi(psi, cap), build_Nhat(psi, cap) * build_D0(cap)) ? std::string()
                                                                                       : std::string("operators differ");
    });
    if (spec.kind == PsiSpec::Kind::q)
        check(r, "psi-integral equals the Jackson integral", [&] {
            const PsiSequence psi = spec.materialize(cap);
            for (std::size_t n = 0; n + 1 <= cap; ++n)
                if (psi_integral(psi, Polynomial::monomial(n)) != q_integral(spec.q, Polynomial::monomial(n)))
                    return at("n", n);
            return std::string();
        });
    if (spec.kind == PsiSpec::Kind::rational)
        check(r, "psi-integral equals the R-integral", [&] {
            const PsiSequence psi = spec.materialize(cap);
            for (std::size_t n = 0; n + 1 <= cap; ++n)
                if (psi_integral(psi, Polynomial::monomial(n)) != r_integral(spec.r, spec.q, Polynomial::monomial(n)))
                    return at("n", n);
            return std::string();
        });
}

inline void suite_poisson(SuiteResult& r, const PsiSpec& spec, std::size_t cap) {
    for (const Rational& lambda : {Rational(1), Rational(3, 2)})
        check(r, "Dpsi p_m + lambda p_m = lambda p_(m-1), m <= 5, lambda = " + lambda.str(), [&] {
            const PsiSequence psi = spec.materialize(cap);
            const auto p = poisson_psi(psi, lambda, 5, cap);
            const auto symbolic = poisson_psi_symbolic(psi, lambda, 5, cap);
            for (std::size_t m = 0; m <= 5; ++m) {
                if (!(symbolic[m] == p.p[m])) return at("symbol route, m", m);
                for (std::size_t n = 0; n < cap; ++n) {
                    const Rational lhs = p.p[m][n + 1] * psi.n(n + 1) + lambda * p.p[m][n];
                    const Rational rhs = m == 0 ? Rational(0) : lambda * p.p[m - 1][n];
                    if (lhs != rhs) return at("m", m);
                }
            }
            return std::string();
        });
}

inline void suite_special(SuiteResult& r, const PsiSpec& spec, std::size_t cap) {
    check(r, "sum of h_j over j is exp_psi, m <= 5", [&] {
        const PsiSequence psi = spec.materialize(cap);
        const auto e = exp_psi_series(psi, cap);
        for (std::size_t m = 1; m <= 5; ++m) {
            TruncatedSeries sum(cap);
            for (std::size_t j = 0; j < m; ++j) sum = sum + psi_hyperbolic(psi, m, j, cap);
            if (!(sum == e)) return at("m", m);
        }
        return std::string();
    });
    check(r, "Dpsi sends h_j to h_(j-1 mod m)", [&] {
        const PsiSequence psi = spec.materialize(cap);
        for (std::size_t m = 1; m <= 5; ++m)
            for (std::size_t j = 0; j < m; ++j) {
                const auto h = psi_hyperbolic(psi, m, j, cap), prev = psi_hyperbolic(psi, m, (j + m - 1) % m, cap);
                for (std::size_t n = 0; n < cap; ++n)
                    if (h[n + 1] * psi.n(n + 1) != prev[n]) return at("m", m);
            }
        return std::string();
    });
    if (spec.kind == PsiSpec::Kind::divided_difference || (spec.kind == PsiSpec::Kind::q && spec.q.is_zero()))
        check(r, "exp_0 has all coefficients 1", [&] {
            const auto e = exp_psi_series(spec.materialize(cap), cap);
            for (std::size_t n = 0; n <= cap; ++n)
                if (!e[n].is_one()) return at("n", n);
            return std::string();
        });
}

} // namespace detail

inline SuiteResult run_suite(const std::string& name, const PsiSpec& psi, std::size_t cap) {
    SuiteResult r{name, psi.name(), cap, {}};
    if (name == "ghw") detail::suite_ghw(r, psi, cap);
    else if (name == "binomial") detail::suite_binomial(r, psi, cap);
    else if (name == "rodrigues") detail::suite_rodrigues(r, psi, cap);
    else if (name == "expansion") detail::suite_expansion(r, psi, cap);
    else if (name == "leibniz") detail::suite_leibniz(r, psi, cap);
    else if (name == "integration") detail::suite_integration(r, psi, cap);
    else if (name == "poisson") detail::suite_poisson(r, psi, cap);
    else if (name == "special") detail::suite_special(r, psi, cap);
    else throw Error(ErrorCode::validation, "unknown suite '" + name + "'");
    return r;
}

/// How far psi must be known for the suites at this cap. The commutator
/// and Rodrigues checks look two places past cap; the Leibniz checks work
/// at fixed degrees up to 17.
inline std::size_t verify_psi_length(std::size_t cap) { return std::max<std::size_t>(cap + 2, 18); }

/// Runs the suites, concurrently when asked; results come back in the order
/// of names either way.
inline std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const PsiSpec& psi, std::size_t cap,
                                           bool parallel = true) {
    if (psi.max_cap() < verify_psi_length(cap))
        throw Error(ErrorCode::cap_exhausted, "verify needs n_psi up to n = " + std::to_string(verify_psi_length(cap)) +
                                                  " at cap " + std::to_string(cap) + "; the custom list stops at n = " +
                                                  std::to_string(psi.max_cap()));
    std::vector<SuiteResult> out;
    if (!parallel) {
        for (const auto& n : names) out.push_back(run_suite(n, psi, cap));
        return out;
    }
    std::vector<std::future<SuiteResult>> jobs;
    for (const auto& n : names) jobs.push_back(std::async(std::launch::async, run_suite, n, psi, cap));
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

} // namespace psi

#endif // PSI_UMBRAL_VERIFY_HPP
