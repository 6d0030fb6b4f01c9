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

#ifndef PSI_UMBRAL_PSI_PRODUCT_HPP
#define PSI_UMBRAL_PSI_PRODUCT_HPP

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "operators.hpp"

namespace psi {

/// f *_psi g = f(Xpsi) g. Not commutative; 1 *_psi g = g but f *_psi 1 != f
/// unless 1_psi = 1.
inline Polynomial star_mul(const Polynomial& f, const Polynomial& g, const PsiSequence& psi) {
    Polynomial r;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero()) continue;
        for (std::size_t k = 0; k < g.size(); ++k)
            if (!g[k].is_zero()) r += Polynomial::monomial(k + i, f[i] * g[k] * raising_weight(psi, k, i));
    }
    return r;
}

/// Series form of star_mul, truncated at the smaller cap.
inline TruncatedSeries star_mul(const TruncatedSeries& f, const TruncatedSeries& g, const PsiSequence& psi) {
    const std::size_t cap = std::min(f.cap(), g.cap());
    TruncatedSeries r(cap);
    for (std::size_t i = 0; i <= cap; ++i) {
        if (f[i].is_zero()) continue;
        for (std::size_t k = 0; i + k <= cap; ++k)
            if (!g[k].is_zero()) r[i + k] += f[i] * g[k] * raising_weight(psi, k, i);
    }
    return r;
}

/// x^(n *psi) by n applications of Xpsi to 1.
inline Polynomial star_power(std::size_t n, const PsiSequence& psi) {
    const GradedOperator x = build_Xpsi(psi, n == 0 ? 0 : n - 1);
    Polynomial p(1);
    for (std::size_t k = 0; k < n; ++k) p = x.apply(p);
    return p;
}

/// (n! / n_psi!) x^n.
inline Polynomial star_power_closed(std::size_t n, const PsiSequence& psi) {
    return Polynomial::monomial(n, factorial(static_cast<long>(n)) / psi.factorial(n));
}

/// A series written either in ordinary powers x^n or in *_psi powers.
struct StarSeries {
    enum class Basis { ordinary, star };

    TruncatedSeries coeffs;
    Basis basis = Basis::ordinary;

    /// x^(n *psi) = (n! / n_psi!) x^n.
    TruncatedSeries to_ordinary(const PsiSequence& psi) const {
        if (basis == Basis::ordinary) return coeffs;
        TruncatedSeries r(coeffs.cap());
        for (std::size_t n = 0; n <= r.cap(); ++n)
            r[n] = coeffs[n] * factorial(static_cast<long>(n)) / psi.factorial(n);
        return r;
    }
    TruncatedSeries to_star(const PsiSequence& psi) const {
        if (basis == Basis::star) return coeffs;
        TruncatedSeries r(coeffs.cap());
        for (std::size_t n = 0; n <= r.cap(); ++n)
            r[n] = coeffs[n] * psi.factorial(n) / factorial(static_cast<long>(n));
        return r;
    }
};

struct PoissonPsi {
    std::vector<TruncatedSeries> p; ///< p_0 .. p_m_max in ordinary powers of x
    TruncatedSeries normalizer;     ///< N(lambda, x) = exp[lambda x] *_psi exp_psi[-lambda x]
};

/// p_m = (lambda x)^m / m! *_psi exp_psi[-lambda x], with
/// exp_psi[a x] = sum_k a^k x^k / k_psi!.
inline PoissonPsi poisson_psi(const PsiSequence& psi, const Rational& lambda, std::size_t m_max, std::size_t cap) {
    const TruncatedSeries decay = exp_psi_coefficients(psi, -lambda, cap);
    PoissonPsi out;
    for (std::size_t m = 0; m <= m_max; ++m) {
        TruncatedSeries left(cap);
        if (m <= cap) left[m] = lambda.pow(static_cast<long>(m)) / factorial(static_cast<long>(m));
        out.p.push_back(star_mul(left, decay, psi));
    }
    TruncatedSeries growth = exp_series(cap);
    Rational lk(1);
    for (std::size_t k = 0; k <= cap; ++k, lk *= lambda) growth[k] *= lk;
    out.normalizer = star_mul(growth, decay, psi);
    return out;
}

/// The same p_m reached through the Xpsi symbol calculus: solve
///   d/dXpsi P_m + lambda P_m = lambda P_(m-1),  d/dXpsi P_0 = -lambda P_0
/// for power series P_m in the symbol Xpsi with P_m(0) = [m = 0], then apply
/// P_m(Xpsi) to 1 using Xpsi^j 1 = (j! / j_psi!) x^j.
inline std::vector<TruncatedSeries> poisson_psi_symbolic(const PsiSequence& psi, const Rational& lambda,
                                                         std::size_t m_max, std::size_t cap) {
    std::vector<TruncatedSeries> symbols;
    for (std::size_t m = 0; m <= m_max; ++m) {
        TruncatedSeries c(cap);
        c[0] = m == 0 ? Rational(1) : Rational(0);
        for (std::size_t j = 0; j < cap; ++j) {
            const Rational prev = m == 0 ? Rational(0) : symbols[m - 1][j];
            c[j + 1] = (lambda * prev - lambda * c[j]) / Rational(static_cast<long>(j + 1));
        }
        symbols.push_back(std::move(c));
    }
    std::vector<TruncatedSeries> out;
    for (const auto& c : symbols) out.push_back(StarSeries{c, StarSeries::Basis::star}.to_ordinary(psi));
    return out;
}

struct JacksonRule {
    Rational q;
};
struct RationalRule {
    RationalFunction r;
    Rational q;
};
struct PsiRule {
    PsiSequence psi;
};
using LeibnizRule = std::variant<JacksonRule, RationalRule, PsiRule>;

/// Right-hand side of the product rule for the chosen derivative:
///   dq:   (Dq f) g + (f(qx)) (Dq g)
///   dR:   R(q Qhat) {(D0 f) g + f(0) (D0 g)}
///   dpsi: Nhat_psi {(D0 f) g + f(0) (D0 g)}
inline Polynomial leibniz_product(const LeibnizRule& rule, const Polynomial& f, const Polynomial& g) {
    const long df = std::max(0L, f.degree()), dg = std::max(0L, g.degree());
    const auto cap = static_cast<std::size_t>(df + dg + 1);
    const Polynomial divided = build_D0(cap).apply(f) * g + build_D0(cap).apply(g) * f.eval(Rational(0));
    return std::visit(
        [&](const auto& r) -> Polynomial {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, JacksonRule>) {
                const GradedOperator dq = build_Dq(r.q, cap);
                return dq.apply(f) * g + build_dilation(r.q, cap).apply(f) * dq.apply(g);
            } else if constexpr (std::is_same_v<R, RationalRule>) {
                return build_Nhat(PsiSequence::rational_function(r.r, r.q, cap + 1), cap).apply(divided);
            } else {
                return build_Nhat(r.psi, cap).apply(divided);
            }
        },
        rule);
}

/// f(Xpsi) for a polynomial f in the symbol Xpsi.
inline GradedOperator xpsi_polynomial(const Polynomial& f, const PsiSequence& psi, std::size_t cap) {
    const auto deg = static_cast<std::size_t>(std::max(0L, f.degree()));
    if (psi.admissible_to() < deg) throw Error(ErrorCode::cap_exhausted, "psi sequence too short for f(Xpsi)");
    const std::size_t m = std::min(cap, psi.admissible_to() - deg);
    std::vector<Polynomial> images;
    for (std::size_t k = 0; k <= m; ++k) images.push_back(star_mul(f, Polynomial::monomial(k), psi));
    return {std::move(images), cap};
}

} // namespace psi

#endif // PSI_UMBRAL_PSI_PRODUCT_HPP
