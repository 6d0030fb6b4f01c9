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

#ifndef PSI_UMBRAL_EXPANSION_HPP
#define PSI_UMBRAL_EXPANSION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "umbral.hpp"

namespace psi {

/// Which raising operator the coefficient polynomials are evaluated at.
enum class ExpansionForm {
    multiplication, ///< T = sum_n q_n(x) Q^n, x acting by multiplication
    dual,           ///< T = sum_n q_n(x_Q) Q^n with x_Q dual to Q
};

/// T = sum_n q_n(R) Q^n with R given by the form.
struct OperatorExpansion {
    std::vector<Polynomial> q_polys;
    std::string base;
    ExpansionForm form = ExpansionForm::multiplication;

    std::size_t order() const noexcept { return q_polys.size() - 1; }
    /// Coefficient of x^i lambda^n in the indicator P(x; lambda) = sum_n q_n(x) lambda^n.
    Rational indicator(std::size_t n, std::size_t i) const { return q_polys.at(n)[i]; }
};

namespace detail {

/// Q^n x^m for n = 0..m, reused by expansion and reconstruction.
inline std::vector<Polynomial> lowering_orbit(const GradedOperator& q, std::size_t m) {
    std::vector<Polynomial> orbit{Polynomial::monomial(m)};
    for (std::size_t n = 1; n <= m; ++n) orbit.push_back(q.apply(orbit.back()));
    return orbit;
}

/// q(x_Q) p_k written out in the basic sequence; x_Q^i p_k = w(k, i) p_(k+i)
/// with the same weights as Xpsi^i x^k.
inline Polynomial apply_in_dual(const Polynomial& q, const BasicSequence& basic, std::size_t k) {
    Polynomial r;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].is_zero()) continue;
        if (k + i > basic.n_max())
            throw Error(ErrorCode::cap_exhausted, "basic sequence too short for the dual expansion");
        r += basic[k + i] * (q[i] * raising_weight(basic.psi, k, i));
    }
    return r;
}

} // namespace detail

/// Unique expansion T = sum_n q_n(x) Q^n for a degree-lowering Q. Applying
/// both sides to x^m, Q^m x^m is a nonzero constant and Q^n x^m vanishes for
/// n > m, so q_m is the residual of T x^m divided by that constant.
inline OperatorExpansion expand_in_q(const GradedOperator& t, const GradedOperator& q, std::string base = "Q") {
    const std::size_t order = std::min(t.effective_cap(), q.effective_cap());
    detail::require_degree_lowering(q, order);
    OperatorExpansion e{{}, std::move(base), ExpansionForm::multiplication};
    for (std::size_t m = 0; m <= order; ++m) {
        const auto orbit = detail::lowering_orbit(q, m);
        Polynomial residual = t.image(m);
        for (std::size_t n = 0; n < m; ++n) residual -= e.q_polys[n] * orbit[n];
        e.q_polys.push_back(residual / orbit[m][0]);
    }
    return e;
}

/// Expansion T = sum_n q_n(x_Q) Q^n against the dual pair of a basic
/// sequence. Uses Q^n p_m = n_psi-falling-factorial * p_(m-n) and
/// x_Q^j 1 = (j! / j_psi!) p_j. The basic sequence must reach degree
/// order + shift_bound(T).
inline OperatorExpansion expand_in_q_dual(const GradedOperator& t, const BasicSequence& basic, std::size_t order,
                                          std::string base = "Q") {
    if (order > t.effective_cap()) throw Error(ErrorCode::cap_exhausted, "operator known only to a smaller degree");
    const PsiSequence& psi = basic.psi;
    OperatorExpansion e{{}, std::move(base), ExpansionForm::dual};
    for (std::size_t m = 0; m <= order; ++m) {
        Polynomial residual = t.apply(basic[m]);
        for (std::size_t n = 0; n < m; ++n)
            residual -= detail::apply_in_dual(e.q_polys[n], basic, m - n) * psi.falling_factorial(m, n);
        residual /= psi.factorial(m);
        // residual = q_m(x_Q) 1 = sum_j c_j (j! / j_psi!) p_j
        const auto a = detail::decompose(residual, std::vector<Polynomial>(basic.polys.begin(), basic.polys.end()));
        std::vector<Rational> c(a.size());
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!a[j].is_zero()) c[j] = a[j] * psi.factorial(j) / factorial(static_cast<long>(j));
        e.q_polys.emplace_back(std::move(c));
    }
    return e;
}

/// sum_n q_n(x) Q^n as an operator, through the expansion order.
inline GradedOperator reconstruct(const OperatorExpansion& e, const GradedOperator& q) {
    if (e.form != ExpansionForm::multiplication)
        throw Error(ErrorCode::domain, "dual-form expansions are reconstructed with the dual operator");
    return GradedOperator::from_function(e.order(), [&](std::size_t m) {
        const auto orbit = detail::lowering_orbit(q, m);
        Polynomial r;
        for (std::size_t n = 0; n <= m; ++n) r += e.q_polys[n] * orbit[n];
        return r;
    });
}

/// sum_n q_n(x_Q) Q^n with x_Q supplied as an operator; q_n(x_Q) is applied
/// by Horner's rule.
inline GradedOperator reconstruct(const OperatorExpansion& e, const GradedOperator& q, const GradedOperator& x_q) {
    if (e.form != ExpansionForm::dual) return reconstruct(e, q);
    std::vector<Polynomial> images;
    for (std::size_t m = 0; m <= e.order(); ++m) {
        const auto orbit = detail::lowering_orbit(q, m);
        Polynomial r;
        bool ok = true;
        for (std::size_t n = 0; n <= m && ok; ++n) {
            const Polynomial& c = e.q_polys[n];
            Polynomial acc;
            for (std::size_t i = c.size(); i-- > 0;) {
                if (!x_q.can_apply(acc)) {
                    ok = false;
                    break;
                }
                acc = x_q.apply(acc) + orbit[n] * c[i];
            }
            r += acc;
        }
        if (!ok) break;
        images.push_back(std::move(r));
    }
    if (images.empty()) throw Error(ErrorCode::cap_exhausted, "dual operator too short to reconstruct");
    return {std::move(images), e.order()};
}

/// sum_n a_n Q^n for scalar coefficients.
inline GradedOperator series_in_operator(const TruncatedSeries& a, const GradedOperator& q) {
    const std::size_t cap = std::min(a.cap(), q.effective_cap());
    return GradedOperator::from_function(cap, [&](std::size_t m) {
        const auto orbit = detail::lowering_orbit(q, m);
        Polynomial r;
        for (std::size_t n = 0; n <= m; ++n)
            if (!a[n].is_zero()) r += orbit[n] * a[n];
        return r;
    });
}

struct IndicatorReport {
    bool ok = false;
    std::vector<Polynomial> indicator;  ///< q_n(x) from the expansion
    std::vector<Polynomial> conjugated; ///< lambda-coefficients of Phi^(-1) T Phi
    std::vector<bool> sample_ok;        ///< agreement at each lambda sample
};

/// Checks P(x; lambda) = Phi^(-1) T Phi for the eigenfunction Phi of Q. Both
/// sides are series in lambda with polynomial coefficients in x; Phi has
/// lambda-constant term 1, so the reciprocal exists order by order.
inline IndicatorReport conjugate_indicator_check(const GradedOperator& t, const GradedOperator& q,
                                                 const std::vector<Rational>& lambda_samples) {
    const OperatorExpansion e = expand_in_q(t, q);
    const std::size_t order = e.order();
    const Eigenfunction phi = eigenfunction(q, order);
    if (phi.table[0] != Polynomial(1)) throw Error(ErrorCode::domain, "eigenfunction with Phi(0) != 1");

    std::vector<Polynomial> t_phi, inv(order + 1);
    for (const auto& p : phi.table) t_phi.push_back(t.apply(p));
    inv[0] = Polynomial(1);
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t k = 1; k <= n; ++k) inv[n] -= phi.table[k] * inv[n - k];

    IndicatorReport rep;
    rep.indicator = e.q_polys;
    rep.conjugated.resize(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        for (std::size_t k = 0; k <= n; ++k) rep.conjugated[n] += inv[k] * t_phi[n - k];
    rep.ok = rep.conjugated == rep.indicator;

    for (const auto& lambda : lambda_samples) {
        Polynomial lhs, rhs;
        Rational ln(1);
        for (std::size_t n = 0; n <= order; ++n) {
            lhs += rep.conjugated[n] * ln;
            rhs += rep.indicator[n] * ln;
            ln *= lambda;
        }
        rep.sample_ok.push_back(lhs == rhs);
        rep.ok = rep.ok && rep.sample_ok.back();
    }
    return rep;
}

/// a_n = [T p_n](0) / n_psi! so that T = sum_n a_n Q^n, for T shift-invariant.
inline TruncatedSeries first_expansion_coeffs(const GradedOperator& t, const DeltaOperator& qd) {
    if (!is_shift_invariant(t, qd.psi))
        throw Error(ErrorCode::not_shift_invariant, "first expansion theorem needs a shift-invariant operator");
    const std::size_t order = std::min(t.effective_cap(), qd.op.effective_cap());
    const BasicSequence basic = basic_sequence_solve(qd.op, qd.psi, order);
    TruncatedSeries a(order);
    for (std::size_t n = 0; n <= order; ++n) a[n] = t.apply(basic[n])[0] / qd.psi.factorial(n);
    return a;
}

struct PsiSeriesDetection {
    bool is_series = false;
    /// b_(1,1); the operator divided by this scalar is the normalized one.
    Rational scale{1};
    /// Weights n_psi = b_(n,1) / b_(1,1).
    std::optional<PsiSequence> psi;
    /// t + sum_(k>=2) q_k t^k with the normalized operator = that series in Dpsi.
    std::optional<TruncatedSeries> q_coeffs;
    /// First (n, k) violating b_(n,k) = (n k)_psi b_(k,k).
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Decides whether a degree-lowering Q is a power series in some Dpsi, from
/// Q x^n = sum_k b_(n,k) x^(n-k).
inline PsiSeriesDetection detect_psi_series(const GradedOperator& q) {
    const std::size_t cap = q.effective_cap();
    detail::require_degree_lowering(q, cap);
    if (cap < 1) throw Error(ErrorCode::cap_exhausted, "detection needs cap >= 1");

    PsiSeriesDetection d;
    d.scale = q.image(1)[0];
    auto b = [&](std::size_t n, std::size_t k) { return q.image(n)[n - k] / d.scale; };

    std::vector<Rational> weights;
    for (std::size_t n = 1; n <= cap; ++n) weights.push_back(b(n, 1));
    PsiSequence psi = PsiSequence::custom(weights);

    for (std::size_t n = 1; n <= cap && !d.witness; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            if (b(n, k) != psi.binomial(n, k) * b(k, k)) {
                d.witness = std::make_pair(n, k);
                break;
            }
    if (d.witness) return d;

    TruncatedSeries c(cap);
    for (std::size_t k = 1; k <= cap; ++k) c[k] = b(k, k) / psi.factorial(k);
    d.is_series = true;
    d.psi = std::move(psi);
    d.q_coeffs = std::move(c);
    return d;
}

} // namespace psi

#endif // PSI_UMBRAL_EXPANSION_HPP
