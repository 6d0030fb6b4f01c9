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

#ifndef PSI_UMBRAL_UMBRAL_HPP
#define PSI_UMBRAL_UMBRAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "operators.hpp"

namespace psi {

/// A Dpsi-delta operator Q = Dpsi o S together with its Dpsi power series.
struct DeltaOperator {
    GradedOperator op;
    PsiSequence psi;
    GradedOperator s;
    /// q(t) with Q = q(Dpsi); q(0) = 0, q'(0) != 0.
    TruncatedSeries indicator;
};

/// Validates that Q is a Dpsi-delta operator and factors out S.
inline DeltaOperator make_delta_operator(const GradedOperator& q, const PsiSequence& psi) {
    if (!is_shift_invariant(q, psi))
        throw Error(ErrorCode::not_shift_invariant, "delta operator must be shift-invariant for psi = " + psi.name());
    if (q.effective_cap() < 1) throw Error(ErrorCode::cap_exhausted, "delta operator needs cap >= 1");
    const Polynomial& qx = q.image(1);
    if (qx.degree() != 0) throw Error(ErrorCode::domain, "delta operator must send x to a nonzero constant");
    TruncatedSeries ind = dpsi_coefficients(q, psi);
    TruncatedSeries s_coeffs(ind.cap() - 1);
    for (std::size_t k = 0; k + 1 <= ind.cap(); ++k) s_coeffs[k] = ind[k + 1];
    GradedOperator s = dpsi_series(s_coeffs, psi, q.cap());
    return {q, psi, std::move(s), std::move(ind)};
}

/// Delta operator given by its Dpsi power series q(t).
inline DeltaOperator delta_from_series(const TruncatedSeries& q, const PsiSequence& psi, std::size_t cap) {
    return make_delta_operator(dpsi_series(q, psi, cap), psi);
}

/// Polynomial sequence p_0..p_n with p_0 = 1, p_n(0) = 0 and Q p_n = n_psi p_(n-1).
struct BasicSequence {
    std::vector<Polynomial> polys;
    PsiSequence psi;

    std::size_t n_max() const noexcept { return polys.size() - 1; }
    const Polynomial& operator[](std::size_t n) const { return polys.at(n); }
};

namespace detail {

/// Throws unless Q(1) = 0 and deg Q(x^n) = n - 1 for 1 <= n <= n_max.
inline void require_degree_lowering(const GradedOperator& q, std::size_t n_max) {
    if (n_max > q.effective_cap())
        throw Error(ErrorCode::cap_exhausted, "operator known only to degree " + std::to_string(q.effective_cap()) +
                                                  ", need " + std::to_string(n_max));
    if (!q.image(0).is_zero()) throw Error(ErrorCode::not_degree_lowering, "operator does not annihilate constants");
    for (std::size_t n = 1; n <= n_max; ++n)
        if (q.image(n).degree() != static_cast<long>(n) - 1)
            throw Error(ErrorCode::not_degree_lowering,
                        "operator does not lower the degree of x^" + std::to_string(n) + " by exactly one");
}

/// The unique p with p(0) = 0 and deg p <= n solving Q p = target, for a
/// degree-lowering Q and deg target <= n - 1. Back-substitution from the top
/// coefficient down: [x^m] Q p involves only c_(m+1) .. c_n.
inline Polynomial solve_preimage(const GradedOperator& q, const Polynomial& target, std::size_t n) {
    std::vector<Rational> c(n + 1);
    for (std::size_t m = n; m-- > 0;) {
        Rational rhs = target[m];
        for (std::size_t j = m + 2; j <= n; ++j)
            if (!c[j].is_zero()) rhs -= c[j] * q.image(j)[m];
        const Rational pivot = q.image(m + 1)[m];
        if (pivot.is_zero()) throw Error(ErrorCode::not_degree_lowering, "singular triangular system");
        c[m + 1] = rhs / pivot;
    }
    return Polynomial(std::move(c));
}

/// Coefficients a_j with p = sum_j a_j basis[j]; basis[j] must have degree j.
inline std::vector<Rational> decompose(Polynomial p, const std::vector<Polynomial>& basis) {
    if (p.degree() >= static_cast<long>(basis.size()))
        throw Error(ErrorCode::cap_exhausted, "polynomial degree exceeds the basis");
    std::vector<Rational> a(basis.size());
    while (!p.is_zero()) {
        const auto d = static_cast<std::size_t>(p.degree());
        a[d] = p.leading() / basis[d].leading();
        p -= basis[d] * a[d];
    }
    return a;
}

} // namespace detail

/// Basic sequence of any degree-lowering Q by triangular solve, degree by degree.
inline BasicSequence basic_sequence_solve(const GradedOperator& q, const PsiSequence& psi, std::size_t n_max) {
    detail::require_degree_lowering(q, n_max);
    std::vector<Polynomial> polys{Polynomial(1)};
    for (std::size_t n = 1; n <= n_max; ++n)
        polys.push_back(detail::solve_preimage(q, polys.back() * psi.n(n), n));
    return {std::move(polys), psi};
}

/// The four closed forms for the basic sequence of a delta operator
/// Q = Dpsi S, with ' the Pincherle derivative:
///   1: p_n = Q' S^(-n-1) x^n
///   2: p_n = S^(-n) x^n - (n_psi / n) (S^(-n))' x^(n-1)
///   3: p_n = (n_psi / n) Xpsi S^(-n) x^(n-1)
///   4: p_n = (n_psi / n) Xpsi (Q')^(-1) p_(n-1)
inline BasicSequence basic_sequence_rodrigues(const DeltaOperator& qd, std::size_t n_max, int formula) {
    if (formula < 1 || formula > 4) throw Error(ErrorCode::validation, "formula must be 1, 2, 3 or 4");
    const PsiSequence& psi = qd.psi;
    const GradedOperator s_inv = op_invert_shift_invariant(qd.s, psi);
    const GradedOperator xpsi = build_Xpsi(psi, qd.op.cap());
    std::vector<Polynomial> polys{Polynomial(1)};

    auto weight = [&](std::size_t n) { return psi.n(n) / Rational(static_cast<long>(n)); };

    if (formula == 4) {
        const GradedOperator dq = pincherle_derivative(qd.op, psi);
        const GradedOperator dq_inv = op_invert_shift_invariant(dq, psi);
        for (std::size_t n = 1; n <= n_max; ++n)
            polys.push_back(xpsi.apply(dq_inv.apply(polys.back())) * weight(n));
        return {std::move(polys), psi};
    }

    const GradedOperator dq = formula == 1 ? pincherle_derivative(qd.op, psi) : GradedOperator::zero(0);
    GradedOperator s_pow = s_inv; // S^(-n)
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (n > 1) s_pow = op_compose(s_inv, s_pow);
        const Polynomial xn = Polynomial::monomial(n);
        const Polynomial xn1 = Polynomial::monomial(n - 1);
        switch (formula) {
            case 1: polys.push_back(dq.apply(s_inv.apply(s_pow.apply(xn)))); break;
            case 2:
                polys.push_back(s_pow.apply(xn) - pincherle_derivative(s_pow, psi).apply(xn1) * weight(n));
                break;
            default: polys.push_back(xpsi.apply(s_pow.apply(xn1)) * weight(n)); break;
        }
    }
    return {std::move(polys), psi};
}

/// E^y(Dpsi) p, the psi-translate p(x +_psi y).
inline Polynomial translate(const PsiSequence& psi, const Rational& y, const Polynomial& p) {
    const std::size_t deg = p.is_zero() ? 0 : static_cast<std::size_t>(p.degree());
    return build_shift(psi, y, deg).apply(p);
}

/// The operator x_Q with x_Q p_n = (n + 1) / (n + 1)_psi p_(n+1), rewritten
/// on monomials. Known on degrees 0 .. n_max - 1.
inline GradedOperator dual_operator(const BasicSequence& basic) {
    if (basic.n_max() < 1) throw Error(ErrorCode::cap_exhausted, "dual operator needs a basic sequence of length >= 2");
    const std::size_t cap = basic.n_max() - 1;
    std::vector<Polynomial> raised;
    for (std::size_t j = 0; j <= cap; ++j)
        raised.push_back(basic[j + 1] * (Rational(static_cast<long>(j + 1)) / basic.psi.n(j + 1)));
    return GradedOperator::from_function(cap, [&](std::size_t m) {
        const auto a = detail::decompose(Polynomial::monomial(m), basic.polys);
        Polynomial r;
        for (std::size_t j = 0; j <= m; ++j)
            if (!a[j].is_zero()) r += raised[j] * a[j];
        return r;
    });
}

/// s_n = S^(-1) p_n for the basic sequence p_n of Qd and an invertible
/// shift-invariant S.
inline std::vector<Polynomial> sheffer_sequence(const DeltaOperator& qd, const GradedOperator& s, std::size_t n_max) {
    const BasicSequence basic = basic_sequence_solve(qd.op, qd.psi, n_max);
    const GradedOperator s_inv = op_invert_shift_invariant(s, qd.psi);
    std::vector<Polynomial> out;
    for (const auto& p : basic.polys) out.push_back(s_inv.apply(p));
    return out;
}

/// Formal eigenfunction Phi(x; lambda) = sum_n lambda^n phi_n(x) of a
/// degree-lowering Q: phi_0 = 1, phi_n(0) = 0 and Q phi_n = phi_(n-1), which
/// is Q Phi = lambda Phi order by order in lambda. For a delta operator with
/// basic sequence p_n one has phi_n = p_n / n_psi!.
struct Eigenfunction {
    std::vector<Polynomial> table; // phi_0 .. phi_cap

    std::size_t cap() const noexcept { return table.size() - 1; }

    /// sum_{n <= cap} lambda^n phi_n(x) as a series in x. Exact through the
    /// cap when Q sends monomials to monomials; otherwise it is the truncation
    /// at order cap in lambda.
    TruncatedSeries at(const Rational& lambda) const {
        Polynomial acc;
        Rational ln(1);
        for (const auto& phi : table) {
            acc += phi * ln;
            ln *= lambda;
        }
        return {acc, cap()};
    }
};

inline Eigenfunction eigenfunction(const GradedOperator& q, std::size_t cap) {
    detail::require_degree_lowering(q, cap);
    std::vector<Polynomial> table{Polynomial(1)};
    for (std::size_t n = 1; n <= cap; ++n) table.push_back(detail::solve_preimage(q, table.back(), n));
    return {std::move(table)};
}

inline TruncatedSeries eigenfunction_series(const GradedOperator& q, const Rational& lambda, std::size_t cap) {
    return eigenfunction(q, cap).at(lambda);
}

/// Coefficients of z^0..z^order in exp_psi{x r(z)} = sum_k x^k r(z)^k / k_psi!,
/// each a polynomial in x. r must have zero constant term.
inline std::vector<Polynomial> exp_psi_composed(const PsiSequence& psi, const TruncatedSeries& r, std::size_t order) {
    if (!r[0].is_zero()) throw Error(ErrorCode::composition_undefined, "inner series must have zero constant term");
    if (order > r.cap()) throw Error(ErrorCode::cap_exhausted, "inner series known only to order " + std::to_string(r.cap()));
    const TruncatedSeries inner = r.with_cap(order);
    std::vector<Polynomial> out(order + 1);
    TruncatedSeries rk(order);
    rk[0] = Rational(1);
    for (std::size_t k = 0; k <= order; ++k) {
        const Rational w = psi.factorial(k).inverse();
        for (std::size_t n = 0; n <= order; ++n)
            if (!rk[n].is_zero()) out[n] += Polynomial::monomial(k, rk[n] * w);
        rk = rk * inner;
    }
    return out;
}

} // namespace psi

#endif // PSI_UMBRAL_UMBRAL_HPP
