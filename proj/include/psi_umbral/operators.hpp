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

#ifndef PSI_UMBRAL_OPERATORS_HPP
#define PSI_UMBRAL_OPERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "graded_operator.hpp"
#include "psi_sequence.hpp"
#include "series.hpp"

namespace psi {

namespace detail {

/// Largest m <= cap such that psi provides the weights 1..m + extra. A real
/// admissibility violation inside that range is an error; running past the
/// materialized range only shortens the operator.
inline std::size_t psi_range(const PsiSequence& psi, std::size_t cap, std::size_t extra) {
    if (const auto& v = psi.violation(); v && v->index <= cap + extra)
        throw Error(ErrorCode::inadmissible, "psi sequence " + psi.name() + " is not admissible: " + v->reason);
    if (psi.cap() < extra) throw Error(ErrorCode::cap_exhausted, "psi sequence " + psi.name() + " is too short");
    return std::min(cap, psi.cap() - extra);
}

} // namespace detail

/// d/dx.
inline GradedOperator build_D(std::size_t cap) {
    return GradedOperator::from_function(cap, [](std::size_t n) { return Polynomial::monomial(n).derivative(); });
}

/// Multiplication by x.
inline GradedOperator build_X(std::size_t cap) {
    return GradedOperator::from_function(cap, [](std::size_t n) { return Polynomial::monomial(n + 1); });
}

/// Multiplication by a fixed polynomial.
inline GradedOperator multiplication_operator(const Polynomial& p, std::size_t cap) {
    return GradedOperator::from_function(cap, [&](std::size_t n) { return p.shifted_up(n); });
}

/// Dilation f(x) -> f(qx).
inline GradedOperator build_dilation(const Rational& q, std::size_t cap) {
    return GradedOperator::from_function(cap, [&](std::size_t n) { return Polynomial::monomial(n, q.pow(static_cast<long>(n))); });
}

/// Divided difference (f(x) - f(0)) / x.
inline GradedOperator build_D0(std::size_t cap) {
    return GradedOperator::from_function(cap, [](std::size_t n) { return n == 0 ? Polynomial() : Polynomial::monomial(n - 1); });
}

/// x^n -> n_psi x^(n-1).
inline GradedOperator build_Dpsi(const PsiSequence& psi, std::size_t cap) {
    const std::size_t m = detail::psi_range(psi, cap, 0);
    std::vector<Polynomial> images;
    for (std::size_t n = 0; n <= m; ++n) images.push_back(n == 0 ? Polynomial() : Polynomial::monomial(n - 1, psi.n(n)));
    return {std::move(images), cap};
}

/// Jackson derivative (f(x) - f(qx)) / ((1 - q) x).
inline GradedOperator build_Dq(const Rational& q, std::size_t cap) {
    return build_Dpsi(PsiSequence::jackson(q, cap), cap);
}

/// x^n -> (n + 1) / (n + 1)_psi x^(n+1).
inline GradedOperator build_Xpsi(const PsiSequence& psi, std::size_t cap) {
    const std::size_t m = detail::psi_range(psi, cap, 1);
    std::vector<Polynomial> images;
    for (std::size_t n = 0; n <= m; ++n)
        images.push_back(Polynomial::monomial(n + 1, Rational(static_cast<long>(n + 1)) / psi.n(n + 1)));
    return {std::move(images), cap};
}

/// Xpsi^i x^k = w x^(k+i) with w = (k+i)! k_psi! / (k! (k+i)_psi!).
inline Rational raising_weight(const PsiSequence& psi, std::size_t k, std::size_t i) {
    return factorial(static_cast<long>(k + i)) * psi.factorial(k) /
           (factorial(static_cast<long>(k)) * psi.factorial(k + i));
}

/// x^n -> (n + 1)_psi x^n, so that the psi-derivative factors through D0.
inline GradedOperator build_Nhat(const PsiSequence& psi, std::size_t cap) {
    const std::size_t m = detail::psi_range(psi, cap, 1);
    std::vector<Polynomial> images;
    for (std::size_t n = 0; n <= m; ++n) images.push_back(Polynomial::monomial(n, psi.n(n + 1)));
    return {std::move(images), cap};
}

/// sum_k c_k Dpsi^k. On x^n only k <= n contributes, so the image is exact
/// as long as the series knows c_0..c_n.
inline GradedOperator dpsi_series(const TruncatedSeries& c, const PsiSequence& psi, std::size_t cap) {
    const std::size_t m = std::min(detail::psi_range(psi, cap, 0), c.cap());
    std::vector<Polynomial> images;
    for (std::size_t n = 0; n <= m; ++n) {
        std::vector<Rational> cs(n + 1);
        for (std::size_t k = 0; k <= n; ++k)
            if (!c[k].is_zero()) cs[n - k] = c[k] * psi.falling_factorial(n, k);
        images.emplace_back(std::move(cs));
    }
    return {std::move(images), cap};
}

/// The psi-exponential coefficients y^k / k_psi! through the cap.
inline TruncatedSeries exp_psi_coefficients(const PsiSequence& psi, const Rational& y, std::size_t cap) {
    const std::size_t m = detail::psi_range(psi, cap, 0);
    TruncatedSeries s(m);
    Rational yk(1);
    for (std::size_t k = 0; k <= m; ++k) {
        s[k] = yk / psi.factorial(k);
        yk *= y;
    }
    return s;
}

/// Generalized translation E^y(Dpsi) = sum_k y^k Dpsi^k / k_psi!.
inline GradedOperator build_shift(const PsiSequence& psi, const Rational& y, std::size_t cap) {
    return dpsi_series(exp_psi_coefficients(psi, y, cap), psi, cap);
}

/// E^1(Dpsi) - id.
inline GradedOperator build_Delta(const PsiSequence& psi, std::size_t cap) {
    TruncatedSeries c = exp_psi_coefficients(psi, Rational(1), cap);
    c[0] = Rational(0);
    return dpsi_series(c, psi, cap);
}

/// Coefficients s_k of T = sum_k s_k Dpsi^k, read off as [T x^k](0) / k_psi!.
/// Only meaningful when T is Dpsi-shift-invariant.
inline TruncatedSeries dpsi_coefficients(const GradedOperator& t, const PsiSequence& psi) {
    const std::size_t m = detail::psi_range(psi, t.effective_cap(), 0);
    TruncatedSeries s(m);
    for (std::size_t k = 0; k <= m; ++k) s[k] = t.image(k)[0] / psi.factorial(k);
    return s;
}

/// [T, Dpsi] = 0 on every monomial where both products are known. Vanishing
/// of this single commutator is equivalent to commuting with every E^a(Dpsi).
inline bool is_shift_invariant(const GradedOperator& t, const PsiSequence& psi) {
    const long raise = std::max(0L, t.shift_bound());
    const GradedOperator d = build_Dpsi(psi, t.cap() + static_cast<std::size_t>(raise) + 1);
    return op_commutator(t, d).is_zero();
}

/// T' = [T, Xpsi]. Defined on every graded operator; the result is
/// shift-invariant when T is.
inline GradedOperator pincherle_derivative(const GradedOperator& t, const PsiSequence& psi) {
    const long raise = std::max(0L, t.shift_bound());
    const GradedOperator x = build_Xpsi(psi, t.cap() + static_cast<std::size_t>(raise) + 1);
    return op_commutator(t, x).restricted(t.cap());
}

/// Inverse of a Dpsi-shift-invariant operator S with S(1) != 0, obtained by
/// inverting its Dpsi power series.
inline GradedOperator op_invert_shift_invariant(const GradedOperator& s, const PsiSequence& psi) {
    if (!is_shift_invariant(s, psi))
        throw Error(ErrorCode::not_shift_invariant, "operator is not shift-invariant for psi = " + psi.name());
    const TruncatedSeries c = dpsi_coefficients(s, psi);
    if (c[0].is_zero()) throw Error(ErrorCode::not_invertible, "shift-invariant operator with S(1) = 0 is not invertible");
    return dpsi_series(c.reciprocal(), psi, s.cap());
}

} // namespace psi

#endif // PSI_UMBRAL_OPERATORS_HPP
