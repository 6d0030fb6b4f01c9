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

#ifndef PSI_UMBRAL_INTEGRATION_HPP
#define PSI_UMBRAL_INTEGRATION_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "operators.hpp"

namespace psi {

namespace detail {

template <class WeightOf>
Polynomial integrate_monomialwise(const Polynomial& p, WeightOf&& weight_of) {
    std::vector<Rational> out(p.size() + 1);
    for (std::size_t n = 0; n < p.size(); ++n)
        if (!p[n].is_zero()) out[n + 1] = p[n] * weight_of(n);
    return Polynomial(std::move(out));
}

} // namespace detail

/// Jackson integral. On monomials (1 - q) x sum_k q^k (q^k x)^n sums to
/// x^(n+1) (1 - q) / (1 - q^(n+1)) = x^(n+1) / (n+1)_q, which is used for
/// every rational q where the divisor is nonzero.
inline Polynomial q_integral(const Rational& q, const Polynomial& p) {
    return detail::integrate_monomialwise(p, [&](std::size_t n) {
        const Rational den = Rational(1) - q.pow(static_cast<long>(n + 1));
        if (den.is_zero() || q.is_one())
            throw Error(ErrorCode::division_by_zero,
                        "(" + std::to_string(n + 1) + ")_q vanishes or is undefined for q = " + q.str());
        return (Rational(1) - q) / den;
    });
}

/// x^n -> x^(n+1) / R(q^(n+1)).
inline Polynomial r_integral(const RationalFunction& r, const Rational& q, const Polynomial& p) {
    return detail::integrate_monomialwise(p, [&](std::size_t n) {
        const auto v = r.at(q.pow(static_cast<long>(n + 1)));
        if (!v || v->is_zero())
            throw Error(ErrorCode::division_by_zero, "R(q^" + std::to_string(n + 1) + ") is zero or a pole");
        return v->inverse();
    });
}

/// x^n -> x^(n+1) / (n+1)_psi, a right inverse of Dpsi.
inline Polynomial psi_integral(const PsiSequence& psi, const Polynomial& p) {
    return detail::integrate_monomialwise(p, [&](std::size_t n) { return psi.n(n + 1).inverse(); });
}

inline GradedOperator psi_integral_operator(const PsiSequence& psi, std::size_t cap) {
    const std::size_t m = detail::psi_range(psi, cap, 1);
    return GradedOperator::from_function(m, [&](std::size_t n) { return psi_integral(psi, Polynomial::monomial(n)); })
        .restricted(cap);
}

} // namespace psi

#endif // PSI_UMBRAL_INTEGRATION_HPP
