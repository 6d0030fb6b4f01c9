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

#ifndef PSI_UMBRAL_SPECIAL_FUNCTIONS_HPP
#define PSI_UMBRAL_SPECIAL_FUNCTIONS_HPP

#include <cstddef>

#include "operators.hpp"

namespace psi {

/// exp_psi{y} = sum_k y^k / k_psi!.
inline TruncatedSeries exp_psi_series(const PsiSequence& psi, std::size_t cap) {
    const TruncatedSeries s = exp_psi_coefficients(psi, Rational(1), cap);
    if (s.cap() < cap) throw Error(ErrorCode::cap_exhausted, "psi sequence shorter than the requested cap");
    return s;
}

/// m-th order psi-hyperbolic function h_j: the terms of exp_psi whose degree
/// is j mod m. This equals the average (1/m) sum_k w^(-kj) exp_psi{w^k a}
/// over the m-th roots of unity w, without leaving the rationals.
inline TruncatedSeries psi_hyperbolic(const PsiSequence& psi, std::size_t m, std::size_t j, std::size_t cap) {
    if (m < 1) throw Error(ErrorCode::validation, "order m must be at least 1");
    if (j >= m) throw Error(ErrorCode::validation, "residue j must satisfy 0 <= j < m");
    TruncatedSeries s = exp_psi_series(psi, cap);
    for (std::size_t n = 0; n <= cap; ++n)
        if (n % m != j) s[n] = Rational(0);
    return s;
}

inline TruncatedSeries cosh_psi(const PsiSequence& psi, std::size_t cap) { return psi_hyperbolic(psi, 2, 0, cap); }
inline TruncatedSeries sinh_psi(const PsiSequence& psi, std::size_t cap) { return psi_hyperbolic(psi, 2, 1, cap); }

/// h_0 - h_2 of order 4.
inline TruncatedSeries cos_psi(const PsiSequence& psi, std::size_t cap) {
    return psi_hyperbolic(psi, 4, 0, cap) - psi_hyperbolic(psi, 4, 2, cap);
}
/// h_1 - h_3 of order 4.
inline TruncatedSeries sin_psi(const PsiSequence& psi, std::size_t cap) {
    return psi_hyperbolic(psi, 4, 1, cap) - psi_hyperbolic(psi, 4, 3, cap);
}

} // namespace psi

#endif // PSI_UMBRAL_SPECIAL_FUNCTIONS_HPP
