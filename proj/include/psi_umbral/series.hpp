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

#ifndef PSI_UMBRAL_SERIES_HPP
#define PSI_UMBRAL_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace psi {

/// Formal power series known exactly through degree cap.
///
/// Every binary operation truncates to the smaller cap of its operands, so a
/// result never reports coefficients that were not determined by its inputs.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}
    explicit TruncatedSeries(std::size_t cap) : coeffs_(cap + 1) {}
    TruncatedSeries(std::vector<Rational> cs, std::size_t cap) : coeffs_(std::move(cs)) { coeffs_.resize(cap + 1); }
    TruncatedSeries(const Polynomial& p, std::size_t cap) : coeffs_(cap + 1) {
        for (std::size_t i = 0; i <= cap; ++i) coeffs_[i] = p[i];
    }

    std::size_t cap() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational& operator[](std::size_t i) { return coeffs_.at(i); }

    Polynomial to_polynomial() const { return Polynomial(coeffs_); }
    TruncatedSeries with_cap(std::size_t cap) const { return TruncatedSeries(coeffs_, cap > this->cap() ? this->cap() : cap); }

    TruncatedSeries operator-() const {
        TruncatedSeries r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.cap(), b.cap()));
        for (std::size_t i = 0; i <= r.cap(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c) {
        TruncatedSeries r(a);
        for (auto& v : r.coeffs_) v *= c;
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t cap = std::min(a.cap(), b.cap());
        TruncatedSeries r(cap);
        for (std::size_t i = 0; i <= cap; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= cap; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    TruncatedSeries reciprocal() const {
        if (coeffs_[0].is_zero())
            throw Error(ErrorCode::not_invertible, "series with zero constant term has no reciprocal");
        TruncatedSeries r(cap());
        const Rational inv0 = coeffs_[0].inverse();
        r.coeffs_[0] = inv0;
        for (std::size_t n = 1; n <= cap(); ++n) {
            Rational acc(0);
            for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
            r.coeffs_[n] = -acc * inv0;
        }
        return r;
    }

    /// Equality of the coefficients both operands know.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t cap = std::min(a.cap(), b.cap());
        for (std::size_t i = 0; i <= cap; ++i)
            if (a.coeffs_[i] != b.coeffs_[i]) return false;
        return true;
    }

    std::string str(const std::string& var = "z") const {
        return to_polynomial().str(var) + " + O(" + var + "^" + std::to_string(cap() + 1) + ")";
    }

private:
    std::vector<Rational> coeffs_;
};

/// f(g(z)); g must have a zero constant term.
inline TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (!g[0].is_zero())
        throw Error(ErrorCode::composition_undefined, "inner series of a composition must have zero constant term");
    const std::size_t cap = std::min(f.cap(), g.cap());
    TruncatedSeries inner = g.with_cap(cap);
    TruncatedSeries r(cap);
    for (std::size_t k = cap + 1; k-- > 0;) {
        r = r * inner;
        r[0] += f[k];
    }
    return r;
}

/// Compositional inverse g with f(g(z)) = z. Coefficients of g are fixed one
/// degree at a time: with g correct below degree n, [z^n] f(g) is linear in
/// g_n with slope f'(0).
inline TruncatedSeries series_reversion(const TruncatedSeries& f) {
    if (!f[0].is_zero()) throw Error(ErrorCode::not_invertible, "reversion needs f(0) = 0");
    if (f.cap() < 1 || f[1].is_zero()) throw Error(ErrorCode::not_invertible, "reversion needs a nonzero linear coefficient");
    const std::size_t cap = f.cap();
    TruncatedSeries g(cap);
    const Rational slope_inv = f[1].inverse();
    g[1] = slope_inv;
    for (std::size_t n = 2; n <= cap; ++n) {
        const TruncatedSeries fg = series_compose(f.with_cap(n), g.with_cap(n));
        g[n] = -fg[n] * slope_inv;
    }
    return g;
}

/// sum c_k z^k / k! through the cap; the classical exponential series.
inline TruncatedSeries exp_series(std::size_t cap) {
    TruncatedSeries r(cap);
    Rational f(1);
    for (std::size_t k = 0; k <= cap; ++k) {
        if (k > 0) f *= Rational(static_cast<long>(k));
        r[k] = f.inverse();
    }
    return r;
}

} // namespace psi

#endif // PSI_UMBRAL_SERIES_HPP
