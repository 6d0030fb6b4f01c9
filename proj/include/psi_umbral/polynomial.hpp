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

#ifndef PSI_UMBRAL_POLYNOMIAL_HPP
#define PSI_UMBRAL_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace psi {

/// Dense univariate polynomial over the rationals, coefficient i belongs to x^i.
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector.
class Polynomial {
public:
    /// Degree of the zero polynomial.
    static constexpr long minus_infinity = std::numeric_limits<long>::min();

    Polynomial() = default;
    Polynomial(Rational c) { // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    Polynomial(long c) : Polynomial(Rational(c)) {} // NOLINT(google-explicit-constructor)
    Polynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { normalize(); }
    explicit Polynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { normalize(); }

    static Polynomial monomial(std::size_t n, Rational c = Rational(1)) {
        if (c.is_zero()) return {};
        std::vector<Rational> cs(n + 1);
        cs[n] = std::move(c);
        return Polynomial(std::move(cs));
    }
    static Polynomial x() { return monomial(1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return coeffs_.empty() ? minus_infinity : static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Coefficient of x^i, zero past the degree.
    Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational eval(const Rational& x0) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> cs(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
        return Polynomial(std::move(cs));
    }

    /// Terms of degree <= n.
    Polynomial truncate(std::size_t n) const {
        if (coeffs_.size() <= n + 1) return *this;
        return Polynomial(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n) + 1));
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator*=(const Rational& c) {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto& v : coeffs_) v *= c;
        return *this;
    }
    Polynomial& operator/=(const Rational& c) { return *this *= c.inverse(); }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(cs));
    }

    /// Multiplication by x^k.
    Polynomial shifted_up(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Rational> cs(k);
        cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(cs));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form, highest degree first: "x^2 - 1/2*x + 3".
    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Rational& c = coeffs_[k];
            if (c.is_zero()) continue;
            const bool neg = c.sign() < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            const Rational mag = neg ? -c : c;
            if (k == 0) {
                out += mag.str();
                continue;
            }
            if (!mag.is_one()) out += mag.str() + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial r(1);
    for (unsigned i = 0; i < k; ++i) r = r * p;
    return r;
}

/// p(q(x)) by Horner's rule.
inline Polynomial compose(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r = r * q + Polynomial(*it);
    return r;
}

} // namespace psi

#endif // PSI_UMBRAL_POLYNOMIAL_HPP
