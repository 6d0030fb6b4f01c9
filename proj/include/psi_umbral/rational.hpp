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

#ifndef PSI_UMBRAL_RATIONAL_HPP
#define PSI_UMBRAL_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "error.hpp"

namespace psi {

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw Error(ErrorCode::division_by_zero, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Whitespace is not accepted.
    static Rational parse(std::string_view text) {
        auto digits = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        const auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
        if (!digits(num) || (slash != std::string_view::npos && (!digits(den) || den.front() == '-' || den.front() == '+')))
            throw Error(ErrorCode::parse, "malformed rational '" + std::string(text) + "'");
        auto strip_plus = [](std::string_view s) { return (!s.empty() && s.front() == '+') ? s.substr(1) : s; };
        mpz_class n(std::string(strip_plus(num)), 10);
        mpz_class d = 1;
        if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
        if (d == 0) throw Error(ErrorCode::division_by_zero, "rational '" + std::string(text) + "' has zero denominator");
        return Rational(mpq_class(n, d));
    }

    /// "p/q", or "p" when q = 1.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpq_class& value() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    double to_double() const { return v_.get_d(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    int sign() const noexcept { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    Rational inverse() const { return Rational(1) / *this; }

    /// Integer power; negative exponents invert.
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational result(1), base(*this);
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_{0};
};

inline Rational factorial(long n) {
    Rational r(1);
    for (long k = 2; k <= n; ++k) r *= Rational(k);
    return r;
}

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (long i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
    return r;
}

} // namespace psi

#endif // PSI_UMBRAL_RATIONAL_HPP
