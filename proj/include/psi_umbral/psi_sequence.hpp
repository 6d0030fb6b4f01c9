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

#ifndef PSI_UMBRAL_PSI_SEQUENCE_HPP
#define PSI_UMBRAL_PSI_SEQUENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace psi {

/// A rational function num(x)/den(x); evaluation reports poles as nullopt.
struct RationalFunction {
    Polynomial num;
    Polynomial den{1};

    std::optional<Rational> at(const Rational& x) const {
        const Rational d = den.eval(x);
        if (d.is_zero()) return std::nullopt;
        return num.eval(x) / d;
    }

    /// (1 - x) / (1 - q): the choice that turns n_psi into the q-number [n]_q.
    static RationalFunction q_number(const Rational& q) { return {Polynomial{1, -1}, Polynomial(Rational(1) - q)}; }
};

enum class PsiKind { classical, jackson, divided_difference, rational_function, custom };

struct AdmissibilityViolation {
    std::size_t index;
    std::string reason;
};

/// An admissible sequence, stored as the weights n_psi for n = 0..cap.
///
/// The weights are materialized once at construction. Construction never
/// throws on an inadmissible sequence: the first bad index is recorded and
/// any access at or past it raises ErrorCode::inadmissible.
class PsiSequence {
public:
    static PsiSequence classical(std::size_t cap) {
        PsiSequence s(PsiKind::classical, cap);
        for (std::size_t n = 1; n <= cap; ++n) s.values_[n] = Rational(static_cast<long>(n));
        s.finish();
        return s;
    }

    /// n_psi = (1 - q^n) / (1 - q); undefined for q = 1.
    static PsiSequence jackson(const Rational& q, std::size_t cap) {
        PsiSequence s(PsiKind::jackson, cap);
        s.q_ = q;
        const Rational den = Rational(1) - q;
        Rational qn(1);
        for (std::size_t n = 1; n <= cap; ++n) {
            qn *= q;
            if (!den.is_zero()) s.values_[n] = (Rational(1) - qn) / den;
        }
        s.finish();
        return s;
    }

    /// n_psi = 1 for every n >= 1; the derivative is the divided difference.
    static PsiSequence divided_difference(std::size_t cap) {
        PsiSequence s(PsiKind::divided_difference, cap);
        for (std::size_t n = 1; n <= cap; ++n) s.values_[n] = Rational(1);
        s.finish();
        return s;
    }

    /// n_psi = R(q^n).
    static PsiSequence rational_function(RationalFunction r, const Rational& q, std::size_t cap) {
        PsiSequence s(PsiKind::rational_function, cap);
        s.q_ = q;
        Rational qn(1);
        for (std::size_t n = 1; n <= cap; ++n) {
            qn *= q;
            s.values_[n] = r.at(qn);
        }
        s.r_ = std::move(r);
        s.finish();
        return s;
    }

    /// n_values[i] is the weight of n = i + 1; the cap is the list length.
    static PsiSequence custom(const std::vector<Rational>& n_values) {
        PsiSequence s(PsiKind::custom, n_values.size());
        for (std::size_t i = 0; i < n_values.size(); ++i) s.values_[i + 1] = n_values[i];
        s.finish();
        return s;
    }

    PsiKind kind() const noexcept { return kind_; }
    const Rational& q() const noexcept { return q_; }
    const RationalFunction& r() const noexcept { return r_; }

    /// Highest materialized index.
    std::size_t cap() const noexcept { return values_.size() - 1; }
    /// Largest m <= cap such that n_psi is defined and nonzero for 1 <= n <= m.
    std::size_t admissible_to() const noexcept { return admissible_to_; }
    const std::optional<AdmissibilityViolation>& violation() const noexcept { return violation_; }

    /// n_psi; zero for n = 0.
    const Rational& n(std::size_t n) const {
        require(n);
        return *values_[n];
    }
    /// n_psi! with 0_psi! = 1.
    const Rational& factorial(std::size_t n) const {
        require(n);
        return factorials_[n];
    }
    /// n_psi (n-1)_psi ... (n-k+1)_psi.
    Rational falling_factorial(std::size_t n, std::size_t k) const {
        if (k > n) return Rational(0);
        return factorial(n) / factorial(n - k);
    }
    /// (n k)_psi = n_psi^(k) / k_psi!; zero for k > n.
    Rational binomial(std::size_t n, std::size_t k) const {
        if (k > n) {
            require(n);
            return Rational(0);
        }
        return factorial(n) / (factorial(k) * factorial(n - k));
    }

    /// Short label used in reports: classical, q:1/2, dd, rational, custom.
    std::string name() const {
        switch (kind_) {
            case PsiKind::classical: return "classical";
            case PsiKind::jackson: return "q:" + q_.str();
            case PsiKind::divided_difference: return "dd";
            case PsiKind::rational_function: return "rational(q=" + q_.str() + ")";
            case PsiKind::custom: return "custom";
        }
        return "?";
    }

    /// Same weights through min(cap, other.cap).
    bool same_weights(const PsiSequence& other) const {
        const std::size_t m = std::min(admissible_to_, other.admissible_to_);
        for (std::size_t k = 1; k <= m; ++k)
            if (*values_[k] != *other.values_[k]) return false;
        return true;
    }

private:
    PsiSequence(PsiKind kind, std::size_t cap) : kind_(kind), values_(cap + 1) { values_[0] = Rational(0); }

    void finish() {
        factorials_.assign(1, Rational(1));
        admissible_to_ = cap();
        for (std::size_t n = 1; n <= cap(); ++n) {
            if (!values_[n] || values_[n]->is_zero()) {
                admissible_to_ = n - 1;
                violation_ = AdmissibilityViolation{
                    n, values_[n] ? "n_psi = 0 at n = " + std::to_string(n)
                                  : "n_psi undefined (zero divisor) at n = " + std::to_string(n)};
                break;
            }
            factorials_.push_back(factorials_.back() * *values_[n]);
        }
    }

    void require(std::size_t n) const {
        if (n > cap())
            throw Error(ErrorCode::cap_exhausted,
                        "psi sequence " + name() + " materialized only to n = " + std::to_string(cap()) +
                            ", requested n = " + std::to_string(n));
        if (n > admissible_to_)
            throw Error(ErrorCode::inadmissible, "psi sequence " + name() + " is not admissible: " + violation_->reason);
    }

    PsiKind kind_;
    Rational q_{0};
    RationalFunction r_;
    std::vector<std::optional<Rational>> values_;
    std::vector<Rational> factorials_;
    std::size_t admissible_to_ = 0;
    std::optional<AdmissibilityViolation> violation_;
};

/// nullopt when n_psi is defined and nonzero for every 1 <= n <= cap.
inline std::optional<AdmissibilityViolation> validate_admissible(const PsiSequence& psi, std::size_t cap) {
    if (psi.admissible_to() >= cap) return std::nullopt;
    if (psi.violation()) return psi.violation();
    return AdmissibilityViolation{psi.cap() + 1, "sequence materialized only to n = " + std::to_string(psi.cap())};
}

inline Rational n_psi(const PsiSequence& psi, std::size_t n) { return psi.n(n); }
inline Rational psi_binomial(const PsiSequence& psi, std::size_t n, std::size_t k) { return psi.binomial(n, k); }

/// n_psi = n^2, the weights of D x D.
inline PsiSequence squares_sequence(std::size_t cap) {
    std::vector<Rational> v;
    for (std::size_t n = 1; n <= cap; ++n) v.emplace_back(static_cast<long>(n * n));
    return PsiSequence::custom(v);
}

/// The five reference sequences every identity suite is run over:
/// classical, q = 1/2, q = 2, q = 0 (divided difference) and n_psi = n^2.
inline std::vector<PsiSequence> reference_sequences(std::size_t cap) {
    return {PsiSequence::classical(cap), PsiSequence::jackson(Rational(1, 2), cap), PsiSequence::jackson(Rational(2), cap),
            PsiSequence::jackson(Rational(0), cap), squares_sequence(cap)};
}

} // namespace psi

#endif // PSI_UMBRAL_PSI_SEQUENCE_HPP
