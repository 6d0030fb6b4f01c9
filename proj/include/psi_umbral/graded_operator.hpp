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

#ifndef PSI_UMBRAL_GRADED_OPERATOR_HPP
#define PSI_UMBRAL_GRADED_OPERATOR_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace psi {

/// Linear operator on F[x] stored by its images of x^0 .. x^m.
///
/// cap() is the degree range the operator was requested for; effective_cap()
/// is m, the range over which the images are actually known. They differ
/// after compositions that feed a raising operator into one defined only to
/// the cap.
class GradedOperator {
public:
    GradedOperator(std::vector<Polynomial> images, std::size_t cap) : images_(std::move(images)), cap_(cap) {
        if (images_.empty()) throw Error(ErrorCode::cap_exhausted, "operator with no valid images");
        if (images_.size() > cap_ + 1) images_.resize(cap_ + 1);
    }

    static GradedOperator from_function(std::size_t cap, const std::function<Polynomial(std::size_t)>& image_of) {
        std::vector<Polynomial> images;
        images.reserve(cap + 1);
        for (std::size_t n = 0; n <= cap; ++n) images.push_back(image_of(n));
        return {std::move(images), cap};
    }
    static GradedOperator identity(std::size_t cap) {
        return from_function(cap, [](std::size_t n) { return Polynomial::monomial(n); });
    }
    static GradedOperator zero(std::size_t cap) { return {std::vector<Polynomial>(cap + 1), cap}; }

    std::size_t cap() const noexcept { return cap_; }
    std::size_t effective_cap() const noexcept { return images_.size() - 1; }
    const std::vector<Polynomial>& images() const noexcept { return images_; }

    const Polynomial& image(std::size_t n) const {
        if (n > effective_cap())
            throw Error(ErrorCode::cap_exhausted, "operator image of x^" + std::to_string(n) +
                                                      " requested past effective cap " + std::to_string(effective_cap()));
        return images_[n];
    }

    /// Smallest s with deg T(x^n) <= n + s over the known images.
    long shift_bound() const noexcept {
        long s = -static_cast<long>(cap_) - 1;
        for (std::size_t n = 0; n < images_.size(); ++n)
            if (!images_[n].is_zero()) s = std::max(s, images_[n].degree() - static_cast<long>(n));
        return s;
    }

    bool can_apply(const Polynomial& p) const noexcept {
        return p.is_zero() || p.degree() <= static_cast<long>(effective_cap());
    }

    Polynomial apply(const Polynomial& p) const {
        if (!can_apply(p))
            throw Error(ErrorCode::cap_exhausted, "polynomial of degree " + std::to_string(p.degree()) +
                                                      " exceeds operator effective cap " +
                                                      std::to_string(effective_cap()));
        Polynomial r;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (!p[i].is_zero()) r += images_[i] * p[i];
        return r;
    }
    Polynomial operator()(const Polynomial& p) const { return apply(p); }

    /// The same operator viewed at a smaller cap.
    GradedOperator restricted(std::size_t cap) const {
        const std::size_t keep = std::min(cap, effective_cap()) + 1;
        return {std::vector<Polynomial>(images_.begin(), images_.begin() + static_cast<long>(keep)), cap};
    }

    bool is_zero() const {
        return std::all_of(images_.begin(), images_.end(), [](const Polynomial& p) { return p.is_zero(); });
    }
    bool is_identity() const {
        for (std::size_t n = 0; n < images_.size(); ++n)
            if (images_[n] != Polynomial::monomial(n)) return false;
        return true;
    }

    GradedOperator operator-() const { return *this * Rational(-1); }

    friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
        const std::size_t m = std::min(a.effective_cap(), b.effective_cap());
        std::vector<Polynomial> images(m + 1);
        for (std::size_t n = 0; n <= m; ++n) images[n] = a.images_[n] + b.images_[n];
        return {std::move(images), std::min(a.cap_, b.cap_)};
    }
    friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) { return a + (-b); }
    friend GradedOperator operator*(const GradedOperator& a, const Rational& c) {
        GradedOperator r(a);
        for (auto& p : r.images_) p *= c;
        return r;
    }
    friend GradedOperator operator*(const Rational& c, const GradedOperator& a) { return a * c; }

private:
    std::vector<Polynomial> images_;
    std::size_t cap_;
};

/// (A o B)(x^n) = A(B(x^n)), kept for every n whose image under B stays inside
/// the effective cap of A.
inline GradedOperator op_compose(const GradedOperator& a, const GradedOperator& b) {
    const std::size_t cap = std::min(a.cap(), b.cap());
    const std::size_t last = std::min(cap, b.effective_cap());
    std::vector<Polynomial> images;
    for (std::size_t n = 0; n <= last; ++n) {
        const Polynomial& bn = b.image(n);
        if (!a.can_apply(bn)) break;
        images.push_back(a.apply(bn));
    }
    if (images.empty()) throw Error(ErrorCode::cap_exhausted, "composition has negative effective cap");
    return {std::move(images), cap};
}

inline GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) { return op_compose(a, b); }

/// AB - BA.
inline GradedOperator op_commutator(const GradedOperator& a, const GradedOperator& b) {
    return op_compose(a, b) - op_compose(b, a);
}

inline GradedOperator op_power(const GradedOperator& a, unsigned k) {
    GradedOperator r = GradedOperator::identity(a.cap());
    for (unsigned i = 0; i < k; ++i) r = op_compose(a, r);
    return r;
}

/// Equal images on the range both operators know.
inline bool same_action(const GradedOperator& a, const GradedOperator& b) {
    const std::size_t m = std::min(a.effective_cap(), b.effective_cap());
    for (std::size_t n = 0; n <= m; ++n)
        if (a.images()[n] != b.images()[n]) return false;
    return true;
}

inline Polynomial op_apply(const GradedOperator& t, const Polynomial& p) { return t.apply(p); }

} // namespace psi

#endif // PSI_UMBRAL_GRADED_OPERATOR_HPP
