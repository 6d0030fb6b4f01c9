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

#include <gtest/gtest.h>

#include <psi_umbral/integration.hpp>

#include "test_support.hpp"

namespace psi {
namespace {

constexpr std::size_t cap = 16;

std::vector<PsiSequence> suite() { return reference_sequences(40); }

// (1 - q) x sum_{k < terms} q^k p(q^k x), the partial Jackson sum.
Polynomial jackson_partial_sum(const Rational& q, const Polynomial& p, int terms) {
    Polynomial acc;
    Rational qk(1);
    for (int k = 0; k < terms; ++k, qk *= q) acc += compose(p, Polynomial{Rational(0), qk}) * qk;
    return (acc * (Rational(1) - q)).shifted_up(1);
}

TEST(QIntegral, Examples) {
    EXPECT_EQ(q_integral(Rational(2), Polynomial::monomial(2)), Polynomial::monomial(3, Rational(1, 7)));
    for (std::size_t n = 0; n <= cap; ++n)
        EXPECT_EQ(q_integral(Rational(0), Polynomial::monomial(n)), Polynomial::monomial(n + 1));
    EXPECT_EQ(build_Dq(Rational(2), cap)(q_integral(Rational(2), Polynomial::monomial(2))), Polynomial::monomial(2));
}

TEST(QIntegral, GeometricSumConverges) {
    // For |q| < 1 the partial sums approach the closed form; the tail after K
    // terms is exactly q^(K(n+1)) times the closed form.
    const Rational q(1, 3);
    for (std::size_t n = 0; n <= 6; ++n) {
        const Polynomial closed = q_integral(q, Polynomial::monomial(n));
        for (int terms : {1, 4, 9}) {
            const Rational tail = q.pow(static_cast<long>(terms) * static_cast<long>(n + 1));
            EXPECT_EQ(jackson_partial_sum(q, Polynomial::monomial(n), terms), closed * (Rational(1) - tail));
        }
    }
}

TEST(QIntegral, Errors) {
    try {
        q_integral(Rational(-1), Polynomial::monomial(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::division_by_zero);
    }
    EXPECT_NO_THROW(q_integral(Rational(-1), Polynomial::monomial(2)));
    EXPECT_THROW(q_integral(Rational(1), Polynomial::monomial(0)), Error);
}

TEST(RIntegral, Examples) {
    testing::Gen gen(1);
    for (const Rational& q : {Rational(1, 2), Rational(2), Rational(-2, 5)}) {
        const RationalFunction r = RationalFunction::q_number(q);
        for (int i = 0; i < 5; ++i) {
            const Polynomial p = gen.polynomial(cap - 1);
            EXPECT_EQ(r_integral(r, q, p), q_integral(q, p));
        }
    }
    const RationalFunction ident{Polynomial::x(), Polynomial(1)};
    for (std::size_t n = 0; n <= cap; ++n)
        EXPECT_EQ(r_integral(ident, Rational(1), Polynomial::monomial(n)), Polynomial::monomial(n + 1));

    // R with a zero at q^2.
    const RationalFunction vanishing{Polynomial{Rational(-1, 4), Rational(1)}, Polynomial(1)};
    EXPECT_THROW(r_integral(vanishing, Rational(1, 2), Polynomial::monomial(1)), Error);
    EXPECT_NO_THROW(r_integral(vanishing, Rational(1, 2), Polynomial::monomial(2)));
}

TEST(RIntegral, RightInverse) {
    // R(x) = (1 + x + x^2) / (2 - x) at q = 3 gives weights R(3^n).
    const RationalFunction r{Polynomial{1, 1, 1}, Polynomial{2, -1}};
    const Rational q(3);
    const auto dr = build_Dpsi(PsiSequence::rational_function(r, q, cap + 1), cap);
    for (std::size_t n = 0; n < cap; ++n) EXPECT_EQ(dr(r_integral(r, q, Polynomial::monomial(n))), Polynomial::monomial(n));
}

TEST(PsiIntegral, Examples) {
    const PsiSequence c = PsiSequence::classical(40);
    for (long n = 0; n <= static_cast<long>(cap); ++n) {
        const auto un = static_cast<std::size_t>(n);
        EXPECT_EQ(psi_integral(c, Polynomial::monomial(un)), Polynomial::monomial(un + 1, Rational(1, n + 1)));
    }
    EXPECT_EQ(psi_integral(squares_sequence(10), Polynomial::monomial(2)), Polynomial::monomial(3, Rational(1, 9)));
}

TEST(PsiIntegral, RightInverseEverywhere) {
    testing::Gen gen(2);
    for (const auto& s : suite()) {
        const auto d = build_Dpsi(s, cap);
        for (std::size_t n = 0; n < cap; ++n)
            EXPECT_EQ(d(psi_integral(s, Polynomial::monomial(n))), Polynomial::monomial(n)) << s.name();
        for (int i = 0; i < 5; ++i) {
            const Polynomial p = gen.polynomial(cap - 1);
            EXPECT_EQ(d(psi_integral(s, p)), p);
        }
        EXPECT_TRUE((d * psi_integral_operator(s, cap)).restricted(cap - 1).is_identity()) << s.name();
    }
}

TEST(PsiIntegral, NotALeftInverse) {
    for (const auto& s : suite()) {
        const auto d = build_Dpsi(s, cap);
        const Polynomial p = Polynomial::monomial(3) + Polynomial(Rational(5));
        EXPECT_NE(psi_integral(s, d(p)), p) << s.name();
        EXPECT_EQ(psi_integral(s, d(p)), Polynomial::monomial(3));
    }
}

TEST(PsiIntegral, AgreesWithJackson) {
    testing::Gen gen(3);
    for (const Rational& q : {Rational(1, 2), Rational(2), Rational(0), Rational(-3)}) {
        const PsiSequence s = PsiSequence::jackson(q, cap + 1);
        for (std::size_t n = 0; n < cap; ++n)
            EXPECT_EQ(psi_integral(s, Polynomial::monomial(n)), q_integral(q, Polynomial::monomial(n)));
    }
}

TEST(Factorization, DpsiIsNhatAfterD0) {
    for (const auto& s : suite()) {
        EXPECT_TRUE(same_action(build_Dpsi(s, cap), build_Nhat(s, cap) * build_D0(cap))) << s.name();
        // The psi-integral is X after 1 / Nhat.
        const auto x = build_X(cap);
        const auto nhat_inv = GradedOperator::from_function(
            cap, [&](std::size_t n) { return Polynomial::monomial(n, s.n(n + 1).inverse()); });
        EXPECT_TRUE(same_action(psi_integral_operator(s, cap), x * nhat_inv)) << s.name();
    }
}

} // namespace
} // namespace psi
