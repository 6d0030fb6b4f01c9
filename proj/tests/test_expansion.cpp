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

#include <psi_umbral/expansion.hpp>

#include "test_support.hpp"

namespace psi {
namespace {

constexpr std::size_t cap = 16;

std::vector<PsiSequence> suite() { return reference_sequences(40); }

// Random operator with deg T(x^n) <= n + shift.
GradedOperator random_operator(testing::Gen& gen, std::size_t c, long shift) {
    return GradedOperator::from_function(c, [&](std::size_t n) {
        const long top = std::max(0L, static_cast<long>(n) + static_cast<long>(gen.integer(-2, shift)));
        return gen.polynomial(static_cast<std::size_t>(top));
    });
}

TEST(Expand, NewtonAndMercator) {
    const PsiSequence c = PsiSequence::classical(40);
    const auto d = build_D(cap), delta = build_Delta(c, cap);

    const auto d_in_delta = expand_in_q(d, delta, "Delta");
    EXPECT_EQ(d_in_delta.q_polys[0], Polynomial());
    for (long k = 1; k <= 12; ++k)
        EXPECT_EQ(d_in_delta.q_polys[static_cast<std::size_t>(k)], Polynomial(Rational(k % 2 == 1 ? 1 : -1, k)));

    const auto delta_in_d = expand_in_q(delta, d, "D");
    EXPECT_EQ(delta_in_d.q_polys[0], Polynomial());
    for (long n = 1; n <= static_cast<long>(cap); ++n)
        EXPECT_EQ(delta_in_d.q_polys[static_cast<std::size_t>(n)], Polynomial(factorial(n).inverse()));
}

TEST(Expand, OperatorInItself) {
    for (const auto& s : suite()) {
        const auto q = build_Delta(s, cap);
        const auto e = expand_in_q(q, q);
        for (std::size_t n = 0; n <= e.order(); ++n) EXPECT_EQ(e.q_polys[n], Polynomial(n == 1 ? 1 : 0)) << s.name();
    }
}

TEST(Expand, MultiplicationByX) {
    const auto e = expand_in_q(build_X(cap), build_D(cap + 1));
    EXPECT_EQ(e.q_polys[0], Polynomial::x());
    for (std::size_t n = 1; n <= e.order(); ++n) EXPECT_TRUE(e.q_polys[n].is_zero());
}

TEST(Expand, RoundTripAndUniqueness) {
    testing::Gen gen(7);
    for (const auto& s : suite()) {
        const std::vector<GradedOperator> bases{build_Dpsi(s, cap), build_Delta(s, cap)};
        for (const auto& q : bases)
            for (int i = 0; i < 10; ++i) {
                const auto t = random_operator(gen, 12, 2);
                const auto e = expand_in_q(t, q);
                EXPECT_TRUE(same_action(reconstruct(e, q), t)) << s.name();

                OperatorExpansion bumped = e;
                const auto n = static_cast<std::size_t>(gen.integer(0, static_cast<long>(e.order())));
                bumped.q_polys[n] += Polynomial::monomial(static_cast<std::size_t>(gen.integer(0, 2)),
                                                          gen.nonzero_rational());
                EXPECT_FALSE(same_action(reconstruct(bumped, q), t)) << s.name();
            }
    }
}

TEST(Expand, DualPairRoundTrip) {
    testing::Gen gen(8);
    for (const auto& s : suite()) {
        const auto q = build_Delta(s, cap + 4);
        const auto basic = basic_sequence_solve(q, s, cap + 4);
        const auto xq = dual_operator(basic);
        for (int i = 0; i < 10; ++i) {
            const auto t = random_operator(gen, 10, 2);
            const auto e = expand_in_q_dual(t, basic, 10);
            const auto back = reconstruct(e, q, xq);
            EXPECT_EQ(back.effective_cap(), 10u);
            EXPECT_TRUE(same_action(back, t)) << s.name();
        }
        // Dpsi in its own dual pair is q_1 = 1.
        const auto d = build_Dpsi(s, cap);
        const auto own = expand_in_q_dual(d, basic_sequence_solve(d, s, cap), 12);
        for (std::size_t n = 0; n <= 12; ++n) EXPECT_EQ(own.q_polys[n], Polynomial(n == 1 ? 1 : 0));
        // Xpsi is q_0(x) = x in the (Dpsi, Xpsi) pair.
        const auto xe = expand_in_q_dual(build_Xpsi(s, cap), basic_sequence_solve(d, s, cap), 12);
        EXPECT_EQ(xe.q_polys[0], Polynomial::x());
        for (std::size_t n = 1; n <= 12; ++n) EXPECT_TRUE(xe.q_polys[n].is_zero()) << s.name();
    }
}

TEST(Indicator, Examples) {
    const PsiSequence c = PsiSequence::classical(40);
    const std::vector<Rational> lambdas{Rational(1), Rational(-1, 2), Rational(3, 7)};
    for (const auto& s : suite()) {
        const auto q = build_Delta(s, cap);
        const auto rep = conjugate_indicator_check(q, q, lambdas);
        EXPECT_TRUE(rep.ok) << s.name();
        for (std::size_t n = 0; n < rep.conjugated.size(); ++n)
            EXPECT_EQ(rep.conjugated[n], Polynomial(n == 1 ? 1 : 0));
    }

    const auto log1p = conjugate_indicator_check(build_D(cap), build_Delta(c, cap), lambdas);
    EXPECT_TRUE(log1p.ok);
    for (long n = 1; n <= static_cast<long>(cap); ++n)
        EXPECT_EQ(log1p.conjugated[static_cast<std::size_t>(n)], Polynomial(Rational(n % 2 == 1 ? 1 : -1, n)));

    const auto xs = conjugate_indicator_check(build_X(cap), build_D(cap + 1), lambdas);
    EXPECT_TRUE(xs.ok);
    EXPECT_EQ(xs.conjugated[0], Polynomial::x());
    for (std::size_t n = 1; n < xs.conjugated.size(); ++n) EXPECT_TRUE(xs.conjugated[n].is_zero());
}

TEST(Indicator, RandomOperators) {
    testing::Gen gen(9);
    for (const auto& s : suite())
        for (int i = 0; i < 5; ++i) {
            const auto t = random_operator(gen, 10, 2);
            const auto rep = conjugate_indicator_check(t, build_Delta(s, cap), {gen.rational(), gen.rational(), gen.rational()});
            EXPECT_TRUE(rep.ok) << s.name();
            EXPECT_EQ(rep.sample_ok.size(), 3u);
        }
}

TEST(FirstExpansion, Examples) {
    for (const auto& s : suite()) {
        const auto qd = make_delta_operator(build_Dpsi(s, cap), s);
        const Rational y(-5, 3);
        const auto a = first_expansion_coeffs(build_shift(s, y, cap), qd);
        for (std::size_t n = 0; n <= cap; ++n) EXPECT_EQ(a[n], y.pow(static_cast<long>(n)) / s.factorial(n));
        const auto id = first_expansion_coeffs(GradedOperator::identity(cap), qd);
        for (std::size_t n = 0; n <= cap; ++n) EXPECT_EQ(id[n], Rational(n == 0 ? 1 : 0));
    }
    const PsiSequence c = PsiSequence::classical(40);
    const auto qd = make_delta_operator(build_Delta(c, cap), c);
    const auto a = first_expansion_coeffs(build_D(cap), qd);
    const auto e = expand_in_q(build_D(cap), qd.op);
    for (std::size_t n = 0; n <= cap; ++n) EXPECT_EQ(Polynomial(a[n]), e.q_polys[n]);
}

TEST(FirstExpansion, ReconstructsShiftInvariantOperators) {
    testing::Gen gen(10);
    for (const auto& s : suite()) {
        const auto qd = make_delta_operator(build_Delta(s, cap), s);
        for (int i = 0; i < 5; ++i) {
            TruncatedSeries c(cap);
            for (std::size_t k = 0; k <= cap; ++k) c[k] = gen.rational();
            const auto t = dpsi_series(c, s, cap);
            const auto a = first_expansion_coeffs(t, qd);
            EXPECT_TRUE(same_action(series_in_operator(a, qd.op), t)) << s.name();
            const auto e = expand_in_q(t, qd.op);
            for (std::size_t n = 0; n <= cap; ++n) EXPECT_EQ(Polynomial(a[n]), e.q_polys[n]);
        }
    }
}

TEST(FirstExpansion, RejectsNonShiftInvariant) {
    const PsiSequence c = PsiSequence::classical(40);
    const auto qd = make_delta_operator(build_D(cap), c);
    try {
        first_expansion_coeffs(build_X(cap), qd);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::not_shift_invariant);
    }
}

TEST(Detect, Examples) {
    const auto d = build_D(cap), x = build_X(cap);
    const auto dxd = d * x * d;
    const auto r = detect_psi_series(dxd);
    ASSERT_TRUE(r.is_series);
    EXPECT_EQ(r.scale, Rational(1));
    for (std::size_t n = 1; n <= dxd.effective_cap(); ++n)
        EXPECT_EQ(r.psi->n(n), Rational(static_cast<long>(n * n)));
    for (std::size_t k = 2; k <= r.q_coeffs->cap(); ++k) EXPECT_TRUE((*r.q_coeffs)[k].is_zero());

    const auto bad = detect_psi_series(dxd * Rational(1, 2) - op_power(d, 3) * Rational(1, 3));
    EXPECT_FALSE(bad.is_series);
    ASSERT_TRUE(bad.witness);
    EXPECT_EQ(bad.witness->first, 4u);
    EXPECT_EQ(bad.witness->second, 3u);
    EXPECT_FALSE(bad.psi);

    const auto dd2 = detect_psi_series(d + d * d);
    ASSERT_TRUE(dd2.is_series);
    EXPECT_TRUE(dd2.psi->same_weights(PsiSequence::classical(cap)));
    EXPECT_EQ((*dd2.q_coeffs)[1], Rational(1));
    EXPECT_EQ((*dd2.q_coeffs)[2], Rational(1));
    for (std::size_t k = 3; k <= dd2.q_coeffs->cap(); ++k) EXPECT_TRUE((*dd2.q_coeffs)[k].is_zero());
}

TEST(Detect, ScaleAndRecovery) {
    testing::Gen gen(11);
    for (const auto& s : suite()) {
        TruncatedSeries c(cap);
        c[1] = Rational(1);
        for (std::size_t k = 2; k <= cap; ++k) c[k] = gen.rational();
        const Rational scale = gen.nonzero_rational();
        const auto r = detect_psi_series(dpsi_series(c, s, cap) * scale);
        ASSERT_TRUE(r.is_series) << s.name();
        EXPECT_EQ(r.scale, scale);
        EXPECT_TRUE(r.psi->same_weights(s)) << s.name();
        for (std::size_t k = 1; k <= cap; ++k) EXPECT_EQ((*r.q_coeffs)[k], c[k]);
    }
}

TEST(Detect, RejectsNonLowering) {
    EXPECT_THROW(detect_psi_series(build_D(cap) * build_D(cap)), Error);
    EXPECT_THROW(detect_psi_series(build_X(cap)), Error);
}

TEST(Detect, GroupUnderSubstitution) {
    testing::Gen gen(12);
    for (const auto& s : suite()) {
        TruncatedSeries a(cap), b(cap);
        a[1] = b[1] = Rational(1);
        for (std::size_t k = 2; k <= 5; ++k) {
            a[k] = gen.rational();
            b[k] = gen.rational();
        }
        const auto q2 = dpsi_series(b, s, cap);
        const auto composed = series_in_operator(a, q2);
        const auto r = detect_psi_series(composed);
        ASSERT_TRUE(r.is_series) << s.name();
        EXPECT_TRUE(r.psi->same_weights(s));
        EXPECT_EQ(*r.q_coeffs, series_compose(a, b)) << s.name();
    }
}

TEST(Detect, EigenfunctionOfDetectedDerivativeIsItsExponential) {
    const auto d = build_D(cap);
    const auto q = d * build_X(cap) * d;
    const auto r = detect_psi_series(q);
    ASSERT_TRUE(r.is_series);
    const Rational lambda(2, 3);
    const auto phi = eigenfunction_series(q, lambda, cap);
    for (std::size_t n = 0; n <= cap; ++n) EXPECT_EQ(phi[n], lambda.pow(static_cast<long>(n)) / r.psi->factorial(n));
}

} // namespace
} // namespace psi
