/*
 * Copyright 2026 The wallcross Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <wallcross/dt_transforms.hpp>
#include <wallcross/verify/oracles.hpp>
#include <wallcross/verify/random.hpp>
#include <wallcross/verify/suites.hpp>

using namespace wallcross;

namespace {

using S = SlopeSeries;

EffectiveClass C(std::int64_t m) { return EffectiveClass{m}; }

SlopeContext conifold(std::int64_t mu, std::int64_t d) { return SlopeContext(Geometry::single(1, 1, d), Rational(mu)); }

InvariantTable conifold_table(const SlopeContext& ctx)
{
    InvariantTable N(ctx.geometry());
    const auto mu = *ctx.mu().to_int64();
    for (std::int64_t m = 1; m <= ctx.geometry().truncation(); ++m) {
        N.set(mu * m, C(m), Rational(1, m * m));
    }
    return N;
}

S one_plus_qmu_t(const SlopeContext& ctx)
{
    auto s = S::one(ctx.geometry());
    s.add_term(*ctx.mu().to_int64(), C(1), Rational(1));
    return s;
}

InvariantTable primitive(const Geometry& g, std::initializer_list<std::pair<EffectiveClass, Rational>> entries)
{
    InvariantTable t(g);
    for (const auto& [beta, v] : entries) {
        t.set(1, beta, v);
    }
    return t;
}

} // namespace

TEST(SlopeContext, Admissibility)
{
    const SlopeContext ctx(Geometry::single(2, 1, 6), Rational(1, 4));
    EXPECT_TRUE(ctx.admissible(1, C(2)));
    EXPECT_FALSE(ctx.admissible(0, C(1)));  // n = 1/2 not integral
    EXPECT_FALSE(ctx.admissible(2, C(4)));  // beyond d
    EXPECT_FALSE(ctx.admissible(0, C(0)));
    const auto keys = ctx.admissible_keys();
    ASSERT_EQ(keys.size(), 1u);
    EXPECT_EQ(keys[0].first, 1);
}

TEST(DtParFromN, ConifoldIsOnePlusQt)
{
    for (std::int64_t mu : {0, 1, 2}) {
        const auto ctx = conifold(mu, 4);
        const auto s = dt_par_from_N(ctx, conifold_table(ctx));
        EXPECT_EQ(s, one_plus_qmu_t(ctx)) << "mu = " << mu;
    }
    EXPECT_EQ(to_expression(dt_par_from_N(conifold(1, 4), conifold_table(conifold(1, 4)))), "1 + q t");
}

TEST(DtParFromN, EmptyIsOne)
{
    const auto ctx = conifold(1, 3);
    EXPECT_EQ(dt_par_from_N(ctx, InvariantTable(ctx.geometry())), S::one(ctx.geometry()));
}

TEST(DtParFromN, HDegreeTwoExample)
{
    const SlopeContext ctx(Geometry::single(1, 2, 2), Rational(1));
    const Rational a(2, 3);
    const Rational b(-5, 7);
    InvariantTable N(ctx.geometry());
    N.set(1, C(1), a);
    N.set(2, C(2), b);
    auto expected = S::one(ctx.geometry());
    expected.add_term(1, C(1), Rational(-2) * a);
    expected.add_term(2, C(2), Rational(2) * a * a - Rational(4) * b);
    EXPECT_EQ(dt_par_from_N(ctx, N), expected);
    EXPECT_EQ(N_from_dt_par(ctx, expected), N);
}

TEST(DtParFromN, MatchesNaiveTaylorOracle)
{
    // exp(-a qt)^2 exp(-b q^2 t^2)^4 built from the naive oracle.
    const SlopeContext ctx(Geometry::single(1, 2, 2), Rational(1));
    const Rational a(3);
    const Rational b(1, 2);
    InvariantTable N(ctx.geometry());
    N.set(1, C(1), a);
    N.set(2, C(2), b);
    const oracle::NaiveGeometry ng{{1}, {2}, 2};
    const oracle::NaiveSeries x{{{1, {1}}, -a}};
    const oracle::NaiveSeries y{{{2, {2}}, -b}};
    auto ex = oracle::naive_exp(ng, x, 4);
    auto ey = oracle::naive_exp(ng, y, 4);
    auto expected = oracle::naive_mul(ng, ex, ex);
    for (int i = 0; i < 4; ++i) {
        expected = oracle::naive_mul(ng, expected, ey);
    }
    oracle::NaiveSeries got;
    const auto series = dt_par_from_N(ctx, N);
    for (const auto& [k, c] : series.terms()) {
        got[{k.n, k.beta.multiplicities()}] = c;
    }
    EXPECT_EQ(got, expected);
}

TEST(DtParFromN, InadmissibleKeyThrows)
{
    const auto ctx = conifold(1, 3);
    InvariantTable wrong_n(ctx.geometry());
    wrong_n.set(2, C(1), Rational(1));
    EXPECT_THROW(dt_par_from_N(ctx, wrong_n), inadmissible_key);
    InvariantTable too_big(ctx.geometry());
    too_big.set(4, C(4), Rational(1));
    EXPECT_THROW(dt_par_from_N(ctx, too_big), inadmissible_key);
    EXPECT_THROW(dt_par_from_N(ctx, InvariantTable(Geometry::single(1, 1, 4))), geometry_mismatch);
}

TEST(NFromDtPar, ConifoldRecoversInverseSquares)
{
    for (std::int64_t mu : {0, 1, 2}) {
        const auto ctx = conifold(mu, 4);
        EXPECT_EQ(N_from_dt_par(ctx, one_plus_qmu_t(ctx)), conifold_table(ctx)) << "mu = " << mu;
    }
}

TEST(NFromDtPar, OneGivesEmptyTable)
{
    const auto ctx = conifold(1, 4);
    EXPECT_TRUE(N_from_dt_par(ctx, S::one(ctx.geometry())).empty());
}

TEST(NFromDtPar, Errors)
{
    const auto ctx = conifold(1, 4);
    EXPECT_THROW(N_from_dt_par(ctx, S::one(ctx.geometry()) * Rational(3)), constant_term_not_one);
    auto off_slope = S::one(ctx.geometry());
    off_slope.add_term(0, C(1), Rational(1));
    EXPECT_THROW(N_from_dt_par(ctx, off_slope), inadmissible_key);
}

TEST(MultipleCoverExtend, Conifold)
{
    const auto ctx = conifold(1, 4);
    const auto n1 = primitive(ctx.geometry(), {{C(1), Rational(1)}});
    EXPECT_EQ(multiple_cover_extend(ctx, n1), conifold_table(ctx));
}

TEST(MultipleCoverExtend, DivisibilityOneKeepsPrimitiveValue)
{
    const SlopeContext ctx(Geometry::single(1, 1, 3), Rational(1, 3));
    const auto n1 = primitive(ctx.geometry(), {{C(3), Rational(7, 2)}});
    const auto N = multiple_cover_extend(ctx, n1);
    // (1, 3[C]) has divisibility 1.
    EXPECT_EQ(N.get(1, C(3)), Rational(7, 2));
    EXPECT_EQ(N.size(), 1u);
}

TEST(MultipleCoverExtend, TwoGeneratorDivisorSum)
{
    const SlopeContext ctx(Geometry({Generator{"1", 1, 1}, Generator{"2", 1, 1}}, 4), Rational(1, 2));
    const Rational x(3, 5);
    const Rational y(-2);
    const auto n1 = primitive(ctx.geometry(), {{EffectiveClass{2, 2}, x}, {EffectiveClass{1, 1}, y}});
    const auto N = multiple_cover_extend(ctx, n1);
    EXPECT_EQ(N.get(2, EffectiveClass{2, 2}), x + y / Rational(4));
    EXPECT_EQ(N.get(2, EffectiveClass{2, 2}),
              oracle::brute_force_divisor_sum({{{2, 2}, x}, {{1, 1}, y}}, 2, {2, 2}));
}

TEST(MultipleCoverExtend, BadPrimitiveTableThrows)
{
    const auto ctx = conifold(1, 3);
    InvariantTable bad(ctx.geometry());
    bad.set(2, C(1), Rational(1));
    EXPECT_THROW(multiple_cover_extend(ctx, bad), bad_primitive_table);
    EXPECT_THROW(gv_product_side(ctx, bad), bad_primitive_table);
}

TEST(GvProductSide, Examples)
{
    const auto ctx = conifold(1, 4);
    EXPECT_EQ(gv_product_side(ctx, primitive(ctx.geometry(), {{C(1), Rational(1)}})), one_plus_qmu_t(ctx));
    EXPECT_EQ(gv_product_side(ctx, InvariantTable(ctx.geometry())), S::one(ctx.geometry()));

    const SlopeContext h2(Geometry::single(1, 2, 2), Rational(1));
    auto expected = S::one(h2.geometry());
    expected.add_term(1, C(1), Rational(-2));
    expected.add_term(2, C(2), Rational(1));
    EXPECT_EQ(gv_product_side(h2, primitive(h2.geometry(), {{C(1), Rational(1)}})), expected);
}

TEST(DtHat, Examples)
{
    const auto ctx = conifold(1, 4);
    EXPECT_EQ(dt_hat(ctx, one_plus_qmu_t(ctx), 2, C(2)), Rational(-1, 2));
    EXPECT_EQ(dt_hat(ctx, S::one(ctx.geometry()), 3, C(3)), Rational(0));
    EXPECT_EQ(dt_hat(ctx, dt_par_from_N(ctx, conifold_table(ctx)), 3, C(3)), Rational(1, 3));
    EXPECT_THROW(dt_hat(ctx, one_plus_qmu_t(ctx), 5, C(5)), out_of_truncation);
}

TEST(NHat, Examples)
{
    const auto ctx = conifold(1, 4);
    const auto n1 = primitive(ctx.geometry(), {{C(1), Rational(1)}});
    for (std::int64_t m = 1; m <= 4; ++m) {
        EXPECT_EQ(n_hat(ctx, n1, m, C(m)), Rational(1, m * m));
    }
    const SlopeContext third(Geometry::single(1, 1, 3), Rational(1, 3));
    EXPECT_EQ(n_hat(third, primitive(third.geometry(), {{C(3), Rational(4)}}), 1, C(3)), Rational(4));
    const auto n1b = primitive(ctx.geometry(), {{C(1), Rational(1)}, {C(2), Rational(5)}});
    EXPECT_EQ(n_hat(ctx, n1b, 4, C(4)), Rational(1, 16) + Rational(5, 4));
    EXPECT_THROW(n_hat(ctx, n1, 5, C(5)), out_of_truncation);
}

TEST(CheckMultcoverEquiv, ConifoldAllTrue)
{
    const auto ctx = conifold(1, 4);
    const auto N = multiple_cover_extend(ctx, primitive(ctx.geometry(), {{C(1), Rational(1)}}));
    const auto report = check_multcover_equiv(ctx, N);
    EXPECT_EQ(report.rows.size(), 4u);
    EXPECT_TRUE(report.all_ok());
    EXPECT_EQ(to_tsv(report).substr(0, 20), "1\t[1]\t1\t1\ttrue\n2\t[2]");
}

TEST(CheckMultcoverEquiv, PerturbationFlipsOnlyItsKey)
{
    const auto ctx = conifold(1, 4);
    auto N = conifold_table(ctx);
    N.set(2, C(2), Rational(1, 4) + Rational(1));
    const auto failing = check_multcover_equiv(ctx, N).failing_keys();
    ASSERT_EQ(failing.size(), 1u);
    EXPECT_EQ(failing[0].first, 2);
    EXPECT_EQ(failing[0].second, C(2));
}

TEST(CheckMultcoverEquiv, DivisibilityOneSupport)
{
    // Slope 1/2 on two degree-1 generators: every admissible key is (1, beta) with omega(beta) = 2.
    const Geometry g({Generator{"1", 1, 1}, Generator{"2", 1, 2}}, 2);
    const SlopeContext ctx(g, Rational(1, 2));
    InvariantTable N(g);
    N.set(1, EffectiveClass{2, 0}, Rational(2));
    N.set(1, EffectiveClass{1, 1}, Rational(-3));
    N.set(1, EffectiveClass{0, 2}, Rational(1, 2));
    const auto report = check_multcover_equiv(ctx, N);
    EXPECT_EQ(report.rows.size(), 3u);
    EXPECT_TRUE(report.all_ok());
}

TEST(DtTransformsProperties, RoundTrip)
{
    random::Engine rng(31);
    for (int i = 0; i < 100; ++i) {
        const auto g = random::geometry(rng, 3, 6);
        const SlopeContext ctx(g, random::slope(rng));
        const auto N = random::admissible_table(rng, ctx);
        EXPECT_EQ(N_from_dt_par(ctx, dt_par_from_N(ctx, N)), N);
    }
}

TEST(DtTransformsProperties, LogSideIdentity)
{
    random::Engine rng(32);
    for (int i = 0; i < 60; ++i) {
        const auto g = random::geometry(rng, 3, 6);
        const SlopeContext ctx(g, random::slope(rng));
        const auto n1 = random::primitive_table(rng, g);
        const auto log_side = series_log(gv_product_side(ctx, n1));
        for (const auto& [n, beta] : ctx.admissible_keys()) {
            const auto h = g.h_degree(beta);
            Rational expected(0);
            for (std::int64_t k = 1; k <= divisibility(n, beta); ++k) {
                if (n % k == 0 && beta.divisible_by(k)) {
                    expected += Rational(sign_power(h - 1) * h, k * k) * n1.get(1, beta.divided_by(k));
                }
            }
            EXPECT_EQ(log_side.coefficient(n, beta), expected);
        }
    }
}

TEST(DtTransformsProperties, EquivalenceIffProductSidesAgree)
{
    const auto r = verify::multcover_suite(verify::SuiteOptions{33, 6, 1.0}, 60);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());

    // Converse direction: tables that are not multiple-cover extensions fail somewhere
    // exactly when the product sides differ.
    random::Engine rng(34);
    for (int i = 0; i < 60; ++i) {
        const auto g = random::geometry(rng, 2, 5);
        const SlopeContext ctx(g, random::slope(rng));
        const auto N = random::admissible_table(rng, ctx);
        const auto n1 = random::primitive_table(rng, g);
        const bool all = check_multcover_equiv(ctx, N, n1).all_ok();
        EXPECT_EQ(all, dt_par_from_N(ctx, N) == gv_product_side(ctx, n1));
    }
}

TEST(DtTransformsProperties, LinearAtPrimitiveKeys)
{
    const auto ctx = conifold(1, 4);
    for (int v : {1, 2, 5}) {
        auto t = S::one(ctx.geometry());
        t.add_term(1, C(1), Rational(v));
        // N_{1,[C]} is the t-coefficient of log, i.e. v.
        EXPECT_EQ(N_from_dt_par(ctx, t).get(1, C(1)), Rational(v));
    }
}
