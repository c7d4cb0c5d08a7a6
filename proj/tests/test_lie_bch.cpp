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

#include <wallcross/lie_algebra.hpp>
#include <wallcross/verify/random.hpp>
#include <wallcross/verify/suites.hpp>

using namespace wallcross;

namespace {

EffectiveClass C(std::int64_t m) { return EffectiveClass{m}; }

SlopeContext conifold(std::int64_t mu, std::int64_t d) { return SlopeContext(Geometry::single(1, 1, d), Rational(mu)); }

GammaElement seed_key(std::size_t arity) { return GammaElement{1, EffectiveClass::zero(arity), 0}; }

} // namespace

TEST(EulerPairing, Examples)
{
    const Geometry g({Generator{"A", 1, 3}, Generator{"B", 2, 1}}, 6);
    const GammaElement v{0, EffectiveClass{1, 2}, 0};
    EXPECT_EQ(euler_pairing(g, v, seed_key(2)), g.h_degree(v.beta));
    EXPECT_EQ(euler_pairing(g, v, v), 0);
    const auto c = Geometry::single(1, 1, 4);
    EXPECT_EQ(euler_pairing(c, GammaElement{2, C(3), 3}, GammaElement{1, C(1), 1}), 1);
    EXPECT_EQ(euler_pairing(c, GammaElement{1, C(1), 1}, GammaElement{2, C(3), 3}), -1);
}

TEST(LieBracket, GeneratorWithSeed)
{
    const SlopeContext ctx(Geometry::single(1, 3, 4), Rational(1));
    for (std::int64_t m = 1; m <= 4; ++m) {
        const auto x = LieElement::basis(ctx, GammaElement{0, C(m), m});
        const auto y = LieElement::basis(ctx, seed_key(1));
        const auto h = 3 * m;
        EXPECT_EQ(lie_bracket(x, y), LieElement::basis(ctx, GammaElement{1, C(m), m}, Rational(sign_power(h) * h)));
    }
}

TEST(LieBracket, SelfBracketVanishes)
{
    const auto ctx = conifold(1, 3);
    auto x = LieElement::basis(ctx, GammaElement{1, C(1), 1}, Rational(2));
    x.add_term(GammaElement{0, C(2), 2}, Rational(-1, 3));
    EXPECT_TRUE(lie_bracket(x, x).is_zero());
}

TEST(LieBracket, TruncationIdealKillsHighDegree)
{
    const auto ctx = conifold(1, 1);
    const auto x = LieElement::basis(ctx, GammaElement{0, C(1), 1});
    const auto y = LieElement::basis(ctx, GammaElement{1, C(1), 1});
    // chi = 1 * 1 - 0 = 1, but 2[C] has omega-degree 2 > d = 1.
    EXPECT_TRUE(lie_bracket(x, y).is_zero());
    const auto wide = conifold(1, 2);
    EXPECT_FALSE(lie_bracket(LieElement::basis(wide, GammaElement{0, C(1), 1}),
                             LieElement::basis(wide, GammaElement{1, C(1), 1}))
                     .is_zero());
}

TEST(LieElement, RejectsOffSlopeKeys)
{
    const auto ctx = conifold(1, 3);
    LieElement e(ctx);
    EXPECT_THROW(e.add_term(GammaElement{0, C(1), 2}, Rational(1)), inadmissible_key);
    EXPECT_THROW(e.add_term(GammaElement{1, C(0), 1}, Rational(1)), inadmissible_key);
    EXPECT_THROW(e.add_term(GammaElement{-1, C(1), 1}, Rational(1)), inadmissible_key);
    EXPECT_THROW(lie_bracket(e, LieElement(conifold(2, 3))), geometry_mismatch);
}

TEST(AdExp, ZeroGeneratorReturnsSeed)
{
    const auto ctx = conifold(1, 3);
    const auto seed = LieElement::basis(ctx, seed_key(1));
    EXPECT_EQ(ad_exp(LieElement(ctx), seed), seed);
}

TEST(AdExp, ConifoldDegreeTwo)
{
    const auto ctx = conifold(1, 2);
    LieElement E(ctx);
    for (std::int64_t m = 1; m <= 2; ++m) {
        E.add_term(GammaElement{0, C(m), m}, Rational(-1, m * m));
    }
    const auto out = ad_exp(E, LieElement::basis(ctx, seed_key(1)));
    // [-c_(0,C,1), c_(1,0,0)] = -(-1)^1 * 1 * c_(1,C,1)
    EXPECT_EQ(out.coefficient(GammaElement{1, C(1), 1}), Rational(1));
    EXPECT_EQ(out.coefficient(GammaElement{1, C(2), 2}), Rational(0));
    EXPECT_EQ(out.coefficient(seed_key(1)), Rational(1));
}

TEST(AdExp, SingleTopDegreeTermStopsAfterOneBracket)
{
    const auto ctx = conifold(1, 3);
    const auto E = LieElement::basis(ctx, GammaElement{0, C(3), 3}, Rational(5));
    const auto seed = LieElement::basis(ctx, seed_key(1));
    EXPECT_EQ(ad_exp(E, seed), seed + lie_bracket(E, seed));
}

TEST(AdExp, NonPositiveSupportThrows)
{
    const auto ctx = conifold(1, 3);
    const auto E = LieElement::basis(ctx, seed_key(1));
    EXPECT_THROW(ad_exp(E, E), non_positive_support);
}

TEST(LieTransformCheck, ConifoldMultipleCoverTable)
{
    for (std::int64_t mu : {0, 1, 2}) {
        const auto ctx = conifold(mu, 4);
        InvariantTable N(ctx.geometry());
        for (std::int64_t m = 1; m <= 4; ++m) {
            N.set(mu * m, C(m), Rational(1, m * m));
        }
        const auto report = lie_transform_check(ctx, N);
        EXPECT_TRUE(report.all_ok()) << to_tsv(report);
        EXPECT_EQ(report.expansion.coefficient(GammaElement{1, C(1), mu}), Rational(1));
        for (std::int64_t m = 2; m <= 4; ++m) {
            EXPECT_EQ(report.expansion.coefficient(GammaElement{1, C(m), mu * m}), Rational(0));
        }
    }
}

TEST(LieTransformCheck, EmptyTable)
{
    const auto ctx = conifold(1, 3);
    const auto report = lie_transform_check(ctx, InvariantTable(ctx.geometry()));
    EXPECT_EQ(report.expansion, LieElement::basis(ctx, seed_key(1)));
    EXPECT_TRUE(report.all_ok());
    for (const auto& row : report.rows) {
        if (!row.beta.is_zero()) {
            EXPECT_TRUE(row.dt_par.is_zero());
        }
    }
    EXPECT_EQ(to_tsv(report.expansion), "1\t[0]\t0\t1\n");
}

TEST(LieTransformCheck, RandomOneGeneratorDegreeFive)
{
    random::Engine rng(41);
    for (int i = 0; i < 30; ++i) {
        const SlopeContext ctx(Geometry::single(1, random::uniform(rng, 1, 3), 5), random::slope(rng));
        const auto N = random::admissible_table(rng, ctx);
        EXPECT_TRUE(lie_transform_check(ctx, N).all_ok());
    }
}

TEST(LieProperties, AxiomsOnRandomTriples)
{
    const auto r = verify::lie_axioms_suite(verify::SuiteOptions{43, 5, 1.0}, 200);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(LieProperties, BracketGrading)
{
    random::Engine rng(44);
    for (int i = 0; i < 200; ++i) {
        const auto g = random::geometry(rng, 2, 5);
        const SlopeContext ctx(g, random::slope(rng));
        const auto x = random::lie_element(rng, ctx);
        const auto y = random::lie_element(rng, ctx);
        for (const auto& [kx, cx] : x.terms()) {
            for (const auto& [ky, cy] : y.terms()) {
                const auto bx = LieElement::basis(ctx, kx.gamma());
                const auto by = LieElement::basis(ctx, ky.gamma());
                const auto bracket = lie_bracket(bx, by);
                for (const auto& [k, c] : bracket.terms()) {
                    EXPECT_EQ(k.r, kx.r + ky.r);
                    EXPECT_EQ(k.beta, kx.beta + ky.beta);
                    EXPECT_EQ(k.n, kx.n + ky.n);
                }
            }
        }
    }
}

TEST(LieProperties, AgreesWithProductFormula)
{
    const auto r = verify::lie_transform_suite(verify::SuiteOptions{45, 5, 1.0}, 30);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
}
