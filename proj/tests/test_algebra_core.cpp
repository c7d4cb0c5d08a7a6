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

#include <wallcross/coefficient_ring.hpp>
#include <wallcross/laurent.hpp>
#include <wallcross/polynomial.hpp>
#include <wallcross/ratfun.hpp>
#include <wallcross/rational.hpp>
#include <wallcross/verify/suites.hpp>

using namespace wallcross;

namespace {

Polynomial P(std::string_view text) { return parse_polynomial(text); }

} // namespace

TEST(Rational, NormalizesSignAndLowestTerms)
{
    const Rational r(6, -4);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(4, 2).to_string(), "2");
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), zero_denominator); }

TEST(Rational, ParseRoundTrip)
{
    for (const char* s : {"0", "7", "-7", "1/3", "-22/7", "123456789012345678901234567891/7"}) {
        EXPECT_EQ(Rational::parse(s).to_string(), s);
    }
    EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
    EXPECT_THROW(Rational::parse("1/0"), zero_denominator);
    EXPECT_THROW(Rational::parse("abc"), parse_error);
    EXPECT_THROW(Rational::parse("1.5"), parse_error);
    EXPECT_THROW(Rational::parse(""), parse_error);
}

TEST(Rational, ExactArithmeticNeverRounds)
{
    Rational sum(0);
    for (int k = 1; k <= 30; ++k) {
        sum += Rational(1, k);
    }
    EXPECT_EQ(sum.to_string(), "9304682830147/2329089562800");
    EXPECT_EQ(Rational(1, 3) * Rational(3), Rational(1));
}

TEST(PolyGcd, CommonFactor) { EXPECT_EQ(poly_gcd(P("q^2 - 1"), P("q - 1")), P("-1 + q")); }

TEST(PolyGcd, WithZero)
{
    EXPECT_EQ(poly_gcd(P("2 + 4*q"), Polynomial()), P("1/2 + q"));
    EXPECT_EQ(poly_gcd(Polynomial(), Polynomial()), Polynomial());
}

TEST(PolyGcd, EuclideanByHand)
{
    const auto a = P("1 + q") * P("1 + q") * P("q");
    const auto b = P("1 + q") * P("q^3");
    EXPECT_EQ(poly_gcd(a, b), P("q") * P("1 + q"));
}

TEST(RatFunCanonical, Examples)
{
    const auto a = RatFun::canonical(P("2*q^2"), P("2*q"));
    EXPECT_EQ(a.numerator(), P("q"));
    EXPECT_EQ(a.denominator(), P("1"));

    const auto b = RatFun::canonical(P("q^2 - 1"), P("q + 1"));
    EXPECT_EQ(b.numerator(), P("q - 1"));
    EXPECT_EQ(b.denominator(), P("1"));

    const auto c = RatFun::canonical(P("q"), P("q^2 + 2*q + 1"));
    EXPECT_EQ(c.numerator(), P("q"));
    EXPECT_EQ(c.denominator(), P("1 + 2*q + q^2"));
    EXPECT_TRUE(poly_gcd(c.numerator(), c.denominator()).degree() == 0);
}

TEST(RatFunCanonical, MonicDenominator)
{
    const auto f = RatFun::canonical(P("3"), P("6 + 2*q"));
    EXPECT_TRUE(f.denominator().is_monic());
    EXPECT_EQ(f.numerator(), P("3/2"));
    EXPECT_EQ(f.denominator(), P("3 + q"));
}

TEST(RatFunCanonical, ZeroDenominatorThrows)
{
    EXPECT_THROW(RatFun::canonical(P("q"), Polynomial()), zero_denominator);
    EXPECT_THROW(RatFun(1) / RatFun(0), zero_denominator);
}

TEST(RatFunQInverse, Examples)
{
    const auto f = RatFun::canonical(P("q"), P("1 + 2*q + q^2"));
    EXPECT_EQ(f.q_inverse(), f);
    EXPECT_EQ(RatFun::monomial(Rational(1), 1).q_inverse(), RatFun::monomial(Rational(1), -1));
    EXPECT_EQ(RatFun(7).q_inverse(), RatFun(7));
    EXPECT_EQ(RatFun(0).q_inverse(), RatFun(0));
}

TEST(RatFun, RenderAndParse)
{
    const auto f = RatFun::canonical(P("q"), P("1 + 2*q + q^2"));
    EXPECT_EQ(to_string(f), "q / 1 + 2*q + q^2");
    EXPECT_EQ(parse_ratfun(to_string(f)), f);
    EXPECT_EQ(parse_ratfun("1/2*q^3"), RatFun::monomial(Rational(1, 2), 3));
    EXPECT_THROW(parse_ratfun("q / 0"), zero_denominator);
}

TEST(RatFun, LaurentDetection)
{
    const auto f = RatFun::monomial(Rational(2), -3) + RatFun(1);
    EXPECT_TRUE(f.is_laurent_polynomial());
    EXPECT_EQ(f.to_laurent(), LaurentPoly::monomial(Rational(2), -3) + LaurentPoly(1));
    EXPECT_FALSE(RatFun::canonical(P("q"), P("1 - q")).is_laurent_polynomial());
}

TEST(RatFun, LaurentExpansion)
{
    // q / (1 + q)^2 = sum_{j >= 1} (-1)^{j-1} j q^j
    const auto f = RatFun::canonical(P("q"), P("1 + 2*q + q^2"));
    const auto e = f.laurent_expansion(6);
    ASSERT_EQ(e.size(), 5u);
    for (std::int64_t j = 1; j < 6; ++j) {
        EXPECT_EQ(e.at(j), Rational(sign_power(j - 1) * j));
    }
    const auto g = RatFun::monomial(Rational(1), -2) * RatFun::canonical(P("1"), P("1 - q"));
    const auto ge = g.laurent_expansion(1);
    EXPECT_EQ(ge.size(), 3u);
    EXPECT_EQ(ge.begin()->first, -2);
}

TEST(LaurentPoly, RenderParseAndInvert)
{
    const auto p = parse_laurent("-q^-2 + 1/2 + 3*q");
    EXPECT_EQ(to_string(p), "-q^-2 + 1/2 + 3*q");
    EXPECT_EQ(p.q_inverse(), parse_laurent("3*q^-1 + 1/2 - q^2"));
    EXPECT_EQ(p.min_exponent(), -2);
    EXPECT_EQ(p.max_exponent(), 1);
    EXPECT_EQ(to_string(LaurentPoly()), "0");
}

TEST(LaurentPoly, MultiplicationIsConvolution)
{
    const auto a = parse_laurent("q^-1 + 1");
    const auto b = parse_laurent("q^-1 - 1");
    EXPECT_EQ(a * b, parse_laurent("q^-2 - 1"));
}

TEST(Polynomial, ParseErrors)
{
    EXPECT_THROW(parse_polynomial("q^-1"), parse_error);
    EXPECT_THROW(parse_polynomial("2q"), parse_error);
    EXPECT_THROW(parse_polynomial("x"), parse_error);
    EXPECT_THROW(parse_polynomial(""), parse_error);
}

TEST(CoefficientRing, ConceptHolds)
{
    static_assert(CoefficientRing<Rational>);
    static_assert(CoefficientRing<LaurentPoly>);
    static_assert(CoefficientRing<RatFun>);
    EXPECT_EQ(parse_coefficient<RatFun>("q / 1 + q"), RatFun::canonical(P("q"), P("1 + q")));
}

TEST(AlgebraProperties, RandomizedFieldAxiomsGcdAndEmbedding)
{
    const auto r = verify::algebra_suite(verify::SuiteOptions{11, 6, 1.0}, 300);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(r.cases, 300u);
}
