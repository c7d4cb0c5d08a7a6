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

#pragma once

#include <concepts>
#include <string>

#include <wallcross/laurent.hpp>
#include <wallcross/rational.hpp>
#include <wallcross/ratfun.hpp>

namespace wallcross {

/**
 * Commutative Q-algebra usable as the coefficient ring of a ConeSeries.
 *
 * A default-constructed value is zero and T(Rational(1)) is one. Rational,
 * LaurentPoly and RatFun all qualify.
 */
template <typename T>
concept CoefficientRing = std::regular<T> && std::constructible_from<T, Rational>
    && requires(const T a, const T b, const Rational r) {
           { a + b } -> std::convertible_to<T>;
           { a - b } -> std::convertible_to<T>;
           { -a } -> std::convertible_to<T>;
           { a * b } -> std::convertible_to<T>;
           { a * r } -> std::convertible_to<T>;
           { a.is_zero() } -> std::convertible_to<bool>;
           { to_string(a) } -> std::convertible_to<std::string>;
       };

template <CoefficientRing T>
T ring_one()
{
    return T(Rational(1));
}

/// Parser matching to_string for each shipped ring.
template <CoefficientRing T>
T parse_coefficient(std::string_view text);

template <>
inline Rational parse_coefficient<Rational>(std::string_view text)
{
    return Rational::parse(text);
}

template <>
inline LaurentPoly parse_coefficient<LaurentPoly>(std::string_view text)
{
    return parse_laurent(text);
}

template <>
inline RatFun parse_coefficient<RatFun>(std::string_view text)
{
    return parse_ratfun(text);
}

} // namespace wallcross
