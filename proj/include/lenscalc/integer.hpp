#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include <gmpxx.h>

namespace lenscalc
{
    using Integer = mpz_class;
    using Rational = mpq_class;

    /// Builds num/den in lowest terms with a positive denominator.
    Rational make_rational(const Integer &num, const Integer &den = 1);

    Integer gcd(const Integer &a, const Integer &b);
    Integer lcm(const Integer &a, const Integer &b);
    Integer pow(const Integer &base, unsigned long exp);
    Integer abs(const Integer &x);

    /// Largest power of p dividing x (x != 0).
    unsigned long valuation(const Integer &x, unsigned long p);

    /// x with every factor of 2 removed; 0 stays 0.
    Integer odd_part(const Integer &x);

    std::optional<std::int64_t> to_int64(const Integer &x);

    std::string to_string(const Integer &x);
    std::string to_string(const Rational &x);

    /// Least common multiple of all denominators (1 for an empty range).
    Integer common_denominator(std::span<const Rational> values);
}
