#pragma once

#include <string>
#include <vector>

#include "lenscalc/integer.hpp"

namespace lenscalc
{
    /// Dense univariate polynomials, coefficient of x^i at index i, with no
    /// trailing zeros (the zero polynomial is empty).
    using IntPoly = std::vector<Integer>;
    using RatPoly = std::vector<Rational>;

    template <typename Poly>
    void trim(Poly &p)
    {
        while (!p.empty() && p.back() == 0)
            p.pop_back();
    }

    /// Degree, or -1 for the zero polynomial.
    template <typename Poly>
    long degree(const Poly &p)
    {
        return static_cast<long>(p.size()) - 1;
    }

    RatPoly to_rational(const IntPoly &p);

    RatPoly poly_add(const RatPoly &a, const RatPoly &b);
    RatPoly poly_sub(const RatPoly &a, const RatPoly &b);
    RatPoly poly_mul(const RatPoly &a, const RatPoly &b);

    struct RatDivision
    {
        RatPoly quotient;
        RatPoly remainder;
    };
    RatDivision poly_divmod(const RatPoly &a, const RatPoly &b);

    /// Exact division of integer polynomials by a monic divisor.
    IntPoly poly_divexact_monic(const IntPoly &a, const IntPoly &monic);

    /// s with s * a == 1 modulo m; throws when gcd(a, m) != 1.
    RatPoly poly_inverse_mod(const RatPoly &a, const RatPoly &m);

    /// The N-th cyclotomic polynomial, monic of degree phi(N).
    IntPoly cyclotomic_polynomial(unsigned long N);

    unsigned long euler_phi(unsigned long n);

    std::string to_string(const IntPoly &p);
}
