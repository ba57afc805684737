#include "lenscalc/integer.hpp"
#include "lenscalc/errors.hpp"


namespace lenscalc
{
    Rational make_rational(const Integer &num, const Integer &den)
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    Integer gcd(const Integer &a, const Integer &b)
    {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }

    Integer lcm(const Integer &a, const Integer &b)
    {
        Integer l;
        mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return l;
    }

    Integer pow(const Integer &base, unsigned long exp)
    {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
        return r;
    }

    Integer abs(const Integer &x)
    {
        return x < 0 ? Integer(-x) : x;
    }

    unsigned long valuation(const Integer &x, unsigned long p)
    {
        if (x == 0)
            throw std::domain_error("valuation of zero");
        Integer y = x;
        unsigned long v = 0;
        while (mpz_divisible_ui_p(y.get_mpz_t(), p))
        {
            mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), p);
            ++v;
        }
        return v;
    }

    Integer odd_part(const Integer &x)
    {
        if (x == 0)
            return 0;
        Integer y = x;
        mpz_tdiv_q_2exp(y.get_mpz_t(), y.get_mpz_t(), mpz_scan1(x.get_mpz_t(), 0));
        return y;
    }

    std::optional<std::int64_t> to_int64(const Integer &x)
    {
        if (!x.fits_slong_p())
            return std::nullopt;
        return static_cast<std::int64_t>(x.get_si());
    }

    std::string to_string(const Integer &x) { return x.get_str(); }

    std::string to_string(const Rational &x) { return x.get_str(); }

    Integer common_denominator(std::span<const Rational> values)
    {
        Integer l = 1;
        for (const auto &v : values)
            l = lcm(l, v.get_den());
        return l;
    }

    VerificationFailure::VerificationFailure(long N, long d, long k, std::string check,
                                             std::string expected, std::string actual)
        : std::runtime_error("verification '" + check + "' failed at (N,d,k)=(" +
                             std::to_string(N) + "," + std::to_string(d) + "," +
                             std::to_string(k) + "): expected " + expected + ", got " + actual),
          N_(N), d_(d), k_(k), check_(std::move(check)), expected_(std::move(expected)),
          actual_(std::move(actual))
    {
    }
}
