#include "lenscalc/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lenscalc
{
    RatPoly to_rational(const IntPoly &p)
    {
        RatPoly r;
        r.reserve(p.size());
        for (const auto &c : p)
            r.emplace_back(c);
        trim(r);
        return r;
    }

    RatPoly poly_add(const RatPoly &a, const RatPoly &b)
    {
        RatPoly r(std::max(a.size(), b.size()), Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i] += b[i];
        trim(r);
        return r;
    }

    RatPoly poly_sub(const RatPoly &a, const RatPoly &b)
    {
        RatPoly r(std::max(a.size(), b.size()), Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i)
            r[i] -= b[i];
        trim(r);
        return r;
    }

    RatPoly poly_mul(const RatPoly &a, const RatPoly &b)
    {
        if (a.empty() || b.empty())
            return {};
        RatPoly r(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            if (a[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] += a[i] * b[j];
        }
        trim(r);
        return r;
    }

    RatDivision poly_divmod(const RatPoly &a, const RatPoly &b)
    {
        if (b.empty())
            throw std::domain_error("polynomial division by zero");
        RatPoly rem = a;
        trim(rem);
        if (rem.size() < b.size())
            return {{}, rem};
        RatPoly quot(rem.size() - b.size() + 1, Rational(0));
        const Rational &lead = b.back();
        while (!rem.empty() && rem.size() >= b.size())
        {
            const std::size_t shift = rem.size() - b.size();
            const Rational q = rem.back() / lead;
            quot[shift] = q;
            for (std::size_t i = 0; i < b.size(); ++i)
                rem[shift + i] -= q * b[i];
            trim(rem);
        }
        trim(quot);
        return {quot, rem};
    }

    IntPoly poly_divexact_monic(const IntPoly &a, const IntPoly &monic)
    {
        if (monic.empty() || monic.back() != 1)
            throw std::invalid_argument("divisor is not monic");
        IntPoly rem = a;
        trim(rem);
        if (rem.size() < monic.size())
        {
            if (!rem.empty())
                throw std::domain_error("inexact polynomial division");
            return {};
        }
        IntPoly quot(rem.size() - monic.size() + 1, Integer(0));
        while (!rem.empty() && rem.size() >= monic.size())
        {
            const std::size_t shift = rem.size() - monic.size();
            const Integer q = rem.back();
            quot[shift] = q;
            for (std::size_t i = 0; i < monic.size(); ++i)
                rem[shift + i] -= q * monic[i];
            trim(rem);
        }
        if (!rem.empty())
            throw std::domain_error("inexact polynomial division");
        trim(quot);
        return quot;
    }

    RatPoly poly_inverse_mod(const RatPoly &a, const RatPoly &m)
    {
        // Extended Euclid tracking only the coefficient of a.
        RatPoly r0 = m, r1 = poly_divmod(a, m).remainder;
        RatPoly s0, s1 = {Rational(1)};
        while (!r1.empty())
        {
            RatDivision qr = poly_divmod(r0, r1);
            RatPoly s2 = poly_sub(s0, poly_mul(qr.quotient, s1));
            r0 = std::move(r1);
            r1 = std::move(qr.remainder);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.size() != 1)
            throw std::domain_error("polynomial is not invertible modulo the given modulus");
        const Rational inv = 1 / r0[0];
        for (auto &c : s0)
            c *= inv;
        return poly_divmod(s0, m).remainder;
    }

    unsigned long euler_phi(unsigned long n)
    {
        unsigned long result = n;
        for (unsigned long p = 2; p * p <= n; ++p)
        {
            if (n % p != 0)
                continue;
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
        if (n > 1)
            result -= result / n;
        return result;
    }

    IntPoly cyclotomic_polynomial(unsigned long N)
    {
        if (N == 0)
            throw std::invalid_argument("cyclotomic polynomial needs N >= 1");
        // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, building up over divisors.
        std::vector<unsigned long> divisors;
        for (unsigned long d = 1; d <= N; ++d)
            if (N % d == 0)
                divisors.push_back(d);
        std::map<unsigned long, IntPoly> phi;
        for (unsigned long n : divisors)
        {
            IntPoly p(n + 1, Integer(0));
            p[0] = -1;
            p[n] = 1;
            for (const auto &[d, q] : phi)
                if (n % d == 0)
                    p = poly_divexact_monic(p, q);
            phi.emplace(n, std::move(p));
        }
        return phi.at(N);
    }

    std::string to_string(const IntPoly &p)
    {
        if (p.empty())
            return "0";
        std::string s;
        for (std::size_t i = p.size(); i-- > 0;)
        {
            const Integer &c = p[i];
            if (c == 0)
                continue;
            const Integer a = abs(c);
            if (s.empty())
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            if (a != 1 || i == 0)
                s += a.get_str();
            if (i >= 1)
                s += "x";
            if (i >= 2)
                s += "^" + std::to_string(i);
        }
        return s;
    }
}
