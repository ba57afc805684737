#include "lenscalc/rep_ring.hpp"
#include "lenscalc/errors.hpp"

#include <numeric>

namespace lenscalc
{
    const char *to_string(Sign s)
    {
        return s == Sign::Plus ? "+" : "-";
    }

    CharClass CharClass::zero(std::size_t N)
    {
        return CharClass{N, std::vector<Integer>(N, Integer(0))};
    }

    CharClass CharClass::character(std::size_t N, std::size_t m)
    {
        CharClass x = zero(N);
        x.coeffs.at(m % N) = 1;
        return x;
    }

    CharClass CharClass::regular(std::size_t N)
    {
        return CharClass{N, std::vector<Integer>(N, Integer(1))};
    }

    CharClass CharClass::operator+(const CharClass &o) const
    {
        if (o.modulus != modulus)
            throw DimensionMismatch("characters of different groups");
        CharClass r = *this;
        for (std::size_t m = 0; m < modulus; ++m)
            r.coeffs[m] += o.coeffs[m];
        return r;
    }

    CharClass CharClass::operator*(const Integer &c) const
    {
        CharClass r = *this;
        for (auto &x : r.coeffs)
            x *= c;
        return r;
    }

    CharClass involution(const CharClass &x)
    {
        const std::size_t N = x.modulus;
        CharClass r = CharClass::zero(N);
        for (std::size_t m = 0; m < N; ++m)
            r.coeffs[(N - m) % N] = x.coeffs[m];
        return r;
    }

    CharClass restriction(std::size_t U, const CharClass &x)
    {
        if (U == 0 || x.modulus % U != 0)
            throw NotADivisor(std::to_string(U) + " does not divide " + std::to_string(x.modulus));
        CharClass r = CharClass::zero(U);
        for (std::size_t j = 0; j < x.modulus; ++j)
            r.coeffs[j % U] += x.coeffs[j];
        return r;
    }

    ReducedCharCoords reduced_coords(const CharClass &x)
    {
        ReducedCharCoords r{x.modulus, {}};
        for (std::size_t m = 1; m < x.modulus; ++m)
            r.coords.emplace_back(x.coeffs[m] - x.coeffs[0]);
        return r;
    }

    std::size_t reduced_eigenspace_rank(std::size_t N, Sign sign)
    {
        if (N < 2)
            throw std::invalid_argument("reduced representation ring needs N >= 2");
        if (N % 2 == 1)
            return (N - 1) / 2;
        return sign == Sign::Plus ? N / 2 : N / 2 - 1;
    }

    EigenLatticeSpec eigen_lattice(std::size_t N, Sign sign, const Integer &scale)
    {
        if (N < 2)
            throw std::invalid_argument("eigen lattice needs N >= 2");
        // In b-coordinates the involution is the permutation b_m -> b_{N-m}
        // (b_0 = 0), so the integral eigenspace is ker(I - sign * P).
        const std::size_t n = N - 1;
        IntMatrix A(n, n);
        const int s = to_int(sign);
        for (std::size_t m = 1; m < N; ++m)
        {
            A(m - 1, m - 1) += 1;
            A(m - 1, N - m - 1) -= s;
        }
        Lattice L = lattice_kernel(A);
        return EigenLatticeSpec{N, sign, scale, scale_lattice(L, scale)};
    }

    bool in_eigenspace(const ReducedCharCoords &x, Sign sign)
    {
        const std::size_t N = x.modulus;
        for (std::size_t m = 1; m < N; ++m)
        {
            const Rational &a = x.coords[m - 1];
            const Rational &b = x.coords[N - m - 1];
            if (sign == Sign::Plus ? a != b : a != -b)
                return false;
        }
        return true;
    }

    ClassFunction character_values(const CharClass &x, const FieldPtr &field)
    {
        const std::size_t N = x.modulus;
        if (field->conductor() != N)
            throw DimensionMismatch("character values need the field Q(zeta_N)");
        ClassFunction v{N, {}};
        for (std::size_t j = 1; j < N; ++j)
        {
            CycloElem value = CycloElem::zero(field);
            for (std::size_t m = 0; m < N; ++m)
                if (x.coeffs[m] != 0)
                    value = value + CycloElem::zeta_power(field, static_cast<long>(j * m)) *
                                        Rational(x.coeffs[m]);
            v.values.push_back(std::move(value));
        }
        return v;
    }

    bool is_galois_equivariant(const ClassFunction &v)
    {
        const long N = static_cast<long>(v.modulus);
        for (long s = 2; s < N; ++s)
        {
            if (std::gcd(s, N) != 1)
                continue;
            for (long j = 1; j < N; ++j)
            {
                const long target = (s * j) % N;
                if (!(v.at(static_cast<std::size_t>(target)) == v.at(static_cast<std::size_t>(j)).galois_apply(s)))
                    return false;
            }
        }
        return true;
    }

    ReducedCharCoords values_to_reduced_coords(const ClassFunction &v)
    {
        const std::size_t N = v.modulus;
        if (v.values.size() + 1 != N)
            throw DimensionMismatch("class function must have N-1 values");
        ReducedCharCoords out{N, {}};
        if (N < 2)
            return out;
        const FieldPtr &field = v.values.front().field();
        const CycloElem one = CycloElem::from_rational(field, 1);
        const Rational inv_N = make_rational(1, static_cast<unsigned long>(N));
        for (std::size_t m = 1; m < N; ++m)
        {
            CycloElem acc = CycloElem::zero(field);
            for (std::size_t j = 1; j < N; ++j)
            {
                const CycloElem &value = v.values[j - 1];
                if (value.is_zero())
                    continue;
                const long e = -static_cast<long>((j * m) % N);
                acc = acc + value * (CycloElem::zeta_power(field, e) - one);
            }
            acc = acc * inv_N;
            if (!acc.is_rational())
                throw NonRationalCoefficient("Fourier coefficient " + std::to_string(m) + " of a class function on Z/" +
                                             std::to_string(N) + " is not rational: " + acc.to_string());
            out.coords.push_back(acc.rational_value());
        }
        return out;
    }

    ClassFunction restrict_class_function(std::size_t U, const ClassFunction &v)
    {
        const std::size_t N = v.modulus;
        if (U < 2 || N % U != 0)
            throw NotADivisor(std::to_string(U) + " is not a divisor >= 2 of " + std::to_string(N));
        const FieldPtr small = U == N ? v.values.front().field() : make_cyclotomic_field(U);
        const std::size_t step = N / U;
        ClassFunction out{U, {}};
        for (std::size_t j = 1; j < U; ++j)
            out.values.push_back(descend(v.at(j * step), small));
        return out;
    }
}
