#include <doctest.h>

#include "lenscalc/errors.hpp"
#include "lenscalc/rep_ring.hpp"

#include "oracles.hpp"

using namespace lenscalc;

namespace
{
    CharClass cls(std::size_t N, std::vector<Integer> coeffs)
    {
        CharClass x{N, std::move(coeffs)};
        x.coeffs.resize(N);
        return x;
    }

    std::vector<Rational> rats(std::initializer_list<long> xs)
    {
        std::vector<Rational> out;
        for (long x : xs)
            out.emplace_back(x);
        return out;
    }
}

TEST_CASE("involution sends chi^m to chi^{-m}")
{
    CHECK(involution(CharClass::character(4, 1)) == CharClass::character(4, 3));
    CHECK(involution(CharClass::character(4, 0)) == CharClass::character(4, 0));
    CHECK(involution(cls(6, {0, 1, 2})) == cls(6, {0, 0, 0, 0, 2, 1}));
}

TEST_CASE("restriction to subgroups")
{
    CHECK(restriction(3, CharClass::character(6, 4)) == CharClass::character(3, 1));
    CHECK(restriction(3, CharClass::regular(6)) == CharClass::regular(3) * 2);
    CHECK(restriction(4, CharClass::character(12, 7)) == CharClass::character(4, 3));
    CHECK_THROWS_AS(restriction(5, CharClass::regular(12)), NotADivisor);
}

TEST_CASE("reduced eigenspace ranks")
{
    CHECK(reduced_eigenspace_rank(6, Sign::Plus) == 3);
    CHECK(reduced_eigenspace_rank(6, Sign::Minus) == 2);
    CHECK(reduced_eigenspace_rank(5, Sign::Minus) == 2);
    for (std::size_t N = 2; N <= 20; ++N)
    {
        // orbits of m -> N - m on {1, ..., N-1}
        std::size_t pairs = 0, fixed = 0;
        for (std::size_t m = 1; m < N; ++m)
        {
            if (2 * m == N)
                ++fixed;
            else if (m < N - m)
                ++pairs;
        }
        CHECK(reduced_eigenspace_rank(N, Sign::Plus) == pairs + fixed);
        CHECK(reduced_eigenspace_rank(N, Sign::Minus) == pairs);
        for (Sign s : {Sign::Plus, Sign::Minus})
        {
            const EigenLatticeSpec L = eigen_lattice(N, s);
            CHECK(L.lattice.rank() == reduced_eigenspace_rank(N, s));
            for (std::size_t j = 0; j < L.lattice.rank(); ++j)
            {
                ReducedCharCoords c{N, {}};
                for (const auto &x : L.lattice.basis_vector(j))
                {
                    CHECK(x % 4 == 0);
                    c.coords.emplace_back(x);
                }
                CHECK(in_eigenspace(c, s));
            }
        }
    }
}

TEST_CASE("fourier inversion of class functions")
{
    const FieldPtr F4 = make_cyclotomic_field(4);
    const ClassFunction f{4, {CycloElem::zeta_power(F4, 1), CycloElem::zero(F4), CycloElem::zeta_power(F4, 3)}};
    const ReducedCharCoords c = values_to_reduced_coords(f);
    CHECK(c.coords == std::vector<Rational>{Rational(1, 2), Rational(0), Rational(-1, 2)});

    for (std::size_t N : {2u, 5u, 7u})
    {
        const FieldPtr F = make_cyclotomic_field(N);
        ClassFunction one{N, std::vector<CycloElem>(N - 1, CycloElem::from_rational(F, 1))};
        CHECK(values_to_reduced_coords(one).coords == std::vector<Rational>(N - 1, Rational(-1)));
        ClassFunction zero{N, std::vector<CycloElem>(N - 1, CycloElem::zero(F))};
        CHECK(values_to_reduced_coords(zero).coords == std::vector<Rational>(N - 1, Rational(0)));
    }

    ClassFunction bad{4, {CycloElem::zeta_power(F4, 1), CycloElem::zero(F4), CycloElem::zeta_power(F4, 1)}};
    CHECK_FALSE(is_galois_equivariant(bad));
    CHECK_THROWS_AS(values_to_reduced_coords(bad), NonRationalCoefficient);
}

TEST_CASE("character values round-trip through reduced coordinates")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(-4, 4);
    for (std::size_t N = 2; N <= 12; ++N)
    {
        const FieldPtr F = make_cyclotomic_field(N);
        for (int t = 0; t < 5; ++t)
        {
            std::vector<Integer> coeffs(N);
            for (auto &x : coeffs)
                x = c(rng);
            const CharClass x{N, coeffs};
            const ClassFunction v = character_values(x, F);
            CHECK(is_galois_equivariant(v));
            CHECK(values_to_reduced_coords(v) == reduced_coords(x));
            for (std::size_t j = 1; j < N; ++j)
            {
                std::complex<double> direct = 0;
                for (std::size_t m = 0; m < N; ++m)
                    direct += coeffs[m].get_d() * std::polar(1.0, 2 * std::numbers::pi * double(j * m) / double(N));
                CHECK(std::abs(oracle::evaluate(v.at(j)) - direct) < 1e-6);
            }
        }
    }
    CHECK(reduced_coords(CharClass::character(5, 0)).coords == rats({-1, -1, -1, -1}));
}

TEST_CASE("restricting class functions")
{
    const FieldPtr F4 = make_cyclotomic_field(4);
    const ClassFunction f{4, {CycloElem::zeta_power(F4, 1), CycloElem::zero(F4), CycloElem::zeta_power(F4, 3)}};
    const ClassFunction r = restrict_class_function(2, f);
    CHECK(r.modulus == 2);
    REQUIRE(r.values.size() == 1);
    CHECK(r.values[0].is_zero());

    const FieldPtr F6 = make_cyclotomic_field(6);
    const CharClass x = cls(6, {1, 2, 0, 3, 0, 5});
    const ClassFunction res = restrict_class_function(3, character_values(x, F6));
    CHECK(res == character_values(restriction(3, x), make_cyclotomic_field(3)));
}
