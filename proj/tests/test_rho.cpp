#include <doctest.h>

#include "lenscalc/errors.hpp"
#include "lenscalc/rho_engine.hpp"
#include "lenscalc/surgery_tables.hpp"

#include "oracles.hpp"

using namespace lenscalc;

TEST_CASE("index windows")
{
    CHECK(index_set(4, 2) == std::vector<long>{1, 2});
    CHECK(index_set(5, 0) == std::vector<long>{0, 1});
    for (long d = 2; d <= 10; ++d)
        for (long k = 0; k <= 6; ++k)
        {
            const RhoBasis b = build_basis(d, k);
            const long expected = c_N(d, k) + (k % 2 == 0 ? 1 : 0);
            CHECK(static_cast<long>(b.size()) == expected);
            for (const auto &g : b.generators)
            {
                CHECK(g.exponent >= 1);
                CHECK(g.exponent % 2 == (d + k) % 2);
            }
        }
}

TEST_CASE("powers of f = (1+t)/(1-t)")
{
    const ClassFunction f = f_power_values(4, 1);
    const FieldPtr F = make_cyclotomic_field(4);
    CHECK(f.at(1) == CycloElem::zeta_power(F, 1));
    CHECK(f.at(2).is_zero());
    CHECK(f.at(3) == -CycloElem::zeta_power(F, 1));
    for (const auto &v : f_power_values(7, 0).values)
        CHECK(v == CycloElem::from_rational(v.field(), 1));
    CHECK(f_power_values(2, 1).at(1).is_zero());
    CHECK_THROWS_AS(f_power_values(5, -1), NegativeExponent);

    for (long N : {3, 5, 8, 12})
        for (long a = 1; a <= 4; ++a)
        {
            const ClassFunction v = f_power_values(N, a);
            for (long j = 1; j < N; ++j)
            {
                const auto t = std::polar(1.0, 2 * std::numbers::pi * double(j) / double(N));
                const auto expected = 2 * j == N ? std::complex<double>(0) : std::pow((1.0 + t) / (1.0 - t), double(a));
                CHECK(std::abs(oracle::evaluate(v.at(j)) - expected) < 1e-6);
            }
        }
}

TEST_CASE("rho columns")
{
    // N = 4, (d, k) = (5, 0): the odd exponent-1 column is 8 f.
    const RhoMap rho = rho_columns(4, 5, 0);
    REQUIRE(rho.basis.parity == ParityCase::Odd);
    bool found = false;
    for (std::size_t j = 0; j < rho.basis.size(); ++j)
        if (rho.basis.generators[j].exponent == 1)
        {
            CHECK(rho.columns[j].coords == std::vector<Rational>{4, 0, -4});
            found = true;
        }
    CHECK(found);
    for (long N : {3, 4, 6, 9, 12})
        for (long d = 2; d <= 6; ++d)
            for (long k = 0; k <= 3; ++k)
            {
                const RhoMap r = rho_columns(N, d, k);
                CHECK(r.sign == sign_of_parity(d + k));
                for (const auto &c : r.columns)
                    CHECK(in_eigenspace(c, r.sign));
            }
}

TEST_CASE("image anchors")
{
    CHECK(kernel_and_image(4, 5, 0).image.is_trivial());
    CHECK(kernel_and_image(8, 5, 0).image.torsion_order() == 2);
    CHECK(kernel_and_image(5, 5, 0).image.torsion_order() == 125);
    CHECK(kernel_and_image(3, 3, 0).image.torsion_order() == 9);
    CHECK(kernel_and_image(9, 4, 0).odd_order == 81);
    for (long d = 2; d <= 8; ++d)
        for (long k = 0; k <= 4; k += 2)
            CHECK(kernel_and_image(2, d, k).image.is_trivial());
    CHECK(predicted_image_order(8, 5, 0) == 2);
    CHECK(predicted_image_order(3, 3, 0) == 9);
    CHECK(predicted_image_order(2, 6, 2) == 1);
}

TEST_CASE("image order agrees with an orbit-closure count")
{
    for (long N : {2, 3, 4, 5, 6, 8, 9, 12})
        for (long d = 2; d <= 6; ++d)
            for (long k = 0; k <= 3; ++k)
            {
                const RhoMap rho = rho_columns(N, d, k);
                const auto brute = oracle::brute_image_order(rho);
                REQUIRE(brute);
                const KernelResult r = kernel_and_image(rho);
                CHECK(r.image.is_finite());
                CHECK(r.image.torsion_order() == Integer(static_cast<unsigned long>(*brute)));
            }
}

TEST_CASE("verifiers")
{
    CHECK(verify_eigenspace(12, 5, 2).passed());
    CHECK(verify_rationality(12, 5, 2).passed());
    CHECK(verify_transfer_compat(6, 3, 4, 1).passed());
    CHECK(verify_transfer_compat(6, 2, 4, 1).passed());
    CHECK(verify_transfer_compat(6, 6, 4, 1).passed());
    CHECK_THROWS_AS(verify_transfer_compat(6, 4, 4, 1), NotADivisor);
    CHECK(verify_splitting(12, 5, 0).passed());
    CHECK(verify_splitting(8, 5, 0).passed());
    CHECK(verify_factorization(12, 5, 0).passed());

    RhoOptions mutated;
    mutated.scale_first_column = true;
    CHECK(verify_factorization(5, 5, 0, mutated).passed());
    const auto bad = verify_factorization(8, 2, 0, mutated);
    CHECK_FALSE(bad.passed());
    CHECK_THROWS_AS(bad.raise_if_failed(), VerificationFailure);
    try
    {
        bad.raise_if_failed();
    }
    catch (const VerificationFailure &e)
    {
        CHECK(e.N() == 8);
        CHECK(e.d() == 2);
    }
}
