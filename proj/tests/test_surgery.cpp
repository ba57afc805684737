#include <doctest.h>

#include "lenscalc/errors.hpp"
#include "lenscalc/surgery_tables.hpp"

using namespace lenscalc;

namespace
{
    FinAbGroup group(std::vector<long> orders, std::size_t free_rank = 0)
    {
        std::vector<Integer> xs(orders.begin(), orders.end());
        return FinAbGroup::from_orders(xs, free_rank);
    }
}

TEST_CASE("decomposition of N")
{
    CHECK(decompose_N(12).K == 2);
    CHECK(decompose_N(12).M == 3);
    CHECK(decompose_N(7).K == 0);
    CHECK(decompose_N(7).M == 7);
    CHECK(decompose_N(8).K == 3);
    CHECK(decompose_N(8).M == 1);
    CHECK_THROWS_AS(decompose_N(1), UnsupportedParams);
    CHECK_THROWS_AS(Params::make(4, 1, 0), UnsupportedParams);
    CHECK_THROWS_AS(Params::make(4, 3, -1), UnsupportedParams);
}

TEST_CASE("counting functions")
{
    CHECK(c_N(4, 2) == 1);
    CHECK(c_N(5, 2) == 2);
    CHECK(c_N(4, 3) == 2);
    CHECK(c_2(5, 2) == 2);
    CHECK(c_2(4, 2) == 1);
    CHECK(c_2_odd(4, 3) == 1);
    for (long d = 2; d <= 12; ++d)
        for (long k = 0; k <= 5; ++k)
        {
            const long e = d / 2;
            CHECK(c_N(d, k) == ((d % 2 == 0 && k % 2 == 0) ? e - 1 : e));
            CHECK(c_2(d, k) == ((d % 2 == 1 && k % 2 == 0) ? e : e - 1));
            CHECK(c_2_odd(d, k) == ((d % 2 == 0 && k % 2 == 1) ? e - 1 : e));
        }
}

TEST_CASE("L-groups")
{
    CHECK(l_group(6, 3).group() == group({2}));
    CHECK(l_group(7, 3).group().is_trivial());
    CHECK(l_group(2, 2).group() == group({2}));
    CHECK(l_group(5, 1).group().is_trivial());
    // n = 0 mod 4: self-conjugate characters plus pairs
    CHECK(l_group(6, 0).group() == FinAbGroup::free(4));
    CHECK(l_group(5, 4).group() == FinAbGroup::free(3));
    CHECK(l_group(6, 2).group() == group({2}, 2));
}

TEST_CASE("normal invariants")
{
    const auto odd = normal_invariants(4, 3, 1);
    CHECK(odd.known_part() == group({2}));
    CHECK(odd.tf_rank == 0);
    const auto even = normal_invariants(6, 5, 4);
    CHECK(even.m_part_order == 9);
    CHECK(even.tf_rank == 1);
    CHECK(normal_invariants(6, 5, 2).tf_rank == 0);
    CHECK_THROWS_AS(normal_invariants(7, 3, 1), UnsupportedParams);
}

TEST_CASE("kernel closed forms")
{
    CHECK(kernel_closed_form(4, 5, 0) == group({4, 4, 2, 2}, 1));
    CHECK(kernel_closed_form(2, 4, 2) == group({2, 2}, 1));
    CHECK(kernel_closed_form(8, 4, 3) == group({4, 8, 2, 2}));
    CHECK(kbar_closed_form(8, 5, 0) == group({4, 8, 8, 2, 2}));
    CHECK(kbar_closed_form(2, 4, 0) == group({2, 2, 2}));
    CHECK(kbar_closed_form(8, 4, 3) == kernel_closed_form(8, 4, 3));
    CHECK(kernel_closed_form(9, 4, 0) == FinAbGroup::free(1));
    CHECK(kernel_closed_form(9, 4, 1).is_trivial());
    CHECK(kbar_closed_form(9, 4, 0).is_trivial());
}

TEST_CASE("structure sets of L x D^m")
{
    const auto a = structure_set_disk(6, 2, 4);
    CHECK(a.total() == FinAbGroup::free(4));
    CHECK(a.case_label == CaseLabel::EvenDEvenK);

    const auto b = structure_set_disk(4, 4, 2);
    CHECK(b.total() == group({2, 4, 4, 2}, 1));
    CHECK(b.components() == "F⁻=Z¹; Z/2; Z/4⊕Z/4; Z/2");
    CHECK(std::string(to_string(b.case_label)) == "d=2e,k=2l+1");

    for (long N : {2, 4, 6, 8, 12, 16})
    {
        const auto c = structure_set_disk(N, 3, 3);
        CHECK(c.total() == group({2}));
        CHECK(c.case_label == CaseLabel::OddDisk);
    }
    CHECK_THROWS_AS(structure_set_disk(7, 3, 3), UnsupportedParams);
    CHECK_THROWS_AS(structure_set_disk(4, 3, 0), UnsupportedParams);

    const auto odd_n = structure_set_disk(5, 3, 2);
    CHECK(odd_n.derived_odd_n);
    CHECK(odd_n.t_prime_orders.empty());

    // k = 0 in the odd-disk line: m = 1
    CHECK(structure_set_disk(4, 4, 1).total() == group({2, 2}));
    CHECK(structure_set_disk(4, 5, 1).total() == group({2, 2}));
    CHECK(structure_set_disk(4, 4, 3).total() == group({2}));

    for (long d = 2; d <= 7; ++d)
        for (long m = 2; m <= 8; m += 2)
        {
            const auto s = structure_set_disk(8, d, m);
            CHECK(s.t_prime_orders.size() == static_cast<std::size_t>(c_N(d, m / 2)));
            CHECK(s.f_sign == sign_of_parity(d + m / 2));
            CHECK(case_label_from_string(to_string(s.case_label)) == s.case_label);
        }
}

TEST_CASE("structure sets of L x S^m")
{
    const auto s = structure_set_product_sphere(6, 5, 4);
    CHECK(s.t2k_count == 2);
    CHECK(s.t2k_order == 2);
    CHECK(s.t2_count == 2);
    CHECK(s.declared_odd_order == 9);
    CHECK(s.total() == s.disk.total() + group({2, 2, 2, 2}));
    CHECK(structure_set_product_sphere(8, 5, 3).t2k_order == 8);
    CHECK_THROWS_AS(structure_set_product_sphere(7, 5, 4), UnsupportedParams);
}
