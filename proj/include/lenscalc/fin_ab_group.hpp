#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lenscalc/integer.hpp"

namespace lenscalc
{
    /// Finitely generated abelian group Z^r + Z/t_1 + ... + Z/t_s in
    /// invariant-factor form: every t_i >= 2 and t_i | t_{i+1}. Two values
    /// are equal iff the groups are isomorphic.
    class FinAbGroup
    {
    public:
        FinAbGroup() = default;

        /// Canonical form of Z^free_rank + sum of Z/orders[i]. Orders equal
        /// to 1 are dropped; zero or negative orders are rejected.
        static FinAbGroup from_orders(std::span<const Integer> orders, std::size_t free_rank = 0);
        static FinAbGroup free(std::size_t rank) { return from_orders({}, rank); }
        static FinAbGroup cyclic(const Integer &order);

        std::size_t free_rank() const noexcept { return free_rank_; }
        const std::vector<Integer> &torsion() const noexcept { return torsion_; }

        bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
        bool is_finite() const noexcept { return free_rank_ == 0; }

        /// Order of the torsion subgroup.
        Integer torsion_order() const;
        /// Exponent of the torsion subgroup (1 when torsion-free).
        Integer exponent() const;

        /// p-primary part of the torsion subgroup.
        FinAbGroup primary_part(unsigned long p) const;
        /// Torsion subgroup with all 2-primary torsion removed.
        FinAbGroup odd_torsion() const;

        FinAbGroup operator+(const FinAbGroup &other) const;

        friend bool operator==(const FinAbGroup &, const FinAbGroup &) = default;

        /// "0", "Z", "Z^3 ⊕ Z/2 ⊕ Z/12", ...
        std::string to_string() const;

    private:
        std::size_t free_rank_ = 0;
        std::vector<Integer> torsion_;
    };

    FinAbGroup fin_ab_from_orders(std::span<const Integer> orders, std::size_t free_rank);
}
