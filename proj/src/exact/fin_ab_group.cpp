#include "lenscalc/fin_ab_group.hpp"
#include "lenscalc/smith.hpp"

#include <stdexcept>

namespace lenscalc
{
    FinAbGroup FinAbGroup::from_orders(std::span<const Integer> orders, std::size_t free_rank)
    {
        std::vector<Integer> nontrivial;
        for (const auto &o : orders)
        {
            if (o <= 0)
                throw std::invalid_argument("cyclic order must be positive, got " + o.get_str());
            if (o != 1)
                nontrivial.push_back(o);
        }
        FinAbGroup g;
        g.free_rank_ = free_rank;
        const SmithForm s = snf(IntMatrix::diagonal(nontrivial));
        for (const auto &f : s.invariant_factors())
            if (f != 1)
                g.torsion_.push_back(f);
        return g;
    }

    FinAbGroup FinAbGroup::cyclic(const Integer &order)
    {
        const Integer o[] = {order};
        return from_orders(o, 0);
    }

    Integer FinAbGroup::torsion_order() const
    {
        Integer p = 1;
        for (const auto &t : torsion_)
            p *= t;
        return p;
    }

    Integer FinAbGroup::exponent() const
    {
        return torsion_.empty() ? Integer(1) : torsion_.back();
    }

    FinAbGroup FinAbGroup::primary_part(unsigned long p) const
    {
        std::vector<Integer> parts;
        for (const auto &t : torsion_)
            parts.push_back(lenscalc::pow(Integer(p), valuation(t, p)));
        return from_orders(parts, 0);
    }

    FinAbGroup FinAbGroup::odd_torsion() const
    {
        std::vector<Integer> parts;
        for (const auto &t : torsion_)
            parts.push_back(odd_part(t));
        return from_orders(parts, 0);
    }

    FinAbGroup FinAbGroup::operator+(const FinAbGroup &other) const
    {
        std::vector<Integer> all = torsion_;
        all.insert(all.end(), other.torsion_.begin(), other.torsion_.end());
        return from_orders(all, free_rank_ + other.free_rank_);
    }

    std::string FinAbGroup::to_string() const
    {
        if (is_trivial())
            return "0";
        std::string s;
        if (free_rank_ > 0)
            s = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
        for (const auto &t : torsion_)
        {
            if (!s.empty())
                s += " ⊕ ";
            s += "Z/" + t.get_str();
        }
        return s;
    }

    FinAbGroup fin_ab_from_orders(std::span<const Integer> orders, std::size_t free_rank)
    {
        return FinAbGroup::from_orders(orders, free_rank);
    }
}
