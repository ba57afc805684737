#include "lenscalc/surgery_tables.hpp"
#include "lenscalc/errors.hpp"

namespace lenscalc
{
    namespace
    {
        std::vector<Integer> repeat(const Integer &order, std::size_t count)
        {
            return std::vector<Integer>(count, order);
        }

        std::string superscript(std::size_t n)
        {
            static const char *digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
            std::string s;
            for (char ch : std::to_string(n))
                s += digits[ch - '0'];
            return s;
        }

        // "Z/4⊕Z/4", or "0" when empty.
        std::string direct_sum(const std::vector<Integer> &orders)
        {
            std::string s;
            for (const auto &o : orders)
            {
                if (o == 1)
                    continue;
                if (!s.empty())
                    s += "⊕";
                s += "Z/" + o.get_str();
            }
            return s.empty() ? "0" : s;
        }

        // T'_{2^K}: the orders 2^{min(2i, K)}, i = 1..count.
        std::vector<Integer> truncated_orders(unsigned long K, long count)
        {
            std::vector<Integer> out;
            for (long i = 1; i <= count; ++i)
                out.push_back(pow(Integer(2), std::min<unsigned long>(2 * static_cast<unsigned long>(i), K)));
            return out;
        }

        void require(bool ok, const std::string &what)
        {
            if (!ok)
                throw UnsupportedParams(what);
        }
    }

    Decomposition decompose_N(long N)
    {
        if (N < 2)
            throw UnsupportedParams("N must be at least 2, got " + std::to_string(N));
        Decomposition dec;
        auto rest = static_cast<unsigned long>(N);
        while (rest % 2 == 0)
        {
            rest /= 2;
            ++dec.K;
        }
        dec.M = rest;
        return dec;
    }

    Params Params::make(long N, long d, long k)
    {
        if (N < 2)
            throw UnsupportedParams("N must be at least 2, got " + std::to_string(N));
        if (d < 2)
            throw UnsupportedParams("d must be at least 2, got " + std::to_string(d));
        if (k < 0)
            throw UnsupportedParams("k must be nonnegative, got " + std::to_string(k));
        const Decomposition dec = decompose_N(N);
        return Params{N, dec.K, dec.M, d, k};
    }

    long c_N(long d, long k)
    {
        const long e = d / 2;
        return (d % 2 == 0 && k % 2 == 0) ? e - 1 : e;
    }

    long c_2(long d, long k)
    {
        const long e = d / 2;
        return (d % 2 == 1 && k % 2 == 0) ? e : e - 1;
    }

    long c_2_odd(long d, long k)
    {
        const long e = d / 2;
        return (d % 2 == 0 && k % 2 == 1) ? e - 1 : e;
    }

    FinAbGroup LGroupDescriptor::group() const
    {
        std::vector<Integer> t;
        if (arf || codim1_arf)
            t.push_back(2);
        return FinAbGroup::from_orders(t, free_rank);
    }

    std::optional<FinAbGroup> LGroupDescriptor::reduced_group() const
    {
        if (!reduced_free_rank)
            return std::nullopt;
        return FinAbGroup::free(*reduced_free_rank);
    }

    LGroupDescriptor l_group(long N, long n)
    {
        if (N < 2)
            throw UnsupportedParams("N must be at least 2");
        if (n < 0)
            throw UnsupportedParams("n must be nonnegative");
        const Decomposition dec = decompose_N(N);
        const auto uN = static_cast<std::size_t>(N);
        LGroupDescriptor g;
        g.N = N;
        g.n = n;
        g.n_mod_4 = static_cast<int>(n % 4);
        // Conjugation orbits on the characters: self-conjugate ones plus pairs.
        const std::size_t self_conjugate = uN % 2 == 0 ? 2 : 1;
        const std::size_t pairs = (uN - self_conjugate) / 2;
        switch (g.n_mod_4)
        {
        case 0:
            g.free_rank = self_conjugate + pairs;
            g.reduced_free_rank = reduced_eigenspace_rank(uN, Sign::Plus);
            break;
        case 2:
            g.free_rank = pairs;
            g.arf = true;
            g.reduced_free_rank = reduced_eigenspace_rank(uN, Sign::Minus);
            break;
        case 3:
            g.codim1_arf = dec.K >= 1;
            break;
        default:
            break;
        }
        return g;
    }

    FinAbGroup NormalInvariantDescriptor::known_part() const
    {
        std::vector<Integer> t = repeat(t4_order, t4_count);
        t.resize(t.size() + t2_count, Integer(2));
        return FinAbGroup::from_orders(t, tf_rank);
    }

    NormalInvariantDescriptor normal_invariants(long N, long d, long m, bool reduced)
    {
        require(m >= 0, "m must be nonnegative");
        const Params p = Params::make(N, d, m / 2);
        NormalInvariantDescriptor ni;
        ni.N = N;
        ni.d = d;
        ni.m = m;
        ni.reduced = reduced;
        ni.derived_odd_n = p.K == 0;
        const long k = p.k;
        if (m % 2 == 0)
        {
            ni.tf_rank = p.k_even() ? 1 : 0;
            ni.m_part_order = pow(Integer(p.M), static_cast<unsigned long>(p.c()));
            if (p.K == 0)
            {
                // Only L_{2k}(Z) survives 2-locally: Z for k even, Z/2 for k odd.
                ni.t2_count = p.k_even() ? 0 : 1;
                return ni;
            }
            ni.t4_count = static_cast<std::size_t>(c_N(d, k));
            ni.t4_order = pow(Integer(2), p.K);
            ni.t2_count = static_cast<std::size_t>(c_2(d, k) + (p.k_even() ? 0 : 1));
            // n = 2d - 1 + 2k = 3 mod 4: theta detects one more Z/2.
            const long n = 2 * d - 1 + 2 * k;
            if (!reduced && n % 4 == 3)
                ni.t2_count += 1;
            return ni;
        }
        require(p.K >= 1, "odd-disk normal invariants need N even");
        ni.t2_count = static_cast<std::size_t>(c_2_odd(d, k));
        // The Z summand maps injectively into L_{2d+2k} and leaves the reduced group.
        if (!reduced && (d + k) % 2 == 0)
            ni.tf_rank = 1;
        return ni;
    }

    FinAbGroup kernel_closed_form(long N, long d, long k)
    {
        const Params p = Params::make(N, d, k);
        if (p.K == 0)
            return p.k_even() ? FinAbGroup::free(1) : FinAbGroup{};
        std::vector<Integer> t = truncated_orders(p.K, c_N(d, k));
        const long twos = c_2(d, k) + (p.k_even() ? 0 : 1);
        t.resize(t.size() + static_cast<std::size_t>(twos), Integer(2));
        return FinAbGroup::from_orders(t, p.k_even() ? 1 : 0);
    }

    FinAbGroup kbar_closed_form(long N, long d, long k)
    {
        const Params p = Params::make(N, d, k);
        if (!p.k_even())
            return kernel_closed_form(N, d, k);
        if (p.K == 0)
            return {};
        std::vector<Integer> t = truncated_orders(p.K, c_N(d, k) + 1);
        t.resize(t.size() + static_cast<std::size_t>(c_2(d, k)), Integer(2));
        return FinAbGroup::from_orders(t, 0);
    }

    const char *to_string(CaseLabel c)
    {
        switch (c)
        {
        case CaseLabel::EvenDEvenK:
            return "d=2e,k=2l";
        case CaseLabel::EvenDOddK:
            return "d=2e,k=2l+1";
        case CaseLabel::OddDEvenK:
            return "d=2e+1,k=2l";
        case CaseLabel::OddDOddK:
            return "d=2e+1,k=2l+1";
        case CaseLabel::OddDisk:
            return "odd-disk";
        }
        return "?";
    }

    std::optional<CaseLabel> case_label_from_string(const std::string &s)
    {
        for (auto c : {CaseLabel::EvenDEvenK, CaseLabel::EvenDOddK, CaseLabel::OddDEvenK, CaseLabel::OddDOddK,
                       CaseLabel::OddDisk})
            if (s == to_string(c))
                return c;
        return std::nullopt;
    }

    const char *to_string(ExtraSummand e)
    {
        switch (e)
        {
        case ExtraSummand::Z:
            return "Z";
        case ExtraSummand::Z2:
            return "Z/2";
        case ExtraSummand::None:
            break;
        }
        return "none";
    }

    FinAbGroup StructureSetDescriptor::total() const
    {
        std::vector<Integer> t = t_prime_orders;
        t.resize(t.size() + t2_count, Integer(2));
        std::size_t free = f_rank;
        if (extra == ExtraSummand::Z)
            ++free;
        else if (extra == ExtraSummand::Z2)
            t.push_back(2);
        return FinAbGroup::from_orders(t, free);
    }

    std::string StructureSetDescriptor::components() const
    {
        const std::string t2 = direct_sum(repeat(2, t2_count));
        if (case_label == CaseLabel::OddDisk)
            return t2;
        std::string s = std::string("F") + (f_sign == Sign::Plus ? "⁺" : "⁻") + "=Z" + superscript(f_rank);
        s += "; ";
        s += to_string(extra);
        if (!derived_odd_n)
        {
            s += "; " + direct_sum(t_prime_orders);
            s += "; " + t2;
        }
        return s;
    }

    StructureSetDescriptor structure_set_disk(long N, long d, long m)
    {
        require(m >= 1, "structure set of L x D^m needs m >= 1");
        const Params p = Params::make(N, d, m / 2);
        StructureSetDescriptor s;
        s.N = N;
        s.d = d;
        s.m = m;
        s.derived_odd_n = p.K == 0;
        if (m % 2 == 1)
        {
            require(p.K >= 1, "odd-disk structure set needs N even");
            s.case_label = CaseLabel::OddDisk;
            s.t2_count = static_cast<std::size_t>(c_2_odd(d, p.k));
            return s;
        }
        if (p.d_even())
            s.case_label = p.k_even() ? CaseLabel::EvenDEvenK : CaseLabel::EvenDOddK;
        else
            s.case_label = p.k_even() ? CaseLabel::OddDEvenK : CaseLabel::OddDOddK;
        s.f_sign = p.sign();
        s.f_rank = reduced_eigenspace_rank(static_cast<std::size_t>(N), s.f_sign);
        s.extra = p.k_even() ? ExtraSummand::Z : ExtraSummand::Z2;
        if (p.K == 0)
            return s;
        s.t_prime_orders = truncated_orders(p.K, c_N(d, p.k));
        s.t2_count = static_cast<std::size_t>(c_2(d, p.k));
        return s;
    }

    FinAbGroup SphereStructureDescriptor::total() const
    {
        std::vector<Integer> t = repeat(t2k_order, t2k_count);
        t.resize(t.size() + t2_count, Integer(2));
        return disk.total() + FinAbGroup::from_orders(t, 0);
    }

    std::string SphereStructureDescriptor::components() const
    {
        return disk.components() + " | " + direct_sum(repeat(t2k_order, t2k_count)) + "; " +
               direct_sum(repeat(2, t2_count)) + "; |T_M|=" + declared_odd_order.get_str();
    }

    SphereStructureDescriptor structure_set_product_sphere(long N, long d, long m)
    {
        if (m % 2 == 0)
            require(m >= 4, "L x S^{2k} needs k >= 2");
        else
            require(m >= 3, "L x S^{2k+1} needs k >= 1");
        const Params p = Params::make(N, d, m / 2);
        require(p.K >= 1, "structure set of L x S^m needs N even");
        SphereStructureDescriptor s;
        s.disk = structure_set_disk(N, d, m);
        s.t2k_count = static_cast<std::size_t>(p.c());
        s.t2k_order = pow(Integer(2), p.K);
        s.t2_count = static_cast<std::size_t>(d / 2);
        s.declared_odd_order = pow(Integer(p.M), static_cast<unsigned long>(p.c()));
        return s;
    }
}
