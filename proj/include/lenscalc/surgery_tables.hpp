#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lenscalc/fin_ab_group.hpp"
#include "lenscalc/rep_ring.hpp"

// Closed-form answers for the groups in the surgery exact sequence of
// L^{2d-1} x D^m and L^{2d-1} x S^m, L a fake lens space with fundamental
// group Z/N, N = 2^K * M with M odd.
namespace lenscalc
{
    struct Decomposition
    {
        unsigned long K = 0;
        unsigned long M = 1;
    };

    /// N = 2^K * M with M odd. Requires N >= 2.
    Decomposition decompose_N(long N);

    /// Dimension parameters of L^{2d-1} x D^{2k}: d = 2e or 2e+1, k = 2l or 2l+1.
    struct Params
    {
        long N = 2;
        unsigned long K = 1;
        unsigned long M = 1;
        long d = 2;
        long k = 0;

        /// Validates N >= 2, d >= 2, k >= 0.
        static Params make(long N, long d, long k);

        long e() const noexcept { return d / 2; }
        long l() const noexcept { return k / 2; }
        bool d_even() const noexcept { return d % 2 == 0; }
        bool k_even() const noexcept { return k % 2 == 0; }
        /// floor((d-1)/2)
        long c() const noexcept { return (d - 1) / 2; }
        Sign sign() const noexcept { return sign_of_parity(d + k); }
    };

    long c_N(long d, long k);
    long c_2(long d, long k);
    long c_2_odd(long d, long k);

    struct LGroupDescriptor
    {
        long N = 2;
        long n = 0;
        int n_mod_4 = 0;
        std::size_t free_rank = 0;
        bool arf = false;
        bool codim1_arf = false;
        /// Rank of the reduced group 4 * R~^{(-1)^{n/2}} for even n.
        std::optional<std::size_t> reduced_free_rank;

        FinAbGroup group() const;
        std::optional<FinAbGroup> reduced_group() const;
    };

    LGroupDescriptor l_group(long N, long n);

    struct NormalInvariantDescriptor
    {
        long N = 2;
        long d = 2;
        long m = 0;
        bool reduced = true;
        std::size_t tf_rank = 0;
        std::size_t t4_count = 0;
        Integer t4_order = 1;
        std::size_t t2_count = 0;
        Integer m_part_order = 1;
        bool derived_odd_n = false;

        /// Everything except the odd-order KO summand, whose order alone is known.
        FinAbGroup known_part() const;
    };

    /// Normal invariants of L^{2d-1} x D^m rel boundary; with `reduced` the
    /// kernel of theta into the L-group.
    NormalInvariantDescriptor normal_invariants(long N, long d, long m, bool reduced = true);

    /// K_N = ker [rho_N(d,k)] on the reduced normal invariants of L x D^{2k}.
    FinAbGroup kernel_closed_form(long N, long d, long k);

    /// Kernel of the factored map on the finite quotient (equals K_N for k odd).
    FinAbGroup kbar_closed_form(long N, long d, long k);

    enum class ExtraSummand
    {
        None,
        Z,
        Z2
    };

    enum class CaseLabel
    {
        EvenDEvenK,
        EvenDOddK,
        OddDEvenK,
        OddDOddK,
        OddDisk
    };

    const char *to_string(CaseLabel c);
    std::optional<CaseLabel> case_label_from_string(const std::string &s);
    const char *to_string(ExtraSummand e);

    /// Structure set of L^{2d-1} x D^m in the labeled decomposition
    /// F^sign + extra + T'_{2^K} + T_2 (even m) or T_2(odd) (odd m).
    struct StructureSetDescriptor
    {
        long N = 2;
        long d = 2;
        long m = 1;
        CaseLabel case_label = CaseLabel::OddDisk;
        /// Set for odd N, which is assembled from the odd-order facts.
        bool derived_odd_n = false;
        Sign f_sign = Sign::Plus;
        std::size_t f_rank = 0;
        ExtraSummand extra = ExtraSummand::None;
        std::vector<Integer> t_prime_orders;
        std::size_t t2_count = 0;
        Integer declared_odd_order = 1;

        /// Canonical merge of every summand with known structure.
        FinAbGroup total() const;
        /// "F⁻=Z¹; Z/2; Z/4⊕Z/4; Z/2"
        std::string components() const;

        friend bool operator==(const StructureSetDescriptor &, const StructureSetDescriptor &) = default;
    };

    StructureSetDescriptor structure_set_disk(long N, long d, long m);

    struct SphereStructureDescriptor
    {
        StructureSetDescriptor disk;
        std::size_t t2k_count = 0;
        Integer t2k_order = 1;
        std::size_t t2_count = 0;
        /// |T_M(d)|; only the order of this summand is known.
        Integer declared_odd_order = 1;

        FinAbGroup total() const;
        std::string components() const;

        friend bool operator==(const SphereStructureDescriptor &, const SphereStructureDescriptor &) = default;
    };

    SphereStructureDescriptor structure_set_product_sphere(long N, long d, long m);
}
