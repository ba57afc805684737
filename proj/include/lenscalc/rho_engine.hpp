#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lenscalc/lattice.hpp"
#include "lenscalc/rep_ring.hpp"
#include "lenscalc/surgery_tables.hpp"

namespace lenscalc
{
    /// EVEN: d+k even (n-1 = 2 mod 4), target R~^+.
    /// ODD:  d+k odd  (n-1 = 0 mod 4), target R~^-, carries the f^1 generator s_{4u}.
    enum class ParityCase
    {
        Even,
        Odd
    };

    const char *to_string(ParityCase p);

    /// {i : 2 <= D + k - 2i <= D}, ascending.
    std::vector<long> index_set(long D, long k);

    struct RhoGenerator
    {
        long index = 0;    // i in s_{4i}
        long exponent = 0; // d + k - 2i
    };

    /// Basis of the free abelian group Z(d,k).
    struct RhoBasis
    {
        long d = 2;
        long k = 0;
        ParityCase parity = ParityCase::Even;
        std::vector<RhoGenerator> generators;
        /// Index of the exponent-one generator (ODD case only).
        std::optional<long> u;

        std::size_t size() const noexcept { return generators.size(); }
    };

    RhoBasis build_basis(long d, long k);

    /// t -> ((1 + t) / (1 - t))^a on the nontrivial N-th roots of unity,
    /// with f^0 = 1 everywhere (also at t = -1, where f vanishes).
    ClassFunction f_power_values(const FieldPtr &field, long a);
    ClassFunction f_power_values(long N, long a);

    /// The rho map on Z(d,k) for the group Z/N, one column per generator.
    struct RhoMap
    {
        RhoBasis basis;
        long N = 2;
        Sign sign = Sign::Plus;
        std::vector<ClassFunction> column_values;
        std::vector<ReducedCharCoords> columns;
        EigenLatticeSpec target;

        /// (N-1) x g rational matrix of reduced coordinates.
        RatMatrix matrix() const;
    };

    RhoMap rho_columns(long N, long d, long k);

    /// Fault injection and target-lattice scale for kernel computations.
    struct RhoOptions
    {
        /// Multiply the first column by 2 before solving (negative control).
        bool scale_first_column = false;
        Integer target_scale = 4;
    };

    struct KernelResult
    {
        /// K^ = {s in Z(d,k) : rho(s) in scale * R~^sign}.
        Lattice khat;
        /// Z(d,k) / K^.
        FinAbGroup image;
        /// Exponent of the 2-primary part of the image.
        Integer two_exponent = 1;
        /// Order of the odd part of the image.
        Integer odd_order = 1;
    };

    KernelResult kernel_and_image(const RhoMap &rho, const RhoOptions &options = {});
    KernelResult kernel_and_image(long N, long d, long k, const RhoOptions &options = {});

    /// Order of the image predicted by the closed-form kernel computations.
    Integer predicted_image_order(long N, long d, long k);

    /// Odd part of the predicted image order: M^{c+1} for k even, M^c for k odd.
    Integer predicted_odd_order(long N, long d, long k);

    struct CheckResult
    {
        std::string name;
        bool passed = false;
        std::string expected;
        std::string actual;
    };

    struct VerificationReport
    {
        long N = 0, d = 0, k = 0;
        std::vector<CheckResult> checks;

        bool passed() const;
        /// Throws VerificationFailure for the first failed check.
        void raise_if_failed() const;
    };

    /// Two-exponent bound, odd-order identity and image-order identity.
    VerificationReport verify_factorization(long N, long d, long k, const RhoOptions &options = {});

    /// Restriction of every rho_N column equals the rho_U column, and
    /// K^(N) is contained in K^(U).
    VerificationReport verify_transfer_compat(long N, long U, long d, long k);

    /// image(N) 2-part matches image(2^K), odd order matches |image(M)|.
    VerificationReport verify_splitting(long N, long d, long k);

    /// Every column lies in the (-1)^{d+k} eigenspace.
    VerificationReport verify_eigenspace(long N, long d, long k);

    /// Every column is Galois-equivariant and has rational reduced coordinates.
    VerificationReport verify_rationality(long N, long d, long k);
}
