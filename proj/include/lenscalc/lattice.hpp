#pragma once

#include <cstddef>
#include <span>

#include "lenscalc/fin_ab_group.hpp"
#include "lenscalc/matrix.hpp"

namespace lenscalc
{
    /// Sublattice of Z^ambient_rank stored by a basis: the columns of
    /// `basis`, which are linearly independent.
    struct Lattice
    {
        std::size_t ambient_rank = 0;
        IntMatrix basis;

        std::size_t rank() const noexcept { return basis.cols(); }
        std::vector<Integer> basis_vector(std::size_t j) const { return basis.column(j); }
    };

    /// Basis of the lattice generated by the columns of `generators`.
    Lattice lattice_from_generators(const IntMatrix &generators);

    /// Saturated basis of {x in Z^cols : A x = 0}.
    Lattice lattice_kernel(const IntMatrix &A);

    /// {s in Z^g : A s lies in (1/denominator) * L}, for A : Q^g -> Q^m and
    /// L a sublattice of Z^m.
    Lattice lattice_preimage(const RatMatrix &A, const Lattice &L, const Integer &denominator = 1);

    bool lattice_contains(const Lattice &L, std::span<const Integer> v);
    bool is_sublattice(const Lattice &inner, const Lattice &outer);
    bool lattices_equal(const Lattice &a, const Lattice &b);

    /// Z^ambient_rank / L in canonical form.
    FinAbGroup quotient_group(std::size_t ambient_rank, const Lattice &L);

    Lattice scale_lattice(const Lattice &L, const Integer &factor);
}
