#include "lenscalc/lattice.hpp"
#include "lenscalc/smith.hpp"

namespace lenscalc
{
    Lattice lattice_from_generators(const IntMatrix &generators)
    {
        // G V = U^{-1} D: the first rank() columns of G V are a basis.
        const SmithForm s = snf(generators);
        const IntMatrix GV = generators * s.V;
        return Lattice{generators.rows(), GV.column_block(0, s.rank())};
    }

    Lattice lattice_kernel(const IntMatrix &A)
    {
        // A V = U^{-1} D, so the trailing columns of V span the kernel and
        // extend to a basis of Z^cols (saturation).
        const SmithForm s = snf(A);
        const std::size_t r = s.rank();
        return Lattice{A.cols(), s.V.column_block(r, A.cols() - r)};
    }

    Lattice lattice_preimage(const RatMatrix &A, const Lattice &L, const Integer &denominator)
    {
        if (A.rows() != L.ambient_rank)
            throw DimensionMismatch("preimage: matrix has " + std::to_string(A.rows()) +
                                    " rows but lattice lives in Z^" + std::to_string(L.ambient_rank));
        if (denominator <= 0)
            throw std::invalid_argument("preimage: denominator must be positive");
        if (L.basis.rows() != L.ambient_rank)
            throw DimensionMismatch("preimage: lattice basis has the wrong height");

        // A s = B y / den  <=>  [c den A | -c B] (s, y) = 0.
        Integer c;
        const IntMatrix cA = clear_denominators(A, &c);
        const std::size_t g = A.cols();
        const std::size_t r = L.rank();
        IntMatrix block(A.rows(), g + r);
        for (std::size_t i = 0; i < A.rows(); ++i)
        {
            for (std::size_t j = 0; j < g; ++j)
                block(i, j) = cA(i, j) * denominator;
            for (std::size_t j = 0; j < r; ++j)
                block(i, g + j) = -c * L.basis(i, j);
        }
        const Lattice K = lattice_kernel(block);
        const IntMatrix projected = K.basis.row_block(0, g);
        return lattice_from_generators(projected);
    }

    bool lattice_contains(const Lattice &L, std::span<const Integer> v)
    {
        if (v.size() != L.ambient_rank)
            throw DimensionMismatch("membership: vector length does not match ambient rank");
        const SmithForm s = snf(L.basis);
        const std::vector<Integer> w = s.U.apply(v);
        const std::size_t r = s.rank();
        for (std::size_t i = 0; i < w.size(); ++i)
        {
            if (i < r)
            {
                if (!mpz_divisible_p(w[i].get_mpz_t(), s.D(i, i).get_mpz_t()))
                    return false;
            }
            else if (w[i] != 0)
                return false;
        }
        return true;
    }

    bool is_sublattice(const Lattice &inner, const Lattice &outer)
    {
        if (inner.ambient_rank != outer.ambient_rank)
            throw DimensionMismatch("sublattice test across different ambient ranks");
        const SmithForm s = snf(outer.basis);
        const std::size_t r = s.rank();
        for (std::size_t j = 0; j < inner.rank(); ++j)
        {
            const std::vector<Integer> w = s.U.apply(inner.basis_vector(j));
            for (std::size_t i = 0; i < w.size(); ++i)
            {
                if (i < r ? !mpz_divisible_p(w[i].get_mpz_t(), s.D(i, i).get_mpz_t()) : w[i] != 0)
                    return false;
            }
        }
        return true;
    }

    bool lattices_equal(const Lattice &a, const Lattice &b)
    {
        return a.rank() == b.rank() && is_sublattice(a, b) && is_sublattice(b, a);
    }

    FinAbGroup quotient_group(std::size_t ambient_rank, const Lattice &L)
    {
        if (L.ambient_rank != ambient_rank)
            throw DimensionMismatch("quotient: lattice does not live in Z^" + std::to_string(ambient_rank));
        const SmithForm s = snf(L.basis);
        const auto factors = s.invariant_factors();
        return FinAbGroup::from_orders(factors, ambient_rank - factors.size());
    }

    Lattice scale_lattice(const Lattice &L, const Integer &factor)
    {
        Lattice out = L;
        for (std::size_t i = 0; i < out.basis.rows(); ++i)
            for (std::size_t j = 0; j < out.basis.cols(); ++j)
                out.basis(i, j) *= factor;
        if (factor == 0)
            return Lattice{L.ambient_rank, IntMatrix(L.ambient_rank, 0)};
        return out;
    }
}
