#include "lenscalc/smith.hpp"

#include <optional>
#include <utility>

namespace lenscalc
{
    namespace
    {
        using Position = std::pair<std::size_t, std::size_t>;

        // Smallest nonzero |entry| in the trailing block D[t:, t:].
        std::optional<Position> smallest_in_block(const IntMatrix &D, std::size_t t)
        {
            std::optional<Position> best;
            for (std::size_t i = t; i < D.rows(); ++i)
                for (std::size_t j = t; j < D.cols(); ++j)
                {
                    const Integer &x = D(i, j);
                    if (x == 0)
                        continue;
                    if (!best || mpz_cmpabs(x.get_mpz_t(), D(best->first, best->second).get_mpz_t()) < 0)
                        best = Position{i, j};
                }
            return best;
        }

        // Smallest nonzero |entry| in row t or column t (beyond the pivot).
        std::optional<Position> smallest_in_cross(const IntMatrix &D, std::size_t t)
        {
            std::optional<Position> best;
            auto consider = [&](std::size_t i, std::size_t j) {
                const Integer &x = D(i, j);
                if (x != 0 && (!best || mpz_cmpabs(x.get_mpz_t(), D(best->first, best->second).get_mpz_t()) < 0))
                    best = Position{i, j};
            };
            consider(t, t);
            for (std::size_t i = t + 1; i < D.rows(); ++i)
                consider(i, t);
            for (std::size_t j = t + 1; j < D.cols(); ++j)
                consider(t, j);
            return best;
        }

        struct Reducer
        {
            IntMatrix U, D, V;

            void move_to_pivot(std::size_t t, Position p)
            {
                D.swap_rows(t, p.first);
                U.swap_rows(t, p.first);
                D.swap_cols(t, p.second);
                V.swap_cols(t, p.second);
            }

            // Clears column t below and row t right of the pivot. Returns
            // true when both are zero afterwards.
            bool eliminate_cross(std::size_t t)
            {
                bool clean = true;
                const Integer pivot = D(t, t);
                for (std::size_t i = t + 1; i < D.rows(); ++i)
                {
                    if (D(i, t) == 0)
                        continue;
                    Integer q = D(i, t) / pivot;
                    if (q != 0)
                    {
                        Integer neg = -q;
                        D.add_row_multiple(i, t, neg);
                        U.add_row_multiple(i, t, neg);
                    }
                    if (D(i, t) != 0)
                        clean = false;
                }
                for (std::size_t j = t + 1; j < D.cols(); ++j)
                {
                    if (D(t, j) == 0)
                        continue;
                    Integer q = D(t, j) / pivot;
                    if (q != 0)
                    {
                        Integer neg = -q;
                        D.add_col_multiple(j, t, neg);
                        V.add_col_multiple(j, t, neg);
                    }
                    if (D(t, j) != 0)
                        clean = false;
                }
                return clean;
            }

            // Row index i > t holding an entry not divisible by the pivot.
            std::optional<std::size_t> non_divisible_row(std::size_t t) const
            {
                const Integer &pivot = D(t, t);
                for (std::size_t i = t + 1; i < D.rows(); ++i)
                    for (std::size_t j = t + 1; j < D.cols(); ++j)
                        if (!mpz_divisible_p(D(i, j).get_mpz_t(), pivot.get_mpz_t()))
                            return i;
                return std::nullopt;
            }
        };
    }

    SmithForm snf(const IntMatrix &A)
    {
        Reducer r{IntMatrix::identity(A.rows()), A, IntMatrix::identity(A.cols())};
        const std::size_t steps = std::min(A.rows(), A.cols());
        for (std::size_t t = 0; t < steps; ++t)
        {
            auto start = smallest_in_block(r.D, t);
            if (!start)
                break;
            r.move_to_pivot(t, *start);
            for (;;)
            {
                if (!r.eliminate_cross(t))
                {
                    r.move_to_pivot(t, *smallest_in_cross(r.D, t));
                    continue;
                }
                if (auto row = r.non_divisible_row(t))
                {
                    r.D.add_row_multiple(t, *row, 1);
                    r.U.add_row_multiple(t, *row, 1);
                    continue;
                }
                break;
            }
            if (r.D(t, t) < 0)
            {
                r.D.negate_row(t);
                r.U.negate_row(t);
            }
        }
        return SmithForm{std::move(r.U), std::move(r.D), std::move(r.V)};
    }

    std::size_t SmithForm::rank() const
    {
        std::size_t r = 0;
        const std::size_t n = std::min(D.rows(), D.cols());
        while (r < n && D(r, r) != 0)
            ++r;
        return r;
    }

    std::vector<Integer> SmithForm::invariant_factors() const
    {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < rank(); ++i)
            out.push_back(D(i, i));
        return out;
    }

    std::size_t rank(const IntMatrix &A)
    {
        return snf(A).rank();
    }
}
