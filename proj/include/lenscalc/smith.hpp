#pragma once

#include <vector>

#include "lenscalc/matrix.hpp"

namespace lenscalc
{
    /// U * A * V == D with U, V unimodular and D diagonal, its nonnegative
    /// diagonal forming a divisibility chain followed by zeros.
    struct SmithForm
    {
        IntMatrix U;
        IntMatrix D;
        IntMatrix V;

        std::size_t rank() const;
        /// Nonzero diagonal entries d_1 | d_2 | ... in order.
        std::vector<Integer> invariant_factors() const;
    };

    SmithForm snf(const IntMatrix &A);

    /// Rank over Q.
    std::size_t rank(const IntMatrix &A);
}
