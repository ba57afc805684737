#include "lenscalc/matrix.hpp"

#include <sstream>

namespace lenscalc
{
    Integer determinant(const IntMatrix &A)
    {
        if (A.rows() != A.cols())
            throw DimensionMismatch("determinant of a non-square matrix");
        const std::size_t n = A.rows();
        if (n == 0)
            return 1;
        IntMatrix M = A;
        Integer sign = 1;
        Integer prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k)
        {
            if (M(k, k) == 0)
            {
                std::size_t p = k + 1;
                while (p < n && M(p, k) == 0)
                    ++p;
                if (p == n)
                    return 0;
                M.swap_rows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                {
                    Integer t = M(i, j) * M(k, k) - M(i, k) * M(k, j);
                    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                    M(i, j) = t;
                }
            prev = M(k, k);
        }
        return sign * M(n - 1, n - 1);
    }

    IntMatrix clear_denominators(const RatMatrix &A, Integer *factor)
    {
        const Integer c = common_denominator(A.entries());
        IntMatrix out(A.rows(), A.cols());
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j)
            {
                const Rational &x = A(i, j);
                Integer q = c / x.get_den();
                out(i, j) = x.get_num() * q;
            }
        if (factor)
            *factor = c;
        return out;
    }

    RatMatrix to_rational(const IntMatrix &A)
    {
        RatMatrix out(A.rows(), A.cols());
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j)
                out(i, j) = Rational(A(i, j));
        return out;
    }

    bool is_diagonal(const IntMatrix &A)
    {
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j)
                if (i != j && A(i, j) != 0)
                    return false;
        return true;
    }

    std::string to_string(const IntMatrix &A)
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < A.rows(); ++i)
        {
            if (i)
                os << "; ";
            for (std::size_t j = 0; j < A.cols(); ++j)
                os << (j ? " " : "") << A(i, j).get_str();
        }
        os << ']';
        return os.str();
    }
}
