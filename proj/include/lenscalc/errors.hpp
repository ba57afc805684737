#pragma once

#include <stdexcept>
#include <string>

namespace lenscalc
{
    struct DimensionMismatch : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    /// A Fourier coefficient that should be rational came out with an
    /// irrational part; the class function was not Galois-equivariant.
    struct NonRationalCoefficient : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct NotADivisor : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    struct UnsupportedParams : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    struct NegativeExponent : std::invalid_argument
    {
        using std::invalid_argument::invalid_argument;
    };

    /// A computed quantity disagreed with its prediction. Carries the
    /// parameter tuple, the name of the check and both values.
    class VerificationFailure : public std::runtime_error
    {
    public:
        VerificationFailure(long N, long d, long k, std::string check,
                            std::string expected, std::string actual);

        long N() const noexcept { return N_; }
        long d() const noexcept { return d_; }
        long k() const noexcept { return k_; }
        const std::string &check() const noexcept { return check_; }
        const std::string &expected() const noexcept { return expected_; }
        const std::string &actual() const noexcept { return actual_; }

    private:
        long N_, d_, k_;
        std::string check_, expected_, actual_;
    };
}
