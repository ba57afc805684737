#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lenscalc/polynomial.hpp"

namespace lenscalc
{
    /// Q(zeta_N) presented as Q[x] / Phi_N(x). Immutable; shared by the
    /// elements that live in it.
    class CyclotomicField
    {
    public:
        explicit CyclotomicField(unsigned long conductor);

        unsigned long conductor() const noexcept { return N_; }
        std::size_t degree() const noexcept { return phi_; }
        const IntPoly &modulus() const noexcept { return modulus_; }

        /// Coordinates of x^e (equivalently zeta^e) in the power basis.
        const std::vector<Rational> &power(unsigned long e) const { return powers_[e % N_]; }

    private:
        unsigned long N_;
        std::size_t phi_;
        IntPoly modulus_;
        std::vector<std::vector<Rational>> powers_;
    };

    using FieldPtr = std::shared_ptr<const CyclotomicField>;

    FieldPtr make_cyclotomic_field(unsigned long conductor);

    /// Element of Q(zeta_N): a polynomial in zeta_N of degree < phi(N).
    class CycloElem
    {
    public:
        CycloElem(FieldPtr field, std::vector<Rational> coeffs);

        static CycloElem zero(FieldPtr field);
        static CycloElem from_rational(FieldPtr field, const Rational &value);
        /// zeta_N^e for any integer e.
        static CycloElem zeta_power(FieldPtr field, long e);

        const FieldPtr &field() const noexcept { return field_; }
        unsigned long conductor() const noexcept { return field_->conductor(); }
        const std::vector<Rational> &coeffs() const noexcept { return coeffs_; }

        bool is_zero() const;
        bool is_rational() const;
        /// The value when is_rational(); throws otherwise.
        Rational rational_value() const;

        CycloElem operator+(const CycloElem &o) const;
        CycloElem operator-(const CycloElem &o) const;
        CycloElem operator-() const;
        CycloElem operator*(const CycloElem &o) const;
        CycloElem operator*(const Rational &c) const;
        CycloElem pow(unsigned long e) const;
        /// Multiplicative inverse of a nonzero element.
        CycloElem inverse() const;

        /// Image under the automorphism zeta -> zeta^j, gcd(j, N) = 1.
        CycloElem galois_apply(long j) const;

        friend bool operator==(const CycloElem &a, const CycloElem &b);

        std::string to_string() const;

    private:
        FieldPtr field_;
        std::vector<Rational> coeffs_;
    };

    /// Same element viewed in Q(zeta_M) for N | M (zeta_N = zeta_M^{M/N}).
    CycloElem embed(const CycloElem &x, const FieldPtr &larger);

    /// Rewrites x in Q(zeta_U) for U | N; throws std::domain_error when x
    /// does not lie in that subfield.
    CycloElem descend(const CycloElem &x, const FieldPtr &smaller);
}
