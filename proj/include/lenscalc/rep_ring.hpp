#pragma once

#include <cstddef>
#include <vector>

#include "lenscalc/cyclotomic.hpp"
#include "lenscalc/lattice.hpp"

// Representation ring of the cyclic group Z/N. The fixed generator g acts
// through the character chi with chi(g) = zeta_N = exp(2 pi i / N); chi^m
// is indexed by m in [0, N).
namespace lenscalc
{
    enum class Sign : int
    {
        Plus = 1,
        Minus = -1
    };

    inline int to_int(Sign s) { return static_cast<int>(s); }
    inline Sign sign_of_parity(long exponent) { return exponent % 2 == 0 ? Sign::Plus : Sign::Minus; }
    const char *to_string(Sign s);

    /// Virtual character sum_m coeffs[m] chi^m.
    struct CharClass
    {
        std::size_t modulus = 0;
        std::vector<Integer> coeffs;

        static CharClass zero(std::size_t N);
        static CharClass character(std::size_t N, std::size_t m);
        static CharClass regular(std::size_t N);

        CharClass operator+(const CharClass &o) const;
        CharClass operator*(const Integer &c) const;
        friend bool operator==(const CharClass &, const CharClass &) = default;
    };

    /// Values of a class function at the nontrivial elements: values[j-1]
    /// holds the value at t = zeta_N^j, as an element of Q(zeta_N).
    struct ClassFunction
    {
        std::size_t modulus = 0;
        std::vector<CycloElem> values;

        const CycloElem &at(std::size_t j) const { return values.at(j - 1); }
        friend bool operator==(const ClassFunction &, const ClassFunction &) = default;
    };

    /// Rational coordinates b_m = a_m - a_0 (m = 1..N-1) of a class in
    /// Q^N / (all-ones line).
    struct ReducedCharCoords
    {
        std::size_t modulus = 0;
        std::vector<Rational> coords;

        friend bool operator==(const ReducedCharCoords &, const ReducedCharCoords &) = default;
    };

    /// scale * R~^sign as a lattice in the reduced coordinate space Z^{N-1}.
    struct EigenLatticeSpec
    {
        std::size_t modulus = 0;
        Sign sign = Sign::Plus;
        Integer scale = 4;
        Lattice lattice;
    };

    CharClass involution(const CharClass &x);

    /// Restriction to the subgroup Z/U: chi^j -> chi^{j mod U}.
    CharClass restriction(std::size_t U, const CharClass &x);

    ReducedCharCoords reduced_coords(const CharClass &x);

    std::size_t reduced_eigenspace_rank(std::size_t N, Sign sign);

    EigenLatticeSpec eigen_lattice(std::size_t N, Sign sign, const Integer &scale = 4);

    /// Coordinates satisfy b_m = sign * b_{N-m}.
    bool in_eigenspace(const ReducedCharCoords &x, Sign sign);

    /// Character values chi(zeta^j) = sum_m coeffs[m] zeta^{jm}, j = 1..N-1.
    ClassFunction character_values(const CharClass &x, const FieldPtr &field);

    /// Galois equivariance: value(zeta^{s j}) == galois_apply(s, value(zeta^j)).
    bool is_galois_equivariant(const ClassFunction &v);

    /// Fourier inversion forgetting the value at t = 1:
    /// b_m = (1/N) sum_{j=1}^{N-1} v(zeta^j) (zeta^{-jm} - 1).
    /// Throws NonRationalCoefficient if a coordinate is not rational.
    ReducedCharCoords values_to_reduced_coords(const ClassFunction &v);

    /// Keeps the values at the nontrivial U-th roots of unity, rewritten over
    /// Q(zeta_U).
    ClassFunction restrict_class_function(std::size_t U, const ClassFunction &v);
}
