#include "lenscalc/rho_engine.hpp"
#include "lenscalc/errors.hpp"
#include "lenscalc/smith.hpp"

namespace lenscalc
{
    const char *to_string(ParityCase p)
    {
        return p == ParityCase::Even ? "EVEN" : "ODD";
    }

    std::vector<long> index_set(long D, long k)
    {
        if (D < 2 || k < 0)
            throw UnsupportedParams("index set needs D >= 2 and k >= 0");
        // 2 <= D + k - 2i <= D  <=>  k/2 <= i <= (D + k - 2)/2
        std::vector<long> out;
        for (long i = (k + 1) / 2; 2 * i <= D + k - 2; ++i)
            out.push_back(i);
        return out;
    }

    RhoBasis build_basis(long d, long k)
    {
        if (d < 2 || k < 0)
            throw UnsupportedParams("Z(d,k) needs d >= 2 and k >= 0");
        RhoBasis b;
        b.d = d;
        b.k = k;
        b.parity = (d + k) % 2 == 0 ? ParityCase::Even : ParityCase::Odd;
        const long D = b.parity == ParityCase::Even ? d : d + 2;
        for (long i : index_set(D, k))
        {
            const long exponent = d + k - 2 * i;
            b.generators.push_back({i, exponent});
            if (exponent == 1)
                b.u = i;
        }
        return b;
    }

    namespace
    {
        // f(zeta^j) for j = 1..N-1.
        std::vector<CycloElem> f_values(const FieldPtr &field)
        {
            const long N = static_cast<long>(field->conductor());
            const CycloElem one = CycloElem::from_rational(field, 1);
            std::vector<CycloElem> out;
            for (long j = 1; j < N; ++j)
            {
                const CycloElem t = CycloElem::zeta_power(field, j);
                const CycloElem numerator = one + t;
                if (numerator.is_zero())
                    out.push_back(CycloElem::zero(field));
                else
                    out.push_back(numerator * (one - t).inverse());
            }
            return out;
        }

        // powers[a][j-1] = f(zeta^j)^a for a = 0..max_exponent.
        std::vector<std::vector<CycloElem>> f_power_table(const FieldPtr &field, long max_exponent)
        {
            const std::vector<CycloElem> f = f_values(field);
            std::vector<std::vector<CycloElem>> table;
            table.emplace_back(f.size(), CycloElem::from_rational(field, 1));
            for (long a = 1; a <= max_exponent; ++a)
            {
                std::vector<CycloElem> next;
                next.reserve(f.size());
                for (std::size_t j = 0; j < f.size(); ++j)
                    next.push_back(table.back()[j] * f[j]);
                table.push_back(std::move(next));
            }
            return table;
        }

        std::string str(const Integer &x) { return x.get_str(); }
    }

    ClassFunction f_power_values(const FieldPtr &field, long a)
    {
        if (a < 0)
            throw NegativeExponent("f is not invertible at t = -1; exponent " + std::to_string(a) + " rejected");
        const auto table = f_power_table(field, a);
        return ClassFunction{field->conductor(), table.back()};
    }

    ClassFunction f_power_values(long N, long a)
    {
        if (N < 2)
            throw UnsupportedParams("f needs N >= 2");
        return f_power_values(make_cyclotomic_field(static_cast<unsigned long>(N)), a);
    }

    RatMatrix RhoMap::matrix() const
    {
        std::vector<std::vector<Rational>> cols;
        for (const auto &c : columns)
            cols.push_back(c.coords);
        return RatMatrix::from_columns(static_cast<std::size_t>(N - 1), cols);
    }

    RhoMap rho_columns(long N, long d, long k)
    {
        const Params p = Params::make(N, d, k);
        RhoMap rho;
        rho.basis = build_basis(d, k);
        rho.N = N;
        rho.sign = p.sign();
        const FieldPtr field = make_cyclotomic_field(static_cast<unsigned long>(N));
        long max_exponent = 0;
        for (const auto &g : rho.basis.generators)
            max_exponent = std::max(max_exponent, g.exponent);
        const auto powers = f_power_table(field, max_exponent);
        const Rational eight(8);
        for (const auto &g : rho.basis.generators)
        {
            ClassFunction column{static_cast<std::size_t>(N), {}};
            const auto E = static_cast<std::size_t>(g.exponent);
            for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(N); ++j)
            {
                if (E == 1)
                    column.values.push_back(powers[1][j] * eight);
                else
                    column.values.push_back((powers[E][j] - powers[E - 2][j]) * eight);
            }
            rho.columns.push_back(values_to_reduced_coords(column));
            rho.column_values.push_back(std::move(column));
        }
        rho.target = eigen_lattice(static_cast<std::size_t>(N), rho.sign, 4);
        return rho;
    }

    KernelResult kernel_and_image(const RhoMap &rho, const RhoOptions &options)
    {
        RatMatrix A = rho.matrix();
        if (options.scale_first_column && A.cols() > 0)
            for (std::size_t i = 0; i < A.rows(); ++i)
                A(i, 0) *= 2;
        const EigenLatticeSpec target = options.target_scale == rho.target.scale
                                            ? rho.target
                                            : eigen_lattice(static_cast<std::size_t>(rho.N), rho.sign,
                                                            options.target_scale);
        KernelResult r;
        r.khat = lattice_preimage(A, target.lattice);
        r.image = quotient_group(A.cols(), r.khat);
        r.two_exponent = pow(Integer(2), valuation(r.image.exponent(), 2));
        r.odd_order = r.image.odd_torsion().torsion_order();
        return r;
    }

    KernelResult kernel_and_image(long N, long d, long k, const RhoOptions &options)
    {
        return kernel_and_image(rho_columns(N, d, k), options);
    }

    Integer predicted_odd_order(long N, long d, long k)
    {
        const Params p = Params::make(N, d, k);
        const long exponent = p.k_even() ? p.c() + 1 : p.c();
        return pow(Integer(p.M), static_cast<unsigned long>(exponent));
    }

    Integer predicted_image_order(long N, long d, long k)
    {
        const Params p = Params::make(N, d, k);
        const long factors = p.k_even() ? c_N(d, k) + 1 : c_N(d, k);
        Integer order = 1;
        for (long i = 1; i <= factors; ++i)
        {
            const unsigned long truncated = std::min<unsigned long>(2 * static_cast<unsigned long>(i), p.K);
            order *= pow(Integer(2), p.K - truncated);
        }
        return order * predicted_odd_order(N, d, k);
    }

    bool VerificationReport::passed() const
    {
        for (const auto &c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    void VerificationReport::raise_if_failed() const
    {
        for (const auto &c : checks)
            if (!c.passed)
                throw VerificationFailure(N, d, k, c.name, c.expected, c.actual);
    }

    VerificationReport verify_factorization(long N, long d, long k, const RhoOptions &options)
    {
        const Params p = Params::make(N, d, k);
        const KernelResult r = kernel_and_image(N, d, k, options);
        VerificationReport rep{N, d, k, {}};
        const std::size_t g = build_basis(d, k).size();
        rep.checks.push_back({"finite-image", r.khat.rank() == g, std::to_string(g),
                              std::to_string(r.khat.rank())});
        const Integer two_K = pow(Integer(2), p.K);
        rep.checks.push_back({"two-exponent", mpz_divisible_p(two_K.get_mpz_t(), r.two_exponent.get_mpz_t()) != 0,
                              "divides " + str(two_K), str(r.two_exponent)});
        const Integer odd = predicted_odd_order(N, d, k);
        rep.checks.push_back({"odd-order", r.odd_order == odd, str(odd), str(r.odd_order)});
        const Integer predicted = predicted_image_order(N, d, k);
        const Integer actual = r.image.is_finite() ? r.image.torsion_order() : Integer(0);
        rep.checks.push_back({"image-order", actual == predicted, str(predicted), str(actual)});
        return rep;
    }

    VerificationReport verify_transfer_compat(long N, long U, long d, long k)
    {
        if (U < 2 || N % U != 0)
            throw NotADivisor(std::to_string(U) + " is not a divisor >= 2 of " + std::to_string(N));
        const RhoMap big = rho_columns(N, d, k);
        const RhoMap small = rho_columns(U, d, k);
        VerificationReport rep{N, d, k, {}};
        std::size_t mismatched = 0;
        for (std::size_t c = 0; c < big.column_values.size(); ++c)
            if (!(restrict_class_function(static_cast<std::size_t>(U), big.column_values[c]) ==
                  small.column_values[c]))
                ++mismatched;
        rep.checks.push_back({"restricted-columns[U=" + std::to_string(U) + "]", mismatched == 0,
                              "0 mismatched columns", std::to_string(mismatched) + " mismatched columns"});
        const bool contained = is_sublattice(kernel_and_image(big).khat, kernel_and_image(small).khat);
        rep.checks.push_back({"kernel-containment[U=" + std::to_string(U) + "]", contained,
                              "khat(N) in khat(U)", contained ? "contained" : "not contained"});
        return rep;
    }

    VerificationReport verify_splitting(long N, long d, long k)
    {
        const Params p = Params::make(N, d, k);
        VerificationReport rep{N, d, k, {}};
        if (p.K == 0 || p.M == 1)
        {
            rep.checks.push_back({"splitting-degenerate", true, "N is a prime power", "skipped"});
            return rep;
        }
        const KernelResult whole = kernel_and_image(N, d, k);
        const KernelResult two = kernel_and_image(1L << p.K, d, k);
        const KernelResult odd = kernel_and_image(static_cast<long>(p.M), d, k);
        const FinAbGroup two_part = whole.image.primary_part(2);
        rep.checks.push_back({"two-part", two_part == two.image, two.image.to_string(), two_part.to_string()});
        const Integer odd_expected = odd.image.torsion_order();
        rep.checks.push_back({"odd-part-order", whole.odd_order == odd_expected, str(odd_expected),
                              str(whole.odd_order)});
        return rep;
    }

    VerificationReport verify_eigenspace(long N, long d, long k)
    {
        const RhoMap rho = rho_columns(N, d, k);
        VerificationReport rep{N, d, k, {}};
        std::size_t outside = 0;
        for (const auto &c : rho.columns)
            if (!in_eigenspace(c, rho.sign))
                ++outside;
        // Lattice test: each column, scaled to be integral, lies in the
        // rational span of the eigen lattice.
        const RatMatrix A = rho.matrix();
        Integer c;
        const IntMatrix cA = clear_denominators(A, &c);
        std::size_t off_span = 0;
        for (std::size_t j = 0; j < cA.cols(); ++j)
        {
            const Lattice one_column = lattice_from_generators(cA.column_block(j, 1));
            IntMatrix joined(cA.rows(), rho.target.lattice.rank() + one_column.rank());
            for (std::size_t i = 0; i < cA.rows(); ++i)
            {
                for (std::size_t t = 0; t < rho.target.lattice.rank(); ++t)
                    joined(i, t) = rho.target.lattice.basis(i, t);
                for (std::size_t t = 0; t < one_column.rank(); ++t)
                    joined(i, rho.target.lattice.rank() + t) = one_column.basis(i, t);
            }
            if (rank(joined) != rho.target.lattice.rank())
                ++off_span;
        }
        rep.checks.push_back({std::string("eigenspace[") + to_string(rho.sign) + "]", outside == 0 && off_span == 0,
                              "0 columns outside", std::to_string(std::max(outside, off_span)) + " columns outside"});
        return rep;
    }

    VerificationReport verify_rationality(long N, long d, long k)
    {
        VerificationReport rep{N, d, k, {}};
        try
        {
            const RhoMap rho = rho_columns(N, d, k);
            std::size_t not_equivariant = 0;
            for (const auto &v : rho.column_values)
                if (!is_galois_equivariant(v))
                    ++not_equivariant;
            rep.checks.push_back({"galois-equivariance", not_equivariant == 0, "0 columns",
                                  std::to_string(not_equivariant) + " columns"});
            rep.checks.push_back({"rational-coordinates", true, "rational", "rational"});
        }
        catch (const NonRationalCoefficient &e)
        {
            rep.checks.push_back({"rational-coordinates", false, "rational", e.what()});
        }
        return rep;
    }
}
