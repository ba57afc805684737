#pragma once

// Independent reference computations used only by the tests. None of them
// goes through the Smith normal form or the lattice routines of the library.

#include <complex>
#include <functional>
#include <string>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "lenscalc/cyclotomic.hpp"
#include "lenscalc/fin_ab_group.hpp"
#include "lenscalc/matrix.hpp"
#include "lenscalc/polynomial.hpp"
#include "lenscalc/rho_engine.hpp"

namespace oracle
{
    using lenscalc::Integer;
    using lenscalc::IntMatrix;
    using lenscalc::Rational;

    inline std::vector<unsigned long> prime_factors(unsigned long n)
    {
        std::vector<unsigned long> ps;
        for (unsigned long p = 2; p * p <= n; ++p)
            if (n % p == 0)
            {
                ps.push_back(p);
                while (n % p == 0)
                    n /= p;
            }
        if (n > 1)
            ps.push_back(n);
        return ps;
    }

    /// Multiset of prime powers p^a (elementary divisors) of the torsion.
    inline std::multiset<unsigned long> elementary_divisors(const std::vector<unsigned long> &orders)
    {
        std::multiset<unsigned long> out;
        for (unsigned long n : orders)
            for (unsigned long p : prime_factors(n))
            {
                unsigned long q = 1;
                while (n % p == 0)
                {
                    n /= p;
                    q *= p;
                }
                out.insert(q);
            }
        return out;
    }

    inline std::multiset<unsigned long> elementary_divisors(const lenscalc::FinAbGroup &g)
    {
        std::vector<unsigned long> orders;
        for (const auto &t : g.torsion())
            orders.push_back(t.get_ui());
        return elementary_divisors(orders);
    }

    inline int moebius(unsigned long n)
    {
        int mu = 1;
        for (unsigned long p = 2; p * p <= n; ++p)
            if (n % p == 0)
            {
                n /= p;
                if (n % p == 0)
                    return 0;
                mu = -mu;
            }
        if (n > 1)
            mu = -mu;
        return mu;
    }

    /// Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)} by long division.
    inline std::vector<long long> cyclotomic_by_moebius(unsigned long N)
    {
        using Poly = std::vector<long long>;
        auto mul = [](const Poly &a, const Poly &b) {
            Poly c(a.size() + b.size() - 1, 0);
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < b.size(); ++j)
                    c[i + j] += a[i] * b[j];
            return c;
        };
        Poly num{1}, den{1};
        for (unsigned long d = 1; d <= N; ++d)
        {
            if (N % d != 0)
                continue;
            Poly f(d + 1, 0);
            f[0] = -1;
            f[d] = 1;
            const int mu = moebius(N / d);
            if (mu == 1)
                num = mul(num, f);
            else if (mu == -1)
                den = mul(den, f);
        }
        // exact division of monic-up-to-sign polynomials
        Poly q(num.size() - den.size() + 1, 0);
        Poly r = num;
        const long long lead = den.back();
        for (std::size_t i = q.size(); i-- > 0;)
        {
            const long long c = r[i + den.size() - 1] / lead;
            q[i] = c;
            for (std::size_t j = 0; j < den.size(); ++j)
                r[i + j] -= c * den[j];
        }
        return q;
    }

    inline std::complex<double> evaluate(const lenscalc::CycloElem &x)
    {
        const double angle = 2.0 * std::numbers::pi / static_cast<double>(x.conductor());
        const std::complex<double> z = std::polar(1.0, angle);
        std::complex<double> acc = 0, p = 1;
        for (const auto &c : x.coeffs())
        {
            acc += c.get_d() * p;
            p *= z;
        }
        return acc;
    }

    /// Invariant factors d_i = D_i / D_{i-1}, D_i the gcd of all i x i minors.
    inline std::vector<Integer> determinantal_invariant_factors(const IntMatrix &A)
    {
        const std::size_t n = std::min(A.rows(), A.cols());
        std::vector<Integer> Ds{1};
        for (std::size_t k = 1; k <= n; ++k)
        {
            Integer g = 0;
            std::vector<std::size_t> rows(k), cols(k);
            std::function<void(std::size_t, std::size_t)> pick_cols;
            std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t depth) {
                if (depth == k)
                {
                    pick_cols(0, 0);
                    return;
                }
                for (std::size_t i = start; i < A.rows(); ++i)
                {
                    rows[depth] = i;
                    pick_rows(i + 1, depth + 1);
                }
            };
            pick_cols = [&](std::size_t start, std::size_t depth) {
                if (depth == k)
                {
                    IntMatrix minor(k, k);
                    for (std::size_t a = 0; a < k; ++a)
                        for (std::size_t b = 0; b < k; ++b)
                            minor(a, b) = A(rows[a], cols[b]);
                    Integer det = lenscalc::determinant(minor);
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
                    return;
                }
                for (std::size_t j = start; j < A.cols(); ++j)
                {
                    cols[depth] = j;
                    pick_cols(j + 1, depth + 1);
                }
            };
            pick_rows(0, 0);
            if (g == 0)
                break;
            Ds.push_back(g);
        }
        std::vector<Integer> out;
        for (std::size_t i = 1; i < Ds.size(); ++i)
            out.push_back(Ds[i] / Ds[i - 1]);
        return out;
    }

    /// Solves B y = v over Q by Gauss-Jordan elimination, B of full column
    /// rank; nullopt when v is outside the column span.
    inline std::optional<std::vector<Rational>> solve_in_span(const IntMatrix &B, const std::vector<Rational> &v)
    {
        const std::size_t m = B.rows(), r = B.cols();
        std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(r + 1));
        for (std::size_t i = 0; i < m; ++i)
        {
            for (std::size_t j = 0; j < r; ++j)
                aug[i][j] = Rational(B(i, j));
            aug[i][r] = v[i];
        }
        std::size_t row = 0;
        std::vector<std::size_t> pivots;
        for (std::size_t col = 0; col < r && row < m; ++col)
        {
            std::size_t p = row;
            while (p < m && aug[p][col] == 0)
                ++p;
            if (p == m)
                continue;
            std::swap(aug[p], aug[row]);
            const Rational inv = 1 / aug[row][col];
            for (auto &x : aug[row])
                x *= inv;
            for (std::size_t i = 0; i < m; ++i)
                if (i != row && aug[i][col] != 0)
                {
                    const Rational f = aug[i][col];
                    for (std::size_t j = 0; j <= r; ++j)
                        aug[i][j] -= f * aug[row][j];
                }
            pivots.push_back(col);
            ++row;
        }
        for (std::size_t i = row; i < m; ++i)
            if (aug[i][r] != 0)
                return std::nullopt;
        std::vector<Rational> y(r, 0);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            y[pivots[i]] = aug[i][r];
        return y;
    }

    /// x mod 1 in [0, 1).
    inline Rational frac(const Rational &x)
    {
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        return x - Rational(fl);
    }

    /// Order of the subgroup of (span B) / (Z-span B) generated by the given
    /// vectors, by closing the orbit of 0 under addition. nullopt if a vector
    /// leaves span B or the group exceeds `limit`.
    inline std::optional<std::size_t> generated_subgroup_order(const IntMatrix &B,
                                                               const std::vector<std::vector<Rational>> &gens,
                                                               std::size_t limit = 2000000)
    {
        using Elem = std::vector<Rational>;
        std::vector<Elem> steps;
        for (const auto &g : gens)
        {
            auto y = solve_in_span(B, g);
            if (!y)
                return std::nullopt;
            for (auto &c : *y)
                c = frac(c);
            steps.push_back(*y);
        }
        auto key = [](const Elem &e) {
            std::string s;
            for (const auto &c : e)
                s += c.get_str() + ",";
            return s;
        };
        std::set<std::string> seen;
        std::vector<Elem> frontier{Elem(B.cols(), 0)};
        seen.insert(key(frontier[0]));
        while (!frontier.empty())
        {
            std::vector<Elem> next;
            for (const auto &e : frontier)
                for (const auto &s : steps)
                {
                    Elem f(e.size());
                    for (std::size_t i = 0; i < e.size(); ++i)
                        f[i] = frac(e[i] + s[i]);
                    if (seen.insert(key(f)).second)
                    {
                        if (seen.size() > limit)
                            return std::nullopt;
                        next.push_back(std::move(f));
                    }
                }
            frontier = std::move(next);
        }
        return seen.size();
    }

    /// |image| of the rho map in Q R~ / 4 R~, computed by orbit closure.
    inline std::optional<std::size_t> brute_image_order(const lenscalc::RhoMap &rho)
    {
        std::vector<std::vector<Rational>> gens;
        for (const auto &c : rho.columns)
            gens.push_back(c.coords);
        return generated_subgroup_order(rho.target.lattice.basis, gens);
    }

    inline IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, long bound)
    {
        std::uniform_int_distribution<long> dist(-bound, bound);
        IntMatrix A(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                A(i, j) = dist(rng);
        return A;
    }
}
