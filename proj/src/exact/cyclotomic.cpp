#include "lenscalc/cyclotomic.hpp"
#include "lenscalc/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace lenscalc
{
    CyclotomicField::CyclotomicField(unsigned long conductor)
        : N_(conductor), phi_(euler_phi(conductor)), modulus_(cyclotomic_polynomial(conductor))
    {
        // x^e mod Phi_N for 0 <= e < N by repeated multiplication by x.
        powers_.reserve(N_);
        std::vector<Rational> cur(phi_, Rational(0));
        cur[0] = 1;
        for (unsigned long e = 0; e < N_; ++e)
        {
            powers_.push_back(cur);
            // multiply by x: shift and reduce x^phi = -sum_{i<phi} c_i x^i
            std::vector<Rational> next(phi_, Rational(0));
            const Rational top = cur[phi_ - 1];
            for (std::size_t i = phi_ - 1; i > 0; --i)
                next[i] = cur[i - 1];
            if (top != 0)
                for (std::size_t i = 0; i < phi_; ++i)
                    next[i] -= top * Rational(modulus_[i]);
            cur = std::move(next);
        }
    }

    FieldPtr make_cyclotomic_field(unsigned long conductor)
    {
        if (conductor == 0)
            throw std::invalid_argument("cyclotomic field needs conductor >= 1");
        return std::make_shared<const CyclotomicField>(conductor);
    }

    namespace
    {
        void require_same_field(const CycloElem &a, const CycloElem &b)
        {
            if (a.conductor() != b.conductor())
                throw DimensionMismatch("cyclotomic elements from different fields");
        }
    }

    CycloElem::CycloElem(FieldPtr field, std::vector<Rational> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs))
    {
        if (!field_)
            throw std::invalid_argument("cyclotomic element without a field");
        if (coeffs_.size() != field_->degree())
            throw DimensionMismatch("cyclotomic element needs phi(N) coefficients");
    }

    CycloElem CycloElem::zero(FieldPtr field)
    {
        const std::size_t n = field->degree();
        return CycloElem(std::move(field), std::vector<Rational>(n, Rational(0)));
    }

    CycloElem CycloElem::from_rational(FieldPtr field, const Rational &value)
    {
        CycloElem x = zero(std::move(field));
        x.coeffs_[0] = value;
        return x;
    }

    CycloElem CycloElem::zeta_power(FieldPtr field, long e)
    {
        const long N = static_cast<long>(field->conductor());
        const long r = ((e % N) + N) % N;
        std::vector<Rational> c = field->power(static_cast<unsigned long>(r));
        return CycloElem(std::move(field), std::move(c));
    }

    bool CycloElem::is_zero() const
    {
        for (const auto &c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    bool CycloElem::is_rational() const
    {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                return false;
        return true;
    }

    Rational CycloElem::rational_value() const
    {
        if (!is_rational())
            throw NonRationalCoefficient("element " + to_string() + " of Q(zeta_" +
                                         std::to_string(conductor()) + ") is not rational");
        return coeffs_[0];
    }

    CycloElem CycloElem::operator+(const CycloElem &o) const
    {
        require_same_field(*this, o);
        std::vector<Rational> c = coeffs_;
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] += o.coeffs_[i];
        return CycloElem(field_, std::move(c));
    }

    CycloElem CycloElem::operator-(const CycloElem &o) const
    {
        require_same_field(*this, o);
        std::vector<Rational> c = coeffs_;
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] -= o.coeffs_[i];
        return CycloElem(field_, std::move(c));
    }

    CycloElem CycloElem::operator-() const
    {
        std::vector<Rational> c = coeffs_;
        for (auto &x : c)
            x = -x;
        return CycloElem(field_, std::move(c));
    }

    CycloElem CycloElem::operator*(const CycloElem &o) const
    {
        require_same_field(*this, o);
        const std::size_t n = coeffs_.size();
        std::vector<Rational> full(2 * n - 1, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
        {
            if (coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                full[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        std::vector<Rational> c(full.begin(), full.begin() + static_cast<long>(n));
        for (std::size_t e = n; e < full.size(); ++e)
        {
            if (full[e] == 0)
                continue;
            const auto &p = field_->power(e);
            for (std::size_t i = 0; i < n; ++i)
                c[i] += full[e] * p[i];
        }
        return CycloElem(field_, std::move(c));
    }

    CycloElem CycloElem::operator*(const Rational &s) const
    {
        std::vector<Rational> c = coeffs_;
        for (auto &x : c)
            x *= s;
        return CycloElem(field_, std::move(c));
    }

    CycloElem CycloElem::pow(unsigned long e) const
    {
        CycloElem result = from_rational(field_, 1);
        CycloElem base = *this;
        while (e > 0)
        {
            if (e & 1)
                result = result * base;
            e >>= 1;
            if (e)
                base = base * base;
        }
        return result;
    }

    CycloElem CycloElem::inverse() const
    {
        if (is_zero())
            throw std::domain_error("inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");
        RatPoly a(coeffs_.begin(), coeffs_.end());
        trim(a);
        RatPoly inv = poly_inverse_mod(a, to_rational(field_->modulus()));
        inv.resize(coeffs_.size(), Rational(0));
        return CycloElem(field_, std::move(inv));
    }

    CycloElem CycloElem::galois_apply(long j) const
    {
        const long N = static_cast<long>(conductor());
        if (std::gcd(j, N) != 1)
            throw std::invalid_argument("galois_apply needs an exponent coprime to the conductor");
        CycloElem out = zero(field_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
        {
            if (coeffs_[i] == 0)
                continue;
            out = out + zeta_power(field_, static_cast<long>(i) * j) * coeffs_[i];
        }
        return out;
    }

    bool operator==(const CycloElem &a, const CycloElem &b)
    {
        return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
    }

    std::string CycloElem::to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
        {
            if (coeffs_[i] == 0)
                continue;
            if (!s.empty())
                s += " + ";
            s += "(" + coeffs_[i].get_str() + ")";
            if (i > 0)
                s += "*z^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

    CycloElem embed(const CycloElem &x, const FieldPtr &larger)
    {
        const unsigned long N = x.conductor();
        const unsigned long M = larger->conductor();
        if (M % N != 0)
            throw NotADivisor(std::to_string(N) + " does not divide " + std::to_string(M));
        const unsigned long step = M / N;
        CycloElem out = CycloElem::zero(larger);
        for (std::size_t i = 0; i < x.coeffs().size(); ++i)
            if (x.coeffs()[i] != 0)
                out = out + CycloElem::zeta_power(larger, static_cast<long>(i * step)) * x.coeffs()[i];
        return out;
    }

    CycloElem descend(const CycloElem &x, const FieldPtr &smaller)
    {
        const unsigned long N = x.conductor();
        const unsigned long U = smaller->conductor();
        if (N % U != 0)
            throw NotADivisor(std::to_string(U) + " does not divide " + std::to_string(N));
        const std::size_t n = x.field()->degree();
        const std::size_t m = smaller->degree();
        const unsigned long step = N / U;

        // Solve sum_i c_i zeta_N^{step i} = x over Q by Gaussian elimination
        // on the augmented n x (m+1) system.
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(m + 1, Rational(0)));
        for (std::size_t i = 0; i < m; ++i)
        {
            const auto &p = x.field()->power(step * i);
            for (std::size_t r = 0; r < n; ++r)
                rows[r][i] = p[r];
        }
        for (std::size_t r = 0; r < n; ++r)
            rows[r][m] = x.coeffs()[r];

        std::vector<std::size_t> pivot_cols;
        std::size_t row = 0;
        for (std::size_t col = 0; col < m && row < n; ++col)
        {
            std::size_t p = row;
            while (p < n && rows[p][col] == 0)
                ++p;
            if (p == n)
                continue;
            std::swap(rows[p], rows[row]);
            const Rational inv = 1 / rows[row][col];
            for (auto &v : rows[row])
                v *= inv;
            for (std::size_t r = 0; r < n; ++r)
            {
                if (r == row || rows[r][col] == 0)
                    continue;
                const Rational f = rows[r][col];
                for (std::size_t c = col; c <= m; ++c)
                    rows[r][c] -= f * rows[row][c];
            }
            pivot_cols.push_back(col);
            ++row;
        }
        for (std::size_t r = row; r < n; ++r)
            if (rows[r][m] != 0)
                throw std::domain_error("element does not lie in Q(zeta_" + std::to_string(U) + ")");
        std::vector<Rational> c(m, Rational(0));
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            c[pivot_cols[r]] = rows[r][m];
        return CycloElem(smaller, std::move(c));
    }
}
