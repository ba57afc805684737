#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lenscalc/errors.hpp"
#include "lenscalc/integer.hpp"

namespace lenscalc
{
    /// Dense row-major matrix over an exact ring.
    template <typename T>
    class Matrix
    {
    public:
        Matrix() = default;
        Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
        Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
            : rows_(rows), cols_(cols), data_(std::move(entries))
        {
            if (data_.size() != rows_ * cols_)
                throw DimensionMismatch("matrix entry count does not match its shape");
        }
        Matrix(std::initializer_list<std::initializer_list<T>> rows)
        {
            rows_ = rows.size();
            cols_ = rows_ == 0 ? 0 : rows.begin()->size();
            data_.reserve(rows_ * cols_);
            for (const auto &r : rows)
            {
                if (r.size() != cols_)
                    throw DimensionMismatch("ragged matrix literal");
                data_.insert(data_.end(), r.begin(), r.end());
            }
        }

        static Matrix identity(std::size_t n)
        {
            Matrix I(n, n);
            for (std::size_t i = 0; i < n; ++i)
                I(i, i) = 1;
            return I;
        }

        static Matrix diagonal(std::span<const T> diag)
        {
            Matrix D(diag.size(), diag.size());
            for (std::size_t i = 0; i < diag.size(); ++i)
                D(i, i) = diag[i];
            return D;
        }

        /// Matrix whose j-th column is columns[j]; every column must have length `rows`.
        static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>> &columns)
        {
            Matrix A(rows, columns.size());
            for (std::size_t j = 0; j < columns.size(); ++j)
            {
                if (columns[j].size() != rows)
                    throw DimensionMismatch("column length does not match row count");
                for (std::size_t i = 0; i < rows; ++i)
                    A(i, j) = columns[j][i];
            }
            return A;
        }

        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }
        bool empty() const noexcept { return data_.empty(); }

        T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
        const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

        const std::vector<T> &entries() const noexcept { return data_; }

        std::vector<T> column(std::size_t j) const
        {
            std::vector<T> c(rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                c[i] = (*this)(i, j);
            return c;
        }

        Matrix transpose() const
        {
            Matrix t(cols_, rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    t(j, i) = (*this)(i, j);
            return t;
        }

        /// First `count` columns starting at `first`.
        Matrix column_block(std::size_t first, std::size_t count) const
        {
            Matrix b(rows_, count);
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < count; ++j)
                    b(i, j) = (*this)(i, first + j);
            return b;
        }

        Matrix row_block(std::size_t first, std::size_t count) const
        {
            Matrix b(count, cols_);
            for (std::size_t i = 0; i < count; ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    b(i, j) = (*this)(first + i, j);
            return b;
        }

        void swap_rows(std::size_t a, std::size_t b)
        {
            if (a == b)
                return;
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap((*this)(a, j), (*this)(b, j));
        }

        void swap_cols(std::size_t a, std::size_t b)
        {
            if (a == b)
                return;
            for (std::size_t i = 0; i < rows_; ++i)
                std::swap((*this)(i, a), (*this)(i, b));
        }

        /// row[target] += factor * row[source]
        void add_row_multiple(std::size_t target, std::size_t source, const T &factor)
        {
            for (std::size_t j = 0; j < cols_; ++j)
                (*this)(target, j) += factor * (*this)(source, j);
        }

        /// col[target] += factor * col[source]
        void add_col_multiple(std::size_t target, std::size_t source, const T &factor)
        {
            for (std::size_t i = 0; i < rows_; ++i)
                (*this)(i, target) += factor * (*this)(i, source);
        }

        void negate_row(std::size_t i)
        {
            for (std::size_t j = 0; j < cols_; ++j)
                (*this)(i, j) = -(*this)(i, j);
        }

        friend bool operator==(const Matrix &a, const Matrix &b)
        {
            return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
        }

        friend Matrix operator*(const Matrix &a, const Matrix &b)
        {
            if (a.cols_ != b.rows_)
                throw DimensionMismatch("matrix product shape mismatch");
            Matrix c(a.rows_, b.cols_);
            for (std::size_t i = 0; i < a.rows_; ++i)
                for (std::size_t l = 0; l < a.cols_; ++l)
                {
                    const T &x = a(i, l);
                    if (x == 0)
                        continue;
                    for (std::size_t j = 0; j < b.cols_; ++j)
                        c(i, j) += x * b(l, j);
                }
            return c;
        }

        std::vector<T> apply(std::span<const T> v) const
        {
            if (v.size() != cols_)
                throw DimensionMismatch("matrix-vector shape mismatch");
            std::vector<T> out(rows_, T(0));
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    out[i] += (*this)(i, j) * v[j];
            return out;
        }

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<T> data_;
    };

    using IntMatrix = Matrix<Integer>;
    using RatMatrix = Matrix<Rational>;

    /// Fraction-free (Bareiss) determinant of a square integer matrix.
    Integer determinant(const IntMatrix &A);

    /// c * A where c is the least common denominator of the entries of A.
    IntMatrix clear_denominators(const RatMatrix &A, Integer *factor = nullptr);

    RatMatrix to_rational(const IntMatrix &A);

    bool is_diagonal(const IntMatrix &A);

    std::string to_string(const IntMatrix &A);
}
