#ifndef CPZ_LINALG_HPP
#define CPZ_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpz
{

// Error taxonomy shared by the whole library. The CLI maps the first three to
// exit code 1.
class ShapeError : public std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

class ValidationError : public std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error
{
    using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Absolute tolerance on |Q - Q^T| entries for matrices treated as symmetric.
inline constexpr double kSymTol = 1e-9;

/// Dense row-major matrix. Zero-row and zero-column shapes are distinct, so a
/// 2x0 matrix is not the same value as a 0x0 matrix.
template <typename T>
class Matrix
{
public:
    using value_type = T;

    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_)
        {
            throw ShapeError("matrix data has " + std::to_string(data_.size()) +
                             " entries, expected " + std::to_string(rows_ * cols_) + " for shape " +
                             shape_string());
        }
    }

    // Row-wise literal: {{1, 2}, {3, 4}}.
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
        : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
    {
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows)
        {
            if (r.size() != cols_)
                throw ShapeError("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> data() const { return data_; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out[i] = (*this)(i, j);
        return out;
    }

    bool column_is_zero(std::size_t j) const
    {
        for (std::size_t i = 0; i < rows_; ++i)
        {
            if ((*this)(i, j) != T{0})
                return false;
        }
        return true;
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    // Columns `idx` in the given order.
    Matrix select_columns(std::span<const std::size_t> idx) const
    {
        Matrix out(rows_, idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k)
            for (std::size_t i = 0; i < rows_; ++i)
                out(i, k) = (*this)(i, idx[k]);
        return out;
    }

    std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using DenseMatrix = Matrix<double>;
using ExponentMatrix = Matrix<std::uint32_t>;

class DenseVector
{
public:
    DenseVector() = default;
    explicit DenseVector(std::size_t n, double fill = 0.0) : v_(n, fill) {}
    explicit DenseVector(std::vector<double> v) : v_(std::move(v)) {}
    DenseVector(std::initializer_list<double> v) : v_(v) {}

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    double& operator[](std::size_t i) { return v_[i]; }
    double operator[](std::size_t i) const { return v_[i]; }

    auto begin() { return v_.begin(); }
    auto end() { return v_.end(); }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    std::span<const double> span() const { return v_; }
    const std::vector<double>& values() const { return v_; }

    bool operator==(const DenseVector&) const = default;

private:
    std::vector<double> v_;
};

template <typename T>
Matrix<T> hcat(std::initializer_list<Matrix<T>> blocks)
{
    if (blocks.size() == 0)
        return {};
    const std::size_t rows = blocks.begin()->rows();
    std::size_t cols = 0;
    for (const auto& b : blocks)
    {
        if (b.rows() != rows)
            throw ShapeError("hcat: row mismatch " + blocks.begin()->shape_string() + " vs " +
                             b.shape_string());
        cols += b.cols();
    }
    Matrix<T> out(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks)
    {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, off + j) = b(i, j);
        off += b.cols();
    }
    return out;
}

template <typename T>
Matrix<T> vcat(std::initializer_list<Matrix<T>> blocks)
{
    if (blocks.size() == 0)
        return {};
    const std::size_t cols = blocks.begin()->cols();
    std::size_t rows = 0;
    for (const auto& b : blocks)
    {
        if (b.cols() != cols)
            throw ShapeError("vcat: column mismatch " + blocks.begin()->shape_string() + " vs " +
                             b.shape_string());
        rows += b.rows();
    }
    Matrix<T> out(rows, cols);
    std::size_t off = 0;
    for (const auto& b : blocks)
    {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                out(off + i, j) = b(i, j);
        off += b.rows();
    }
    return out;
}

template <typename T>
Matrix<T> block_diag(std::initializer_list<Matrix<T>> blocks)
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (const auto& b : blocks)
    {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix<T> out(rows, cols);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& b : blocks)
    {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

DenseVector concat(const DenseVector& a, const DenseVector& b);
DenseVector operator+(const DenseVector& a, const DenseVector& b);
DenseVector operator-(const DenseVector& a, const DenseVector& b);
DenseVector operator*(double s, const DenseVector& a);
double dot(std::span<const double> a, std::span<const double> b);
double max_abs(std::span<const double> a);

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseVector mat_vec(const DenseMatrix& a, const DenseVector& x);
DenseMatrix operator*(double s, const DenseMatrix& a);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix diag(const DenseVector& d);
DenseMatrix column_matrix(const DenseVector& v);
DenseVector as_vector(const DenseMatrix& column);
double max_abs(const DenseMatrix& a);

// Solves a x = b by Gaussian elimination with partial pivoting. Throws
// DomainError when a pivot falls below `pivot_tol` times the largest entry.
DenseVector solve(DenseMatrix a, DenseVector b, double pivot_tol = 1e-14);

struct SymEig
{
    DenseVector values;  // descending
    DenseMatrix vectors; // columns are the matching unit eigenvectors
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// The input must be square and symmetric within kSymTol; it is symmetrized
/// as (Q + Q^T)/2 before iterating. Sweeps stop once the off-diagonal
/// Frobenius norm drops below 1e-12 * ||Q||_F; ConvergenceError is thrown
/// after 100 sweeps without reaching that.
SymEig sym_eig(const DenseMatrix& q);

} // namespace cpz

#endif
