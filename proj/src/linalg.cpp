#include "cpz/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cpz
{

namespace
{

void require_same_size(const DenseVector& a, const DenseVector& b, const char* what)
{
    if (a.size() != b.size())
    {
        throw ShapeError(std::string(what) + ": vector lengths " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()) + " differ");
    }
}

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* what)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError(std::string(what) + ": shapes " + a.shape_string() + " and " +
                         b.shape_string() + " differ");
}

double frobenius(const DenseMatrix& a)
{
    double s = 0.0;
    for (double v : a.data())
        s += v * v;
    return std::sqrt(s);
}

double off_diagonal_norm(const DenseMatrix& a)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j)
                s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

} // namespace

DenseVector concat(const DenseVector& a, const DenseVector& b)
{
    std::vector<double> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return DenseVector(std::move(out));
}

DenseVector operator+(const DenseVector& a, const DenseVector& b)
{
    require_same_size(a, b, "vector add");
    DenseVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

DenseVector operator-(const DenseVector& a, const DenseVector& b)
{
    require_same_size(a, b, "vector sub");
    DenseVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

DenseVector operator*(double s, const DenseVector& a)
{
    DenseVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = s * a[i];
    return out;
}

double dot(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size())
        throw ShapeError("dot: lengths " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()) + " differ");
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double max_abs(std::span<const double> a)
{
    double m = 0.0;
    for (double v : a)
        m = std::max(m, std::abs(v));
    return m;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.cols() != b.rows())
        throw ShapeError("mat_mul: cannot multiply " + a.shape_string() + " by " + b.shape_string());
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            const double aik = a(i, k);
            if (aik == 0.0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

DenseVector mat_vec(const DenseMatrix& a, const DenseVector& x)
{
    if (a.cols() != x.size())
        throw ShapeError("mat_vec: cannot multiply " + a.shape_string() + " by vector of length " +
                         std::to_string(x.size()));
    DenseVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
    {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            s += a(i, j) * x[j];
        out[i] = s;
    }
    return out;
}

DenseMatrix operator*(double s, const DenseMatrix& a)
{
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = s * a(i, j);
    return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b)
{
    require_same_shape(a, b, "matrix add");
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) + b(i, j);
    return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b)
{
    require_same_shape(a, b, "matrix sub");
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) - b(i, j);
    return out;
}

DenseMatrix diag(const DenseVector& d)
{
    DenseMatrix out(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        out(i, i) = d[i];
    return out;
}

DenseMatrix column_matrix(const DenseVector& v)
{
    return DenseMatrix(v.size(), 1, v.values());
}

DenseVector as_vector(const DenseMatrix& column)
{
    if (column.cols() != 1)
        throw ShapeError("expected a column (nx1), got " + column.shape_string());
    return DenseVector(std::vector<double>(column.data().begin(), column.data().end()));
}

double max_abs(const DenseMatrix& a)
{
    return max_abs(a.data());
}

DenseVector solve(DenseMatrix a, DenseVector b, double pivot_tol)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw ShapeError("solve: need square system, got " + a.shape_string() + " with rhs " +
                         std::to_string(b.size()));
    const double scale = std::max(max_abs(a), 1e-300);
    for (std::size_t k = 0; k < n; ++k)
    {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k)))
                piv = i;
        if (std::abs(a(piv, k)) <= pivot_tol * scale)
            throw DomainError("solve: matrix is numerically singular");
        if (piv != k)
        {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i)
        {
            const double f = a(i, k) / a(k, k);
            if (f == 0.0)
                continue;
            for (std::size_t j = k; j < n; ++j)
                a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    DenseVector x(n);
    for (std::size_t i = n; i-- > 0;)
    {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

SymEig sym_eig(const DenseMatrix& q)
{
    const std::size_t n = q.rows();
    if (q.cols() != n)
        throw ValidationError("sym_eig: matrix must be square, got " + q.shape_string());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(q(i, j) - q(j, i)) > kSymTol)
                throw ValidationError("sym_eig: matrix is not symmetric at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");

    DenseMatrix a = 0.5 * (q + q.transposed());
    DenseMatrix v = DenseMatrix::identity(n);
    const double tol = 1e-12 * frobenius(a);

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (off_diagonal_norm(a) > tol)
    {
        if (sweep++ == kMaxSweeps)
            throw ConvergenceError("sym_eig: no convergence after 100 Jacobi sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t r = p + 1; r < n; ++r)
            {
                const double apr = a(p, r);
                if (apr == 0.0)
                    continue;
                const double theta = (a(r, r) - a(p, p)) / (2.0 * apr);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // A <- J^T A J with J the (p,r) rotation
                for (std::size_t k = 0; k < n; ++k)
                {
                    const double akp = a(k, p);
                    const double akr = a(k, r);
                    a(k, p) = c * akp - s * akr;
                    a(k, r) = s * akp + c * akr;
                }
                for (std::size_t k = 0; k < n; ++k)
                {
                    const double apk = a(p, k);
                    const double ark = a(r, k);
                    a(p, k) = c * apk - s * ark;
                    a(r, k) = s * apk + c * ark;
                }
                for (std::size_t k = 0; k < n; ++k)
                {
                    const double vkp = v(k, p);
                    const double vkr = v(k, r);
                    v(k, p) = c * vkp - s * vkr;
                    v(k, r) = s * vkp + c * vkr;
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    SymEig out{DenseVector(n), DenseMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k)
    {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i)
            out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

} // namespace cpz
