#include "cpz/convert.hpp"

#include <cmath>
#include <string>

namespace cpz
{

ConPolyZonotope from_poly_zonotope(const PolyZonotope& s)
{
    const std::size_t p = s.E.rows();
    const std::size_t q = s.GI.cols();
    const std::size_t h = s.G.cols();
    ExponentMatrix E = vcat({hcat({s.E, ExponentMatrix(p, q)}),
                             hcat({ExponentMatrix(q, h), ExponentMatrix::identity(q)})});
    return ConPolyZonotope(s.c, hcat({s.G, s.GI}), std::move(E));
}

ConPolyZonotope from_con_zonotope(const ConZonotope& s)
{
    const std::size_t p = s.G.cols();
    return ConPolyZonotope(s.c, s.G, ExponentMatrix::identity(p), s.A, s.b,
                           ExponentMatrix::identity(p));
}

ConPolyZonotope from_zonotope(const DenseVector& c, const DenseMatrix& g)
{
    if (g.rows() != c.size())
        throw ShapeError("zonotope generators have " + std::to_string(g.rows()) +
                         " rows but the center has length " + std::to_string(c.size()));
    return ConPolyZonotope(c, g, ExponentMatrix::identity(g.cols()));
}

ConPolyZonotope from_zonotope(const Zonotope& z)
{
    return from_zonotope(z.c, z.G);
}

ConPolyZonotope from_interval(const IntervalBox& box)
{
    const std::size_t n = box.dim();
    DenseVector c(n);
    DenseVector radius(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        c[i] = 0.5 * (box.lo[i] + box.hi[i]);
        radius[i] = 0.5 * (box.hi[i] - box.lo[i]);
    }
    return from_zonotope(c, diag(radius));
}

ConPolyZonotope from_taylor_model(const TaylorModel& t)
{
    const std::size_t n = t.coeffs.rows();
    DenseVector c(n);
    std::vector<std::size_t> nonconst;
    for (std::size_t i = 0; i < t.expons.cols(); ++i)
    {
        if (t.expons.column_is_zero(i))
        {
            for (std::size_t r = 0; r < n; ++r)
                c[r] += t.coeffs(r, i);
        }
        else
        {
            nonconst.push_back(i);
        }
    }
    DenseVector radius(n);
    for (std::size_t r = 0; r < n; ++r)
    {
        c[r] += t.remainder[r].mid();
        radius[r] = t.remainder[r].radius();
    }
    PolyZonotope pz(std::move(c), t.coeffs.select_columns(nonconst), diag(radius),
                    t.expons.select_columns(nonconst));
    return from_poly_zonotope(pz);
}

ConPolyZonotope from_ellipsoid(const Ellipsoid& e)
{
    const std::size_t n = e.c.size();
    const SymEig eig = sym_eig(e.Q);
    DenseVector root(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        if (!(eig.values[k] > kPosDefTol))
            throw ValidationError("ellipsoid shape matrix is not positive definite: eigenvalue " +
                                  std::to_string(k) + " = " + std::to_string(eig.values[k]));
        root[k] = std::sqrt(eig.values[k]);
    }
    DenseMatrix G = mat_mul(eig.vectors, diag(root));
    ExponentMatrix E = vcat({ExponentMatrix::identity(n), ExponentMatrix(1, n)});

    DenseMatrix A(1, n + 1, 1.0);
    A(0, 0) = -0.5;
    ExponentMatrix R(n + 1, n + 1);
    R(n, 0) = 1;
    for (std::size_t k = 0; k < n; ++k)
        R(k, k + 1) = 2;
    return ConPolyZonotope(e.c, std::move(G), std::move(E), std::move(A), DenseVector{0.5},
                           std::move(R));
}

ConPolyZonotope simplex_fixture_P()
{
    return ConPolyZonotope(DenseVector{-0.25, 0.25},
                           DenseMatrix{{-0.75, -0.25, 0.25}, {0.75, -0.25, 0.25}},
                           ExponentMatrix{{1, 0, 1}, {0, 1, 1}});
}

} // namespace cpz
