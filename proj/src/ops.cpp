#include "cpz/ops.hpp"

#include "cpz/regularize.hpp"

#include <string>

namespace cpz
{

namespace
{

void require_same_dim(const ConPolyZonotope& s1, const ConPolyZonotope& s2, const char* op)
{
    if (s1.dim() != s2.dim())
        throw ShapeError(std::string(op) + ": operand dimensions " + std::to_string(s1.dim()) +
                         " and " + std::to_string(s2.dim()) + " differ");
}

// Appends `extra` zero factor rows to E and R.
ConPolyZonotope pad_factors(const ConPolyZonotope& s, std::size_t extra)
{
    if (extra == 0)
        return s;
    return ConPolyZonotope(s.c(), s.G(), vcat({s.E(), ExponentMatrix(extra, s.num_generators())}),
                           s.A(), s.b(),
                           vcat({s.R(), ExponentMatrix(extra, s.num_constraint_generators())}));
}

DenseVector stack(const DenseVector& a, const DenseVector& b)
{
    return concat(a, b);
}

// Constraint part shared by Minkowski sum, Cartesian product and convex hull:
// block-diagonal A and R, stacked b.
struct ConstraintBlocks
{
    DenseMatrix A;
    DenseVector b;
    ExponentMatrix R;
};

ConstraintBlocks independent_constraints(const ConPolyZonotope& s1, const ConPolyZonotope& s2)
{
    return {block_diag({s1.A(), s2.A()}), stack(s1.b(), s2.b()), block_diag({s1.R(), s2.R()})};
}

} // namespace

ConPolyZonotope linear_map(const DenseMatrix& m, const ConPolyZonotope& s)
{
    if (m.cols() != s.dim())
        throw ShapeError("linear_map: matrix is " + m.shape_string() + " but the set has dimension " +
                         std::to_string(s.dim()));
    return regularize(ConPolyZonotope(mat_vec(m, s.c()), mat_mul(m, s.G()), s.E(), s.A(), s.b(),
                                      s.R()));
}

ConPolyZonotope minkowski_sum(const ConPolyZonotope& s1, const ConPolyZonotope& s2)
{
    require_same_dim(s1, s2, "minkowski_sum");
    auto con = independent_constraints(s1, s2);
    return regularize(ConPolyZonotope(s1.c() + s2.c(), hcat({s1.G(), s2.G()}),
                                      block_diag({s1.E(), s2.E()}), std::move(con.A),
                                      std::move(con.b), std::move(con.R)));
}

ConPolyZonotope cartesian_product(const ConPolyZonotope& s1, const ConPolyZonotope& s2)
{
    auto con = independent_constraints(s1, s2);
    return regularize(ConPolyZonotope(stack(s1.c(), s2.c()), block_diag({s1.G(), s2.G()}),
                                      block_diag({s1.E(), s2.E()}), std::move(con.A),
                                      std::move(con.b), std::move(con.R)));
}

ConPolyZonotope convex_hull(const ConPolyZonotope& s1, const ConPolyZonotope& s2)
{
    require_same_dim(s1, s2, "convex_hull");
    const std::size_t p1 = s1.num_factors();
    const std::size_t p2 = s2.num_factors();
    const std::size_t h1 = s1.num_generators();
    const std::size_t h2 = s2.num_generators();

    const DenseVector c = 0.5 * (s1.c() + s2.c());
    const DenseMatrix G = 0.5 * hcat({column_matrix(s1.c() - s2.c()), s1.G(), s1.G(), s2.G(),
                                      -1.0 * s2.G()});

    // rows: s1 factors, s2 factors, interpolation factor
    ExponentMatrix lambda_row(1, 1 + 2 * h1 + 2 * h2);
    lambda_row(0, 0) = 1;
    for (std::size_t j = 0; j < h1; ++j)
        lambda_row(0, 1 + h1 + j) = 1;
    for (std::size_t j = 0; j < h2; ++j)
        lambda_row(0, 1 + 2 * h1 + h2 + j) = 1;
    ExponentMatrix E = vcat({
        hcat({ExponentMatrix(p1, 1), s1.E(), s1.E(), ExponentMatrix(p1, 2 * h2)}),
        hcat({ExponentMatrix(p2, 1 + 2 * h1), s2.E(), s2.E()}),
        lambda_row,
    });

    auto con = independent_constraints(s1, s2);
    ExponentMatrix R = vcat({con.R, ExponentMatrix(1, con.R.cols())});
    return regularize(
        ConPolyZonotope(c, G, std::move(E), std::move(con.A), std::move(con.b), std::move(R)));
}

ConPolyZonotope quadratic_map(std::span<const DenseMatrix> qs, const ConPolyZonotope& s)
{
    const std::size_t n = s.dim();
    const std::size_t h = s.num_generators();
    const std::size_t p = s.num_factors();
    const std::size_t w = qs.size();
    for (std::size_t i = 0; i < w; ++i)
    {
        if (qs[i].rows() != n || qs[i].cols() != n)
            throw ShapeError("quadratic_map: Q[" + std::to_string(i) + "] is " +
                             qs[i].shape_string() + ", expected " + std::to_string(n) + "x" +
                             std::to_string(n));
    }

    // Column layout: [G1hat (h) | G2hat (h) | Gbar_1 (h) ... Gbar_h (h)]
    DenseVector c(w);
    DenseMatrix G(w, 2 * h + h * h);
    for (std::size_t i = 0; i < w; ++i)
    {
        const DenseMatrix QG = mat_mul(qs[i], s.G());          // n x h
        const DenseMatrix GtQ = mat_mul(s.G().transposed(), qs[i]); // h x n
        const DenseVector Qc = mat_vec(qs[i], s.c());
        c[i] = dot(s.c().span(), Qc.span());
        for (std::size_t l = 0; l < h; ++l)
        {
            double chat1 = 0.0;
            for (std::size_t r = 0; r < n; ++r)
                chat1 += s.c()[r] * QG(r, l);
            G(i, l) = chat1;
            G(i, h + l) = dot(s.G().column(l), Qc.span());
        }
        for (std::size_t j = 0; j < h; ++j)
            for (std::size_t l = 0; l < h; ++l)
            {
                double v = 0.0;
                for (std::size_t r = 0; r < n; ++r)
                    v += GtQ(j, r) * s.G()(r, l);
                G(i, 2 * h + j * h + l) = v;
            }
    }

    ExponentMatrix E(p, 2 * h + h * h);
    for (std::size_t k = 0; k < p; ++k)
    {
        for (std::size_t l = 0; l < h; ++l)
        {
            E(k, l) = s.E()(k, l);
            E(k, h + l) = s.E()(k, l);
        }
        for (std::size_t j = 0; j < h; ++j)
            for (std::size_t l = 0; l < h; ++l)
                E(k, 2 * h + j * h + l) = s.E()(k, l) + s.E()(k, j);
    }
    return regularize(ConPolyZonotope(std::move(c), std::move(G), std::move(E), s.A(), s.b(), s.R()));
}

ConPolyZonotope intersect_uncompacted(const ConPolyZonotope& s1, const ConPolyZonotope& s2)
{
    require_same_dim(s1, s2, "intersect");
    const std::size_t p1 = s1.num_factors();
    const std::size_t p2 = s2.num_factors();
    const std::size_t h1 = s1.num_generators();

    ExponentMatrix E = vcat({s1.E(), ExponentMatrix(p2, h1)});
    DenseMatrix A = block_diag({s1.A(), s2.A(), hcat({s1.G(), -1.0 * s2.G()})});
    DenseVector b = concat(concat(s1.b(), s2.b()), s2.c() - s1.c());
    ExponentMatrix R = vcat({
        hcat({s1.R(), ExponentMatrix(p1, s2.num_constraint_generators()), s1.E(),
              ExponentMatrix(p1, s2.num_generators())}),
        hcat({ExponentMatrix(p2, s1.num_constraint_generators()), s2.R(), ExponentMatrix(p2, h1),
              s2.E()}),
    });
    return ConPolyZonotope(s1.c(), s1.G(), std::move(E), std::move(A), std::move(b), std::move(R));
}

ConPolyZonotope intersect(const ConPolyZonotope& s1, const ConPolyZonotope& s2)
{
    return regularize(intersect_uncompacted(s1, s2));
}

ConPolyZonotope union_uncompacted(const ConPolyZonotope& s1_in, const ConPolyZonotope& s2_in)
{
    require_same_dim(s1_in, s2_in, "union");
    const ConPolyZonotope s1 = pad_factors(regularize(s1_in), s1_in.num_factors() == 0 ? 1 : 0);
    const ConPolyZonotope s2 = pad_factors(regularize(s2_in), s2_in.num_factors() == 0 ? 1 : 0);

    const std::size_t p1 = s1.num_factors();
    const std::size_t p2 = s2.num_factors();
    const std::size_t h1 = s1.num_generators();
    const std::size_t h2 = s2.num_generators();
    const std::size_t m1 = s1.num_constraints();
    const std::size_t m2 = s2.num_constraints();
    const std::size_t q1 = s1.num_constraint_generators();
    const std::size_t q2 = s2.num_constraint_generators();
    const std::size_t p = 2 + p1 + p2;
    const std::size_t off1 = 2;      // first s1 factor row
    const std::size_t off2 = 2 + p1; // first s2 factor row

    // point part
    DenseVector c = 0.5 * (s1.c() + s2.c());
    DenseMatrix G = hcat({column_matrix(0.5 * (s1.c() - s2.c())), s1.G(), s2.G()});
    ExponentMatrix E(p, 1 + h1 + h2);
    E(0, 0) = 1;
    for (std::size_t k = 0; k < p1; ++k)
        for (std::size_t j = 0; j < h1; ++j)
            E(off1 + k, 1 + j) = s1.E()(k, j);
    for (std::size_t k = 0; k < p2; ++k)
        for (std::size_t j = 0; j < h2; ++j)
            E(off2 + k, 1 + h1 + j) = s2.E()(k, j);

    // Constraint columns: [selector (1) | g (qbar) | A1 (q1) | A2 (q2) | b-coupling (1)]
    // Rows:               [selector (1) | g (1)    | A1 (m1) | A2 (m2)]
    const std::size_t qbar = 2 + 2 * p1 + 2 * p2 + 2 * p1 * p2;
    const std::size_t q = 1 + qbar + q1 + q2 + 1;
    const std::size_t m = 2 + m1 + m2;
    DenseMatrix A(m, q);
    DenseVector b(m);
    ExponentMatrix R(p, q);

    // a1 a2 = 1
    A(0, 0) = 1.0;
    b[0] = 1.0;
    R(0, 0) = 1;
    R(1, 0) = 1;

    // g(a) = (1 + a1 + f1 (1 - a1) / 2)(1 - f2 / 2) - a2 - 1 = 0 with
    // f1 = sum of squared s1 factors / p1, f2 likewise for s2
    std::size_t col = 1;
    auto g_term = [&](double coeff, bool with_a1) -> std::size_t {
        A(1, col) = coeff;
        if (with_a1)
            R(0, col) = 1;
        return col++;
    };
    g_term(1.0, true);
    R(1, g_term(-1.0, false)) = 1;
    const double inv1 = 1.0 / (2.0 * static_cast<double>(p1));
    const double inv2 = 1.0 / (2.0 * static_cast<double>(p2));
    const double inv12 = 1.0 / (4.0 * static_cast<double>(p1 * p2));
    for (std::size_t i = 0; i < p1; ++i)
        R(off1 + i, g_term(inv1, false)) = 2;
    for (std::size_t i = 0; i < p1; ++i)
        R(off1 + i, g_term(-inv1, true)) = 2;
    for (std::size_t j = 0; j < p2; ++j)
        R(off2 + j, g_term(-inv2, false)) = 2;
    for (std::size_t j = 0; j < p2; ++j)
        R(off2 + j, g_term(-inv2, true)) = 2;
    for (int with_a1 = 0; with_a1 < 2; ++with_a1)
        for (std::size_t i = 0; i < p1; ++i)
            for (std::size_t j = 0; j < p2; ++j)
            {
                const std::size_t cc = g_term(with_a1 ? inv12 : -inv12, with_a1 != 0);
                R(off1 + i, cc) = 2;
                R(off2 + j, cc) = 2;
            }

    // original constraints, right-hand sides coupled to a1
    for (std::size_t r = 0; r < m1; ++r)
    {
        for (std::size_t j = 0; j < q1; ++j)
            A(2 + r, col + j) = s1.A()(r, j);
        b[2 + r] = 0.5 * s1.b()[r];
        A(2 + r, q - 1) = -0.5 * s1.b()[r];
    }
    for (std::size_t k = 0; k < p1; ++k)
        for (std::size_t j = 0; j < q1; ++j)
            R(off1 + k, col + j) = s1.R()(k, j);
    col += q1;
    for (std::size_t r = 0; r < m2; ++r)
    {
        for (std::size_t j = 0; j < q2; ++j)
            A(2 + m1 + r, col + j) = s2.A()(r, j);
        b[2 + m1 + r] = 0.5 * s2.b()[r];
        A(2 + m1 + r, q - 1) = 0.5 * s2.b()[r];
    }
    for (std::size_t k = 0; k < p2; ++k)
        for (std::size_t j = 0; j < q2; ++j)
            R(off2 + k, col + j) = s2.R()(k, j);
    R(0, q - 1) = 1;

    return ConPolyZonotope(std::move(c), std::move(G), std::move(E), std::move(A), std::move(b),
                           std::move(R));
}

ConPolyZonotope set_union(const ConPolyZonotope& s1, const ConPolyZonotope& s2)
{
    return regularize(union_uncompacted(s1, s2));
}

} // namespace cpz
