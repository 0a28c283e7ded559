#include "cpz/sets.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace cpz
{

namespace
{

std::string dims(std::size_t n)
{
    return std::to_string(n);
}

bool exponent_columns_regular(const ExponentMatrix& M)
{
    std::set<std::vector<std::uint32_t>> seen;
    for (std::size_t j = 0; j < M.cols(); ++j)
    {
        if (M.column_is_zero(j))
            return false;
        if (!seen.insert(M.column(j)).second)
            return false;
    }
    return true;
}

} // namespace

ConPolyZonotope::ConPolyZonotope(DenseVector c, DenseMatrix G, ExponentMatrix E, DenseMatrix A,
                                 DenseVector b, ExponentMatrix R)
    : c_(std::move(c)), G_(std::move(G)), E_(std::move(E)), A_(std::move(A)), b_(std::move(b)),
      R_(std::move(R))
{
    if (G_.rows() != c_.size())
        throw ShapeError("G has " + dims(G_.rows()) + " rows but c has length " + dims(c_.size()));
    if (E_.cols() != G_.cols())
        throw ShapeError("E has " + dims(E_.cols()) + " columns but G has " + dims(G_.cols()));
    if (A_.rows() != b_.size())
        throw ShapeError("A has " + dims(A_.rows()) + " rows but b has length " + dims(b_.size()));
    if (R_.cols() != A_.cols())
        throw ShapeError("R has " + dims(R_.cols()) + " columns but A has " + dims(A_.cols()));
    if (E_.rows() != R_.rows())
        throw ShapeError("E has " + dims(E_.rows()) + " factor rows but R has " + dims(R_.rows()));
}

ConPolyZonotope::ConPolyZonotope(DenseVector c, DenseMatrix G, ExponentMatrix E)
    : ConPolyZonotope(std::move(c), std::move(G), E, DenseMatrix(0, 0), DenseVector(),
                      ExponentMatrix(E.rows(), 0))
{
}

ConPolyZonotope ConPolyZonotope::point(DenseVector c)
{
    const std::size_t n = c.size();
    return ConPolyZonotope(std::move(c), DenseMatrix(n, 0), ExponentMatrix(0, 0));
}

FactorAssignment::FactorAssignment(std::vector<double> values) : values_(std::move(values))
{
    for (std::size_t k = 0; k < values_.size(); ++k)
    {
        if (!(std::abs(values_[k]) <= 1.0 + kFactorBoundTol))
            throw ValidationError("factor " + std::to_string(k) + " = " +
                                  std::to_string(values_[k]) + " lies outside [-1, 1]");
    }
}

FactorAssignment::FactorAssignment(std::initializer_list<double> values)
    : FactorAssignment(std::vector<double>(values))
{
}

PolyZonotope::PolyZonotope(DenseVector c_, DenseMatrix G_, DenseMatrix GI_, ExponentMatrix E_)
    : c(std::move(c_)), G(std::move(G_)), GI(std::move(GI_)), E(std::move(E_))
{
    if (G.rows() != c.size())
        throw ShapeError("G has " + dims(G.rows()) + " rows but c has length " + dims(c.size()));
    if (GI.rows() != c.size())
        throw ShapeError("GI has " + dims(GI.rows()) + " rows but c has length " + dims(c.size()));
    if (E.cols() != G.cols())
        throw ShapeError("E has " + dims(E.cols()) + " columns but G has " + dims(G.cols()));
}

ConZonotope::ConZonotope(DenseVector c_, DenseMatrix G_, DenseMatrix A_, DenseVector b_)
    : c(std::move(c_)), G(std::move(G_)), A(std::move(A_)), b(std::move(b_))
{
    if (G.rows() != c.size())
        throw ShapeError("G has " + dims(G.rows()) + " rows but c has length " + dims(c.size()));
    if (A.cols() != G.cols())
        throw ShapeError("A has " + dims(A.cols()) + " columns but G has " + dims(G.cols()));
    if (A.rows() != b.size())
        throw ShapeError("A has " + dims(A.rows()) + " rows but b has length " + dims(b.size()));
}

Zonotope::Zonotope(DenseVector c_, DenseMatrix G_) : c(std::move(c_)), G(std::move(G_))
{
    if (G.rows() != c.size())
        throw ShapeError("G has " + dims(G.rows()) + " rows but c has length " + dims(c.size()));
}

Ellipsoid::Ellipsoid(DenseVector c_, DenseMatrix Q_) : c(std::move(c_)), Q(std::move(Q_))
{
    if (Q.rows() != c.size() || Q.cols() != c.size())
        throw ShapeError("Q must be " + dims(c.size()) + "x" + dims(c.size()) + ", got " +
                         Q.shape_string());
    for (std::size_t i = 0; i < Q.rows(); ++i)
        for (std::size_t j = i + 1; j < Q.cols(); ++j)
            if (std::abs(Q(i, j) - Q(j, i)) > kSymTol)
                throw ValidationError("Q is not symmetric at (" + dims(i) + "," + dims(j) + ")");
}

TaylorModel::TaylorModel(DenseMatrix coeffs_, ExponentMatrix expons_,
                         std::vector<Interval> remainder_)
    : coeffs(std::move(coeffs_)), expons(std::move(expons_)), remainder(std::move(remainder_))
{
    if (expons.cols() != coeffs.cols())
        throw ShapeError("expons has " + dims(expons.cols()) + " columns but coeffs has " +
                         dims(coeffs.cols()));
    if (remainder.size() != coeffs.rows())
        throw ShapeError("remainder has length " + dims(remainder.size()) + " but coeffs has " +
                         dims(coeffs.rows()) + " rows");
}

IntervalBox::IntervalBox(DenseVector lo_, DenseVector hi_) : lo(std::move(lo_)), hi(std::move(hi_))
{
    if (lo.size() != hi.size())
        throw ShapeError("box bounds have lengths " + dims(lo.size()) + " and " + dims(hi.size()));
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] <= hi[i]))
            throw ValidationError("box lower bound exceeds upper bound in dimension " + dims(i));
}

std::vector<double> monomials(const ExponentMatrix& E, std::span<const double> alpha)
{
    if (alpha.size() != E.rows())
        throw ShapeError("factor vector has length " + dims(alpha.size()) + " but the set has " +
                         dims(E.rows()) + " factors");
    std::vector<double> out(E.cols(), 1.0);
    for (std::size_t k = 0; k < E.rows(); ++k)
    {
        const double a = alpha[k];
        for (std::size_t i = 0; i < E.cols(); ++i)
        {
            const std::uint32_t e = E(k, i);
            if (e == 0)
                continue;
            double v = a;
            for (std::uint32_t t = 1; t < e; ++t)
                v *= a;
            out[i] *= v;
        }
    }
    return out;
}

DenseVector eval_point(const ConPolyZonotope& s, std::span<const double> alpha)
{
    const auto mono = monomials(s.E(), alpha);
    DenseVector x = s.c();
    for (std::size_t i = 0; i < s.num_generators(); ++i)
        for (std::size_t r = 0; r < s.dim(); ++r)
            x[r] += mono[i] * s.G()(r, i);
    return x;
}

DenseVector eval_point(const ConPolyZonotope& s, const FactorAssignment& alpha)
{
    return eval_point(s, alpha.span());
}

DenseVector constraint_residual(const ConPolyZonotope& s, std::span<const double> alpha)
{
    const auto mono = monomials(s.R(), alpha);
    DenseVector r(s.num_constraints());
    for (std::size_t row = 0; row < s.num_constraints(); ++row)
    {
        double acc = 0.0;
        for (std::size_t j = 0; j < s.num_constraint_generators(); ++j)
            acc += mono[j] * s.A()(row, j);
        r[row] = acc - s.b()[row];
    }
    return r;
}

DenseVector constraint_residual(const ConPolyZonotope& s, const FactorAssignment& alpha)
{
    return constraint_residual(s, alpha.span());
}

bool is_witness(const ConPolyZonotope& s, const FactorAssignment& alpha)
{
    return max_abs(constraint_residual(s, alpha).span()) <= kWitnessTol;
}

bool is_regular(const ConPolyZonotope& s)
{
    return exponent_columns_regular(s.E()) && exponent_columns_regular(s.R());
}

std::size_t representation_size(const ConPolyZonotope& s)
{
    const std::size_t n = s.dim();
    const std::size_t p = s.num_factors();
    const std::size_t h = s.num_generators();
    const std::size_t m = s.num_constraints();
    const std::size_t q = s.num_constraint_generators();
    return (n + p) * h + n + (m + p) * q + m;
}

} // namespace cpz
