#ifndef CPZ_SETS_HPP
#define CPZ_SETS_HPP

#include "cpz/interval.hpp"
#include "cpz/linalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cpz
{

// Constraint satisfaction threshold (infinity norm of the residual).
inline constexpr double kWitnessTol = 1e-9;
// Slack on the factor box [-1, 1] for sampled values.
inline constexpr double kFactorBoundTol = 1e-12;

/// Constrained polynomial zonotope <c, G, E, A, b, R>:
///
///   { c + sum_i (prod_k a_k^E(k,i)) G(:,i)  |  sum_j (prod_k a_k^R(k,j)) A(:,j) = b,
///     a in [-1,1]^p }
///
/// The number of factors p is the row count of E (and of R). A singleton {c}
/// is the value with h = q = m = 0; p may still be positive.
class ConPolyZonotope
{
public:
    ConPolyZonotope() = default;
    ConPolyZonotope(DenseVector c, DenseMatrix G, ExponentMatrix E, DenseMatrix A, DenseVector b,
                    ExponentMatrix R);

    // Unconstrained: A is 0x0, b empty, R is p x 0.
    ConPolyZonotope(DenseVector c, DenseMatrix G, ExponentMatrix E);

    static ConPolyZonotope point(DenseVector c);

    const DenseVector& c() const { return c_; }
    const DenseMatrix& G() const { return G_; }
    const ExponentMatrix& E() const { return E_; }
    const DenseMatrix& A() const { return A_; }
    const DenseVector& b() const { return b_; }
    const ExponentMatrix& R() const { return R_; }

    std::size_t dim() const { return c_.size(); }
    std::size_t num_factors() const { return E_.rows(); }
    std::size_t num_generators() const { return G_.cols(); }
    std::size_t num_constraints() const { return A_.rows(); }
    std::size_t num_constraint_generators() const { return A_.cols(); }

    bool operator==(const ConPolyZonotope&) const = default;

private:
    DenseVector c_;
    DenseMatrix G_;
    ExponentMatrix E_;
    DenseMatrix A_;
    DenseVector b_;
    ExponentMatrix R_;
};

/// Factor values in [-1, 1] (with kFactorBoundTol slack).
class FactorAssignment
{
public:
    FactorAssignment() = default;
    explicit FactorAssignment(std::vector<double> values);
    FactorAssignment(std::initializer_list<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> span() const { return values_; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const FactorAssignment&) const = default;

private:
    std::vector<double> values_;
};

struct PolyZonotope
{
    PolyZonotope() = default;
    PolyZonotope(DenseVector c, DenseMatrix G, DenseMatrix GI, ExponentMatrix E);

    DenseVector c;
    DenseMatrix G;
    DenseMatrix GI;
    ExponentMatrix E;

    bool operator==(const PolyZonotope&) const = default;
};

struct ConZonotope
{
    ConZonotope() = default;
    ConZonotope(DenseVector c, DenseMatrix G, DenseMatrix A, DenseVector b);

    DenseVector c;
    DenseMatrix G;
    DenseMatrix A;
    DenseVector b;

    bool operator==(const ConZonotope&) const = default;
};

struct Zonotope
{
    Zonotope() = default;
    Zonotope(DenseVector c, DenseMatrix G);

    DenseVector c;
    DenseMatrix G;

    bool operator==(const Zonotope&) const = default;
};

// {x | (x - c)^T Q^-1 (x - c) <= 1}. Symmetry is checked on construction,
// positive definiteness when the eigendecomposition is computed.
struct Ellipsoid
{
    Ellipsoid() = default;
    Ellipsoid(DenseVector c, DenseMatrix Q);

    DenseVector c;
    DenseMatrix Q;

    bool operator==(const Ellipsoid&) const = default;
};

// Polynomial sum_i coeffs(:,i) prod_k a_k^expons(k,i) over a in [-1,1]^p plus
// an interval remainder per output dimension.
struct TaylorModel
{
    TaylorModel() = default;
    TaylorModel(DenseMatrix coeffs, ExponentMatrix expons, std::vector<Interval> remainder);

    DenseMatrix coeffs;
    ExponentMatrix expons;
    std::vector<Interval> remainder;

    bool operator==(const TaylorModel&) const = default;
};

struct IntervalBox
{
    IntervalBox() = default;
    IntervalBox(DenseVector lo, DenseVector hi);

    std::size_t dim() const { return lo.size(); }
    Interval operator[](std::size_t i) const { return {lo[i], hi[i]}; }

    DenseVector lo;
    DenseVector hi;

    bool operator==(const IntervalBox&) const = default;
};

// Monomial values prod_k a_k^E(k,i) for every column i; 0^0 = 1.
std::vector<double> monomials(const ExponentMatrix& E, std::span<const double> alpha);

DenseVector eval_point(const ConPolyZonotope& s, std::span<const double> alpha);
DenseVector eval_point(const ConPolyZonotope& s, const FactorAssignment& alpha);

DenseVector constraint_residual(const ConPolyZonotope& s, std::span<const double> alpha);
DenseVector constraint_residual(const ConPolyZonotope& s, const FactorAssignment& alpha);

// ||constraint_residual||_inf <= kWitnessTol (an empty residual always passes).
bool is_witness(const ConPolyZonotope& s, const FactorAssignment& alpha);

// Columns of E pairwise distinct and nonzero; same for R.
bool is_regular(const ConPolyZonotope& s);

// (n + p) h + n + (m + p) q + m
std::size_t representation_size(const ConPolyZonotope& s);

} // namespace cpz

#endif
