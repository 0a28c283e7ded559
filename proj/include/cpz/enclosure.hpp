#ifndef CPZ_ENCLOSURE_HPP
#define CPZ_ENCLOSURE_HPP

#include "cpz/oracle.hpp"
#include "cpz/sets.hpp"

#include <array>
#include <functional>
#include <vector>

namespace cpz
{

using IntervalMatrix2 = std::array<std::array<Interval, 2>, 2>;

// T[k](i, j) encloses d^3 f / (dx_k dx_i dx_j) for one output.
using ThirdDerivativeBounds = std::array<IntervalMatrix2, 2>;

/// Map R^2 -> R^2 with hand-written derivatives up to third order.
struct SmoothFunction2D
{
    std::function<DenseVector(const DenseVector&)> value;
    // Jacobian, row i = gradient of output i.
    std::function<DenseMatrix(const DenseVector&)> gradient;
    std::function<std::array<DenseMatrix, 2>(const DenseVector&)> hessian;
    std::function<std::array<ThirdDerivativeBounds, 2>(const IntervalBox&)> third_interval;
};

/// Branch of the demo map used where 0.5 x1^2 <= x2:
///   f1 = -1.6 + x2 - 0.5 x1 x2 + cos(0.5 x2)
///   f2 =  0.5 + x2^2 + sin(0.4 x1 - 1)
SmoothFunction2D demo_f1();

/// Branch used where 0.5 x1^2 > x2:
///   f1 = -0.6 + 2 sin(0.3 x2) + exp(0.3 x1)
///   f2 =  0.1 + x1 x2
SmoothFunction2D demo_f2();

// Piecewise demo map.
DenseVector demo_map(const DenseVector& x);

// f(x*) + J (x - x*) + 0.5 (x - x*)^T H_i (x - x*) per output.
DenseVector taylor_polynomial(const SmoothFunction2D& f, const DenseVector& xstar,
                              const DenseVector& x);

/// Lagrange remainder (1/6) sum_{k,i,j} T[k](i,j) d_k d_i d_j with d in box - x*,
/// evaluated in interval arithmetic.
std::array<Interval, 2> lagrange_remainder(const SmoothFunction2D& f, const IntervalBox& box,
                                           const DenseVector& xstar);

/// Order-2 Taylor enclosure of f over s.
///
/// The polynomial part is exact: with z = (1, x - x*), every output is the
/// quadratic form z^T Qt_i z where Qt_i = [f_i(x*), J_i/2; J_i^T/2, H_i/2], so
/// the result is quadratic_map({Qt_1, Qt_2}, {1} x (s - x*)) plus the
/// remainder box. The factors of s stay the leading factors of the result,
/// followed by two remainder factors.
ConPolyZonotope taylor_enclose(const SmoothFunction2D& f, const ConPolyZonotope& s,
                               const IntervalBox& box, const DenseVector& xstar);

// {(a1, 0.5 + 0.25 a1^2 + 0.5 a2 - 0.25 a1^2 a2)} = {x in [-1,1]^2 | x2 >= 0.5 x1^2}
ConPolyZonotope region_above_parabola(const IntervalBox& box);

// {(a1, -0.5 + 0.25 a1^2 + 0.5 a2 + 0.25 a1^2 a2)} = {x in [-1,1]^2 | x2 <= 0.5 x1^2}
ConPolyZonotope region_below_parabola(const IntervalBox& box);

IntervalBox demo_box();

// Midpoint of the interval hull of the points.
DenseVector hull_midpoint(const std::vector<DenseVector>& points);

struct DemoResult
{
    ConPolyZonotope P;
    ConPolyZonotope piece_above; // P intersected with the region where f1 applies
    ConPolyZonotope piece_below;
    ConPolyZonotope enclosure_above;
    ConPolyZonotope enclosure_below;
    ConPolyZonotope union_set;
    DenseVector xstar_above;
    DenseVector xstar_below;
    std::array<Interval, 2> remainder_above;
    std::array<Interval, 2> remainder_below;
    std::vector<DenseVector> cloud_above; // sampled points of piece_above
    std::vector<DenseVector> cloud_below;
};

/// Encloses the image of the triangle P under demo_map: P is cut by both
/// regions, each piece is enclosed with its branch expanded at the midpoint
/// of its sampled hull, and the two enclosures are united. cfg drives the
/// piece sampling.
DemoResult demo_nonlinear_map(const WitnessSampleConfig& cfg);

} // namespace cpz

#endif
