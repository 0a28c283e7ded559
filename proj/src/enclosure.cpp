#include "cpz/enclosure.hpp"

#include "cpz/convert.hpp"
#include "cpz/ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cpz
{

namespace
{

IntervalMatrix2 zero_block()
{
    return {{{Interval(0.0), Interval(0.0)}, {Interval(0.0), Interval(0.0)}}};
}

ThirdDerivativeBounds zero_third()
{
    return {zero_block(), zero_block()};
}

} // namespace

SmoothFunction2D demo_f1()
{
    SmoothFunction2D f;
    f.value = [](const DenseVector& x) {
        return DenseVector{-1.6 + x[1] - 0.5 * x[0] * x[1] + std::cos(0.5 * x[1]),
                           0.5 + x[1] * x[1] + std::sin(0.4 * x[0] - 1.0)};
    };
    f.gradient = [](const DenseVector& x) {
        return DenseMatrix{{-0.5 * x[1], 1.0 - 0.5 * x[0] - 0.5 * std::sin(0.5 * x[1])},
                           {0.4 * std::cos(0.4 * x[0] - 1.0), 2.0 * x[1]}};
    };
    f.hessian = [](const DenseVector& x) {
        return std::array<DenseMatrix, 2>{
            DenseMatrix{{0.0, -0.5}, {-0.5, -0.25 * std::cos(0.5 * x[1])}},
            DenseMatrix{{-0.16 * std::sin(0.4 * x[0] - 1.0), 0.0}, {0.0, 2.0}}};
    };
    f.third_interval = [](const IntervalBox& box) {
        std::array<ThirdDerivativeBounds, 2> t{zero_third(), zero_third()};
        t[0][1][1][1] = 0.125 * sin(0.5 * box[1]);
        t[1][0][0][0] = -0.064 * cos(0.4 * box[0] - Interval(1.0));
        return t;
    };
    return f;
}

SmoothFunction2D demo_f2()
{
    SmoothFunction2D f;
    f.value = [](const DenseVector& x) {
        return DenseVector{-0.6 + 2.0 * std::sin(0.3 * x[1]) + std::exp(0.3 * x[0]),
                           0.1 + x[0] * x[1]};
    };
    f.gradient = [](const DenseVector& x) {
        return DenseMatrix{{0.3 * std::exp(0.3 * x[0]), 0.6 * std::cos(0.3 * x[1])},
                           {x[1], x[0]}};
    };
    f.hessian = [](const DenseVector& x) {
        return std::array<DenseMatrix, 2>{
            DenseMatrix{{0.09 * std::exp(0.3 * x[0]), 0.0}, {0.0, -0.18 * std::sin(0.3 * x[1])}},
            DenseMatrix{{0.0, 1.0}, {1.0, 0.0}}};
    };
    f.third_interval = [](const IntervalBox& box) {
        std::array<ThirdDerivativeBounds, 2> t{zero_third(), zero_third()};
        t[0][0][0][0] = 0.027 * exp(0.3 * box[0]);
        t[0][1][1][1] = -0.054 * cos(0.3 * box[1]);
        return t;
    };
    return f;
}

DenseVector demo_map(const DenseVector& x)
{
    if (0.5 * x[0] * x[0] <= x[1])
        return demo_f1().value(x);
    return demo_f2().value(x);
}

DenseVector taylor_polynomial(const SmoothFunction2D& f, const DenseVector& xstar,
                              const DenseVector& x)
{
    const DenseVector d = x - xstar;
    const DenseVector f0 = f.value(xstar);
    const DenseMatrix J = f.gradient(xstar);
    const auto H = f.hessian(xstar);
    DenseVector out(2);
    for (std::size_t i = 0; i < 2; ++i)
    {
        const DenseVector Hd = mat_vec(H[i], d);
        out[i] = f0[i] + J(i, 0) * d[0] + J(i, 1) * d[1] + 0.5 * dot(d.span(), Hd.span());
    }
    return out;
}

std::array<Interval, 2> lagrange_remainder(const SmoothFunction2D& f, const IntervalBox& box,
                                           const DenseVector& xstar)
{
    if (box.dim() != 2 || xstar.size() != 2)
        throw ShapeError("lagrange_remainder expects a 2-dimensional box and expansion point");
    const auto T = f.third_interval(box);
    const std::array<Interval, 2> d{box[0] - Interval(xstar[0]), box[1] - Interval(xstar[1])};
    std::array<Interval, 2> out{};
    for (std::size_t out_i = 0; out_i < 2; ++out_i)
    {
        Interval acc(0.0);
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                {
                    const Interval& t = T[out_i][k][i][j];
                    if (t.lo() == 0.0 && t.hi() == 0.0)
                        continue;
                    acc = acc + t * (d[k] * (d[i] * d[j]));
                }
        out[out_i] = (1.0 / 6.0) * acc;
    }
    return out;
}

ConPolyZonotope taylor_enclose(const SmoothFunction2D& f, const ConPolyZonotope& s,
                               const IntervalBox& box, const DenseVector& xstar)
{
    if (s.dim() != 2)
        throw ShapeError("taylor_enclose expects a 2-dimensional set, got dimension " +
                         std::to_string(s.dim()));
    if (!box[0].contains(xstar[0]) || !box[1].contains(xstar[1]))
        throw ValidationError("taylor_enclose: expansion point lies outside the box");

    const ConPolyZonotope shifted(s.c() - xstar, s.G(), s.E(), s.A(), s.b(), s.R());
    const ConPolyZonotope lifted = cartesian_product(ConPolyZonotope::point(DenseVector{1.0}), shifted);

    const DenseVector f0 = f.value(xstar);
    const DenseMatrix J = f.gradient(xstar);
    const auto H = f.hessian(xstar);
    std::vector<DenseMatrix> qs;
    for (std::size_t i = 0; i < 2; ++i)
    {
        DenseMatrix Q(3, 3);
        Q(0, 0) = f0[i];
        for (std::size_t k = 0; k < 2; ++k)
        {
            Q(0, 1 + k) = 0.5 * J(i, k);
            Q(1 + k, 0) = 0.5 * J(i, k);
            for (std::size_t l = 0; l < 2; ++l)
                Q(1 + k, 1 + l) = 0.5 * H[i](k, l);
        }
        qs.push_back(std::move(Q));
    }
    const ConPolyZonotope poly = quadratic_map(qs, lifted);

    const auto L = lagrange_remainder(f, box, xstar);
    const IntervalBox rem(DenseVector{L[0].lo(), L[1].lo()}, DenseVector{L[0].hi(), L[1].hi()});
    return minkowski_sum(poly, from_interval(rem));
}

namespace
{

void require_demo_box(const IntervalBox& box)
{
    if (box.dim() != 2 || box.lo[0] != -1.0 || box.lo[1] != -1.0 || box.hi[0] != 1.0 ||
        box.hi[1] != 1.0)
        throw ValidationError("region parametrizations are defined for the box [-1,1]^2 only");
}

ConPolyZonotope parabola_region(double offset, double cross)
{
    return ConPolyZonotope(DenseVector{0.0, offset},
                           DenseMatrix{{1.0, 0.0, 0.0, 0.0}, {0.0, 0.25, 0.5, cross}},
                           ExponentMatrix{{1, 2, 0, 2}, {0, 0, 1, 1}});
}

} // namespace

ConPolyZonotope region_above_parabola(const IntervalBox& box)
{
    require_demo_box(box);
    return parabola_region(0.5, -0.25);
}

ConPolyZonotope region_below_parabola(const IntervalBox& box)
{
    require_demo_box(box);
    return parabola_region(-0.5, 0.25);
}

IntervalBox demo_box()
{
    return IntervalBox(DenseVector{-1.0, -1.0}, DenseVector{1.0, 1.0});
}

DenseVector hull_midpoint(const std::vector<DenseVector>& points)
{
    if (points.empty())
        throw ValidationError("hull_midpoint of an empty point set");
    const std::size_t n = points.front().size();
    DenseVector lo(n, std::numeric_limits<double>::infinity());
    DenseVector hi(n, -std::numeric_limits<double>::infinity());
    for (const auto& x : points)
        for (std::size_t i = 0; i < n; ++i)
        {
            lo[i] = std::min(lo[i], x[i]);
            hi[i] = std::max(hi[i], x[i]);
        }
    return 0.5 * (lo + hi);
}

DemoResult demo_nonlinear_map(const WitnessSampleConfig& cfg)
{
    const IntervalBox box = demo_box();
    DemoResult r;
    r.P = simplex_fixture_P();
    r.piece_above = intersect(r.P, region_above_parabola(box));
    r.piece_below = intersect(r.P, region_below_parabola(box));

    WitnessSampleConfig c1 = cfg;
    WitnessSampleConfig c2 = cfg;
    c2.seed = cfg.seed + 1;
    r.cloud_above = point_cloud(r.piece_above, c1);
    r.cloud_below = point_cloud(r.piece_below, c2);
    if (r.cloud_above.empty() || r.cloud_below.empty())
        throw ConvergenceError("no witnesses found for a region piece; increase the draw count");
    r.xstar_above = hull_midpoint(r.cloud_above);
    r.xstar_below = hull_midpoint(r.cloud_below);

    const SmoothFunction2D f1 = demo_f1();
    const SmoothFunction2D f2 = demo_f2();
    r.remainder_above = lagrange_remainder(f1, box, r.xstar_above);
    r.remainder_below = lagrange_remainder(f2, box, r.xstar_below);
    r.enclosure_above = taylor_enclose(f1, r.piece_above, box, r.xstar_above);
    r.enclosure_below = taylor_enclose(f2, r.piece_below, box, r.xstar_below);
    r.union_set = set_union(r.enclosure_above, r.enclosure_below);
    return r;
}

} // namespace cpz
