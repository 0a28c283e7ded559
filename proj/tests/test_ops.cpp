#include "cpz/convert.hpp"
#include "cpz/ops.hpp"
#include "cpz/oracle.hpp"
#include "cpz/regularize.hpp"
#include "support/random_cpz.hpp"
#include "support/union_closed_form.hpp"

#include <doctest.h>

#include <cmath>

using namespace cpz;
using namespace cpz::testing;

namespace
{

ConPolyZonotope example1()
{
    return ConPolyZonotope(DenseVector{0, 0}, DenseMatrix{{1, 0, 1, -1}, {0, 1, 1, 1}},
                           ExponentMatrix{{1, 0, 1, 2}, {0, 1, 1, 0}, {0, 0, 1, 1}},
                           DenseMatrix{{1, -0.5, 0.5}}, DenseVector{0.5},
                           ExponentMatrix{{0, 1, 2}, {1, 0, 0}, {0, 1, 0}});
}

ConPolyZonotope interval1d(double lo, double hi)
{
    return from_interval(IntervalBox(DenseVector{lo}, DenseVector{hi}));
}

std::pair<double, double> range_1d(const std::vector<DenseVector>& pts)
{
    double lo = 1e300;
    double hi = -1e300;
    for (const auto& x : pts)
    {
        lo = std::min(lo, x[0]);
        hi = std::max(hi, x[0]);
    }
    return {lo, hi};
}

} // namespace

TEST_SUITE("ops")
{
    TEST_CASE("linear map")
    {
        const auto s = example1();
        CHECK(linear_map(DenseMatrix::identity(2), s) == s);
        const auto z = linear_map(DenseMatrix(1, 2), s);
        CHECK(z.c() == DenseVector{0});
        CHECK(z.num_generators() == 0);
        const auto m = linear_map(DenseMatrix{{2, 0}, {0, 1}}, s);
        CHECK(m.G() == DenseMatrix{{2, 0, 2, -2}, {0, 1, 1, 1}});
        CHECK(m.E() == s.E());
        CHECK(m.A() == s.A());
        CHECK(m.b() == s.b());
        CHECK(m.R() == s.R());
        CHECK_THROWS_AS(linear_map(DenseMatrix(2, 3), s), ShapeError);
    }

    TEST_CASE("minkowski sum")
    {
        const ConPolyZonotope unit(DenseVector{0.5}, DenseMatrix{{0.5}}, ExponentMatrix{{1}});
        const auto s = minkowski_sum(unit, unit);
        CHECK(s.c() == DenseVector{1});
        CHECK(s.G() == DenseMatrix{{0.5, 0.5}});
        CHECK(s.E() == ExponentMatrix::identity(2));

        const auto shifted = minkowski_sum(example1(), ConPolyZonotope::point(DenseVector{1, 2}));
        CHECK(shifted.c() == DenseVector{1, 2});
        CHECK(shifted.G() == example1().G());
        CHECK_THROWS_AS(minkowski_sum(example1(), unit), ShapeError);
    }

    TEST_CASE("cartesian product")
    {
        const auto sq = cartesian_product(interval1d(-1, 1), interval1d(-1, 1));
        CHECK(sq == from_interval(IntervalBox(DenseVector{-1, -1}, DenseVector{1, 1})));
        const auto s = cartesian_product(example1(), ConPolyZonotope::point(DenseVector{7}));
        CHECK(s.c() == DenseVector{0, 0, 7});
        CHECK(s.G() == vcat({example1().G(), DenseMatrix(1, 4)}));
    }

    TEST_CASE("convex hull")
    {
        const auto s = convex_hull(ConPolyZonotope::point(DenseVector{0}),
                                   ConPolyZonotope::point(DenseVector{2}));
        CHECK(s.c() == DenseVector{1});
        CHECK(s.G() == DenseMatrix{{-1}});
        CHECK(s.E() == ExponentMatrix{{1}});

        const auto same = convex_hull(ConPolyZonotope::point(DenseVector{3}),
                                      ConPolyZonotope::point(DenseVector{3}));
        CHECK(same.c() == DenseVector{3});
        CHECK(same.num_generators() == 0);
    }

    TEST_CASE("quadratic map")
    {
        const ConPolyZonotope unit(DenseVector{0}, DenseMatrix{{1}}, ExponentMatrix{{1}});
        const std::vector<DenseMatrix> q1{DenseMatrix{{1}}};
        const auto sq = quadratic_map(q1, unit);
        CHECK(sq.c() == DenseVector{0});
        CHECK(sq.G() == DenseMatrix{{1}});
        CHECK(sq.E() == ExponentMatrix{{2}});
        WitnessSampleConfig cfg;
        cfg.draws = 2000;
        const auto [lo, hi] = range_1d(point_cloud(sq, cfg));
        CHECK(lo >= 0.0);
        CHECK(hi <= 1.0);
        CHECK(lo <= 1e-3);
        CHECK(hi >= 1 - 1e-2);

        const ConPolyZonotope shifted(DenseVector{1}, DenseMatrix{{1}}, ExponentMatrix{{1}});
        const auto s2 = quadratic_map(q1, shifted);
        CHECK(s2.c() == DenseVector{1});
        CHECK(s2.G() == DenseMatrix{{2, 1}});
        CHECK(s2.E() == ExponentMatrix{{1, 2}});

        const std::vector<DenseMatrix> zeros{DenseMatrix(2, 2), DenseMatrix(2, 2), DenseMatrix(2, 2)};
        const auto z = quadratic_map(zeros, example1());
        CHECK(z.c() == DenseVector{0, 0, 0});
        CHECK(z.num_generators() == 0);

        const std::vector<DenseMatrix> bad{DenseMatrix(3, 3)};
        CHECK_THROWS_AS(quadratic_map(bad, example1()), ShapeError);
    }

    TEST_CASE("quadratic map pointwise identity")
    {
        Rng rng(51);
        for (int t = 0; t < 300; ++t)
        {
            const auto pl = random_planted(rng);
            const std::size_t n = pl.set.dim();
            std::vector<DenseMatrix> qs;
            for (std::size_t i = 0, w = rng.index(1, 3); i < w; ++i)
                qs.push_back(random_matrix(rng, n, n));
            const auto r = quadratic_map(qs, pl.set);
            const DenseVector x = eval_point(pl.set, pl.witness);
            const DenseVector y = eval_point(r, pl.witness);
            for (std::size_t i = 0; i < qs.size(); ++i)
            {
                double v = 0.0;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        v += x[a] * qs[i](a, b) * x[b];
                CHECK(std::abs(y[i] - v) <= 1e-9);
            }
            CHECK(max_abs(constraint_residual(r, pl.witness).span()) <= 1e-9);
        }
    }

    TEST_CASE("intersection of intervals")
    {
        const auto s = intersect(interval1d(0, 2), interval1d(1, 3));
        CHECK(s.c() == DenseVector{1});
        CHECK(s.G() == DenseMatrix{{1}});
        CHECK(s.A() == DenseMatrix{{1, -1}});
        CHECK(s.b() == DenseVector{1});
        WitnessSampleConfig cfg;
        cfg.draws = 5000;
        const auto [lo, hi] = range_1d(point_cloud(s, cfg));
        CHECK(lo >= 1 - 1e-9);
        CHECK(hi <= 2 + 1e-9);
        CHECK(lo <= 1 + 1e-3);
        CHECK(hi >= 2 - 1e-3);

        cfg.draws = 20000;
        CHECK(sample_witnesses(intersect(interval1d(0, 1), interval1d(2, 3)), cfg).empty());
    }

    TEST_CASE("intersection with itself keeps every witness")
    {
        Rng rng(52);
        for (int t = 0; t < 200; ++t)
        {
            const auto pl = random_planted(rng);
            const auto r = intersect(pl.set, pl.set);
            const auto lifted = lift_concat(pl.witness, pl.witness);
            CHECK(max_abs(constraint_residual(r, lifted).span()) <= 1e-9);
            CHECK(max_diff(eval_point(r, lifted), eval_point(pl.set, pl.witness)) <= 1e-9);
        }
    }

    TEST_CASE("structural sizes before compaction")
    {
        Rng rng(53);
        for (int t = 0; t < 200; ++t)
        {
            const std::size_t n = rng.index(1, 4);
            const auto s1 = random_planted(rng, n).set;
            const auto s2 = random_planted(rng, n).set;
            const auto in = intersect_uncompacted(s1, s2);
            CHECK(in.num_constraint_generators() ==
                  s1.num_constraint_generators() + s2.num_constraint_generators() +
                      s1.num_generators() + s2.num_generators());
            CHECK(in.num_constraints() == s1.num_constraints() + s2.num_constraints() + n);
            CHECK(in.num_factors() == s1.num_factors() + s2.num_factors());

            const auto r1 = regularize(s1);
            const auto r2 = regularize(s2);
            const std::size_t p1 = r1.num_factors();
            const std::size_t p2 = r2.num_factors();
            const auto un = union_uncompacted(s1, s2);
            const std::size_t qbar = 2 + 2 * p1 + 2 * p2 + 2 * p1 * p2;
            CHECK(un.num_constraint_generators() ==
                  1 + qbar + r1.num_constraint_generators() + r2.num_constraint_generators() + 1);
            CHECK(un.num_factors() == 2 + p1 + p2);
            CHECK(un.num_constraints() == 2 + r1.num_constraints() + r2.num_constraints());
        }
    }

    TEST_CASE("union selector polynomial matches its closed form")
    {
        Rng rng(54);
        for (int t = 0; t < 100; ++t)
        {
            const std::size_t n = rng.index(1, 3);
            const auto s1 = random_planted(rng, n).set;
            const auto s2 = random_planted(rng, n).set;
            const auto un = union_uncompacted(s1, s2);
            const std::size_t p1 = s1.num_factors();
            const std::size_t p2 = s2.num_factors();
            for (int d = 0; d < 100; ++d)
            {
                const auto a = random_factors(rng, un.num_factors());
                const DenseVector r = constraint_residual(un, a);
                CHECK(std::abs(r[1] - union_g(a, p1, p2)) <= 1e-12);
                CHECK(std::abs(r[0] - (a[0] * a[1] - 1.0)) <= 1e-15);
            }
        }
    }

    TEST_CASE("union of touching intervals")
    {
        const ConPolyZonotope left(DenseVector{-0.5}, DenseMatrix{{0.5}}, ExponentMatrix{{1}});
        const ConPolyZonotope right(DenseVector{0.5}, DenseMatrix{{0.5}}, ExponentMatrix{{1}});
        const auto u = set_union(left, right);
        WitnessSampleConfig cfg;
        cfg.draws = 4000;
        const auto pts = point_cloud(u, cfg);
        CHECK(pts.size() > 3000);
        const auto [lo, hi] = range_1d(pts);
        // the selector constraints have double roots, so a residual of 1e-9
        // can still move a point by about its square root
        CHECK(lo >= -1 - 1e-4);
        CHECK(hi <= 1 + 1e-4);
        CHECK(lo <= -1 + 1e-2);
        CHECK(hi >= 1 - 1e-2);
        // no gap wider than 0.05 in the sampled cover
        std::vector<double> xs;
        for (const auto& x : pts)
            xs.push_back(x[0]);
        std::sort(xs.begin(), xs.end());
        double gap = 0.0;
        for (std::size_t i = 1; i < xs.size(); ++i)
            gap = std::max(gap, xs[i] - xs[i - 1]);
        CHECK(gap <= 0.05);
    }

    TEST_CASE("union with a singleton operand is padded")
    {
        const auto u = set_union(ConPolyZonotope::point(DenseVector{5}), interval1d(0, 1));
        CHECK(u.num_factors() == 2 + 1 + 1);
        const auto a = lift_union_first({}, 1);
        CHECK(max_abs(constraint_residual(u, a).span()) <= 1e-12);
        CHECK(eval_point(u, a) == DenseVector{5});
        const std::vector<double> w{0.3};
        const auto b = lift_union_second(0, w);
        CHECK(max_abs(constraint_residual(u, b).span()) <= 1e-12);
        CHECK(std::abs(eval_point(u, b)[0] - 0.65) <= 1e-12);
    }

    TEST_CASE("every binary result is regular")
    {
        Rng rng(55);
        for (int t = 0; t < 100; ++t)
        {
            const std::size_t n = rng.index(1, 3);
            const auto s1 = random_planted(rng, n).set;
            const auto s2 = random_planted(rng, n).set;
            CHECK(is_regular(minkowski_sum(s1, s2)));
            CHECK(is_regular(cartesian_product(s1, s2)));
            CHECK(is_regular(convex_hull(s1, s2)));
            CHECK(is_regular(intersect(s1, s2)));
            CHECK(is_regular(set_union(s1, s2)));
        }
    }
}
