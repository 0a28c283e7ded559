#include "cpz/interval.hpp"
#include "cpz/linalg.hpp"
#include "cpz/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

using namespace cpz;

namespace
{

// Tight: contains the reference and is at most a few ulps wider.
bool encloses_tightly(const Interval& got, double lo, double hi)
{
    return got.lo() <= lo && hi <= got.hi() && lo - got.lo() <= 1e-14 * (1 + std::abs(lo)) &&
           got.hi() - hi <= 1e-14 * (1 + std::abs(hi));
}

Interval random_interval(Rng& rng, double scale)
{
    const double a = scale * rng.symmetric();
    const double b = scale * rng.symmetric();
    return {std::min(a, b), std::max(a, b)};
}

std::vector<double> grid(const Interval& a, int k = 200)
{
    std::vector<double> g;
    for (int i = 0; i <= k; ++i)
        g.push_back(std::min(a.hi(), a.lo() + (a.hi() - a.lo()) * i / k));
    return g;
}

} // namespace

TEST_SUITE("interval")
{
    TEST_CASE("hand examples")
    {
        CHECK(encloses_tightly(Interval(1, 2) + Interval(3, 4), 4, 6));
        CHECK(encloses_tightly(Interval(1, 2) - Interval(3, 4), -3, -1));
        CHECK(encloses_tightly(Interval(-1, 2) * Interval(3, 4), -4, 8));
        CHECK(encloses_tightly(pow_int(Interval(-1, 1), 2), 0, 1));
        CHECK(pow_int(Interval(-1, 1), 2).lo() == 0.0);
        CHECK(encloses_tightly(sin(Interval(0, std::numbers::pi / 2)), 0, 1));
        CHECK(sin(Interval(0, std::numbers::pi / 2)).hi() == 1.0);
        CHECK(cos(Interval(-0.1, 0.1)).hi() == 1.0);
        CHECK(cos(Interval(3, 3.5)).lo() == -1.0);
        CHECK(encloses_tightly(exp(Interval(0, 1)), 1, std::exp(1.0)));
        CHECK(sin(Interval(0, 7)) == Interval(-1, 1));
    }

    TEST_CASE("division by an interval containing zero")
    {
        CHECK_THROWS_AS(Interval(1, 2) / Interval(-1, 1), DomainError);
        CHECK_THROWS_AS(Interval(1, 2) / Interval(0, 1), DomainError);
        CHECK(encloses_tightly(Interval(1, 2) / Interval(2, 4), 0.25, 1));
    }

    TEST_CASE("invalid bounds")
    {
        CHECK_THROWS_AS(Interval(2, 1), ValidationError);
    }

    TEST_CASE("interval_arith dispatch")
    {
        const std::vector<Interval> two{Interval(1, 2), Interval(3, 4)};
        CHECK(interval_arith(IntervalOp::add, two) == Interval(1, 2) + Interval(3, 4));
        const std::vector<Interval> pw{Interval(-2, 1), Interval(3.0)};
        CHECK(interval_arith(IntervalOp::pow_int, pw) == pow_int(Interval(-2, 1), 3));
        const std::vector<Interval> bad{Interval(-2, 1), Interval(0.5)};
        CHECK_THROWS_AS(interval_arith(IntervalOp::pow_int, bad), ValidationError);
        CHECK_THROWS_AS(interval_arith(IntervalOp::sin, two), ShapeError);
    }

    TEST_CASE("grid containment on random intervals")
    {
        Rng rng(21);
        using Unary = std::function<double(double)>;
        for (int t = 0; t < 300; ++t)
        {
            const Interval a = random_interval(rng, 5.0);
            const Interval b = random_interval(rng, 5.0);
            const std::vector<std::pair<Interval, Unary>> unary = {
                {sin(a), [](double x) { return std::sin(x); }},
                {cos(a), [](double x) { return std::cos(x); }},
                {exp(a), [](double x) { return std::exp(x); }},
                {pow_int(a, 2), [](double x) { return x * x; }},
                {pow_int(a, 3), [](double x) { return x * x * x; }},
                {pow_int(a, 4), [](double x) { return x * x * x * x; }},
            };
            for (const auto& [r, fn] : unary)
                for (double x : grid(a))
                    CHECK(r.contains(fn(x)));
            const Interval s = a + b;
            const Interval d = a - b;
            const Interval p = a * b;
            for (double x : grid(a, 30))
                for (double y : grid(b, 30))
                {
                    CHECK(s.contains(x + y));
                    CHECK(d.contains(x - y));
                    CHECK(p.contains(x * y));
                }
        }
    }
}
