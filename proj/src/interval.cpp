#include "cpz/interval.hpp"

#include "cpz/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cpz
{

namespace
{

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

// TwoSum error of a + b; zero when the sum is exact.
double sum_error(double a, double b, double s)
{
    const double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}
// fma error of a * b; NaN near the subnormal range, where it can be lost.
double prod_error(double a, double b, double p)
{
    if (a == 0.0 || b == 0.0)
        return 0.0;
    if (!std::isfinite(p) || std::abs(p) < 0x1p-960)
        return std::numeric_limits<double>::quiet_NaN();
    return std::fma(a, b, -p);
}

double add_down(double a, double b)
{
    const double s = a + b;
    return std::isfinite(s) && sum_error(a, b, s) >= 0.0 ? s : down(s);
}
double add_up(double a, double b)
{
    const double s = a + b;
    return std::isfinite(s) && sum_error(a, b, s) <= 0.0 ? s : up(s);
}
double mul_down(double a, double b)
{
    const double p = a * b;
    return prod_error(a, b, p) >= 0.0 ? p : down(p);
}
double mul_up(double a, double b)
{
    const double p = a * b;
    return prod_error(a, b, p) <= 0.0 ? p : up(p);
}

// |x|^k rounded outward in the requested direction, x >= 0.
double pow_nonneg(double x, unsigned k, bool upward)
{
    double r = 1.0;
    for (unsigned i = 0; i < k; ++i)
        r = upward ? mul_up(r, x) : mul_down(r, x);
    return upward ? r : std::max(r, 0.0);
}

// Whether [lo, hi] may contain some point c + 2k*pi. Errs toward yes.
bool hits_periodic_point(double lo, double hi, double c)
{
    const double slack = 1e-12;
    const double klo = std::ceil((lo - c) / kTwoPi - slack * (1.0 + std::abs(lo)));
    const double khi = std::floor((hi - c) / kTwoPi + slack * (1.0 + std::abs(hi)));
    return klo <= khi;
}

Interval trig_range(const Interval& a, double (*fn)(double), double max_at, double min_at)
{
    if (!(a.width() < kTwoPi))
        return {-1.0, 1.0};
    const double fl = fn(a.lo());
    const double fh = fn(a.hi());
    double lo = std::max(-1.0, down(std::min(fl, fh)));
    double hi = std::min(1.0, up(std::max(fl, fh)));
    if (hits_periodic_point(a.lo(), a.hi(), max_at))
        hi = 1.0;
    if (hits_periodic_point(a.lo(), a.hi(), min_at))
        lo = -1.0;
    return {lo, hi};
}

double sin_fn(double x) { return std::sin(x); }
double cos_fn(double x) { return std::cos(x); }

} // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi)
{
    if (!(lo <= hi))
        throw ValidationError("interval lower bound " + std::to_string(lo) +
                              " exceeds upper bound " + std::to_string(hi));
}

Interval operator+(const Interval& a, const Interval& b)
{
    return {add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi())};
}

Interval operator-(const Interval& a, const Interval& b)
{
    return {add_down(a.lo(), -b.hi()), add_up(a.hi(), -b.lo())};
}

Interval operator-(const Interval& a)
{
    return {-a.hi(), -a.lo()};
}

Interval operator*(const Interval& a, const Interval& b)
{
    const double lo[4] = {mul_down(a.lo(), b.lo()), mul_down(a.lo(), b.hi()), mul_down(a.hi(), b.lo()),
                          mul_down(a.hi(), b.hi())};
    const double hi[4] = {mul_up(a.lo(), b.lo()), mul_up(a.lo(), b.hi()), mul_up(a.hi(), b.lo()),
                          mul_up(a.hi(), b.hi())};
    return {*std::min_element(lo, lo + 4), *std::max_element(hi, hi + 4)};
}

Interval operator*(double s, const Interval& a)
{
    return Interval(s) * a;
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.contains(0.0))
        throw DomainError("interval division by " + to_string(b) + ", which contains zero");
    const Interval inv(down(1.0 / b.hi()), up(1.0 / b.lo()));
    return a * inv;
}

Interval pow_int(const Interval& a, unsigned k)
{
    if (k == 0)
        return Interval(1.0);
    const double lo = a.lo();
    const double hi = a.hi();
    auto signed_pow = [k](double x, bool upward) {
        // odd k: x^k = -|x|^k for x < 0, so the rounding direction flips
        if (x >= 0.0)
            return pow_nonneg(x, k, upward);
        return -pow_nonneg(-x, k, !upward);
    };
    if (k % 2 == 1)
        return {signed_pow(lo, false), signed_pow(hi, true)};
    if (lo >= 0.0)
        return {pow_nonneg(lo, k, false), pow_nonneg(hi, k, true)};
    if (hi <= 0.0)
        return {pow_nonneg(-hi, k, false), pow_nonneg(-lo, k, true)};
    return {0.0, pow_nonneg(std::max(-lo, hi), k, true)};
}

Interval sin(const Interval& a)
{
    return trig_range(a, sin_fn, 0.5 * std::numbers::pi, -0.5 * std::numbers::pi);
}

Interval cos(const Interval& a)
{
    return trig_range(a, cos_fn, 0.0, std::numbers::pi);
}

Interval exp(const Interval& a)
{
    return {std::max(0.0, down(std::exp(a.lo()))), up(std::exp(a.hi()))};
}

Interval hull(const Interval& a, const Interval& b)
{
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval interval_arith(IntervalOp op, std::span<const Interval> args)
{
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw ShapeError("interval_arith: expected " + std::to_string(k) + " arguments, got " +
                             std::to_string(args.size()));
    };
    switch (op)
    {
    case IntervalOp::add:
        need(2);
        return args[0] + args[1];
    case IntervalOp::sub:
        need(2);
        return args[0] - args[1];
    case IntervalOp::mul:
        need(2);
        return args[0] * args[1];
    case IntervalOp::div:
        need(2);
        return args[0] / args[1];
    case IntervalOp::pow_int:
    {
        need(2);
        const double k = args[1].lo();
        if (args[1].width() != 0.0 || k < 0.0 || k != std::floor(k))
            throw ValidationError("pow_int: exponent must be a nonnegative integer point");
        return pow_int(args[0], static_cast<unsigned>(k));
    }
    case IntervalOp::sin:
        need(1);
        return sin(args[0]);
    case IntervalOp::cos:
        need(1);
        return cos(args[0]);
    case IntervalOp::exp:
        need(1);
        return exp(args[0]);
    }
    throw ValidationError("interval_arith: unknown operation");
}

std::string to_string(const Interval& a)
{
    return "[" + std::to_string(a.lo()) + ", " + std::to_string(a.hi()) + "]";
}

} // namespace cpz
