#ifndef CPZ_INTERVAL_HPP
#define CPZ_INTERVAL_HPP

#include <span>
#include <string>

namespace cpz
{

/// Closed real interval [lo, hi].
///
/// Every operation returns a superset of the exact range. Instead of switching
/// the FPU rounding mode, computed bounds are pushed outward by one unit in the
/// last place; bounds that are exact by construction (0 for even powers, +-1
/// for sin/cos extrema) are left alone.
class Interval
{
public:
    Interval() = default;
    explicit Interval(double point) : lo_(point), hi_(point) {}
    Interval(double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double mid() const { return 0.5 * (lo_ + hi_); }
    double radius() const { return 0.5 * (hi_ - lo_); }
    double width() const { return hi_ - lo_; }
    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

    bool operator==(const Interval&) const = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(double s, const Interval& a);
// Throws DomainError when 0 lies in b.
Interval operator/(const Interval& a, const Interval& b);

Interval pow_int(const Interval& a, unsigned k);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval exp(const Interval& a);

// Smallest interval containing both.
Interval hull(const Interval& a, const Interval& b);

enum class IntervalOp
{
    add,
    sub,
    mul,
    div,
    pow_int,
    sin,
    cos,
    exp
};

// Uniform entry point for table-driven use. Binary ops take two arguments;
// pow_int takes the base and a point interval holding the exponent.
Interval interval_arith(IntervalOp op, std::span<const Interval> args);

std::string to_string(const Interval& a);

} // namespace cpz

#endif
