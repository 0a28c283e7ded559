#ifndef CPZ_TESTS_UNION_CLOSED_FORM_HPP
#define CPZ_TESTS_UNION_CLOSED_FORM_HPP

#include <cstddef>
#include <span>

namespace cpz::testing
{

// The union selector polynomial g(a) written out term by term, with
// f1 = mean of the squared first-operand factors a[2 .. p1+1] and
// f2 = mean of the squared second-operand factors a[p1+2 .. p1+p2+1].
inline double union_g(std::span<const double> a, std::size_t p1, std::size_t p2)
{
    double f1 = 0.0;
    for (std::size_t i = 0; i < p1; ++i)
        f1 += a[2 + i] * a[2 + i];
    f1 /= static_cast<double>(p1);
    double f2 = 0.0;
    for (std::size_t i = 0; i < p2; ++i)
        f2 += a[2 + p1 + i] * a[2 + p1 + i];
    f2 /= static_cast<double>(p2);
    const double a1 = a[0];
    const double a2 = a[1];
    return a1 - a2 + 0.5 * f1 - 0.5 * a1 * f1 - 0.5 * f2 - 0.5 * a1 * f2 - 0.25 * f1 * f2 +
           0.25 * a1 * f1 * f2;
}

} // namespace cpz::testing

#endif
