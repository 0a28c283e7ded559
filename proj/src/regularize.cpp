#include "cpz/regularize.hpp"

#include <algorithm>
#include <numeric>

namespace cpz
{

namespace
{

bool column_less(const ExponentMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t k = 0; k < m.rows(); ++k)
    {
        if (m(k, a) != m(k, b))
            return m(k, a) < m(k, b);
    }
    return false;
}

bool column_equal(const ExponentMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t k = 0; k < m.rows(); ++k)
        if (m(k, a) != m(k, b))
            return false;
    return true;
}

struct Merged
{
    ExponentMatrix exponents; // nonzero, distinct columns
    DenseMatrix coefficients; // matching summed coefficient columns
    std::vector<double> constant; // summed coefficients of the zero exponent column
};

// Shared body of compact_gen and compact_con.
Merged merge_columns(const DenseMatrix& coeffs, const ExponentMatrix& expons)
{
    const auto uc = unique_columns(expons);
    Merged out{ExponentMatrix(), DenseMatrix(), std::vector<double>(coeffs.rows(), 0.0)};

    std::vector<std::size_t> keep;
    DenseMatrix summed(coeffs.rows(), uc.groups.size());
    for (std::size_t j = 0; j < uc.groups.size(); ++j)
    {
        for (std::size_t i : uc.groups[j])
            for (std::size_t r = 0; r < coeffs.rows(); ++r)
                summed(r, j) += coeffs(r, i);

        if (uc.unique.column_is_zero(j))
        {
            for (std::size_t r = 0; r < coeffs.rows(); ++r)
                out.constant[r] += summed(r, j);
            continue;
        }
        if (summed.column_is_zero(j))
            continue;
        keep.push_back(j);
    }
    out.exponents = uc.unique.select_columns(keep);
    out.coefficients = summed.select_columns(keep);
    return out;
}

} // namespace

UniqueColumns unique_columns(const ExponentMatrix& m)
{
    const std::size_t h = m.cols();
    std::vector<std::size_t> order(h);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return column_less(m, a, b); });

    // runs of identical neighbors; stable sort keeps each run ascending
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < h; ++k)
    {
        if (k == 0 || !column_equal(m, order[k - 1], order[k]))
            groups.emplace_back();
        groups.back().push_back(order[k]);
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<std::size_t> firsts;
    firsts.reserve(groups.size());
    for (const auto& g : groups)
        firsts.push_back(g.front());
    return {m.select_columns(firsts), std::move(groups)};
}

ConPolyZonotope compact_gen(const ConPolyZonotope& s)
{
    auto merged = merge_columns(s.G(), s.E());
    DenseVector c = s.c();
    for (std::size_t r = 0; r < c.size(); ++r)
        c[r] += merged.constant[r];
    return ConPolyZonotope(std::move(c), std::move(merged.coefficients),
                           std::move(merged.exponents), s.A(), s.b(), s.R());
}

ConPolyZonotope compact_con(const ConPolyZonotope& s)
{
    auto merged = merge_columns(s.A(), s.R());
    DenseVector b = s.b();
    for (std::size_t r = 0; r < b.size(); ++r)
        b[r] -= merged.constant[r];
    return ConPolyZonotope(s.c(), s.G(), s.E(), std::move(merged.coefficients), std::move(b),
                           std::move(merged.exponents));
}

ConPolyZonotope regularize(const ConPolyZonotope& s)
{
    return compact_con(compact_gen(s));
}

} // namespace cpz
