#ifndef CPZ_REGULARIZE_HPP
#define CPZ_REGULARIZE_HPP

#include "cpz/sets.hpp"

#include <cstddef>
#include <vector>

namespace cpz
{

struct UniqueColumns
{
    ExponentMatrix unique;
    // groups[j] holds the (0-based, ascending) original column indices equal
    // to unique column j.
    std::vector<std::vector<std::size_t>> groups;
};

// Distinct columns in order of first appearance. Duplicates are found by a
// lexicographic column sort followed by a scan of neighbors.
UniqueColumns unique_columns(const ExponentMatrix& m);

/// Merges generators with identical exponent columns by summing them.
/// Additionally folds the all-zero exponent column (a constant term) into c
/// and drops generators that are exactly zero, so the result satisfies the
/// generator half of is_regular. Factor rows are never removed.
ConPolyZonotope compact_gen(const ConPolyZonotope& s);

/// Constraint counterpart of compact_gen: merges identical columns of R,
/// moves constant constraint terms to the right-hand side (b -= A(:,i)) and
/// drops all-zero constraint generators.
ConPolyZonotope compact_con(const ConPolyZonotope& s);

// compact_con(compact_gen(s))
ConPolyZonotope regularize(const ConPolyZonotope& s);

} // namespace cpz

#endif
