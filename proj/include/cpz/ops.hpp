#ifndef CPZ_OPS_HPP
#define CPZ_OPS_HPP

#include "cpz/sets.hpp"

#include <span>
#include <vector>

namespace cpz
{

// Closed-form set operations on constrained polynomial zonotopes.
//
// Every operation returns a regular CPZ (compact_gen and compact_con are run
// on the result). Compaction never removes factor rows, so the factor layouts
// documented below hold for the returned value and can be used to lift
// operand witnesses into result witnesses.

// {M x | x in s}. Factors unchanged.
ConPolyZonotope linear_map(const DenseMatrix& m, const ConPolyZonotope& s);

// {x1 + x2}. Factors: [s1 (p1) | s2 (p2)].
ConPolyZonotope minkowski_sum(const ConPolyZonotope& s1, const ConPolyZonotope& s2);

// {[x1; x2]}. Factors: [s1 (p1) | s2 (p2)].
ConPolyZonotope cartesian_product(const ConPolyZonotope& s1, const ConPolyZonotope& s2);

/// {0.5(1+l) x1 + 0.5(1-l) x2 | l in [-1,1]}.
/// Factors: [s1 (p1) | s2 (p2) | l]; the interpolation variable is the last
/// factor.
ConPolyZonotope convex_hull(const ConPolyZonotope& s1, const ConPolyZonotope& s2);

/// {y | y_i = x^T Q_i x, x in s}, one output dimension per matrix.
/// Factors unchanged.
ConPolyZonotope quadratic_map(std::span<const DenseMatrix> qs, const ConPolyZonotope& s);

/// Keeps the parametrization of s1 and couples it to s2 through the extra
/// equality constraint x1 = x2. Factors: [s1 (p1) | s2 (p2)].
ConPolyZonotope intersect(const ConPolyZonotope& s1, const ConPolyZonotope& s2);

/// Union through two selector factors constrained by a1 a2 = 1.
/// Factors: [a1 | a2 | s1 (max(p1,1)) | s2 (max(p2,1))]. An operand without
/// factors is padded with one unused factor. The operands are regularized
/// first; the construction relies on nonzero exponent columns.
/// Witness liftings: (1, 1, w1, 0) reproduces s1, (-1, -1, 0, w2) reproduces s2.
ConPolyZonotope set_union(const ConPolyZonotope& s1, const ConPolyZonotope& s2);

// Raw constructions before the final compaction. Exposed so the structural
// sizes of the closed forms can be checked.
ConPolyZonotope intersect_uncompacted(const ConPolyZonotope& s1, const ConPolyZonotope& s2);
ConPolyZonotope union_uncompacted(const ConPolyZonotope& s1, const ConPolyZonotope& s2);

} // namespace cpz

#endif
