#ifndef CPZ_CONVERT_HPP
#define CPZ_CONVERT_HPP

#include "cpz/sets.hpp"

namespace cpz
{

// Eigenvalues at or below this are rejected by from_ellipsoid.
inline constexpr double kPosDefTol = 1e-12;

// <c, [G GI], [E 0; 0 I], [], [], []>. Independent generators get fresh
// factors appended after the dependent ones.
ConPolyZonotope from_poly_zonotope(const PolyZonotope& s);

// <c, G, I_p, A, b, I_p>
ConPolyZonotope from_con_zonotope(const ConZonotope& s);

// <c, g, I_p, [], [], []>
ConPolyZonotope from_zonotope(const DenseVector& c, const DenseMatrix& g);
ConPolyZonotope from_zonotope(const Zonotope& z);

// Center (lo+hi)/2 with diagonal generators (hi-lo)/2.
ConPolyZonotope from_interval(const IntervalBox& box);

/// Taylor model over [-1,1]^p. Constant polynomial terms and remainder
/// midpoints go into c; each remainder contributes one independent generator
/// of its half-width, which becomes a fresh factor after the p model factors.
ConPolyZonotope from_taylor_model(const TaylorModel& t);

/// Ellipsoid via Q = V diag(lambda) V^T:
///   G = V diag(sqrt(lambda)), E = [I_n; 0], A = [-0.5 1 ... 1], b = 0.5,
///   R = [0 2I_n; 1 0]
/// Factor n+1 is a slack: -0.5 a_{n+1} + sum a_k^2 = 0.5 is equivalent to
/// sum a_k^2 <= 1 on the factor box. Throws ValidationError when Q is not
/// positive definite.
ConPolyZonotope from_ellipsoid(const Ellipsoid& e);

// Triangle with vertices (-1,1), (0,-1), (1,0):
//   (-0.25, 0.25) + (-0.75, 0.75) a1 + (-0.25, -0.25) a2 + (0.25, 0.25) a1 a2
ConPolyZonotope simplex_fixture_P();

} // namespace cpz

#endif
