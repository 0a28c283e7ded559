#ifndef CPZ_ORACLE_HPP
#define CPZ_ORACLE_HPP

#include "cpz/sets.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace cpz
{

class UsageError : public std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/// Seeded uniform source. The bit stream is std::mt19937_64, whose recurrence
/// is fixed by the C++ standard; doubles are formed from the top 53 bits so the
/// values are identical on every conforming platform.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // [0, 1)
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    // [-1, 1)
    double symmetric() { return 2.0 * unit() - 1.0; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    std::uint64_t bits() { return engine_(); }
    // uniform integer in [lo, hi]
    std::size_t index(std::size_t lo, std::size_t hi)
    {
        return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

struct WitnessSampleConfig
{
    std::size_t draws = 1000;
    // Proposals whose residual exceeds this before polishing are discarded.
    // Unbounded by default: equality constraints have measure zero in the
    // factor box, so gating raw proposals leaves almost nothing to polish.
    double rejectTol = std::numeric_limits<double>::infinity();
    std::size_t polishSteps = 25;
    std::uint64_t seed = 0;
    // Worker threads for polishing; 0 picks the hardware concurrency. Output
    // does not depend on this.
    unsigned threads = 1;
};

struct PolishResult
{
    std::vector<double> alpha;
    double residual_before = 0.0; // infinity norm
    double residual_after = 0.0;
};

/// Projected Gauss-Newton (Levenberg-Marquardt damped) descent on the
/// constraint residual. Steps are clipped to [-1,1]^p; the returned point is
/// the best iterate seen, so residual_after <= residual_before always holds.
PolishResult polish(const ConPolyZonotope& s, std::vector<double> alpha, std::size_t steps);

// Jacobian of the constraint residual, m x p.
DenseMatrix constraint_jacobian(const ConPolyZonotope& s, std::span<const double> alpha);

/// Monte Carlo approximation of the constraint domain: uniform proposals on
/// [-1,1]^p, each polished and kept when its residual ends at or below
/// kWitnessTol. Deterministic in cfg.seed. May return fewer than cfg.draws
/// (possibly zero) witnesses; unconstrained sets keep every proposal.
std::vector<FactorAssignment> sample_witnesses(const ConPolyZonotope& s,
                                               const WitnessSampleConfig& cfg);

// eval_point over sample_witnesses, same order.
std::vector<DenseVector> point_cloud(const ConPolyZonotope& s, const WitnessSampleConfig& cfg);

enum class OpKind
{
    linmap,
    minksum,
    cartprod,
    convhull,
    quadmap,
    intersect,
    union_
};

// Accepts the CLI spellings (linmap, minksum, ...). Throws UsageError.
OpKind parse_op_kind(std::string_view name);
std::string_view op_name(OpKind kind);

struct OpOperands
{
    ConPolyZonotope first;
    ConPolyZonotope second;           // unused by linmap and quadmap
    DenseMatrix map;                  // linmap
    std::vector<DenseMatrix> quad;    // quadmap
};

struct WitnessPair
{
    FactorAssignment first;
    FactorAssignment second;
    double lambda = 0.0; // convhull interpolation value in [-1, 1]
};

struct WitnessMapReport
{
    std::size_t checked = 0;
    double max_residual = 0.0;
    double max_point_error = 0.0;
    bool passed = true;
};

/// Applies `kind` to the operands, lifts every operand witness pair into a
/// factor vector of the result using the layout documented in ops.hpp and
/// compares the result's residual and point against values computed from the
/// operands directly. Fails when either maximum exceeds kWitnessTol.
///
/// intersect expects pairs mapping to the same point; union checks both
/// liftings of each pair.
WitnessMapReport check_witness_map(OpKind kind, const OpOperands& operands,
                                   std::span<const WitnessPair> pairs);

// Same, with operand witnesses drawn by sample_witnesses and lambda from the
// seeded stream. For intersect the operands must be identical.
WitnessMapReport check_witness_map(OpKind kind, const OpOperands& operands,
                                   const WitnessSampleConfig& cfg);

// Factor-vector liftings used by check_witness_map.
std::vector<double> lift_concat(std::span<const double> a, std::span<const double> b);
std::vector<double> lift_convex_hull(std::span<const double> a, std::span<const double> b,
                                     double lambda);
std::vector<double> lift_union_first(std::span<const double> a, std::size_t p2);
std::vector<double> lift_union_second(std::size_t p1, std::span<const double> b);

} // namespace cpz

#endif
