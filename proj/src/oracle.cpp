#include "cpz/oracle.hpp"

#include "cpz/ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

namespace cpz
{

namespace
{

double inf_norm(const DenseVector& v)
{
    return max_abs(v.span());
}

double clip(double v)
{
    return std::clamp(v, -1.0, 1.0);
}

double ipow(double a, std::uint32_t e)
{
    double v = 1.0;
    for (std::uint32_t t = 0; t < e; ++t)
        v *= a;
    return v;
}

} // namespace

DenseMatrix constraint_jacobian(const ConPolyZonotope& s, std::span<const double> alpha)
{
    const std::size_t m = s.num_constraints();
    const std::size_t p = s.num_factors();
    const std::size_t q = s.num_constraint_generators();
    const ExponentMatrix& R = s.R();
    DenseMatrix J(m, p);
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < q; ++j)
    {
        support.clear();
        for (std::size_t k = 0; k < p; ++k)
            if (R(k, j) != 0)
                support.push_back(k);
        for (std::size_t k : support)
        {
            const std::uint32_t e = R(k, j);
            double d = static_cast<double>(e) * ipow(alpha[k], e - 1);
            for (std::size_t l : support)
                if (l != k)
                    d *= ipow(alpha[l], R(l, j));
            if (d == 0.0)
                continue;
            for (std::size_t r = 0; r < m; ++r)
                J(r, k) += s.A()(r, j) * d;
        }
    }
    return J;
}

namespace
{

// Minimum-norm damped Gauss-Newton step restricted to the factors in `free`.
// Returns false when the system cannot be solved.
bool damped_step(const DenseMatrix& J, const DenseVector& r, const std::vector<char>& free,
                 double mu, std::vector<double>& delta)
{
    const std::size_t m = J.rows();
    const std::size_t p = J.cols();
    DenseMatrix M(m, m);
    double scale = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
        {
            double v = 0.0;
            for (std::size_t k = 0; k < p; ++k)
                if (free[k])
                    v += J(i, k) * J(j, k);
            M(i, j) = v;
            M(j, i) = v;
            if (i == j)
                scale = std::max(scale, v);
        }
    if (scale == 0.0)
        return false;
    for (std::size_t i = 0; i < m; ++i)
        M(i, i) += mu * scale;
    DenseVector y;
    try
    {
        y = solve(M, r);
    }
    catch (const DomainError&)
    {
        return false;
    }
    delta.assign(p, 0.0);
    for (std::size_t k = 0; k < p; ++k)
    {
        if (!free[k])
            continue;
        for (std::size_t i = 0; i < m; ++i)
            delta[k] -= J(i, k) * y[i];
    }
    return true;
}

} // namespace

PolishResult polish(const ConPolyZonotope& s, std::vector<double> alpha, std::size_t steps)
{
    const std::size_t m = s.num_constraints();
    const std::size_t p = s.num_factors();
    for (double& a : alpha)
        a = clip(a);

    PolishResult out;
    DenseVector r = constraint_residual(s, alpha);
    out.residual_before = inf_norm(r);
    out.residual_after = out.residual_before;
    out.alpha = alpha;
    if (m == 0 || p == 0)
        return out;

    constexpr double kStopTol = 1e-14;
    double mu = 1e-12;
    double cur_norm2 = dot(r.span(), r.span());
    std::vector<double> delta;
    std::vector<double> trial(p);
    for (std::size_t step = 0; step < steps && out.residual_after > kStopTol; ++step)
    {
        const DenseMatrix J = constraint_jacobian(s, alpha);

        bool improved = false;
        for (int attempt = 0; attempt < 12 && !improved; ++attempt)
        {
            // Factors sitting on a bound whose step points outward are frozen
            // and the step is recomputed on the rest.
            std::vector<char> free(p, 1);
            bool ok = false;
            for (std::size_t pass = 0; pass <= p; ++pass)
            {
                ok = damped_step(J, r, free, mu, delta);
                if (!ok)
                    break;
                bool changed = false;
                for (std::size_t k = 0; k < p; ++k)
                {
                    if (free[k] && ((alpha[k] >= 1.0 && delta[k] > 0.0) ||
                                    (alpha[k] <= -1.0 && delta[k] < 0.0)))
                    {
                        free[k] = 0;
                        changed = true;
                    }
                }
                if (!changed)
                    break;
            }
            if (!ok)
            {
                mu *= 10.0;
                continue;
            }
            for (std::size_t k = 0; k < p; ++k)
                trial[k] = clip(alpha[k] + delta[k]);
            DenseVector rt = constraint_residual(s, trial);
            const double n2 = dot(rt.span(), rt.span());
            if (n2 < cur_norm2)
            {
                alpha = trial;
                r = std::move(rt);
                cur_norm2 = n2;
                mu = std::max(mu * 0.1, 1e-15);
                improved = true;
            }
            else
            {
                mu *= 10.0;
            }
        }
        if (!improved)
            break;
        const double ninf = inf_norm(r);
        if (ninf < out.residual_after)
        {
            out.residual_after = ninf;
            out.alpha = alpha;
        }
    }
    return out;
}

std::vector<FactorAssignment> sample_witnesses(const ConPolyZonotope& s,
                                               const WitnessSampleConfig& cfg)
{
    const std::size_t p = s.num_factors();
    Rng rng(cfg.seed);
    std::vector<std::vector<double>> proposals(cfg.draws, std::vector<double>(p));
    for (auto& a : proposals)
        for (double& v : a)
            v = rng.symmetric();

    std::vector<char> keep(cfg.draws, 0);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t d = begin; d < end; ++d)
        {
            const double before = inf_norm(constraint_residual(s, proposals[d]));
            if (!(before <= cfg.rejectTol))
                continue;
            PolishResult res = polish(s, std::move(proposals[d]), cfg.polishSteps);
            proposals[d] = std::move(res.alpha);
            keep[d] = res.residual_after <= kWitnessTol;
        }
    };

    unsigned threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                        : cfg.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cfg.draws, 1)));
    if (threads <= 1)
    {
        work(0, cfg.draws);
    }
    else
    {
        std::vector<std::thread> pool;
        const std::size_t chunk = (cfg.draws + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t)
        {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(cfg.draws, begin + chunk);
            if (begin < end)
                pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool)
            th.join();
    }

    std::vector<FactorAssignment> out;
    for (std::size_t d = 0; d < cfg.draws; ++d)
        if (keep[d])
            out.emplace_back(std::move(proposals[d]));
    return out;
}

std::vector<DenseVector> point_cloud(const ConPolyZonotope& s, const WitnessSampleConfig& cfg)
{
    std::vector<DenseVector> pts;
    for (const auto& w : sample_witnesses(s, cfg))
        pts.push_back(eval_point(s, w));
    return pts;
}

OpKind parse_op_kind(std::string_view name)
{
    if (name == "linmap")
        return OpKind::linmap;
    if (name == "minksum")
        return OpKind::minksum;
    if (name == "cartprod")
        return OpKind::cartprod;
    if (name == "convhull")
        return OpKind::convhull;
    if (name == "quadmap")
        return OpKind::quadmap;
    if (name == "intersect")
        return OpKind::intersect;
    if (name == "union")
        return OpKind::union_;
    throw UsageError("unknown operation '" + std::string(name) +
                     "' (expected linmap, minksum, cartprod, convhull, quadmap, intersect or union)");
}

std::string_view op_name(OpKind kind)
{
    switch (kind)
    {
    case OpKind::linmap: return "linmap";
    case OpKind::minksum: return "minksum";
    case OpKind::cartprod: return "cartprod";
    case OpKind::convhull: return "convhull";
    case OpKind::quadmap: return "quadmap";
    case OpKind::intersect: return "intersect";
    case OpKind::union_: return "union";
    }
    return "?";
}

std::vector<double> lift_concat(std::span<const double> a, std::span<const double> b)
{
    std::vector<double> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<double> lift_convex_hull(std::span<const double> a, std::span<const double> b,
                                     double lambda)
{
    std::vector<double> out = lift_concat(a, b);
    out.push_back(lambda);
    return out;
}

std::vector<double> lift_union_first(std::span<const double> a, std::size_t p2)
{
    std::vector<double> out{1.0, 1.0};
    out.insert(out.end(), a.begin(), a.end());
    if (a.empty())
        out.push_back(0.0);
    out.resize(out.size() + std::max<std::size_t>(p2, 1), 0.0);
    return out;
}

std::vector<double> lift_union_second(std::size_t p1, std::span<const double> b)
{
    std::vector<double> out{-1.0, -1.0};
    out.resize(2 + std::max<std::size_t>(p1, 1), 0.0);
    out.insert(out.end(), b.begin(), b.end());
    if (b.empty())
        out.push_back(0.0);
    return out;
}

WitnessMapReport check_witness_map(OpKind kind, const OpOperands& operands,
                                   std::span<const WitnessPair> pairs)
{
    const ConPolyZonotope& s1 = operands.first;
    const ConPolyZonotope& s2 = operands.second;
    ConPolyZonotope result;
    switch (kind)
    {
    case OpKind::linmap: result = linear_map(operands.map, s1); break;
    case OpKind::minksum: result = minkowski_sum(s1, s2); break;
    case OpKind::cartprod: result = cartesian_product(s1, s2); break;
    case OpKind::convhull: result = convex_hull(s1, s2); break;
    case OpKind::quadmap: result = quadratic_map(operands.quad, s1); break;
    case OpKind::intersect: result = intersect(s1, s2); break;
    case OpKind::union_: result = set_union(s1, s2); break;
    }

    WitnessMapReport report;
    auto check = [&](const std::vector<double>& lifted, const DenseVector& expected) {
        for (double v : lifted)
            if (!(std::abs(v) <= 1.0 + kFactorBoundTol))
                report.passed = false;
        report.max_residual =
            std::max(report.max_residual, inf_norm(constraint_residual(result, lifted)));
        report.max_point_error =
            std::max(report.max_point_error, inf_norm(eval_point(result, lifted) - expected));
        ++report.checked;
    };

    for (const auto& pair : pairs)
    {
        const auto a = pair.first.span();
        const auto b = pair.second.span();
        switch (kind)
        {
        case OpKind::linmap:
            check(pair.first.values(), mat_vec(operands.map, eval_point(s1, a)));
            break;
        case OpKind::quadmap: {
            const DenseVector x = eval_point(s1, a);
            DenseVector y(operands.quad.size());
            for (std::size_t i = 0; i < y.size(); ++i)
                y[i] = dot(x.span(), mat_vec(operands.quad[i], x).span());
            check(pair.first.values(), y);
            break;
        }
        case OpKind::minksum:
            check(lift_concat(a, b), eval_point(s1, a) + eval_point(s2, b));
            break;
        case OpKind::cartprod:
            check(lift_concat(a, b), concat(eval_point(s1, a), eval_point(s2, b)));
            break;
        case OpKind::convhull:
            check(lift_convex_hull(a, b, pair.lambda),
                  0.5 * (1.0 + pair.lambda) * eval_point(s1, a) +
                      0.5 * (1.0 - pair.lambda) * eval_point(s2, b));
            break;
        case OpKind::intersect:
            check(lift_concat(a, b), eval_point(s1, a));
            break;
        case OpKind::union_:
            check(lift_union_first(a, s2.num_factors()), eval_point(s1, a));
            check(lift_union_second(s1.num_factors(), b), eval_point(s2, b));
            break;
        }
    }
    report.passed = report.passed && report.max_residual <= kWitnessTol &&
                    report.max_point_error <= kWitnessTol;
    return report;
}

WitnessMapReport check_witness_map(OpKind kind, const OpOperands& operands,
                                   const WitnessSampleConfig& cfg)
{
    if (kind == OpKind::intersect && !(operands.first == operands.second))
        throw UsageError("intersect with distinct operands needs explicit matched witness pairs");

    const auto w1 = sample_witnesses(operands.first, cfg);
    WitnessSampleConfig cfg2 = cfg;
    cfg2.seed = cfg.seed + 1;
    const bool unary = kind == OpKind::linmap || kind == OpKind::quadmap;
    const auto w2 = unary || kind == OpKind::intersect ? w1 : sample_witnesses(operands.second, cfg2);

    Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<WitnessPair> pairs;
    const std::size_t count = std::min(w1.size(), w2.size());
    for (std::size_t i = 0; i < count; ++i)
    {
        WitnessPair pair;
        pair.first = w1[i];
        pair.second = unary ? FactorAssignment() : w2[i];
        pair.lambda = rng.symmetric();
        pairs.push_back(std::move(pair));
    }
    return check_witness_map(kind, operands, pairs);
}

} // namespace cpz
