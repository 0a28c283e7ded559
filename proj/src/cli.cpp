#include "cpz/cli.hpp"

#include "cpz/enclosure.hpp"
#include "cpz/ops.hpp"
#include "cpz/oracle.hpp"
#include "cpz/regularize.hpp"
#include "cpz/setfile.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <limits>

namespace cpz
{

namespace
{

struct Options
{
    std::string input;
    std::vector<std::string> inputs;
    std::string output;
    std::string to = "cpz";
    std::string op;
    std::string figure;
    std::size_t draws = 1000;
    std::size_t demo_draws = 10000;
    std::uint64_t seed = 0;
    std::size_t polish_steps = 25;
    double reject_tol = std::numeric_limits<double>::infinity();
    unsigned threads = 0;
};

WitnessSampleConfig sample_config(const Options& o)
{
    WitnessSampleConfig cfg;
    cfg.draws = o.draws;
    cfg.seed = o.seed;
    cfg.polishSteps = o.polish_steps;
    cfg.rejectTol = o.reject_tol;
    cfg.threads = o.threads;
    return cfg;
}

void run_convert(const Options& o, std::ostream& out)
{
    if (o.to != "cpz")
        throw UsageError("convert: only --to cpz is supported, got '" + o.to + "'");
    const AnySet in = load_set(o.input);
    save_set(o.output, to_cpz(in));
    out << "converted " << kind_name(in) << " to cpz\n";
}

void run_op(const Options& o, std::ostream& out)
{
    const OpKind kind = parse_op_kind(o.op);
    if (o.inputs.size() != 2)
        throw UsageError("op " + o.op + ": expected two input files");
    ConPolyZonotope result;
    switch (kind)
    {
    case OpKind::linmap:
        result = linear_map(load_matrix(o.inputs[0]), to_cpz(load_set(o.inputs[1])));
        break;
    case OpKind::quadmap:
        result = quadratic_map(load_matrices(o.inputs[0]), to_cpz(load_set(o.inputs[1])));
        break;
    default: {
        const ConPolyZonotope s1 = to_cpz(load_set(o.inputs[0]));
        const ConPolyZonotope s2 = to_cpz(load_set(o.inputs[1]));
        if (kind == OpKind::minksum)
            result = minkowski_sum(s1, s2);
        else if (kind == OpKind::cartprod)
            result = cartesian_product(s1, s2);
        else if (kind == OpKind::convhull)
            result = convex_hull(s1, s2);
        else if (kind == OpKind::intersect)
            result = intersect(s1, s2);
        else
            result = set_union(s1, s2);
    }
    }
    save_set(o.output, result);
    out << op_name(kind) << ": n=" << result.dim() << " p=" << result.num_factors()
        << " h=" << result.num_generators() << " m=" << result.num_constraints()
        << " q=" << result.num_constraint_generators() << "\n";
}

void run_sample(const Options& o, std::ostream& out)
{
    const ConPolyZonotope s = to_cpz(load_set(o.input));
    const auto pts = point_cloud(s, sample_config(o));
    write_points_csv(o.output, pts);
    out << "accepted " << pts.size() << " of " << o.draws << " draws\n";
}

void run_regularize(const Options& o, std::ostream& out)
{
    const ConPolyZonotope s = regularize(to_cpz(load_set(o.input)));
    save_set(o.output, s);
    out << "h=" << s.num_generators() << " q=" << s.num_constraint_generators() << "\n";
}

void run_info(const Options& o, std::ostream& out)
{
    const ConPolyZonotope s = to_cpz(load_set(o.input));
    out << "n=" << s.dim() << " p=" << s.num_factors() << " h=" << s.num_generators()
        << " m=" << s.num_constraints() << " q=" << s.num_constraint_generators()
        << " size=" << representation_size(s) << " regular=" << (is_regular(s) ? "true" : "false")
        << "\n";
}

void run_demo(const Options& o, std::ostream& out)
{
    if (o.figure != "fig3")
        throw UsageError("demo: unknown figure '" + o.figure + "' (expected fig3)");
    const auto t0 = std::chrono::steady_clock::now();
    WitnessSampleConfig cfg = sample_config(o);
    cfg.draws = o.demo_draws;
    const DemoResult r = demo_nonlinear_map(cfg);

    std::error_code ec;
    std::filesystem::create_directories(o.output, ec);
    if (ec)
        throw IoError("cannot create directory '" + o.output + "': " + ec.message());
    const std::filesystem::path dir(o.output);

    auto cloud = [&](const ConPolyZonotope& s, std::uint64_t offset) {
        WitnessSampleConfig c = cfg;
        c.seed = cfg.seed + offset;
        return point_cloud(s, c);
    };
    const std::vector<std::pair<const char*, std::vector<DenseVector>>> files = {
        {"P.csv", cloud(r.P, 10)},
        {"piece_above.csv", r.cloud_above},
        {"piece_below.csv", r.cloud_below},
        {"enclosure_above.csv", cloud(r.enclosure_above, 11)},
        {"enclosure_below.csv", cloud(r.enclosure_below, 12)},
        {"union.csv", cloud(r.union_set, 13)},
    };
    for (const auto& [name, pts] : files)
    {
        write_points_csv(dir / name, pts);
        out << name << ": " << pts.size() << " points\n";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << "x*_above=(" << r.xstar_above[0] << ", " << r.xstar_above[1] << ") L_above=("
        << to_string(r.remainder_above[0]) << ", " << to_string(r.remainder_above[1]) << ")\n";
    out << "x*_below=(" << r.xstar_below[0] << ", " << r.xstar_below[1] << ") L_below=("
        << to_string(r.remainder_below[0]) << ", " << to_string(r.remainder_below[1]) << ")\n";
    out << "union: p=" << r.union_set.num_factors() << " h=" << r.union_set.num_generators()
        << " m=" << r.union_set.num_constraints()
        << " q=" << r.union_set.num_constraint_generators() << "\n";
    out << "elapsed " << secs << " s\n";
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Constrained polynomial zonotope toolkit", "cpz"};
    app.require_subcommand(1);

    auto* convert = app.add_subcommand("convert", "Convert a set file to the cpz kind");
    convert->add_option("input", o.input, "Input set file")->required();
    convert->add_option("--to", o.to, "Target kind (cpz)");
    convert->add_option("-o,--output", o.output, "Output set file")->required();

    auto* op = app.add_subcommand("op", "Apply a set operation");
    op->add_option("operation", o.op, "linmap|minksum|cartprod|convhull|quadmap|intersect|union")
        ->required();
    op->add_option("inputs", o.inputs,
                   "Two operands; linmap and quadmap take a matrix file then a set file")
        ->required();
    op->add_option("-o,--output", o.output, "Output set file")->required();

    auto add_sampling = [&o](CLI::App* sub, std::size_t& draws) {
        sub->add_option("--draws", draws, "Number of proposals per cloud");
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--polish-steps", o.polish_steps, "Gauss-Newton steps per proposal");
        sub->add_option("--reject-tol", o.reject_tol, "Discard proposals above this residual");
        sub->add_option("--threads", o.threads, "Worker threads, 0 = all cores");
    };

    auto* sample = app.add_subcommand("sample", "Write sampled points as CSV");
    sample->add_option("input", o.input, "Input set file")->required();
    add_sampling(sample, o.draws);
    sample->add_option("-o,--output", o.output, "Output CSV file")->required();

    auto* reg = app.add_subcommand("regularize", "Merge duplicate and constant columns");
    reg->add_option("input", o.input, "Input set file")->required();
    reg->add_option("-o,--output", o.output, "Output set file")->required();

    auto* demo = app.add_subcommand("demo", "Nonlinear map demo point clouds");
    demo->add_option("figure", o.figure, "fig3")->required();
    demo->add_option("-o,--output", o.output, "Output directory")->required();
    add_sampling(demo, o.demo_draws);

    auto* info = app.add_subcommand("info", "Print dimensions, size and regularity");
    info->add_option("input", o.input, "Input set file")->required();

    std::vector<const char*> argv{"cpz"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try
    {
        if (*convert)
            run_convert(o, out);
        else if (*op)
            run_op(o, out);
        else if (*sample)
            run_sample(o, out);
        else if (*reg)
            run_regularize(o, out);
        else if (*demo)
            run_demo(o, out);
        else if (*info)
            run_info(o, out);
    }
    catch (const IoError& e)
    {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::filesystem::filesystem_error& e)
    {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace cpz
