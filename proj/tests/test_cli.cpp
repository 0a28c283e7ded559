#include "cpz/cli.hpp"
#include "cpz/convert.hpp"
#include "cpz/setfile.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cpz;

namespace
{

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir
{
public:
    explicit TempDir(const std::string& name)
        : path_(std::filesystem::temp_directory_path() / name)
    {
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string operator/(const std::string& f) const { return (path_ / f).string(); }

private:
    std::filesystem::path path_;
};

const std::string kExample = CPZ_DATA_DIR "/example1.json";

std::vector<std::vector<double>> read_csv(const std::string& path)
{
    std::vector<std::vector<double>> rows;
    std::istringstream in(read_text_file(path));
    std::string line;
    while (std::getline(in, line))
    {
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("info")
    {
        const auto r = run({"info", kExample});
        CHECK(r.code == 0);
        CHECK(r.out == "n=2 p=3 h=4 m=1 q=3 size=35 regular=true\n");
    }

    TEST_CASE("exit codes")
    {
        CHECK(run({}).code == 1);
        CHECK(run({"frobnicate"}).code == 1);
        CHECK(run({"--help"}).code == 0);
        const auto missing = run({"info", "/nonexistent/set.json"});
        CHECK(missing.code == 2);
        CHECK(missing.err.find("set.json") != std::string::npos);

        TempDir dir("cpz_cli_codes");
        write_text_file(dir / "bad.json", "{\"kind\":\"zonotope\"}");
        const auto bad = run({"info", dir / "bad.json"});
        CHECK(bad.code == 1);
        CHECK(bad.err.find("missing field") != std::string::npos);
        CHECK(run({"op", "xor", kExample, kExample, "-o", dir / "x.json"}).code == 1);
        CHECK(run({"convert", kExample, "--to", "zonotope", "-o", dir / "x.json"}).code == 1);
        CHECK(run({"demo", "fig9", "-o", dir / "d"}).code == 1);
    }

    TEST_CASE("convert and regularize")
    {
        TempDir dir("cpz_cli_convert");
        save_set(dir / "z.json", Zonotope(DenseVector{1, 2}, DenseMatrix{{1, 1, 0}, {0, 0, 0}}));
        CHECK(run({"convert", dir / "z.json", "--to", "cpz", "-o", dir / "c.json"}).code == 0);
        const auto c = std::get<ConPolyZonotope>(load_set(dir / "c.json"));
        CHECK(c == from_zonotope(DenseVector{1, 2}, DenseMatrix{{1, 1, 0}, {0, 0, 0}}));
        const auto r = run({"regularize", dir / "c.json", "-o", dir / "r.json"});
        CHECK(r.code == 0);
        const auto reg = std::get<ConPolyZonotope>(load_set(dir / "r.json"));
        CHECK(is_regular(reg));
        CHECK(reg.num_generators() == 2);
    }

    TEST_CASE("op commands")
    {
        TempDir dir("cpz_cli_op");
        save_set(dir / "a.json", IntervalBox(DenseVector{0}, DenseVector{2}));
        save_set(dir / "b.json", IntervalBox(DenseVector{1}, DenseVector{3}));
        for (const std::string name : {"minksum", "cartprod", "convhull", "intersect", "union"})
        {
            const auto r = run({"op", name, dir / "a.json", dir / "b.json", "-o", dir / (name + ".json")});
            CHECK_MESSAGE(r.code == 0, name);
            CHECK(r.out.rfind(name + ":", 0) == 0);
        }
        CHECK(std::get<ConPolyZonotope>(load_set(dir / "cartprod.json")).dim() == 2);

        save_matrices(dir / "m.json", {DenseMatrix{{2}, {-1}}});
        CHECK(run({"op", "linmap", dir / "m.json", dir / "a.json", "-o", dir / "l.json"}).code == 0);
        const auto lin = std::get<ConPolyZonotope>(load_set(dir / "l.json"));
        CHECK(eval_point(lin, FactorAssignment{1}) == DenseVector{4, -2});

        save_matrices(dir / "q.json", {DenseMatrix{{1}}});
        CHECK(run({"op", "quadmap", dir / "q.json", dir / "a.json", "-o", dir / "q_out.json"}).code == 0);
        const auto quad = std::get<ConPolyZonotope>(load_set(dir / "q_out.json"));
        CHECK(eval_point(quad, FactorAssignment{0.5}) == DenseVector{2.25});

        CHECK(run({"op", "union", dir / "a.json", "-o", dir / "u.json"}).code == 1);
    }

    TEST_CASE("sample of an intersection stays in the overlap")
    {
        TempDir dir("cpz_cli_sample");
        save_set(dir / "a.json", IntervalBox(DenseVector{0}, DenseVector{2}));
        save_set(dir / "b.json", IntervalBox(DenseVector{1}, DenseVector{3}));
        REQUIRE(run({"op", "intersect", dir / "a.json", dir / "b.json", "-o", dir / "i.json"}).code == 0);
        const auto r = run({"sample", dir / "i.json", "--draws", "2000", "--seed", "5", "-o", dir / "pts.csv"});
        REQUIRE(r.code == 0);
        const auto rows = read_csv(dir / "pts.csv");
        CHECK(rows.size() > 1000);
        double lo = 1e9;
        double hi = -1e9;
        for (const auto& row : rows)
        {
            REQUIRE(row.size() == 1);
            CHECK(row[0] >= 1 - 1e-6);
            CHECK(row[0] <= 2 + 1e-6);
            lo = std::min(lo, row[0]);
            hi = std::max(hi, row[0]);
        }
        CHECK(lo <= 1.05);
        CHECK(hi >= 1.95);
    }

    TEST_CASE("sampling output is byte identical across runs and thread counts")
    {
        TempDir dir("cpz_cli_det");
        const auto a = run({"sample", kExample, "--seed", "11", "--threads", "1", "-o", dir / "a.csv"});
        const auto b = run({"sample", kExample, "--seed", "11", "--threads", "3", "-o", dir / "b.csv"});
        const auto c = run({"sample", kExample, "--seed", "12", "-o", dir / "c.csv"});
        REQUIRE(a.code == 0);
        REQUIRE(b.code == 0);
        REQUIRE(c.code == 0);
        CHECK(read_text_file(dir / "a.csv") == read_text_file(dir / "b.csv"));
        CHECK(read_text_file(dir / "a.csv") != read_text_file(dir / "c.csv"));
    }

    TEST_CASE("demo writes the point clouds")
    {
        TempDir dir("cpz_cli_demo");
        const auto r = run({"demo", "fig3", "--draws", "300", "-o", dir / "out"});
        REQUIRE(r.code == 0);
        for (const char* f : {"P.csv", "piece_above.csv", "piece_below.csv", "enclosure_above.csv",
                              "enclosure_below.csv", "union.csv"})
        {
            const auto rows = read_csv(dir / (std::string("out/") + f));
            CHECK_MESSAGE(rows.size() > 100, f);
            for (const auto& row : rows)
                CHECK(row.size() == 2);
        }
        CHECK(r.out.find("L_above") != std::string::npos);
    }
}
