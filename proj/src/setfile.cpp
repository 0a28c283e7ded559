#include "cpz/setfile.hpp"

#include "cpz/convert.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cpz
{

using nlohmann::json;

namespace
{

template <typename T>
json matrix_json(const Matrix<T>& m)
{
    return json{{"rows", m.rows()}, {"cols", m.cols()},
                {"data", std::vector<T>(m.data().begin(), m.data().end())}};
}

json vector_json(const DenseVector& v)
{
    return json{{"rows", v.size()}, {"cols", 1}, {"data", v.values()}};
}

const json& field(const json& j, const char* name)
{
    if (!j.is_object())
        throw ValidationError("set file: expected a JSON object");
    auto it = j.find(name);
    if (it == j.end())
        throw ValidationError("set file: missing field '" + std::string(name) + "'");
    return *it;
}

std::size_t dimension(const json& m, const char* name, const char* key)
{
    const json& d = field(m, key);
    if (!d.is_number_unsigned())
        throw ValidationError("field '" + std::string(name) + "': '" + key +
                              "' must be a non-negative integer");
    return d.get<std::size_t>();
}

DenseMatrix parse_dense(const json& m, const char* name)
{
    const std::size_t rows = dimension(m, name, "rows");
    const std::size_t cols = dimension(m, name, "cols");
    const json& data = field(m, "data");
    if (!data.is_array() || data.size() != rows * cols)
        throw ValidationError("field '" + std::string(name) + "': data must hold rows*cols = " +
                              std::to_string(rows * cols) + " numbers");
    std::vector<double> v;
    v.reserve(data.size());
    for (const auto& x : data)
    {
        if (!x.is_number() || !std::isfinite(x.get<double>()))
            throw ValidationError("field '" + std::string(name) + "': entries must be finite numbers");
        v.push_back(x.get<double>());
    }
    return DenseMatrix(rows, cols, std::move(v));
}

ExponentMatrix parse_exponents(const json& m, const char* name)
{
    const std::size_t rows = dimension(m, name, "rows");
    const std::size_t cols = dimension(m, name, "cols");
    const json& data = field(m, "data");
    if (!data.is_array() || data.size() != rows * cols)
        throw ValidationError("field '" + std::string(name) + "': data must hold rows*cols = " +
                              std::to_string(rows * cols) + " integers");
    std::vector<std::uint32_t> v;
    v.reserve(data.size());
    for (const auto& x : data)
    {
        if (!x.is_number_unsigned() || x.get<std::uint64_t>() > UINT32_MAX)
            throw ValidationError("field '" + std::string(name) +
                                  "': exponents must be non-negative integers");
        v.push_back(x.get<std::uint32_t>());
    }
    return ExponentMatrix(rows, cols, std::move(v));
}

DenseMatrix get_matrix(const json& j, const char* name)
{
    return parse_dense(field(j, name), name);
}

DenseVector get_vector(const json& j, const char* name)
{
    DenseMatrix m = get_matrix(j, name);
    if (m.cols() != 1 && !(m.rows() == 0))
        throw ValidationError("field '" + std::string(name) + "' must be a single column, got " +
                              m.shape_string());
    return DenseVector(std::vector<double>(m.data().begin(), m.data().end()));
}

ExponentMatrix get_exponents(const json& j, const char* name)
{
    return parse_exponents(field(j, name), name);
}

json to_json(const AnySet& s)
{
    json j;
    j["kind"] = std::string(kind_name(s));
    std::visit(
        [&j](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ConPolyZonotope>)
            {
                j["c"] = vector_json(v.c());
                j["G"] = matrix_json(v.G());
                j["E"] = matrix_json(v.E());
                j["A"] = matrix_json(v.A());
                j["b"] = vector_json(v.b());
                j["R"] = matrix_json(v.R());
            }
            else if constexpr (std::is_same_v<T, PolyZonotope>)
            {
                j["c"] = vector_json(v.c);
                j["G"] = matrix_json(v.G);
                j["GI"] = matrix_json(v.GI);
                j["E"] = matrix_json(v.E);
            }
            else if constexpr (std::is_same_v<T, ConZonotope>)
            {
                j["c"] = vector_json(v.c);
                j["G"] = matrix_json(v.G);
                j["A"] = matrix_json(v.A);
                j["b"] = vector_json(v.b);
            }
            else if constexpr (std::is_same_v<T, Zonotope>)
            {
                j["c"] = vector_json(v.c);
                j["G"] = matrix_json(v.G);
            }
            else if constexpr (std::is_same_v<T, IntervalBox>)
            {
                j["lo"] = vector_json(v.lo);
                j["hi"] = vector_json(v.hi);
            }
            else if constexpr (std::is_same_v<T, Ellipsoid>)
            {
                j["c"] = vector_json(v.c);
                j["Q"] = matrix_json(v.Q);
            }
            else
            {
                DenseVector lo(v.remainder.size());
                DenseVector hi(v.remainder.size());
                for (std::size_t i = 0; i < v.remainder.size(); ++i)
                {
                    lo[i] = v.remainder[i].lo();
                    hi[i] = v.remainder[i].hi();
                }
                j["coeffs"] = matrix_json(v.coeffs);
                j["expons"] = matrix_json(v.expons);
                j["remainder_lo"] = vector_json(lo);
                j["remainder_hi"] = vector_json(hi);
            }
        },
        s);
    return j;
}

AnySet from_json(const json& j)
{
    const json& kind = field(j, "kind");
    if (!kind.is_string())
        throw ValidationError("set file: 'kind' must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "cpz")
        return ConPolyZonotope(get_vector(j, "c"), get_matrix(j, "G"), get_exponents(j, "E"),
                               get_matrix(j, "A"), get_vector(j, "b"), get_exponents(j, "R"));
    if (k == "polyzono")
        return PolyZonotope(get_vector(j, "c"), get_matrix(j, "G"), get_matrix(j, "GI"),
                            get_exponents(j, "E"));
    if (k == "conzono")
        return ConZonotope(get_vector(j, "c"), get_matrix(j, "G"), get_matrix(j, "A"),
                           get_vector(j, "b"));
    if (k == "zonotope")
        return Zonotope(get_vector(j, "c"), get_matrix(j, "G"));
    if (k == "interval")
        return IntervalBox(get_vector(j, "lo"), get_vector(j, "hi"));
    if (k == "ellipsoid")
        return Ellipsoid(get_vector(j, "c"), get_matrix(j, "Q"));
    if (k == "taylormodel")
    {
        const DenseVector lo = get_vector(j, "remainder_lo");
        const DenseVector hi = get_vector(j, "remainder_hi");
        if (lo.size() != hi.size())
            throw ShapeError("remainder_lo and remainder_hi differ in length");
        std::vector<Interval> rem;
        for (std::size_t i = 0; i < lo.size(); ++i)
            rem.emplace_back(lo[i], hi[i]);
        return TaylorModel(get_matrix(j, "coeffs"), get_exponents(j, "expons"), std::move(rem));
    }
    throw ValidationError("set file: unknown kind '" + k + "'");
}

json parse_json(std::string_view text)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

std::string_view kind_name(const AnySet& s)
{
    static constexpr std::string_view names[] = {"cpz",      "polyzono",  "conzono",    "zonotope",
                                                 "interval", "ellipsoid", "taylormodel"};
    return names[s.index()];
}

std::string dump_set(const AnySet& s)
{
    return to_json(s).dump(1) + "\n";
}

AnySet parse_set(std::string_view text)
{
    const json j = parse_json(text);
    try
    {
        return from_json(j);
    }
    catch (const json::exception& e)
    {
        throw ValidationError(std::string("set file: ") + e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw IoError("error while reading '" + path.string() + "'");
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    out.flush();
    if (!out)
        throw IoError("error while writing '" + path.string() + "'");
}

void save_set(const std::filesystem::path& path, const AnySet& s)
{
    write_text_file(path, dump_set(s));
}

AnySet load_set(const std::filesystem::path& path)
{
    return parse_set(read_text_file(path));
}

ConPolyZonotope to_cpz(const AnySet& s)
{
    return std::visit(
        [](const auto& v) -> ConPolyZonotope {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ConPolyZonotope>)
                return v;
            else if constexpr (std::is_same_v<T, PolyZonotope>)
                return from_poly_zonotope(v);
            else if constexpr (std::is_same_v<T, ConZonotope>)
                return from_con_zonotope(v);
            else if constexpr (std::is_same_v<T, Zonotope>)
                return from_zonotope(v);
            else if constexpr (std::is_same_v<T, IntervalBox>)
                return from_interval(v);
            else if constexpr (std::is_same_v<T, Ellipsoid>)
                return from_ellipsoid(v);
            else
                return from_taylor_model(v);
        },
        s);
}

DenseMatrix load_matrix(const std::filesystem::path& path)
{
    const json j = parse_json(read_text_file(path));
    try
    {
        if (j.is_array())
        {
            if (j.size() != 1)
                throw ValidationError("matrix file: expected one matrix, got " + std::to_string(j.size()));
            return parse_dense(j[0], "matrix[0]");
        }
        return parse_dense(j, "matrix");
    }
    catch (const json::exception& e)
    {
        throw ValidationError(std::string("matrix file: ") + e.what());
    }
}

std::vector<DenseMatrix> load_matrices(const std::filesystem::path& path)
{
    const json j = parse_json(read_text_file(path));
    std::vector<DenseMatrix> out;
    try
    {
        if (j.is_array())
        {
            for (std::size_t i = 0; i < j.size(); ++i)
            {
                const std::string name = "matrix[" + std::to_string(i) + "]";
                out.push_back(parse_dense(j[i], name.c_str()));
            }
        }
        else
        {
            out.push_back(parse_dense(j, "matrix"));
        }
    }
    catch (const json::exception& e)
    {
        throw ValidationError(std::string("matrix file: ") + e.what());
    }
    return out;
}

void save_matrices(const std::filesystem::path& path, const std::vector<DenseMatrix>& ms)
{
    json j = json::array();
    for (const auto& m : ms)
        j.push_back(matrix_json(m));
    write_text_file(path, j.dump(1) + "\n");
}

std::string format_points_csv(const std::vector<DenseVector>& points)
{
    std::string out;
    char buf[32];
    for (const auto& x : points)
    {
        for (std::size_t i = 0; i < x.size(); ++i)
        {
            if (i > 0)
                out += ',';
            std::snprintf(buf, sizeof buf, "%.17g", x[i]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

void write_points_csv(const std::filesystem::path& path, const std::vector<DenseVector>& points)
{
    write_text_file(path, format_points_csv(points));
}

} // namespace cpz
