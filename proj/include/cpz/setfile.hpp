#ifndef CPZ_SETFILE_HPP
#define CPZ_SETFILE_HPP

#include "cpz/sets.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cpz
{

// File could not be opened, read or written.
class IoError : public std::runtime_error
{
    using std::runtime_error::runtime_error;
};

using AnySet =
    std::variant<ConPolyZonotope, PolyZonotope, ConZonotope, Zonotope, IntervalBox, Ellipsoid, TaylorModel>;

// "cpz", "polyzono", "conzono", "zonotope", "interval", "ellipsoid", "taylormodel"
std::string_view kind_name(const AnySet& s);

/// JSON text of a set file:
///   {"kind": "cpz", "c": M, "G": M, "E": M, "A": M, "b": M, "R": M}
/// where every M is {"rows": r, "cols": c, "data": [row-major entries]} and
/// vectors are stored as single columns. Field names per kind are listed in
/// the README.
std::string dump_set(const AnySet& s);

// Throws ValidationError naming the offending field.
AnySet parse_set(std::string_view text);

void save_set(const std::filesystem::path& path, const AnySet& s);
AnySet load_set(const std::filesystem::path& path);

// Conversion to the constrained polynomial zonotope value.
ConPolyZonotope to_cpz(const AnySet& s);

// A single matrix object (or a one-element array), as used by `op linmap`.
DenseMatrix load_matrix(const std::filesystem::path& path);
// A JSON array of matrix objects (a single object is accepted too), as used by
// `op quadmap`.
std::vector<DenseMatrix> load_matrices(const std::filesystem::path& path);
void save_matrices(const std::filesystem::path& path, const std::vector<DenseMatrix>& ms);

// One point per line, coordinates separated by commas, %.17g, no header.
std::string format_points_csv(const std::vector<DenseVector>& points);
void write_points_csv(const std::filesystem::path& path, const std::vector<DenseVector>& points);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace cpz

#endif
