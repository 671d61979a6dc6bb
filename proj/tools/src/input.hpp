#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "projdel/binary_forms.hpp"
#include "projdel/io.hpp"
#include "projdel/multipoly.hpp"
#include "projdel/path.hpp"

namespace projdel::cli {

/// Contents of a file, or of stdin for "-".
std::string read_source(const std::string& path);
io::json read_json(const std::string& path);

/// Polynomial operands: JSON files by default; with `infix`, the strings are
/// expressions over `vars` (inferred jointly when empty).
std::vector<MultiPoly> load_polys(const std::vector<std::string>& args, bool infix, std::vector<std::string> vars);

/// "a11,a12,a21,a22", inline JSON, or a JSON file.
Matrix2 load_matrix(const std::string& arg);
/// "1/2,3"
Point parse_point(const std::string& text);
/// "0;1" or "0,1;2,3"
std::vector<Point> parse_points(const std::string& text);
std::vector<std::string> split(const std::string& text, char sep);

struct PathSpec {
    std::string from, to, center, radius;
};
BasePath make_path(const PathSpec& spec, unsigned samples);

}  // namespace projdel::cli
