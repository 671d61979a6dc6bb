#include "input.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "projdel/error.hpp"

namespace projdel::cli {

std::string read_source(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

io::json read_json(const std::string& path) {
    const std::string text = read_source(path);
    try {
        return io::json::parse(text);
    } catch (const io::json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
    }
    return out;
}

std::vector<MultiPoly> load_polys(const std::vector<std::string>& args, bool infix, std::vector<std::string> vars) {
    std::vector<MultiPoly> out;
    if (!infix) {
        for (const auto& a : args) out.push_back(io::multipoly_from_json(read_json(a)));
        return out;
    }
    if (vars.empty()) {
        std::string all;
        for (const auto& a : args) all += a + " ";
        vars = io::infer_variables(all);
    }
    if (vars.empty()) throw InputError("no variables: pass --vars");
    for (const auto& a : args) out.push_back(io::parse_polynomial(a, vars));
    return out;
}

Matrix2 load_matrix(const std::string& arg) {
    if (arg.find('{') != std::string::npos) {
        try {
            return io::matrix_from_json(io::json::parse(arg));
        } catch (const io::json::parse_error& e) {
            throw InputError(std::string("malformed matrix JSON: ") + e.what());
        }
    }
    if (arg == "-" || std::filesystem::exists(arg)) return io::matrix_from_json(read_json(arg));
    const auto parts = split(arg, ',');
    if (parts.size() != 4) throw InputError("matrix must be a11,a12,a21,a22 or JSON");
    return {parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2]), parse_rat(parts[3])};
}

Point parse_point(const std::string& text) {
    Point p;
    if (text.empty()) return p;
    for (const auto& c : split(text, ',')) p.push_back(parse_rat(c));
    return p;
}

std::vector<Point> parse_points(const std::string& text) {
    std::vector<Point> out;
    for (const auto& p : split(text, ';')) out.push_back(parse_point(p));
    if (out.empty()) throw InputError("no base points given");
    return out;
}

BasePath make_path(const PathSpec& spec, unsigned samples) {
    const bool segment = !spec.from.empty() || !spec.to.empty();
    const bool circle = !spec.center.empty() || !spec.radius.empty();
    if (segment == circle) throw InputError("give either --from/--to or --center/--radius");
    if (segment) {
        if (spec.from.empty() || spec.to.empty()) throw InputError("a segment needs both --from and --to");
        return BasePath::segment(parse_point(spec.from), parse_point(spec.to), samples);
    }
    if (spec.center.empty() || spec.radius.empty()) throw InputError("a circle needs --center and --radius");
    const Rat r = parse_rat(spec.radius);
    if (r <= 0) throw InputError("radius must be positive");
    return BasePath::circle(parse_point(spec.center), r, samples);
}

}  // namespace projdel::cli
