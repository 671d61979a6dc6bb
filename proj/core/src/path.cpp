#include "projdel/path.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "projdel/error.hpp"

namespace projdel {

namespace {

// Denominator bound for tan(angle / 2); circle points then have denominators
// below 2^33, well inside exact-arithmetic comfort.
constexpr long kHalfAngleDenominator = 1L << 16;

std::pair<Rat, Rat> unit_circle_point(const Rat& s) {
    Int whole;
    mpz_fdiv_q(whole.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    const Rat frac = s - Rat(whole);
    if (frac == 0) return {1, 0};
    if (frac == Rat(1, 4)) return {0, 1};
    if (frac == Rat(1, 2)) return {-1, 0};
    if (frac == Rat(3, 4)) return {0, -1};
    double angle = 2 * std::numbers::pi * frac.get_d();
    bool flip = false;
    if (angle > std::numbers::pi / 2 && angle < 3 * std::numbers::pi / 2) {
        angle -= std::numbers::pi;
        flip = true;
    } else if (angle >= 3 * std::numbers::pi / 2) {
        angle -= 2 * std::numbers::pi;
    }
    // (1 - h^2, 2 h) / (1 + h^2) with rational h = tan(angle / 2), |h| <= 1.
    const Rat h = rationalize(std::tan(angle / 2), kHalfAngleDenominator);
    const Rat n = 1 + h * h;
    Rat c = (1 - h * h) / n, sn = 2 * h / n;
    if (flip) {
        c = -c;
        sn = -sn;
    }
    return {c, sn};
}

}  // namespace

BasePath::BasePath(Kind kind, Point a, Point b, Rat radius, unsigned samples)
    : kind_(kind), a_(std::move(a)), b_(std::move(b)), radius_(std::move(radius)), samples_(samples) {
    if (samples_ < kMinSamples)
        throw PreconditionError("a path needs at least " + std::to_string(kMinSamples) + " samples");
}

BasePath BasePath::segment(Point start, Point end, unsigned samples) {
    if (start.size() != end.size()) throw InputError("segment end points have different dimensions");
    if (start.empty()) throw InputError("segment needs a base of dimension >= 1");
    return {Kind::segment, std::move(start), std::move(end), 0, samples};
}

BasePath BasePath::circle(Point center, Rat radius, unsigned samples) {
    if (center.size() != 2) throw InputError("circle paths need a two-dimensional base");
    if (radius <= 0) throw PreconditionError("circle radius must be positive");
    Point start = {center[0] + radius, center[1]};
    return {Kind::circle, std::move(start), std::move(center), std::move(radius), samples};
}

Point BasePath::at(const Rat& s) const {
    if (kind_ == Kind::segment) {
        Point p(a_.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = a_[i] + s * (b_[i] - a_[i]);
        return p;
    }
    const auto [c, sn] = unit_circle_point(s);
    return {b_[0] + radius_ * c, b_[1] + radius_ * sn};
}

double BasePath::display_parameter(const Rat& s) const {
    if (kind_ == Kind::circle) return 2 * std::numbers::pi * s.get_d();
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != b_[i]) return Rat(a_[i] + s * (b_[i] - a_[i])).get_d();
    return s.get_d();
}

std::vector<Rat> BasePath::grid() const {
    std::vector<Rat> g;
    g.reserve(samples_ + 1);
    for (unsigned i = 0; i <= samples_; ++i) {
        Rat s(i, samples_);
        s.canonicalize();
        g.push_back(s);
    }
    return g;
}

BasePath BasePath::with_samples(unsigned samples) const {
    BasePath p = *this;
    if (samples < kMinSamples) throw PreconditionError("a path needs at least 16 samples");
    p.samples_ = samples;
    return p;
}

std::string BasePath::to_string() const {
    std::ostringstream out;
    auto point = [&](const Point& p) {
        out << "(";
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? ", " : "") << format_rat(p[i]);
        out << ")";
    };
    if (kind_ == Kind::segment) {
        out << "segment ";
        point(a_);
        out << " -> ";
        point(b_);
    } else {
        out << "circle center ";
        point(b_);
        out << " radius " << format_rat(radius_);
    }
    out << ", " << samples_ << " samples";
    return out.str();
}

MultiPoly restrict_to_segment(const MultiPoly& p, const BasePath& path) {
    if (path.kind() != BasePath::Kind::segment) throw InputError("restriction needs a segment path");
    if (p.nvars() != path.dimension() + 1) throw InputError("path dimension does not match the polynomial");
    const std::vector<std::string> target = {"s", p.vars().back()};
    std::vector<MultiPoly> images;
    const MultiPoly s = MultiPoly::variable(target, 0);
    for (std::size_t i = 0; i < path.dimension(); ++i) {
        const Rat& a = path.start()[i];
        const Rat& b = path.end_or_center()[i];
        images.push_back(MultiPoly::constant(target, a) + s.scale(b - a));
    }
    images.push_back(MultiPoly::variable(target, 1));
    return p.substitute(images);
}

}  // namespace projdel
