#pragma once

#include <string>
#include <vector>

#include "projdel/multipoly.hpp"

namespace projdel {

/// One-parameter base path, sampled at exact rational points. Parameters run
/// over [0, 1]; circles are closed (parameter 1 is the start point again).
class BasePath {
public:
    enum class Kind { segment, circle };

    static constexpr unsigned kMinSamples = 16;

    /// start + s (end - start). Throws InputError on dimension mismatch and
    /// PreconditionError when samples < 16.
    static BasePath segment(Point start, Point end, unsigned samples);
    /// center + radius (cos 2 pi s, sin 2 pi s) in a two-dimensional base.
    static BasePath circle(Point center, Rat radius, unsigned samples);

    Kind kind() const { return kind_; }
    unsigned samples() const { return samples_; }
    std::size_t dimension() const { return a_.size(); }
    bool closed() const { return kind_ == Kind::circle; }
    const Point& start() const { return a_; }
    /// Segment end, or circle center.
    const Point& end_or_center() const { return b_; }
    const Rat& radius() const { return radius_; }

    /// Exact base point for a parameter. Circle points lie exactly on the circle
    /// (rational parametrization of a nearby angle; quarter turns are exact).
    Point at(const Rat& s) const;
    /// Reported parameter t: on a segment the first coordinate that moves (so
    /// t = x1 on [-1, 1] in the x1-line), on a circle the angle 2 pi s.
    double display_parameter(const Rat& s) const;
    /// Uniform grid i / samples, i = 0..samples.
    std::vector<Rat> grid() const;

    BasePath with_samples(unsigned samples) const;
    std::string to_string() const;

private:
    BasePath(Kind kind, Point a, Point b, Rat radius, unsigned samples);

    Kind kind_;
    Point a_;
    Point b_;
    Rat radius_;
    unsigned samples_;
};

/// P restricted to a segment: the base variables are replaced by
/// start + s (end - start), giving a polynomial in (s, x_n).
MultiPoly restrict_to_segment(const MultiPoly& p, const BasePath& path);

}  // namespace projdel
