#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projdel/multipoly.hpp"
#include "projdel/path.hpp"
#include "projdel/projective_line.hpp"
#include "projdel/roots.hpp"

namespace projdel {

enum class TrackMode {
    projective,  // roots in RP^1, infinity included
    real,        // affine real roots only (classical delineability)
};

struct TrackOptions {
    /// Largest admissible move of a branch between samples, on the psi-circle (diameter 1).
    double jump_threshold = 0.2;
    /// Runner-up candidates closer than this (relative to the chosen match) make a match ambiguous.
    double matching_margin = 0.05;
    /// Depth of adaptive bisection between two samples on jumps or ambiguity.
    unsigned max_refinements = 8;
    TrackMode mode = TrackMode::projective;
    /// On segments, also sample the rational parameters where some x_n-coefficient
    /// or the discriminant of the restricted polynomial vanishes.
    bool critical_samples = true;
};

struct RootSample {
    NumProjPoint position;
    unsigned multiplicity = 0;
    bool is_infinity = false;
    std::optional<IsolatedRoot> real_root;  // empty for the root at infinity
    std::size_t branch = 0;                 // 0-based branch id
};

struct PathSample {
    Rat parameter;
    double t = 0;  // display parameter
    Point base;
    std::vector<RootSample> roots;  // increasing, infinity last
};

struct TracePoint {
    double t = 0;
    std::size_t branch_id = 0;  // 1-based, as printed
    NumProjPoint point;
    unsigned multiplicity = 0;
    bool is_infinity = false;
};

using RootTrace = std::vector<TracePoint>;

enum class TrackStatus { consistent, violation };

/// CONSISTENT is sampled evidence for (projective) delineability along the
/// path; VIOLATION is a certificate of failure at the witness sample.
/// Nullification and order invariance are only checked at the samples.
struct TrackVerdict {
    TrackStatus status = TrackStatus::consistent;
    std::size_t branch_count = 0;
    std::vector<unsigned> multiplicity_vector;
    /// Closed paths: branch b (0-based) ends where branch monodromy[b] started.
    std::optional<std::vector<std::size_t>> monodromy;
    std::optional<double> witness_t;
    std::optional<Point> witness_point;
    std::string reason;

    /// Cycle notation with 1-based ids, "()" for the identity.
    std::string monodromy_cycles() const;
};

struct TrackResult {
    TrackVerdict verdict;
    std::vector<PathSample> samples;

    RootTrace trace() const;
};

/// Exact roots of P above each sample, matched between consecutive samples by
/// chordal distance on the psi-circle. Throws NullifiedError when a sample
/// nullifies P and TrackingError when a match stays ambiguous after refinement.
TrackResult track_roots(const MultiPoly& p, const BasePath& path, const TrackOptions& options = {});

/// Roots above a single base point in the tracker's representation.
PathSample sample_roots(const MultiPoly& p, const Point& base, TrackMode mode);

enum class SectionStatus { vanishes_identically, never_vanishes, mixed };

struct SectionReport {
    std::size_t branch_id = 0;  // 1-based
    SectionStatus status = SectionStatus::never_vanishes;
    std::size_t vanishing_samples = 0;
    std::size_t total_samples = 0;
    std::optional<double> witness_t;  // first sample disagreeing with the first one
};

/// Along each projective P-section, whether H^{q_n}(Q) vanishes at the sampled
/// section points. The zero test is exact (gcd with the isolating factor).
/// Requires P to track CONSISTENT; throws PreconditionError otherwise.
std::vector<SectionReport> section_sign_check(const MultiPoly& p, const MultiPoly& q, const BasePath& path,
                                              const TrackOptions& options = {});

std::string to_string(TrackStatus s);
std::string to_string(SectionStatus s);

}  // namespace projdel
