#include "projdel/tracking.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "projdel/delineability.hpp"
#include "projdel/elimination.hpp"
#include "projdel/error.hpp"

namespace projdel {

namespace {

struct Match {
    std::vector<std::optional<std::size_t>> cur_to_prev;
    bool structural_change = false;
    bool jump = false;
    bool ambiguous = false;
};

Match match_samples(const PathSample& prev, const PathSample& cur, const TrackOptions& opt) {
    Match m;
    const std::size_t np = prev.roots.size(), nc = cur.roots.size();
    m.cur_to_prev.assign(nc, std::nullopt);
    std::vector<std::vector<double>> dist(np, std::vector<double>(nc));
    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
            dist[i][j] = chordal_distance(prev.roots[i].position, cur.roots[j].position);
            pairs.emplace_back(dist[i][j], i, j);
        }
    std::sort(pairs.begin(), pairs.end());
    std::vector<bool> used_prev(np), used_cur(nc);
    for (const auto& [d, i, j] : pairs) {
        if (used_prev[i] || used_cur[j]) continue;
        used_prev[i] = used_cur[j] = true;
        m.cur_to_prev[j] = i;
    }
    if (np != nc) m.structural_change = true;
    for (std::size_t j = 0; j < nc; ++j) {
        if (!m.cur_to_prev[j]) continue;
        const std::size_t i = *m.cur_to_prev[j];
        if (prev.roots[i].multiplicity != cur.roots[j].multiplicity) m.structural_change = true;
        const double d1 = dist[i][j];
        if (d1 > opt.jump_threshold) m.jump = true;
        double d2 = std::numeric_limits<double>::infinity();
        for (std::size_t jj = 0; jj < nc; ++jj)
            if (jj != j) d2 = std::min(d2, dist[i][jj]);
        for (std::size_t ii = 0; ii < np; ++ii)
            if (ii != i) d2 = std::min(d2, dist[ii][j]);
        if (d2 - d1 < std::min(opt.matching_margin, d1)) m.ambiguous = true;
    }
    return m;
}

std::vector<Rat> critical_parameters(const MultiPoly& p, const BasePath& path) {
    std::vector<Rat> out;
    if (path.kind() != BasePath::Kind::segment) return out;
    const MultiPoly r = restrict_to_segment(p, path);
    const unsigned d = p.degree_in_last();
    std::vector<MultiPoly> candidates;
    for (unsigned k = 0; k <= d; ++k) candidates.push_back(r.coefficient_in_last(k));
    if (d >= 2 && !r.is_zero() && r.degree_in_last() >= 1) {
        // Same reference degree as P: restriction commutes with the discriminant.
        candidates.push_back(discriminant_fixed(r, d));
    }
    for (const auto& c : candidates) {
        if (c.is_zero() || c.is_constant()) continue;
        const UniPoly u = c.evaluate_partial(std::span<const Rat>{});
        for (const auto& root : isolate_real_roots(u))
            if (root.is_exact() && root.value() > 0 && root.value() < 1) out.push_back(root.value());
    }
    return out;
}

}  // namespace

std::string TrackVerdict::monodromy_cycles() const {
    if (!monodromy) return "";
    const auto& perm = *monodromy;
    std::string out;
    std::vector<bool> seen(perm.size());
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start] || perm[start] == start) continue;
        out += "(";
        for (std::size_t b = start; !seen[b]; b = perm[b]) {
            seen[b] = true;
            if (b != start) out += " ";
            out += std::to_string(b + 1);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

RootTrace TrackResult::trace() const {
    RootTrace out;
    for (const auto& s : samples)
        for (const auto& r : s.roots) out.push_back({s.t, r.branch + 1, r.position, r.multiplicity, r.is_infinity});
    return out;
}

PathSample sample_roots(const MultiPoly& p, const Point& base, TrackMode mode) {
    PathSample s;
    s.base = base;
    const ProjRootSet roots = projective_roots_above(p, base);
    for (const auto& r : roots.real_roots) {
        RootSample rs;
        rs.multiplicity = r.multiplicity;
        rs.position = embed_affine(r.approximate());
        rs.real_root = r;
        s.roots.push_back(std::move(rs));
    }
    if (mode == TrackMode::projective && roots.infinity_multiplicity > 0) {
        RootSample rs;
        rs.multiplicity = roots.infinity_multiplicity;
        rs.is_infinity = true;
        rs.position = embed_circle(infinity());
        s.roots.push_back(std::move(rs));
    }
    return s;
}

TrackResult track_roots(const MultiPoly& p, const BasePath& path, const TrackOptions& opt) {
    if (p.nvars() != path.dimension() + 1) throw InputError("path dimension does not match the polynomial");
    if (p.is_zero()) throw NullifiedError("zero polynomial nullifies everywhere");

    std::set<Rat> params;
    for (const auto& s : path.grid()) params.insert(s);
    if (opt.critical_samples)
        for (const auto& s : critical_parameters(p, path)) params.insert(s);

    auto compute = [&](const Rat& param) {
        PathSample s = sample_roots(p, path.at(param), opt.mode);
        s.parameter = param;
        s.t = path.display_parameter(param);
        return s;
    };

    TrackResult result;
    TrackVerdict& v = result.verdict;
    std::size_t next_branch = 0;
    auto violate = [&](const PathSample& at, std::string reason) {
        if (v.status == TrackStatus::violation) return;
        v.status = TrackStatus::violation;
        v.witness_t = at.t;
        v.witness_point = at.base;
        v.reason = std::move(reason);
    };

    auto advance = [&](auto&& self, PathSample cur, unsigned depth) -> void {
        const PathSample& prev = result.samples.back();
        const Match m = match_samples(prev, cur, opt);
        if (!m.structural_change && (m.jump || m.ambiguous) && depth < opt.max_refinements) {
            const Rat mid = (prev.parameter + cur.parameter) / 2;
            self(self, compute(mid), depth + 1);
            self(self, std::move(cur), depth + 1);
            return;
        }
        if (m.ambiguous && !m.structural_change)
            throw TrackingError("ambiguous branch matching near t = " + std::to_string(cur.t));
        for (std::size_t j = 0; j < cur.roots.size(); ++j)
            cur.roots[j].branch = m.cur_to_prev[j] ? prev.roots[*m.cur_to_prev[j]].branch : next_branch++;
        if (m.structural_change) {
            violate(cur, "root structure changes: " + std::to_string(prev.roots.size()) + " -> " +
                             std::to_string(cur.roots.size()) + " roots or a multiplicity changes");
        } else if (m.jump) {
            violate(cur, "branch jumps by more than the threshold (discontinuity)");
        }
        result.samples.push_back(std::move(cur));
    };

    auto it = params.begin();
    result.samples.push_back(compute(*it));
    for (auto& r : result.samples.front().roots) r.branch = next_branch++;
    const PathSample first = result.samples.front();
    v.branch_count = first.roots.size();
    for (const auto& r : first.roots) v.multiplicity_vector.push_back(r.multiplicity);

    for (++it; it != params.end(); ++it) advance(advance, compute(*it), 0);

    if (path.closed() && v.status == TrackStatus::consistent) {
        // The last sample is the start point again: same exact roots, same order.
        const PathSample& last = result.samples.back();
        std::vector<std::size_t> perm(v.branch_count);
        for (std::size_t j = 0; j < last.roots.size(); ++j) perm[last.roots[j].branch] = first.roots[j].branch;
        v.monodromy = perm;
        for (std::size_t b = 0; b < perm.size(); ++b)
            if (perm[b] != b) {
                violate(last, "nontrivial monodromy " + v.monodromy_cycles() +
                                  ": the sections are not single-valued over the loop");
                break;
            }
    }
    return result;
}

std::vector<SectionReport> section_sign_check(const MultiPoly& p, const MultiPoly& q, const BasePath& path,
                                              const TrackOptions& options) {
    TrackOptions opt = options;
    opt.mode = TrackMode::projective;
    const TrackResult tr = track_roots(p, path, opt);
    if (tr.verdict.status != TrackStatus::consistent)
        throw PreconditionError("P does not track consistently along the path: " + tr.verdict.reason);
    if (q.is_zero()) throw NullifiedError("Q is the zero polynomial");
    if (q.vars() != p.vars()) throw InputError("P and Q use different variables");
    const unsigned qd = q.degree_in_last();

    std::vector<SectionReport> reports(tr.verdict.branch_count);
    std::vector<std::optional<bool>> first_state(reports.size());
    for (std::size_t b = 0; b < reports.size(); ++b) reports[b].branch_id = b + 1;

    for (const auto& s : tr.samples) {
        const UniPoly eq = q.evaluate_partial(s.base);
        if (eq.is_zero()) throw NullifiedError("Q nullifies at a path sample");
        for (const auto& r : s.roots) {
            bool vanishes;
            if (r.is_infinity) {
                vanishes = eq.degree() < static_cast<int>(qd);
            } else if (r.real_root->is_exact()) {
                vanishes = eq(r.real_root->value()) == 0;
            } else {
                const UniPoly g = gcd(r.real_root->factor, eq);
                vanishes = g.degree() > 0 && sgn(g(r.real_root->lo)) * sgn(g(r.real_root->hi)) < 0;
            }
            SectionReport& rep = reports[r.branch];
            ++rep.total_samples;
            if (vanishes) ++rep.vanishing_samples;
            auto& fs = first_state[r.branch];
            if (!fs) fs = vanishes;
            else if (*fs != vanishes && !rep.witness_t) rep.witness_t = s.t;
        }
    }
    for (auto& rep : reports) {
        if (rep.vanishing_samples == 0) rep.status = SectionStatus::never_vanishes;
        else if (rep.vanishing_samples == rep.total_samples) rep.status = SectionStatus::vanishes_identically;
        else rep.status = SectionStatus::mixed;
    }
    return reports;
}

std::string to_string(TrackStatus s) { return s == TrackStatus::consistent ? "CONSISTENT" : "VIOLATION"; }

std::string to_string(SectionStatus s) {
    switch (s) {
        case SectionStatus::vanishes_identically: return "vanishes_identically";
        case SectionStatus::never_vanishes: return "never_vanishes";
        case SectionStatus::mixed: return "MIXED";
    }
    return "";
}

}  // namespace projdel
