#pragma once

#include <string>
#include <utility>
#include <vector>

#include "projdel/io.hpp"
#include "projdel/tracking.hpp"

namespace projdel::cli {

struct Config {
    unsigned samples = 256;
    double jump_threshold = 0.2;
};

struct ReproCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ReproReport {
    std::string id;
    std::string description;
    std::vector<ReproCheck> checks;
    bool pass() const;
    io::json to_json() const;
};

const std::vector<std::string>& reproduce_ids();
/// Runs the named example against its embedded golden values.
ReproReport reproduce(const std::string& id, const Config& cfg);

using NamedTrack = std::pair<std::string, TrackResult>;
/// Tracks for the plot presets: cub-hyp, scc, prop4-circle, p-del-not-proj, lc-line.
std::vector<NamedTrack> plot_preset(const std::string& id, const Config& cfg);
/// Wide CSV: t, then <curve>_b<k>_u, <curve>_b<k>_v per branch; empty cells where a
/// branch has no point. Header only when no branch exists.
std::string plot_csv(const std::vector<NamedTrack>& curves);

}  // namespace projdel::cli
