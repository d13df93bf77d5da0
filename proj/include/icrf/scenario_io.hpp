#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "icrf/channel.hpp"
#include "icrf/mutual_info.hpp"
#include "icrf/oracle.hpp"
#include "icrf/placement.hpp"
#include "icrf/regimes.hpp"
#include "icrf/regions.hpp"

// Scenario files and report serialization. All floating-point output goes
// through a fixed 12-significant-digit formatter so runs are byte-for-byte
// diffable across machines.

namespace icrf {

using ordered_json = nlohmann::ordered_json;

// Placement-scan defaults that a scenario file may embed under "map".
struct MapJob {
    std::optional<BBox> bbox;
    std::optional<int> resolution;
    std::vector<FeedbackConfig> configs;
    std::optional<RegimeKind> kind;
};

struct Scenario {
    NetworkParams params;
    FadingModel model = FadingModel::Phase;
    std::optional<Layout> layout;  // present when attenuations came from geometry
    std::optional<MapJob> map;
};

// Accepts either explicit attenuations or a layout plus relay position:
//   { "model": "phase", "powers": [P1,P2,P3],
//     "attenuations": {"a11":..., ..., "a32":...} }
//   { "model": "rayleigh", "powers": [...],
//     "layout": {"tx1":[x,y], "tx2":..., "rx1":..., "rx2":...,
//                "amplitude_exponent": 2}, "relay": [x,y] }
// Layout scenarios may add a "map" block with bbox / resolution / configs /
// kind defaults for the placement scan.
// Throws ScenarioParseError with a line-of-sight diagnostic on bad input.
Scenario parse_scenario(const ordered_json& j);
Scenario load_scenario_file(const std::string& path);

ordered_json scenario_to_json(const Scenario& s);

ordered_json to_json(const MIEstimate& e);
ordered_json to_json(const ConditionEntry& e);
ordered_json report_to_json(const ConditionReport& r, std::optional<Regime> regime = {});
ordered_json region_to_json(const RateRegion& r);
ordered_json to_json(const OracleReport& r);
ordered_json grid_summary_json(const PlacementGrid& g);

// Vertex CSV ("r1,r2" rows) for plotting.
std::string region_vertices_csv(const RateRegion& r);

// Recursive serializer printing every float with %.12g.
std::string dump_json_12sig(const ordered_json& j, int indent = 2);

}  // namespace icrf
