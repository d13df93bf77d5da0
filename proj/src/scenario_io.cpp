#include "icrf/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "icrf/errors.hpp"

namespace icrf {

namespace {

double get_number(const ordered_json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ScenarioParseError("missing or non-numeric field '" + key + "'");
    return j[key].get<double>();
}

Point2 get_point(const ordered_json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 ||
        !j[key][0].is_number() || !j[key][1].is_number())
        throw ScenarioParseError("field '" + key + "' must be a [x, y] pair");
    return {j[key][0].get<double>(), j[key][1].get<double>()};
}

}  // namespace

Scenario parse_scenario(const ordered_json& j) {
    if (!j.is_object()) throw ScenarioParseError("scenario must be a JSON object");
    Scenario s;
    s.model = j.contains("model") ? fading_model_from_string(j["model"].get<std::string>())
                                  : FadingModel::Phase;
    if (!j.contains("powers") || !j["powers"].is_array() || j["powers"].size() != 3)
        throw ScenarioParseError("'powers' must be an array [P1, P2, P3]");
    const double p1 = j["powers"][0].get<double>();
    const double p2 = j["powers"][1].get<double>();
    const double p3 = j["powers"][2].get<double>();

    const bool has_att = j.contains("attenuations");
    const bool has_layout = j.contains("layout");
    if (has_att == has_layout)
        throw ScenarioParseError("scenario needs exactly one of 'attenuations' or 'layout'");

    if (has_att) {
        const auto& a = j["attenuations"];
        if (!a.is_object()) throw ScenarioParseError("'attenuations' must be an object");
        static const char* keys[8] = {"a11", "a12", "a13", "a21", "a22", "a23", "a31", "a32"};
        for (const auto& item : a.items()) {
            bool known = false;
            for (const char* k : keys) known = known || item.key() == k;
            if (!known)
                throw ScenarioParseError("unknown attenuation '" + item.key() +
                                         "' (only the eight a_lk links exist)");
        }
        s.params.a11 = get_number(a, "a11");
        s.params.a12 = get_number(a, "a12");
        s.params.a13 = get_number(a, "a13");
        s.params.a21 = get_number(a, "a21");
        s.params.a22 = get_number(a, "a22");
        s.params.a23 = get_number(a, "a23");
        s.params.a31 = get_number(a, "a31");
        s.params.a32 = get_number(a, "a32");
        s.params.p1 = p1;
        s.params.p2 = p2;
        s.params.p3 = p3;
    } else {
        const auto& l = j["layout"];
        if (!l.is_object()) throw ScenarioParseError("'layout' must be an object");
        Layout layout;
        layout.tx1 = get_point(l, "tx1");
        layout.tx2 = get_point(l, "tx2");
        layout.rx1 = get_point(l, "rx1");
        layout.rx2 = get_point(l, "rx2");
        if (l.contains("amplitude_exponent"))
            layout.amplitude_exponent = get_number(l, "amplitude_exponent");
        s.layout = layout;
        if (j.contains("relay")) {
            const Point2 relay = get_point(j, "relay");
            try {
                s.params = attenuation_from_geometry(layout, relay, p1, p2, p3);
            } catch (const std::exception& e) {
                throw ScenarioParseError(std::string("bad geometry: ") + e.what());
            }
        } else if (j.contains("map")) {
            // the relay is scanned; only the fixed links matter
            try {
                layout.validate();
            } catch (const std::exception& e) {
                throw ScenarioParseError(std::string("bad layout: ") + e.what());
            }
            const double d11 = std::hypot(layout.tx1.x - layout.rx1.x,
                                          layout.tx1.y - layout.rx1.y);
            const double d12 = std::hypot(layout.tx1.x - layout.rx2.x,
                                          layout.tx1.y - layout.rx2.y);
            const double d21 = std::hypot(layout.tx2.x - layout.rx1.x,
                                          layout.tx2.y - layout.rx1.y);
            const double d22 = std::hypot(layout.tx2.x - layout.rx2.x,
                                          layout.tx2.y - layout.rx2.y);
            const double e = layout.amplitude_exponent;
            s.params.a11 = std::pow(d11, -e);
            s.params.a12 = std::pow(d12, -e);
            s.params.a21 = std::pow(d21, -e);
            s.params.a22 = std::pow(d22, -e);
            s.params.p1 = p1;
            s.params.p2 = p2;
            s.params.p3 = p3;
        } else {
            throw ScenarioParseError("layout scenarios need a 'relay' position or a 'map' block");
        }
    }
    if (j.contains("map")) {
        const auto& m = j["map"];
        if (!m.is_object()) throw ScenarioParseError("'map' must be an object");
        MapJob job;
        if (m.contains("bbox")) {
            const auto& b = m["bbox"];
            if (!b.is_array() || b.size() != 4)
                throw ScenarioParseError("'map.bbox' must be [xmin, xmax, ymin, ymax]");
            job.bbox = BBox{b[0].get<double>(), b[1].get<double>(), b[2].get<double>(),
                            b[3].get<double>()};
        }
        if (m.contains("resolution")) job.resolution = m["resolution"].get<int>();
        if (m.contains("configs")) {
            for (const auto& c : m["configs"])
                job.configs.push_back(feedback_config_from_string(c.get<std::string>()));
        }
        if (m.contains("kind")) {
            const std::string k = m["kind"].get<std::string>();
            if (k != "vsi" && k != "si") throw ScenarioParseError("'map.kind' must be vsi|si");
            job.kind = k == "vsi" ? RegimeKind::VSI : RegimeKind::SI;
        }
        s.map = job;
    }
    try {
        s.params.validate();
    } catch (const std::exception& e) {
        throw ScenarioParseError(std::string("invalid parameters: ") + e.what());
    }
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioParseError("cannot open scenario file '" + path + "'");
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ScenarioParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_scenario(j);
}

ordered_json scenario_to_json(const Scenario& s) {
    ordered_json j;
    j["model"] = to_string(s.model);
    j["powers"] = {s.params.p1, s.params.p2, s.params.p3};
    ordered_json a;
    a["a11"] = s.params.a11;
    a["a12"] = s.params.a12;
    a["a13"] = s.params.a13;
    a["a21"] = s.params.a21;
    a["a22"] = s.params.a22;
    a["a23"] = s.params.a23;
    a["a31"] = s.params.a31;
    a["a32"] = s.params.a32;
    j["attenuations"] = a;
    return j;
}

ordered_json to_json(const MIEstimate& e) {
    ordered_json j;
    j["value"] = e.value;
    j["std_error"] = e.std_error;
    j["n_samples"] = e.n_samples;
    j["method"] = to_string(e.method);
    return j;
}

ordered_json to_json(const ConditionEntry& e) {
    ordered_json j;
    j["name"] = e.name;
    j["lhs"] = e.lhs;
    j["rhs"] = e.rhs;
    j["margin"] = e.margin();
    j["satisfied"] = e.status == EntryStatus::Satisfied;
    j["status"] = to_string(e.status);
    if (e.std_error > 0) j["std_error"] = e.std_error;
    j["method"] = to_string(e.method);
    return j;
}

ordered_json report_to_json(const ConditionReport& r, std::optional<Regime> regime) {
    ordered_json j;
    j["config"] = to_string(r.config);
    j["model"] = to_string(r.model);
    if (regime) j["regime"] = to_string(*regime);
    j["overall"] = to_string(r.overall);
    j["satisfied"] = r.satisfied();
    ordered_json entries = ordered_json::array();
    for (const auto& e : r.entries) entries.push_back(to_json(e));
    j["entries"] = entries;
    return j;
}

ordered_json region_to_json(const RateRegion& r) {
    ordered_json j;
    ordered_json cs = ordered_json::array();
    for (const auto& h : r.constraints) {
        ordered_json c;
        c["w"] = {h.w1, h.w2};
        c["c"] = h.c;
        if (h.cap_std_error > 0) c["std_error"] = h.cap_std_error;
        cs.push_back(c);
    }
    j["constraints"] = cs;
    ordered_json vs = ordered_json::array();
    for (const auto& v : r.vertices) vs.push_back({v[0], v[1]});
    j["vertices"] = vs;
    ordered_json meta;
    meta["regime"] = to_string(r.meta.regime);
    meta["config"] = to_string(r.meta.config);
    meta["model"] = to_string(r.meta.model);
    meta["is_capacity"] = r.meta.is_capacity;
    if (!r.meta.note.empty()) meta["note"] = r.meta.note;
    j["meta"] = meta;
    return j;
}

ordered_json to_json(const OracleReport& r) {
    ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["pass"] = r.pass;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json k;
        k["name"] = c.name;
        k["n"] = c.n_checked;
        k["violations"] = c.violations;
        k["indeterminate"] = c.indeterminate;
        // JSON has no literal for non-finite margins (nothing was measured)
        if (std::isfinite(c.worst_margin))
            k["worst_margin"] = c.worst_margin;
        else
            k["worst_margin"] = nullptr;
        k["pass"] = c.pass;
        checks.push_back(k);
    }
    j["checks"] = checks;
    return j;
}

ordered_json grid_summary_json(const PlacementGrid& g) {
    ordered_json j;
    j["resolution"] = g.resolution;
    j["bbox"] = {g.bbox.xmin, g.bbox.xmax, g.bbox.ymin, g.bbox.ymax};
    ordered_json per = ordered_json::array();
    for (size_t ci = 0; ci < g.configs.size(); ++ci) {
        long long counts[4] = {0, 0, 0, 0};
        for (int row = 0; row < g.resolution; ++row)
            for (int col = 0; col < g.resolution; ++col)
                ++counts[static_cast<int>(g.at(static_cast<int>(ci), row, col))];
        ordered_json c;
        c["config"] = to_string(g.configs[ci]);
        c["neither"] = counts[0];
        c["si_not_vsi"] = counts[1];
        c["vsi"] = counts[2];
        c["degenerate"] = counts[3];
        per.push_back(c);
    }
    j["cells"] = per;
    return j;
}

std::string region_vertices_csv(const RateRegion& r) {
    std::ostringstream os;
    os << "r1,r2\n";
    char buf[64];
    for (const auto& v : r.vertices) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", v[0], v[1]);
        os << buf;
    }
    return os.str();
}

namespace {

void dump_value(const ordered_json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<size_t>(indent) * (depth + 1), ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        size_t i = 0;
        for (const auto& item : j.items()) {
            out += pad_in + ordered_json(item.key()).dump() + ": ";
            dump_value(item.value(), out, indent, depth + 1);
            if (++i < j.size()) out += ",";
            out += "\n";
        }
        out += pad + "}";
    } else if (j.is_array()) {
        bool flat = true;
        for (const auto& v : j) flat = flat && !v.is_structured();
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += "[";
        if (!flat) out += "\n";
        size_t i = 0;
        for (const auto& v : j) {
            if (!flat) out += pad_in;
            dump_value(v, out, indent, depth + 1);
            if (++i < j.size()) out += flat ? ", " : ",";
            if (!flat) out += "\n";
        }
        if (!flat) out += pad;
        out += "]";
    } else if (j.is_number_float()) {
        char buf[40];
        double v = j.get<double>();
        if (v == 0) v = 0;  // never print negative zero
        if (!std::isfinite(v)) {
            out += "null";
            return;
        }
        std::snprintf(buf, sizeof buf, "%.12g", v);
        out += buf;
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string dump_json_12sig(const ordered_json& j, int indent) {
    std::string out;
    dump_value(j, out, indent, 0);
    out += "\n";
    return out;
}

}  // namespace icrf
