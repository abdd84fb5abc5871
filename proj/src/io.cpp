#include "ris/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ris {

namespace {

using nlohmann::json;

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

double deg_to_rad(double deg) { return deg / kDegPerRad; }

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* name : allowed) {
            if (key == name) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw std::invalid_argument("unknown key '" + key + "' in " + where);
        }
    }
}

const json* find(const json& obj, const char* key) {
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

std::vector<double> number_array(const json& value, const std::string& where) {
    if (!value.is_array()) {
        throw std::invalid_argument(where + " must be an array of numbers");
    }
    std::vector<double> out;
    out.reserve(value.size());
    for (const json& item : value) {
        if (!item.is_number()) {
            throw std::invalid_argument(where + " must contain only numbers");
        }
        out.push_back(item.get<double>());
    }
    return out;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string phase_array(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += format_sig(values[i], 17);
    }
    out += ']';
    return out;
}

}  // namespace

std::string format_sig(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

DualPolConfig PairDocument::to_config() const {
    return DualPolConfig(PhaseVector::from_phases(phi_h), PhaseVector::from_phases(phi_v));
}

PairDocument PairDocument::from_config(const DualPolConfig& config) {
    PairDocument doc;
    doc.phi_h = config.phi_h().phases();
    doc.phi_v = config.phi_v().phases();
    return doc;
}

PairDocument parse_pair_json(const std::string& text) {
    const json root = json::parse(text);
    if (!root.is_object()) {
        throw std::invalid_argument("configuration file must be a JSON object");
    }
    reject_unknown_keys(root, {"phi_h", "phi_v", "meta", "verification"}, "configuration file");

    PairDocument doc;
    const json* h = find(root, "phi_h");
    const json* v = find(root, "phi_v");
    if (!h || !v) {
        throw std::invalid_argument("configuration file needs both 'phi_h' and 'phi_v' phase lists");
    }
    doc.phi_h = number_array(*h, "phi_h");
    doc.phi_v = number_array(*v, "phi_v");

    if (const json* meta = find(root, "meta")) {
        reject_unknown_keys(*meta, {"m", "n", "source"}, "meta");
        PairDocument::Meta m;
        m.m = meta->at("m").get<std::size_t>();
        m.n = meta->at("n").get<std::size_t>();
        m.source = meta->at("source").get<std::string>();
        doc.meta = m;
    }
    if (const json* ver = find(root, "verification")) {
        reject_unknown_keys(*ver, {"grid_size", "max_cross_term", "max_rel_deviation", "tolerance"},
                            "verification");
        PairDocument::Verification v2;
        v2.grid_size = ver->at("grid_size").get<int>();
        v2.max_cross_term = ver->at("max_cross_term").get<double>();
        v2.max_rel_deviation = ver->at("max_rel_deviation").get<double>();
        v2.tolerance = ver->at("tolerance").get<double>();
        doc.verification = v2;
    }
    return doc;
}

std::string pair_to_json(const PairDocument& doc) {
    std::string out = "{\n";
    if (doc.meta) {
        out += "  \"meta\": {\"m\": " + std::to_string(doc.meta->m) +
               ", \"n\": " + std::to_string(doc.meta->n) + ", \"source\": \"" +
               escape(doc.meta->source) + "\"},\n";
    }
    out += "  \"phi_h\": " + phase_array(doc.phi_h) + ",\n";
    out += "  \"phi_v\": " + phase_array(doc.phi_v);
    if (doc.verification) {
        out += ",\n  \"verification\": {\"grid_size\": " + std::to_string(doc.verification->grid_size) +
               ", \"max_cross_term\": " + format_sig(doc.verification->max_cross_term, 17) +
               ", \"max_rel_deviation\": " + format_sig(doc.verification->max_rel_deviation, 17) +
               ", \"tolerance\": " + format_sig(doc.verification->tolerance, 17) + "}";
    }
    out += "\n}\n";
    return out;
}

PairDocument load_pair_json(const std::filesystem::path& path) {
    return parse_pair_json(read_text_file(path));
}

void save_pair_json(const std::filesystem::path& path, const PairDocument& doc) {
    write_text_file(path, pair_to_json(doc));
}

namespace {

void parse_geometry(const json& obj, ArrayGeometry& geom) {
    reject_unknown_keys(obj, {"m_per_pol", "spacing_wl", "incident_angle_deg"}, "geometry");
    if (const json* v = find(obj, "m_per_pol")) {
        geom.m_per_pol = v->get<int>();
    }
    if (const json* v = find(obj, "spacing_wl")) {
        geom.spacing_wl = v->get<double>();
    }
    if (const json* v = find(obj, "incident_angle_deg")) {
        geom.incident_angle = deg_to_rad(v->get<double>());
    }
    if (geom.m_per_pol < 1) {
        throw std::invalid_argument("geometry.m_per_pol must be at least 1");
    }
    if (!(geom.spacing_wl > 0.0)) {
        throw std::invalid_argument("geometry.spacing_wl must be positive");
    }
    if (std::abs(geom.incident_angle) > std::numbers::pi / 2.0) {
        throw std::invalid_argument("geometry.incident_angle_deg must lie in [-90, 90]");
    }
}

void parse_pattern(const json& obj, ElementPattern& pattern) {
    reject_unknown_keys(obj, {"peak_gain_dbi", "boresight_deg", "width_deg", "floor_db"},
                        "pattern");
    if (const json* v = find(obj, "peak_gain_dbi")) {
        pattern.peak_gain_dbi = v->get<double>();
    }
    if (const json* v = find(obj, "boresight_deg")) {
        pattern.boresight = deg_to_rad(v->get<double>());
    }
    if (const json* v = find(obj, "width_deg")) {
        pattern.width = deg_to_rad(v->get<double>());
    }
    if (const json* v = find(obj, "floor_db")) {
        pattern.floor_db = v->get<double>();
    }
    if (!(pattern.width > 0.0)) {
        throw std::invalid_argument("pattern.width_deg must be positive");
    }
    if (!(pattern.floor_db > 0.0)) {
        throw std::invalid_argument("pattern.floor_db must be positive");
    }
}

void parse_budget(const json& obj, LinkBudget& budget) {
    reject_unknown_keys(obj,
                        {"tx_power_dbm", "noise_dbm", "tx_ris_distance_m",
                         "pathloss_intercept_db", "pathloss_slope"},
                        "budget");
    if (const json* v = find(obj, "tx_power_dbm")) {
        budget.tx_power_dbm = v->get<double>();
    }
    if (const json* v = find(obj, "noise_dbm")) {
        budget.noise_dbm = v->get<double>();
    }
    if (const json* v = find(obj, "tx_ris_distance_m")) {
        budget.tx_ris_distance_m = v->get<double>();
    }
    if (const json* v = find(obj, "pathloss_intercept_db")) {
        budget.pathloss_intercept_db = v->get<double>();
    }
    if (const json* v = find(obj, "pathloss_slope")) {
        budget.pathloss_slope = v->get<double>();
    }
    if (!(budget.tx_ris_distance_m > 0.0)) {
        throw std::invalid_argument("budget.tx_ris_distance_m must be positive");
    }
    if (!(budget.pathloss_slope > 0.0)) {
        throw std::invalid_argument("budget.pathloss_slope must be positive");
    }
}

void parse_users(const json& obj, Scenario& scenario) {
    reject_unknown_keys(obj, {"k", "dist_range_m", "angle_range_deg"}, "users");
    if (const json* v = find(obj, "k")) {
        scenario.k_users = v->get<int>();
    }
    if (const json* v = find(obj, "dist_range_m")) {
        const std::vector<double> range = number_array(*v, "users.dist_range_m");
        if (range.size() != 2) {
            throw std::invalid_argument("users.dist_range_m must have exactly two entries");
        }
        scenario.dist_range_m = {range[0], range[1]};
    }
    if (const json* v = find(obj, "angle_range_deg")) {
        const std::vector<double> range = number_array(*v, "users.angle_range_deg");
        if (range.size() != 2) {
            throw std::invalid_argument("users.angle_range_deg must have exactly two entries");
        }
        scenario.angle_range = {deg_to_rad(range[0]), deg_to_rad(range[1])};
    }
    if (scenario.k_users < 1) {
        throw std::invalid_argument("users.k must be at least 1");
    }
    if (!(scenario.dist_range_m[0] > 0.0) || scenario.dist_range_m[0] > scenario.dist_range_m[1]) {
        throw std::invalid_argument("users.dist_range_m must be positive and ordered");
    }
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (scenario.angle_range[0] > scenario.angle_range[1] ||
        scenario.angle_range[0] < -half_pi || scenario.angle_range[1] > half_pi) {
        throw std::invalid_argument("users.angle_range_deg must be ordered within [-90, 90]");
    }
}

}  // namespace

Scenario parse_scenario_json(const std::string& text) {
    const json root = json::parse(text);
    if (!root.is_object()) {
        throw std::invalid_argument("scenario file must be a JSON object");
    }
    reject_unknown_keys(root, {"geometry", "pattern", "budget", "users", "scheme", "seed"},
                        "scenario");
    Scenario scenario;
    if (const json* v = find(root, "geometry")) {
        parse_geometry(*v, scenario.geom);
    }
    if (const json* v = find(root, "pattern")) {
        parse_pattern(*v, scenario.pattern);
    }
    if (const json* v = find(root, "budget")) {
        parse_budget(*v, scenario.budget);
    }
    if (const json* v = find(root, "users")) {
        parse_users(*v, scenario);
    }
    if (const json* v = find(root, "scheme")) {
        scenario.scheme = scheme_from_name(v->get<std::string>());
    }
    if (const json* v = find(root, "seed")) {
        scenario.seed = v->get<std::uint64_t>();
    }
    return scenario;
}

Scenario load_scenario_json(const std::filesystem::path& path) {
    return parse_scenario_json(read_text_file(path));
}

SchemeSummary summarize(Scheme scheme, const CdfCurve& curve) {
    return SchemeSummary{scheme, curve.fraction_above(2.0), curve.fraction_below(1.0),
                         curve.max(), curve.median()};
}

std::string summary_to_json(const SchemeSummary& summary) {
    std::string out = "{\n";
    out += "  \"fraction_above_2\": " + format_sig(summary.fraction_above_2, 17) + ",\n";
    out += "  \"fraction_below_1\": " + format_sig(summary.fraction_below_1, 17) + ",\n";
    out += "  \"max_se\": " + format_sig(summary.max_se, 17) + ",\n";
    out += "  \"median_se\": " + format_sig(summary.median_se, 17) + ",\n";
    out += "  \"scheme\": \"" + scheme_name(summary.scheme) + "\"\n";
    out += "}\n";
    return out;
}

std::string cdf_to_csv(const CdfCurve& curve) {
    std::string out = "se_bps_hz,cdf_fraction\n";
    for (std::size_t i = 0; i < curve.sorted_values.size(); ++i) {
        out += format_sig(curve.sorted_values[i], 9);
        out += ',';
        out += format_sig(curve.fractions[i], 9);
        out += '\n';
    }
    return out;
}

std::string pattern_to_csv(const std::vector<PatternRow>& rows) {
    std::string out = "angle_deg,pdaf_db,element_db,total_db\n";
    for (const PatternRow& row : rows) {
        out += format_sig(row.angle_deg, 9);
        out += ',';
        out += format_sig(row.pdaf_db, 9);
        out += ',';
        out += format_sig(row.element_db, 9);
        out += ',';
        out += format_sig(row.total_db, 9);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed writing '" + path.string() + "'");
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace ris
