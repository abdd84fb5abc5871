#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ris/expansion.hpp"
#include "ris/montecarlo.hpp"

namespace ris {

/// On-disk form of a configuration pair: two phase lists in radians, plus
/// optional provenance left by the expansion command. Serialization is
/// canonical (sorted keys, fixed float formatting), so load followed by
/// save reproduces the file byte for byte.
struct PairDocument {
    std::vector<double> phi_h;
    std::vector<double> phi_v;

    struct Meta {
        std::size_t m = 0;
        std::size_t n = 0;
        std::string source;
    };
    std::optional<Meta> meta;

    struct Verification {
        int grid_size = 0;
        double max_rel_deviation = 0.0;
        double max_cross_term = 0.0;
        double tolerance = 0.0;
    };
    std::optional<Verification> verification;

    DualPolConfig to_config() const;
    static PairDocument from_config(const DualPolConfig& config);
};

/// %.{digits}g formatting; digits = 17 round-trips doubles exactly.
std::string format_sig(double value, int digits);

PairDocument parse_pair_json(const std::string& text);
PairDocument load_pair_json(const std::filesystem::path& path);
std::string pair_to_json(const PairDocument& doc);
void save_pair_json(const std::filesystem::path& path, const PairDocument& doc);

/// Strict scenario parser: every field optional with defaults, unknown
/// keys rejected, angles in degrees at this surface only.
Scenario parse_scenario_json(const std::string& text);
Scenario load_scenario_json(const std::filesystem::path& path);

struct SchemeSummary {
    Scheme scheme;
    double fraction_above_2;
    double fraction_below_1;
    double max_se;
    double median_se;
};

SchemeSummary summarize(Scheme scheme, const CdfCurve& curve);
std::string summary_to_json(const SchemeSummary& summary);

std::string cdf_to_csv(const CdfCurve& curve);

struct PatternRow {
    double angle_deg;
    double pdaf_db;
    double element_db;
    double total_db;
};

std::string pattern_to_csv(const std::vector<PatternRow>& rows);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace ris
