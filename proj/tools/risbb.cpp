// risbb: dual-polarized RIS broad-beam toolkit.
//
// Subcommands: verify | acf | pattern | expand | montecarlo | golay gen
// Exit codes:  0 success, 1 input error, 2 verification failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ris/io.hpp"

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

int cmd_verify(const std::string& pair_path, double tol) {
    const ris::PairDocument doc = ris::load_pair_json(pair_path);
    const ris::DualPolConfig config = doc.to_config();
    const ris::GolayCheck check = ris::golay_check(config.phi_h(), config.phi_v());
    std::printf("length          %zu\n", config.m_per_pol());
    std::printf("offpeak residual %.6e\n", check.offpeak_residual);
    std::printf("peak error       %.6e\n", check.peak_error);
    if (check.within(tol)) {
        std::printf("PASS (tolerance %.3e)\n", tol);
        return 0;
    }
    std::printf("FAIL (tolerance %.3e)\n", tol);
    return 2;
}

int cmd_acf(const std::string& pair_path, const std::string& out_path) {
    const ris::PairDocument doc = ris::load_pair_json(pair_path);
    const ris::DualPolConfig config = doc.to_config();
    const ris::AcfTable r_u = ris::acf(config.phi_h());
    const ris::AcfTable r_v = ris::acf(config.phi_v());

    std::string csv = "lag,u_re,u_im,v_re,v_im,sum_re,sum_im\n";
    for (int lag = -r_u.max_lag(); lag <= r_u.max_lag(); ++lag) {
        const ris::cplx u = r_u.at(lag);
        const ris::cplx v = r_v.at(lag);
        const ris::cplx sum = u + v;
        csv += std::to_string(lag);
        for (double x : {u.real(), u.imag(), v.real(), v.imag(), sum.real(), sum.imag()}) {
            csv += ',';
            csv += ris::format_sig(x, 9);
        }
        csv += '\n';
    }
    ris::write_text_file(out_path, csv);
    std::printf("wrote %s (%d lags)\n", out_path.c_str(), 2 * r_u.max_lag() + 1);
    return 0;
}

int cmd_pattern(const std::string& scenario_path, const std::string& scheme,
                const std::string& config_path, double target_deg, int grid,
                const std::string& out_path) {
    ris::Scenario scenario =
        scenario_path.empty() ? ris::Scenario{} : ris::load_scenario_json(scenario_path);
    if (grid < 2) {
        throw std::invalid_argument("pattern: grid must be at least 2");
    }

    std::optional<ris::DualPolConfig> config;
    std::string label = scheme;
    if (!config_path.empty()) {
        config = ris::load_pair_json(config_path).to_config();
        scenario.geom.m_per_pol = static_cast<int>(config->m_per_pol());
        label = "file";
    } else if (scheme == "broad") {
        config = ris::config_broad(
            ris::golay_for_length(static_cast<std::size_t>(scenario.geom.m_per_pol)));
    } else if (scheme == "closest") {
        config = ris::config_steered(scenario.geom, target_deg / kDegPerRad);
    } else if (scheme == "random") {
        config = ris::config_random(scenario.geom, scenario.seed);
    } else if (scheme != "single") {
        throw std::invalid_argument("pattern: scheme must be single, broad, closest or random");
    }

    const double incident_gain = ris::element_gain_db(scenario.pattern, scenario.geom.incident_angle);
    std::vector<ris::PatternRow> rows;
    rows.reserve(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        const double angle =
            -std::numbers::pi / 2.0 +
            std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid - 1);
        const double element_db = ris::element_gain_db(scenario.pattern, angle);
        double pdaf_db = 0.0;  // a single element has no array factor
        if (config) {
            pdaf_db = 10.0 * std::log10(ris::pdaf(*config, scenario.geom, angle));
        }
        rows.push_back(ris::PatternRow{angle * kDegPerRad, pdaf_db, element_db,
                                       pdaf_db + incident_gain + element_db});
    }
    ris::write_text_file(out_path, ris::pattern_to_csv(rows));
    std::printf("wrote %s (%s, %d angles)\n", out_path.c_str(), label.c_str(), grid);
    return 0;
}

int cmd_expand(const std::string& primary_path, const std::string& pair_path,
               const std::string& out_path, double spacing_wl, double incident_deg, int grid,
               double tol) {
    const ris::DualPolConfig primary = ris::load_pair_json(primary_path).to_config();
    const ris::DualPolConfig pair_config = ris::load_pair_json(pair_path).to_config();

    const auto pair = ris::is_golay(pair_config.phi_h(), pair_config.phi_v());
    if (!pair) {
        const ris::GolayCheck check = ris::golay_check(pair_config.phi_h(), pair_config.phi_v());
        std::fprintf(stderr, "expansion pair is not complementary (offpeak residual %.3e)\n",
                     check.offpeak_residual);
        return 2;
    }

    const ris::ExpandedConfig expanded = ris::expand(primary, *pair);
    const ris::ArrayGeometry geom{static_cast<int>(primary.m_per_pol()), spacing_wl,
                                  incident_deg / kDegPerRad};
    const ris::ExpansionReport report =
        ris::verify_expansion(primary, *pair, expanded, geom, grid, tol);
    std::printf("expanded %zu -> %zu elements per polarization\n", primary.m_per_pol(),
                expanded.config.m_per_pol());
    std::printf("max relative deviation %.6e at %.3f deg\n", report.max_rel_deviation,
                report.worst_angle * kDegPerRad);
    std::printf("max cross term         %.6e\n", report.max_cross_term);
    if (!report.ok) {
        std::fprintf(stderr, "expansion verification FAILED (tolerance %.3e)\n", tol);
        return 2;
    }

    ris::PairDocument doc = ris::PairDocument::from_config(expanded.config);
    doc.meta = ris::PairDocument::Meta{expanded.primary_len, expanded.golay_len, "expand"};
    doc.verification = ris::PairDocument::Verification{grid, report.max_rel_deviation,
                                                       report.max_cross_term, tol};
    ris::save_pair_json(out_path, doc);
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

int cmd_montecarlo(const std::string& scenario_path, const std::string& prefix,
                   const std::string& scheme, unsigned threads) {
    const ris::Scenario base =
        scenario_path.empty() ? ris::Scenario{} : ris::load_scenario_json(scenario_path);
    std::vector<ris::Scheme> schemes;
    if (scheme == "all") {
        schemes = {ris::Scheme::Broad, ris::Scheme::Closest, ris::Scheme::Random};
    } else if (scheme.empty()) {
        schemes = {base.scheme};
    } else {
        schemes = {ris::scheme_from_name(scheme)};
    }

    for (ris::Scheme s : schemes) {
        ris::Scenario scenario = base;
        scenario.scheme = s;
        const ris::CdfCurve curve = ris::run(scenario, threads);
        const ris::SchemeSummary summary = ris::summarize(s, curve);
        const std::string name = ris::scheme_name(s);
        ris::write_text_file(prefix + "-" + name + ".csv", ris::cdf_to_csv(curve));
        ris::write_text_file(prefix + "-" + name + "-summary.json",
                             ris::summary_to_json(summary));
        std::printf("%-8s above 2 bps/Hz: %.3f  below 1 bps/Hz: %.3f  max %.3f  median %.3f\n",
                    name.c_str(), summary.fraction_above_2, summary.fraction_below_1,
                    summary.max_se, summary.median_se);
    }
    return 0;
}

int cmd_golay_gen(std::size_t length, const std::string& out_path) {
    const ris::GolayPair pair = ris::golay_for_length(length);
    ris::save_pair_json(out_path,
                        ris::PairDocument::from_config(ris::DualPolConfig(pair.u(), pair.v())));
    std::printf("wrote %s (length %zu, residual %.3e)\n", out_path.c_str(), pair.length(),
                pair.residual());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual-polarized RIS broad-beam toolkit"};
    app.require_subcommand(1);

    std::string pair_path;
    std::string primary_path;
    std::string scenario_path;
    std::string config_path;
    std::string out_path;
    std::string scheme;
    double tol = ris::kGolayTol;
    double target_deg = 0.0;
    double spacing_wl = 0.5;
    double incident_deg = 0.0;
    int grid = 2048;
    unsigned threads = 0;
    std::size_t length = 0;

    CLI::App* verify = app.add_subcommand("verify", "Check a configuration pair for complementarity");
    verify->add_option("pair", pair_path, "pair JSON file")->required();
    verify->add_option("--tol", tol, "residual tolerance");

    CLI::App* acf = app.add_subcommand("acf", "Dump per-lag autocorrelations of a pair");
    acf->add_option("pair", pair_path, "pair JSON file")->required();
    acf->add_option("-o,--out", out_path, "output CSV")->required();

    CLI::App* pattern = app.add_subcommand("pattern", "Sweep the radiation pattern over departure angles");
    pattern->add_option("scenario", scenario_path, "scenario JSON file (defaults if omitted)");
    pattern->add_option("--scheme", scheme, "single | broad | closest | random")
        ->default_val("broad");
    pattern->add_option("--config", config_path, "sweep an explicit pair file instead");
    pattern->add_option("--target-deg", target_deg, "steering target for the closest scheme");
    pattern->add_option("--grid", grid, "number of angles");
    pattern->add_option("-o,--out", out_path, "output CSV")->required();

    CLI::App* expand = app.add_subcommand("expand", "Expand a configuration with a complementary pair");
    expand->add_option("primary", primary_path, "primary configuration JSON")->required();
    expand->add_option("pair", pair_path, "complementary pair JSON")->required();
    expand->add_option("-o,--out", out_path, "output configuration JSON")->required();
    expand->add_option("--spacing-wl", spacing_wl, "element spacing in wavelengths");
    expand->add_option("--incident-deg", incident_deg, "incidence angle for verification");
    expand->add_option("--grid", grid, "verification grid size");
    expand->add_option("--tol", tol, "verification tolerance");

    CLI::App* montecarlo = app.add_subcommand("montecarlo", "Spectral-efficiency CDF experiment");
    montecarlo->add_option("scenario", scenario_path, "scenario JSON file (defaults if omitted)");
    montecarlo->add_option("-o,--out", out_path, "output file prefix")->required();
    montecarlo->add_option("--scheme", scheme, "broad | closest | random | all (default: all)")
        ->default_val("all");
    montecarlo->add_option("--threads", threads, "worker threads (0 = automatic)");

    CLI::App* golay = app.add_subcommand("golay", "Complementary-pair utilities");
    golay->require_subcommand(1);
    CLI::App* gen = golay->add_subcommand("gen", "Construct a pair of a given length");
    gen->add_option("--length", length, "elements per polarization")->required();
    gen->add_option("-o,--out", out_path, "output pair JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(pair_path, tol);
        }
        if (acf->parsed()) {
            return cmd_acf(pair_path, out_path);
        }
        if (pattern->parsed()) {
            return cmd_pattern(scenario_path, scheme, config_path, target_deg, grid, out_path);
        }
        if (expand->parsed()) {
            return cmd_expand(primary_path, pair_path, out_path, spacing_wl, incident_deg, grid,
                              tol);
        }
        if (montecarlo->parsed()) {
            return cmd_montecarlo(scenario_path, out_path, scheme, threads);
        }
        if (golay->parsed() && gen->parsed()) {
            return cmd_golay_gen(length, out_path);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
