#ifndef MKDVB_HARNESS_HPP
#define MKDVB_HARNESS_HPP

#include "mkdvb/equation.hpp"
#include "mkdvb/profiles.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mkdvb {

enum class ExperimentKind {
    Evolve,
    Conserve,
    InviscidSweep,
    Scaling,
    Miura,
    JBounds,
    LinFs,
    Strichartz,
};

std::string kind_name(ExperimentKind k);
ExperimentKind kind_from_name(const std::string& name);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Evolve;
    double length = 64.0 * M_PI;
    int n = 1024;
    Family family = Family::MKDV;
    double eps = 0.0;
    double alpha = 1.0;
    DataSpec data;
    double T = 1.0;
    double dt = 0.0; // 0 -> stability default
    int record_every = 1;
    std::vector<double> eps_list = {1e-1, 1e-2, 1e-3, 1e-4};
    std::vector<double> lambda_list = {1.0, 0.5};
    double sobolev_s = 1.0;
    int trials = 20;
    std::vector<int> k_list = {3, 4, 5, 6, 7};
    double window = 4.0;
    int drop_largest = 0; // drop this many largest-eps points from the slope fit
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    int workers = 1;
};

/// Parse and validate a JSON config document; unknown keys and range
/// violations are reported by name. `fallback_kind`, if non-empty, is
/// used when the document has no "kind" entry (it drives kind-specific
/// defaults, so it must be known before the other sections resolve).
ExperimentConfig parse_config(const std::string& text,
                              const std::string& fallback_kind = "");

std::string config_to_json(const ExperimentConfig& cfg);

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct RunReport {
    std::string config_json; // resolved config echo
    std::string status = "full"; // full | partial
    long step_count = 0;
    std::vector<Table> tables;
    std::vector<std::array<std::string, 3>> long_rows; // (series, x, y)
    std::vector<std::string> notes;
};

RunReport run(const ExperimentConfig& cfg);

/// Writes manifest.json, one <table>.csv per diagnostic, and long.csv.
/// Byte-stable for a fixed config and seed.
std::vector<std::string> emit_tables(const RunReport& report, const std::string& dir);

std::string format_double(double v);

} // namespace mkdvb

#endif
