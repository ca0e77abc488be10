#include "mkdvb/harness.hpp"

#include "mkdvb/errors.hpp"
#include "mkdvb/functionals.hpp"
#include "mkdvb/jfunctional.hpp"
#include "mkdvb/spacetime.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

namespace mkdvb {

using ordered_json = nlohmann::ordered_json;

std::string kind_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::Evolve: return "evolve";
        case ExperimentKind::Conserve: return "conserve";
        case ExperimentKind::InviscidSweep: return "inviscid-sweep";
        case ExperimentKind::Scaling: return "scaling";
        case ExperimentKind::Miura: return "miura";
        case ExperimentKind::JBounds: return "jbounds";
        case ExperimentKind::LinFs: return "linfs";
        case ExperimentKind::Strichartz: return "strichartz";
    }
    return "?";
}

ExperimentKind kind_from_name(const std::string& name) {
    for (auto k : {ExperimentKind::Evolve, ExperimentKind::Conserve,
                   ExperimentKind::InviscidSweep, ExperimentKind::Scaling,
                   ExperimentKind::Miura, ExperimentKind::JBounds, ExperimentKind::LinFs,
                   ExperimentKind::Strichartz})
        if (kind_name(k) == name) return k;
    throw ParameterError("unknown experiment kind: " + name);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

void check_keys(const ordered_json& obj, const std::vector<std::string>& allowed,
                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw ParameterError("unknown config key '" + it.key() + "' in " + where);
}

} // namespace

ExperimentConfig parse_config(const std::string& text, const std::string& fallback_kind) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParameterError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParameterError("config must be a JSON object");
    check_keys(doc,
               {"kind", "grid", "equation", "data", "T", "dt", "record_every", "eps_list",
                "lambda_list", "s", "trials", "k_list", "window", "drop_largest", "out",
                "seed", "workers"},
               "top level");
    ExperimentConfig cfg;
    if (doc.contains("kind")) cfg.kind = kind_from_name(doc["kind"].get<std::string>());
    else if (!fallback_kind.empty()) cfg.kind = kind_from_name(fallback_kind);

    if (doc.contains("grid")) {
        const auto& g = doc["grid"];
        check_keys(g, {"L", "N"}, "grid");
        if (g.contains("L")) cfg.length = g["L"].get<double>();
        if (g.contains("N")) cfg.n = g["N"].get<int>();
    } else if (cfg.kind == ExperimentKind::Strichartz) {
        cfg.n = 32768; // high dyadic blocks need a wide frequency lattice
    }
    if (!(cfg.length > 0.0)) throw ParameterError("grid.L must be positive");
    if (cfg.n < 8 || cfg.n % 2 != 0) throw ParameterError("grid.N must be even and >= 8");

    if (doc.contains("equation")) {
        const auto& e = doc["equation"];
        check_keys(e, {"family", "eps", "alpha"}, "equation");
        if (e.contains("family")) cfg.family = family_from_name(e["family"].get<std::string>());
        if (e.contains("eps")) cfg.eps = e["eps"].get<double>();
        if (e.contains("alpha")) cfg.alpha = e["alpha"].get<double>();
    }
    if (cfg.eps < 0.0 || cfg.eps > 1.0) throw ParameterError("equation.eps must be in (0,1] (or 0)");
    if (!(cfg.alpha > 0.0) || cfg.alpha > 1.0) throw ParameterError("equation.alpha must be in (0,1]");
    if (is_dissipative(cfg.family) && cfg.eps == 0.0)
        throw ParameterError("family " + family_name(cfg.family) + " requires eps > 0");
    if (!is_dissipative(cfg.family) && cfg.eps != 0.0)
        throw ParameterError("family " + family_name(cfg.family) +
                             " requires eps = 0 (dissipative eps needs the -b family)");

    if (doc.contains("data")) {
        const auto& d = doc["data"];
        check_keys(d, {"profile", "amplitude", "width", "mode", "band", "seed"}, "data");
        if (d.contains("profile")) cfg.data.profile = d["profile"].get<std::string>();
        if (d.contains("amplitude")) cfg.data.amplitude = d["amplitude"].get<double>();
        if (d.contains("width")) cfg.data.width = d["width"].get<double>();
        if (d.contains("mode")) cfg.data.mode = d["mode"].get<int>();
        if (d.contains("band")) cfg.data.band = d["band"].get<int>();
        if (d.contains("seed")) cfg.data.seed = d["seed"].get<std::uint64_t>();
    }

    if (doc.contains("T")) cfg.T = doc["T"].get<double>();
    if (!(cfg.T > 0.0)) throw ParameterError("T must be positive");
    if (doc.contains("dt")) cfg.dt = doc["dt"].get<double>();
    if (cfg.dt < 0.0) throw ParameterError("dt must be non-negative (0 = automatic)");
    if (doc.contains("record_every")) cfg.record_every = doc["record_every"].get<int>();
    if (cfg.record_every < 1) throw ParameterError("record_every must be positive");

    if (doc.contains("eps_list"))
        cfg.eps_list = doc["eps_list"].get<std::vector<double>>();
    else if (cfg.kind == ExperimentKind::LinFs)
        cfg.eps_list = {0.0, 1e-2, 1.0};
    for (double e : cfg.eps_list)
        if (e < 0.0 || e > 1.0) throw ParameterError("eps_list values must be in [0,1]");

    if (doc.contains("lambda_list"))
        cfg.lambda_list = doc["lambda_list"].get<std::vector<double>>();
    for (double l : cfg.lambda_list)
        if (!(l > 0.0) || l > 1.0) throw ParameterError("lambda_list values must be in (0,1]");

    if (doc.contains("s")) cfg.sobolev_s = doc["s"].get<double>();
    if (doc.contains("trials")) cfg.trials = doc["trials"].get<int>();
    if (cfg.trials < 1) throw ParameterError("trials must be positive");
    if (doc.contains("k_list")) cfg.k_list = doc["k_list"].get<std::vector<int>>();
    if (doc.contains("window")) cfg.window = doc["window"].get<double>();
    if (!(cfg.window > 0.0)) throw ParameterError("window must be positive");
    if (doc.contains("drop_largest")) cfg.drop_largest = doc["drop_largest"].get<int>();
    if (cfg.drop_largest < 0) throw ParameterError("drop_largest must be non-negative");
    if (doc.contains("out")) cfg.out_dir = doc["out"].get<std::string>();
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("workers")) cfg.workers = doc["workers"].get<int>();
    if (const char* env = std::getenv("MKDVB_WORKERS")) cfg.workers = std::atoi(env);
    if (cfg.workers < 1) cfg.workers = 1;
    return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
    ordered_json doc;
    doc["kind"] = kind_name(cfg.kind);
    doc["grid"] = {{"L", cfg.length}, {"N", cfg.n}};
    doc["equation"] = {{"family", family_name(cfg.family)}, {"eps", cfg.eps}, {"alpha", cfg.alpha}};
    doc["data"] = {{"profile", cfg.data.profile}, {"amplitude", cfg.data.amplitude},
                   {"width", cfg.data.width},     {"mode", cfg.data.mode},
                   {"band", cfg.data.band},       {"seed", cfg.data.seed}};
    doc["T"] = cfg.T;
    doc["dt"] = cfg.dt;
    doc["record_every"] = cfg.record_every;
    doc["eps_list"] = cfg.eps_list;
    doc["lambda_list"] = cfg.lambda_list;
    doc["s"] = cfg.sobolev_s;
    doc["trials"] = cfg.trials;
    doc["k_list"] = cfg.k_list;
    doc["window"] = cfg.window;
    doc["drop_largest"] = cfg.drop_largest;
    // out_dir deliberately omitted: reports must not depend on where they land.
    doc["seed"] = cfg.seed;
    doc["workers"] = cfg.workers;
    return doc.dump(2);
}

namespace {

SolverConfig solver_config(const ExperimentConfig& cfg) {
    SolverConfig sc;
    sc.dt = cfg.dt;
    sc.record_every = cfg.record_every;
    return sc;
}

// Truncation-error audit: largest |u| over the outer 5% of the box.
double boundary_certificate(const RealField& u) {
    int n = u.grid.n;
    int edge = std::max(1, n / 20);
    double m = 0.0;
    for (int i = 0; i < edge; ++i) {
        m = std::max(m, std::abs(u.samples[i]));
        m = std::max(m, std::abs(u.samples[n - 1 - i]));
    }
    return m;
}

void add_long(RunReport& r, const std::string& series, double x, double y) {
    r.long_rows.push_back({series, format_double(x), format_double(y)});
}

double slope_fit(const std::vector<double>& eps, const std::vector<double>& err) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t n = eps.size();
    for (size_t i = 0; i < n; ++i) {
        double x = std::log(eps[i]), y = std::log(err[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void run_evolve(const ExperimentConfig& cfg, RunReport& report) {
    PeriodicGrid grid = make_grid(cfg.length, cfg.n);
    RealField phi = make_profile(grid, cfg.data);
    EquationSpec eq = EquationSpec::make(cfg.family, cfg.eps, cfg.alpha);
    Trajectory traj = evolve(phi, eq, cfg.T, solver_config(cfg));
    report.step_count = static_cast<long>(traj.step_times.size()) - 1;

    Table t{"trajectory",
            {"time", "l2_norm", "h1_norm", "sup_abs_u", "boundary_max_abs_u"},
            {}};
    for (size_t i = 0; i < traj.times.size(); ++i) {
        SpectralField s = forward_transform(traj.fields[i]);
        double sup = 0.0;
        for (double v : traj.fields[i].samples) sup = std::max(sup, std::abs(v));
        t.rows.push_back({format_double(traj.times[i]), format_double(sobolev_norm(s, 0.0)),
                          format_double(sobolev_norm(s, 1.0)), format_double(sup),
                          format_double(boundary_certificate(traj.fields[i]))});
        add_long(report, "l2_norm", traj.times[i], sobolev_norm(s, 0.0));
        add_long(report, "h1_norm", traj.times[i], sobolev_norm(s, 1.0));
    }
    report.tables.push_back(std::move(t));

    if (cfg.eps > 0.0) {
        Table b{"dissipation_budget", {"sigma", "budget"}, {}};
        for (double sig : {cfg.alpha, 2.0 * cfg.alpha, 2.0 * cfg.alpha + 1.0})
            b.rows.push_back({format_double(sig), format_double(dissipation_budget(traj, sig))});
        report.tables.push_back(std::move(b));
    }
}

void run_conserve(const ExperimentConfig& cfg, RunReport& report) {
    PeriodicGrid grid = make_grid(cfg.length, cfg.n);
    RealField phi = make_profile(grid, cfg.data);
    EquationSpec eq = EquationSpec::make(cfg.family, cfg.eps, cfg.alpha);
    Trajectory traj = evolve(phi, eq, cfg.T, solver_config(cfg));
    report.step_count = static_cast<long>(traj.step_times.size()) - 1;

    bool cubic = is_cubic(cfg.family);
    std::vector<std::pair<std::string, double (*)(const RealField&)>> funcs;
    funcs.emplace_back("l2_mass", +[](const RealField& u) { return l2_norm(u); });
    if (cubic) {
        funcs.emplace_back("h1", &h1_mkdv);
        funcs.emplace_back("h2p", &h2p_mkdv);
    } else {
        funcs.emplace_back("h1", &h1_kdv);
    }

    Table t{"conservation", {"time"}, {}};
    std::vector<FunctionalReport> reports;
    for (auto& [name, fn] : funcs) {
        t.columns.push_back(name);
        reports.push_back(functional_along(traj, name, fn));
    }
    for (size_t i = 0; i < traj.times.size(); ++i) {
        std::vector<std::string> row{format_double(traj.times[i])};
        for (auto& fr : reports) {
            row.push_back(format_double(fr.values[i]));
            add_long(report, fr.name, traj.times[i], fr.values[i]);
        }
        t.rows.push_back(std::move(row));
    }
    report.tables.push_back(std::move(t));

    Table d{"drift", {"functional", "drift"}, {}};
    for (auto& fr : reports) d.rows.push_back({fr.name, format_double(fr.drift)});
    report.tables.push_back(std::move(d));
}

void run_inviscid_sweep(const ExperimentConfig& cfg, RunReport& report) {
    PeriodicGrid grid = make_grid(cfg.length, cfg.n);
    RealField phi = make_profile(grid, cfg.data);
    SolverConfig sc = solver_config(cfg);
    Trajectory ref = evolve(phi, EquationSpec::make(Family::MKDV), cfg.T, sc);
    report.step_count = static_cast<long>(ref.step_times.size()) - 1;

    std::vector<double> ok_eps, ok_err;
    std::vector<std::pair<double, std::string>> cells; // eps -> error or "aborted"
    for (double eps : cfg.eps_list) {
        try {
            Trajectory traj = evolve(phi, EquationSpec::make(Family::MKDV_B, eps, cfg.alpha),
                                     cfg.T, sc);
            double err = 0.0;
            for (size_t k = 0; k < traj.fields.size(); ++k) {
                RealField diff = traj.fields[k];
                for (int i = 0; i < grid.n; ++i) diff.samples[i] -= ref.fields[k].samples[i];
                err = std::max(err, sobolev_norm(forward_transform(diff), cfg.sobolev_s));
            }
            cells.emplace_back(eps, format_double(err));
            ok_eps.push_back(eps);
            ok_err.push_back(err);
            add_long(report, "sup_Hs_error", eps, err);
        } catch (const BlowUpError& b) {
            cells.emplace_back(eps, "aborted");
            report.status = "partial";
            report.notes.push_back("member eps=" + format_double(eps) +
                                   " aborted: " + b.what());
        }
    }

    std::string slope_cell = "undefined";
    if (ok_eps.size() >= 4 &&
        std::all_of(ok_err.begin(), ok_err.end(), [](double e) { return e > 0.0; })) {
        std::vector<double> fe = ok_eps, fr = ok_err;
        for (int d = 0; d < cfg.drop_largest && fe.size() > 2; ++d) {
            size_t imax = std::max_element(fe.begin(), fe.end()) - fe.begin();
            fe.erase(fe.begin() + imax);
            fr.erase(fr.begin() + imax);
        }
        slope_cell = format_double(slope_fit(fe, fr));
    }

    for (size_t i = 0; i + 1 < ok_eps.size(); ++i) {
        bool dec = ok_eps[i] > ok_eps[i + 1];
        double hi = dec ? ok_err[i] : ok_err[i + 1];
        double lo = dec ? ok_err[i + 1] : ok_err[i];
        if (lo > hi) {
            report.notes.push_back("warning: error not monotone in eps");
            break;
        }
    }

    Table t{"sweep", {"epsilon", "sup_Hs_error", "slope_fit"}, {}};
    for (auto& [eps, cell] : cells) t.rows.push_back({format_double(eps), cell, slope_cell});
    report.tables.push_back(std::move(t));
}

void run_scaling(const ExperimentConfig& cfg, RunReport& report) {
    PeriodicGrid grid = make_grid(cfg.length, cfg.n);
    RealField phi = make_profile(grid, cfg.data);
    Table t{"scaling", {"lambda", "discrepancy"}, {}};
    for (double lam : cfg.lambda_list) {
        double d = scaling_check(phi, lam, cfg.eps, cfg.alpha, cfg.T, solver_config(cfg),
                                 is_cubic(cfg.family) ? Family::MKDV_B : Family::KDV_B);
        t.rows.push_back({format_double(lam), format_double(d)});
        add_long(report, "scaling_discrepancy", lam, d);
    }
    report.tables.push_back(std::move(t));
}

Trajectory subsample(const Trajectory& traj, int stride) {
    Trajectory out;
    out.equation = traj.equation;
    for (size_t i = 0; i < traj.fields.size(); i += stride) {
        out.times.push_back(traj.times[i]);
        out.fields.push_back(traj.fields[i]);
    }
    return out;
}

void run_miura(const ExperimentConfig& cfg, RunReport& report) {
    PeriodicGrid grid = make_grid(cfg.length, cfg.n);
    RealField phi = make_profile(grid, cfg.data);
    SolverConfig sc = solver_config(cfg);
    sc.record_every = 1;
    Trajectory traj = evolve(phi, EquationSpec::make(Family::MKDV), cfg.T, sc);
    report.step_count = static_cast<long>(traj.step_times.size()) - 1;

    Table t{"miura", {"snapshot_dt", "kdv_residual", "ratio_to_previous"}, {}};
    double prev = 0.0;
    for (int stride : {4, 2, 1}) {
        Trajectory sub = subsample(traj, stride);
        double res = miura_consistency(sub);
        double h = sub.times[1] - sub.times[0];
        std::string ratio = prev > 0.0 ? format_double(prev / res) : "n/a";
        t.rows.push_back({format_double(h), format_double(res), ratio});
        add_long(report, "miura_residual", h, res);
        prev = res;
    }
    report.tables.push_back(std::move(t));
}

void run_jbounds(const ExperimentConfig& cfg, RunReport& report) {
    struct CaseSpec {
        JCase c;
        std::array<int, 4> k, j;
    };
    // j4 chosen so the resonance shift Omega lands inside the fourth block;
    // far-separated k (case d) forces high modulation, ~ 3*2^{k2+2*k3}.
    std::vector<CaseSpec> sweep = {
        {JCase::A, {0, 1, 2, 2}, {0, 0, 0, 0}},
        {JCase::A, {1, 2, 3, 3}, {0, 0, 0, 8}},
        {JCase::B, {0, 1, 6, 6}, {0, 0, 0, 13}},
        {JCase::B, {0, 2, 7, 7}, {0, 0, 0, 15}},
        {JCase::C, {1, 1, 1, 2}, {0, 0, 0, 0}},
        {JCase::C, {2, 3, 4, 4}, {0, 0, 0, 9}},
        {JCase::D, {0, 5, 10, 10}, {0, 0, 0, 26}},
        {JCase::D, {0, 6, 11, 11}, {0, 0, 0, 29}},
    };
    auto case_name = [](JCase c) {
        switch (c) {
            case JCase::A: return "a";
            case JCase::B: return "b";
            case JCase::C: return "c";
            case JCase::D: return "d";
        }
        return "?";
    };

    Table t{"jbounds",
            {"case", "k1", "k2", "k3", "k4", "j1", "j2", "j3", "j4", "max_ratio"},
            {}};
    Table p{"jpaths", {"case", "tuple", "direct", "convolution", "rel_diff"}, {}};
    int tuple_id = 0;
    for (const auto& cs : sweep) {
        BoundReport br = check_J_bound(cs.c, cs.k, cs.j, cfg.trials, cfg.seed);
        std::vector<std::string> row{case_name(cs.c)};
        for (int v : cs.k) row.push_back(std::to_string(v));
        for (int v : cs.j) row.push_back(std::to_string(v));
        row.push_back(format_double(br.max_ratio));
        t.rows.push_back(std::move(row));

        for (int rep = 0; rep < 2; ++rep) {
            BlockTuple tuple =
                make_random_tuple(cs.k, cs.j, cfg.seed * 7919ULL + tuple_id * 104729ULL);
            double direct = brute_force_J(tuple);
            double conv = convolution_J(tuple);
            double denom = std::max(std::abs(direct), std::abs(conv));
            double rel = denom > 0.0 ? std::abs(direct - conv) / denom : 0.0;
            p.rows.push_back({case_name(cs.c), std::to_string(tuple_id),
                              format_double(direct), format_double(conv),
                              format_double(rel)});
            ++tuple_id;
        }
    }
    report.tables.push_back(std::move(t));
    report.tables.push_back(std::move(p));
}

void run_linfs(const ExperimentConfig& cfg, RunReport& report) {
    PeriodicGrid grid = make_grid(cfg.length, cfg.n);
    RealField phi = make_profile(grid, cfg.data);
    LinearBoundReport lb =
        check_linear_fs_bound(forward_transform(phi), cfg.eps_list, cfg.alpha, cfg.sobolev_s);
    Table t{"linfs", {"epsilon", "fs_to_hs_ratio"}, {}};
    for (size_t i = 0; i < lb.eps_values.size(); ++i) {
        t.rows.push_back(
            {format_double(lb.eps_values[i]), format_double(lb.ratios[i])});
        add_long(report, "fs_to_hs_ratio", lb.eps_values[i], lb.ratios[i]);
    }
    report.tables.push_back(std::move(t));
    if (!lb.uniform) report.notes.push_back("warning: ratio spread across eps exceeds 10x");
}

void run_strichartz(const ExperimentConfig& cfg, RunReport& report) {
    PeriodicGrid grid = make_grid(cfg.length, cfg.n);
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Table t{"strichartz", {"k", "l6_ratio"}, {}};
    for (int k : cfg.k_list) {
        // Random Hermitian data on the dyadic annulus |xi| ~ 2^k.
        SpectralField f{grid, std::vector<std::complex<double>>(grid.n, 0.0)};
        double lo = std::exp2(k - 1), hi = std::exp2(k + 1);
        for (int m = 1; m < grid.n / 2; ++m) {
            double xi = 2.0 * M_PI * m / grid.length;
            if (xi < lo || xi > hi) continue;
            std::complex<double> c(gauss(rng), gauss(rng));
            f.coeff[m] = c;
            f.coeff[grid.n - m] = std::conj(c);
        }
        auto ratio = airy_l6_ratio(k, f, cfg.window);
        t.rows.push_back({std::to_string(k),
                          ratio ? format_double(*ratio) : std::string("skipped")});
        if (ratio) add_long(report, "l6_ratio", k, *ratio);
    }
    report.tables.push_back(std::move(t));
}

} // namespace

RunReport run(const ExperimentConfig& cfg) {
    RunReport report;
    report.config_json = config_to_json(cfg);
    switch (cfg.kind) {
        case ExperimentKind::Evolve: run_evolve(cfg, report); break;
        case ExperimentKind::Conserve: run_conserve(cfg, report); break;
        case ExperimentKind::InviscidSweep: run_inviscid_sweep(cfg, report); break;
        case ExperimentKind::Scaling: run_scaling(cfg, report); break;
        case ExperimentKind::Miura: run_miura(cfg, report); break;
        case ExperimentKind::JBounds: run_jbounds(cfg, report); break;
        case ExperimentKind::LinFs: run_linfs(cfg, report); break;
        case ExperimentKind::Strichartz: run_strichartz(cfg, report); break;
    }
    return report;
}

std::vector<std::string> emit_tables(const RunReport& report, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw DataError("emit_tables: cannot create directory " + dir);

    std::vector<std::string> written;
    auto write_file = [&](const std::string& name, const std::string& body) {
        fs::path path = fs::path(dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw DataError("emit_tables: cannot write " + path.string());
        out << body;
        written.push_back(path.string());
    };

    ordered_json manifest;
    manifest["schema_version"] = "1";
    manifest["status"] = report.status;
    manifest["step_count"] = report.step_count;
    manifest["config"] = ordered_json::parse(report.config_json);
    manifest["notes"] = report.notes;
    std::vector<std::string> table_names;
    for (const auto& t : report.tables) table_names.push_back(t.name + ".csv");
    manifest["tables"] = table_names;
    write_file("manifest.json", manifest.dump(2) + "\n");

    for (const auto& t : report.tables) {
        std::string body;
        for (size_t c = 0; c < t.columns.size(); ++c)
            body += (c ? "," : "") + t.columns[c];
        body += "\n";
        for (const auto& row : t.rows) {
            for (size_t c = 0; c < row.size(); ++c) body += (c ? "," : "") + row[c];
            body += "\n";
        }
        write_file(t.name + ".csv", body);
    }

    if (!report.long_rows.empty()) {
        std::string body = "series,x,y\n";
        for (const auto& row : report.long_rows)
            body += row[0] + "," + row[1] + "," + row[2] + "\n";
        write_file("long.csv", body);
    }
    return written;
}

} // namespace mkdvb
