// Command-line front end. Usage: bomol <mode> [options]; see README.md.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bomol/centers.hpp"
#include "bomol/corrections.hpp"
#include "bomol/errors.hpp"
#include "bomol/oracle.hpp"
#include "bomol/oscillator.hpp"
#include "bomol/relativistic.hpp"
#include "output.hpp"

using namespace bomol;
using bomol::cli::Json;
using bomol::cli::Table;

namespace {

struct RunConfig {
    std::string mode;
    double m = 1.0;
    double M = 1000.0;
    double lambda = 1.0;
    double hbar = 1.0;
    int levels = 4;
    int level = 0;
    int nz = 64;
    int samples = 200;
    double zmax = 0.0;  // 0: 5 / kappa0
    std::vector<double> ratios;
    std::string format = "csv";
    std::string output;
    std::string plot_dir;
    std::string units = "natural";
};

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string dump_config(const RunConfig& c) {
    std::string s;
    auto kv = [&s](const std::string& k, const std::string& v) { s += k + "=" + v + "\n"; };
    kv("mode", c.mode);
    kv("m", g17(c.m));
    kv("M", g17(c.M));
    kv("lambda", g17(c.lambda));
    kv("hbar", g17(c.hbar));
    kv("levels", std::to_string(c.levels));
    kv("level", std::to_string(c.level));
    kv("nz", std::to_string(c.nz));
    kv("samples", std::to_string(c.samples));
    kv("zmax", g17(c.zmax));
    if (!c.ratios.empty()) {
        std::string r;
        for (std::size_t i = 0; i < c.ratios.size(); ++i) r += (i ? "," : "") + g17(c.ratios[i]);
        kv("ratios", r);
    }
    kv("format", c.format);
    if (!c.output.empty()) kv("output", c.output);
    if (!c.plot_dir.empty()) kv("plot-dir", c.plot_dir);
    kv("units", c.units);
    return s;
}

PhysicalParams physical(const RunConfig& c) {
    PhysicalParams p{c.m, c.M, c.lambda, c.hbar};
    p.validate();
    return p;
}

Json params_json(const RunConfig& c) {
    Json j = Json::object();
    j["m"] = c.m;
    j["M"] = c.M;
    j["lambda"] = c.lambda;
    j["hbar"] = c.hbar;
    j["units"] = c.units;
    return j;
}

struct Result {
    Table table;
    Json extra = Json::object();  // additional JSON members
    std::string summary;
    std::vector<std::pair<std::string, std::string>> plots;  // file name, content
    bool failed_checks = false;
};

Result run_centers(const RunConfig& c) {
    const PhysicalParams p = physical(c);
    const double zmax = c.zmax > 0.0 ? c.zmax : 5.0 / p.kappa0();
    if (c.samples < 2) throw DomainError("centers: need at least two samples");
    Result r;
    r.table.columns = {"z", "kappa", "nu_squared", "E_exact", "E_linear"};
    std::vector<double> xs, ys;
    for (int i = 0; i < c.samples; ++i) {
        const double z = zmax * i / (c.samples - 1);
        const FixedCenterSolution s = solve_fixed_centers(p, z, Parity::even);
        const double e = -s.nu_squared;
        r.table.add({z, s.kappa, s.nu_squared, e, effective_potential_linear(p, z)});
        xs.push_back(z);
        ys.push_back(e);
    }
    r.plots.push_back({"effective_potential.dat",
                       cli::plot_series("effective potential E(z)", xs, ys, {})});
    r.summary = "centers: " + std::to_string(c.samples) + " samples on [0, " + g17(zmax) + "]";
    return r;
}

Result run_spectrum(const RunConfig& c) {
    const PhysicalParams p = physical(c);
    if (c.levels < 1) throw DomainError("spectrum: levels must be >= 1");
    Result r;
    r.table.columns = {"n", "parity", "sigma_n", "deltaE", "C_n", "expect_abs_z", "expect_z2"};
    for (const AiryLevel& lv : spectrum(p, c.levels)) {
        r.table.add({lv.n, to_string(lv.parity), lv.sigma_n, lv.deltaE, lv.C_n, expect_abs_z(lv),
                     expect_z2(lv)});
    }
    r.extra["nu0_squared"] = p.nu0_squared();
    r.extra["slope"] = p.slope();
    r.summary = "spectrum: " + std::to_string(c.levels) + " levels, dE0 = " +
                g17(level(p, 0).deltaE);
    return r;
}

Result run_correct2(const RunConfig& c) {
    const PhysicalParams p = physical(c);
    if (c.levels < 1) throw DomainError("correct2: levels must be >= 1");
    Result r;
    r.table.columns = {"n",       "a_n",     "b_n",      "d_n",
                       "alpha_n", "delta2E", "ordering_ambiguity"};
    for (int i = 0; i < c.levels; ++i) {
        const int n = 2 * i;  // bosonic heavy pair: even levels
        const SecondOrderCoeffs k = second_order_coeffs(n);
        r.table.add({n, k.a_n, k.b_n, k.d_n, k.alpha_n, second_order_energy(p, n),
                     ordering_ambiguity_magnitude(p, n)});
    }
    r.summary = "correct2: alpha_0 = " + g17(second_order_coeffs(0).alpha_n);
    return r;
}

Result run_relativistic(const RunConfig& c) {
    if (c.units != "natural")
        throw DomainError("relativistic mode is defined in natural units only (hbar = c = 1)");
    RelParams rel{c.m, c.M, c.lambda};
    rel.validate();
    const RelBinding b = solve_mu0(rel);
    Result r;
    r.table.columns = {"m", "M", "lambda", "mu0", "slope", "residual"};
    r.table.add({c.m, c.M, c.lambda, b.mu0, b.slope, b.residual});
    Json lv = Json::array();
    for (const AiryLevel& l : rel_spectrum(rel, c.levels))
        lv.push_back({{"n", l.n}, {"parity", to_string(l.parity)}, {"sigma_n", l.sigma_n},
                      {"deltaE", l.deltaE}});
    r.extra["levels"] = lv;

    const double zmax = c.zmax > 0.0 ? c.zmax : 0.5 / c.m;
    std::vector<double> xs, ye, yl;
    for (int i = 0; i < c.samples; ++i) {
        const double z = zmax * i / (c.samples - 1);
        xs.push_back(z);
        ye.push_back(mu_exact(rel, z));
        yl.push_back(b.mu0 + b.slope * z);
    }
    r.plots.push_back({"mu_exact.dat", cli::plot_series("mu(z) exact", xs, ye, {})});
    r.plots.push_back({"mu_linear.dat", cli::plot_series("mu(z) linear", xs, yl, {})});
    r.summary = "relativistic: mu0 = " + g17(b.mu0) + ", slope = " + g17(b.slope);
    return r;
}

Result run_validate(const RunConfig& c) {
    const PhysicalParams p = physical(c);
    Result r;
    r.table.columns = {"check", "value", "reference", "tolerance", "pass"};
    int failed = 0;
    auto check = [&](const std::string& name, double v, double ref, double tol) {
        const bool ok = std::fabs(v - ref) <= tol * std::fabs(ref);
        if (!ok) ++failed;
        r.table.add({name, v, ref, tol, ok});
    };
    check("fixed_centers_z0", solve_fixed_centers(p, 0.0, Parity::even).nu_squared,
          p.nu0_squared(), 1e-12);
    {
        const double h = 1e-4 / p.kappa0();
        auto d = [&](double hh) {
            return (effective_potential_exact(p, hh) - effective_potential_exact(p, 0.0)) / hh;
        };
        const double d1 = d(h), d2 = d(h / 2), d3 = d(h / 4);
        const double r1 = 2 * d2 - d1, r2 = 2 * d3 - d2;
        check("linear_slope", (4 * r2 - r1) / 3, p.slope(), 1e-8);
    }
    {
        const AiryLevel lv = level(p, 0);
        const GridSpec g{{(std::fabs(lv.sigma_n) + 14.0) / lv.beta}, {2001}};
        const double s = p.slope();
        auto V = [s](double z) { return s * std::fabs(z); };
        check("airy_level_0_grid", solve_1d_grid(V, p.mu(), p.hbar, g, 1).energies[0], lv.deltaE,
              1e-3);
    }
    check("fixed_centers_grid_z1",
          solve_fixed_centers_grid(p, 1.0 / p.kappa_single(),
                                   default_centers_grid(p, 1.0 / p.kappa_single())),
          effective_potential_exact(p, 1.0 / p.kappa_single()), 1e-3);
    check("b0_over_a0", coeff_b(0) / coeff_a(0), 4.0 / 3.0, 1e-10);
    r.failed_checks = failed > 0;
    r.summary = "validate: " + std::to_string(r.table.rows.size() - failed) + "/" +
                std::to_string(r.table.rows.size()) + " checks passed";
    return r;
}

Result run_scaling(const RunConfig& c) {
    const PhysicalParams p = physical(c);
    const std::vector<double> ratios =
        c.ratios.empty() ? std::vector<double>{100, 200, 400, 800} : c.ratios;
    const ScalingReport rep = scaling_study(p, ratios, c.nz);
    Result r;
    r.table.columns = {"mass_ratio", "E_exact", "E_coarse", "E_fine",  "E_bo1",
                       "E_bo2",      "deltaE0", "converged"};
    std::vector<double> x, e1, e2, err;
    for (const ScalingRow& row : rep.rows) {
        r.table.add({row.mass_ratio, row.E_exact, row.E_coarse, row.E_fine, row.E_bo1, row.E_bo2,
                     row.deltaE0, row.converged});
        PhysicalParams q = p;
        q.M = row.mass_ratio * p.m;
        const double nu0_sq = q.nu0_squared();
        x.push_back(q.mass_ratio());
        e1.push_back(std::fabs(row.E_exact - row.E_bo1) / nu0_sq);
        e2.push_back(std::fabs(row.E_exact - row.E_bo2) / nu0_sq);
        err.push_back(std::fabs(row.E_exact - row.E_fine) / nu0_sq);
        if (!row.converged)
            std::fprintf(stderr, "warning: grid change at M/m = %g is not small next to the "
                                 "second-order residual\n", row.mass_ratio);
        std::fprintf(stderr, "M/m = %g: coarse %.12g, fine %.12g, extrapolated %.12g\n",
                     row.mass_ratio, row.E_coarse, row.E_fine, row.E_exact);
    }
    Json fe = Json::object();
    for (const auto& [k, v] : rep.fitted_exponents) fe[k] = v;
    r.extra["fitted_exponents"] = fe;
    r.extra["nz"] = c.nz;
    r.plots.push_back({"bo1_error.dat", cli::plot_series("|E_exact - E_bo1| / nu0^2 vs m/mu", x,
                                                         e1, err)});
    r.plots.push_back({"bo2_error.dat", cli::plot_series("|E_exact - E_bo2| / nu0^2 vs m/mu", x,
                                                         e2, err)});
    r.summary = "scaling: exponents bo1 " + g17(rep.fitted_exponents.at("bo1_error")) +
                ", bo2 " + g17(rep.fitted_exponents.at("bo2_error"));
    return r;
}

Result run_appendix1(const RunConfig& c) {
    const PhysicalParams p = physical(c);
    const std::vector<double> ratios =
        c.ratios.empty() ? std::vector<double>{1e3, 1e4, 1e5, 1e6} : c.ratios;
    const auto rows = appendix1_checks(p, c.level, ratios);
    Result r;
    r.table.columns = {"term",  "mass_ratio",      "value",          "value_over_nu0sq",
                       "bound", "fitted_exponent", "bound_exponent", "within_bound"};
    int outside = 0;
    for (const auto& row : rows) {
        if (!row.within_bound) ++outside;
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            PhysicalParams q = p;
            q.M = ratios[i] * p.m;
            Json fe = row.vanishes ? Json() : Json(row.fitted_exponent);
            Json pe = row.vanishes ? Json() : Json(row.bound_exponent);
            const double v = std::fabs(row.values[i]);
            const bool ok = row.vanishes ? v <= 1e-10 * q.nu0_squared() : v <= row.bounds[i];
            r.table.add({row.term, ratios[i], row.values[i], row.values[i] / q.nu0_squared(),
                         row.bounds[i], fe, pe, ok});
        }
    }
    r.summary = "appendix1: " + std::to_string(rows.size()) + " terms, " +
                std::to_string(outside) + " outside their bounds";
    return r;
}

std::string default_output(const RunConfig& c) {
    return "bomol_" + c.mode + (c.format == "json" ? ".json" : ".csv");
}

int run(const RunConfig& c) {
    if (c.units != "natural" && c.units != "si-like")
        throw DomainError("units must be natural or si-like");
    if (c.units == "natural" && c.hbar != 1.0)
        throw DomainError("natural units fix hbar = 1; use --units si-like to set hbar");

    static const std::map<std::string, std::function<Result(const RunConfig&)>> modes = {
        {"centers", run_centers},       {"spectrum", run_spectrum},
        {"correct2", run_correct2},     {"relativistic", run_relativistic},
        {"validate", run_validate},     {"scaling", run_scaling},
        {"appendix1", run_appendix1}};
    const Result r = modes.at(c.mode)(c);

    std::string content;
    if (c.format == "json") {
        Json doc = Json::object();
        doc["mode"] = c.mode;
        doc["params"] = params_json(c);
        doc["columns"] = r.table.columns;
        doc["rows"] = cli::table_rows(r.table);
        for (auto it = r.extra.begin(); it != r.extra.end(); ++it) doc[it.key()] = it.value();
        content = cli::to_json(doc);
    } else {
        content = cli::to_csv(r.table);
    }
    const std::string path = c.output.empty() ? default_output(c) : c.output;
    const bool to_stdout = path == "-";
    if (to_stdout)
        std::fputs(content.c_str(), stdout);
    else
        cli::write_atomic(path, content);
    if (!c.plot_dir.empty()) {
        std::filesystem::create_directories(c.plot_dir);
        for (const auto& [name, text] : r.plots)
            cli::write_atomic((std::filesystem::path(c.plot_dir) / name).string(), text);
    }
    // with the artifact on stdout the summary moves to stderr
    std::fprintf(to_stdout ? stderr : stdout, "%s -> %s\n", r.summary.c_str(),
                 to_stdout ? "stdout" : path.c_str());
    if (r.failed_checks) {
        std::fprintf(stderr, "one or more validation checks failed; see %s\n", path.c_str());
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig c;
    CLI::App app{"Born-Oppenheimer analysis of two heavy particles and one light particle "
                 "with contact interactions"};
    app.add_option("mode", c.mode, "centers|spectrum|correct2|relativistic|validate|scaling|appendix1")
        ->required()
        ->check(CLI::IsMember({"centers", "spectrum", "correct2", "relativistic", "validate",
                               "scaling", "appendix1"}));
    app.add_option("--m", c.m, "light mass")->capture_default_str();
    app.add_option("--M", c.M, "heavy mass")->capture_default_str();
    app.add_option("--lambda", c.lambda, "contact coupling")->capture_default_str();
    app.add_option("--hbar", c.hbar, "Planck constant (si-like units only)")->capture_default_str();
    app.add_option("--levels", c.levels, "number of levels")->capture_default_str();
    app.add_option("--level", c.level, "heavy level for appendix1 (even)")->capture_default_str();
    app.add_option("--nz", c.nz, "coarse z points of the 3-body grid")->capture_default_str();
    app.add_option("--samples", c.samples, "curve samples")->capture_default_str();
    app.add_option("--zmax", c.zmax, "curve range (0 picks a default)")->capture_default_str();
    app.add_option("--ratios", c.ratios, "mass ratios M/m, comma separated")->delimiter(',');
    app.add_option("--format", c.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", c.output, "output file, - for stdout (default bomol_<mode>.<format>)");
    app.add_option("--plot-dir", c.plot_dir, "directory for (x, y, y_err) plot series");
    app.add_option("--units", c.units, "natural or si-like")
        ->check(CLI::IsMember({"natural", "si-like"}))
        ->capture_default_str();
    app.set_config("--config", "", "key=value configuration file; flags override it");
    bool dump = false;
    app.add_flag("--dump-config", dump, "print the effective configuration and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    if (dump) {
        std::fputs(dump_config(c).c_str(), stdout);
        return 0;
    }
    try {
        return run(c);
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        std::printf("%s: failed (domain error)\n", c.mode.c_str());
        return 1;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "error: %s (best estimate %.17g)\n", e.what(), e.best_estimate());
        std::printf("%s: failed (numerical)\n", c.mode.c_str());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        std::printf("%s: failed\n", c.mode.c_str());
        return 2;
    }
}
