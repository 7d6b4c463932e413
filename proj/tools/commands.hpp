#ifndef DUNKL_TOOLS_COMMANDS_HPP
#define DUNKL_TOOLS_COMMANDS_HPP

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "dunkl/dunkl.hpp"
#include "dunkl/io.hpp"

namespace dunkl::cli {

enum ExitCode { exit_ok = 0, exit_usage = 1, exit_verification = 2 };

struct Grid {
    double lo = 0.0;
    double hi = 0.0;
    int n = 1;

    static Grid parse(const std::string& spec)
    {
        Grid g;
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        if (parts.size() != 3) throw UsageError("grid must look like lo:hi:n, got '" + spec + "'");
        try {
            g.lo = std::stod(parts[0]);
            g.hi = std::stod(parts[1]);
            g.n = std::stoi(parts[2]);
        } catch (const std::exception&) {
            throw UsageError("grid must look like lo:hi:n, got '" + spec + "'");
        }
        if (g.n < 1) throw UsageError("grid needs at least one point");
        return g;
    }

    std::vector<double> points() const
    {
        std::vector<double> v;
        for (int i = 0; i < n; ++i) v.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
        return v;
    }
};

inline int parse_sign(const std::string& s, const char* what)
{
    if (s == "+" || s == "1" || s == "+1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw UsageError(std::string(what) + " must be + or -, got '" + s + "'");
}

struct Output {
    std::string text;
    int code = exit_ok;
};

struct Styling {
    bool color = false;
    std::string pass() const { return color ? "\x1b[32mPASS\x1b[0m" : "PASS"; }
    std::string fail() const { return color ? "\x1b[31mFAIL\x1b[0m" : "FAIL"; }
};

// --- spectrum ---

inline Output cmd_spectrum(const RunConfig& cfg)
{
    const MuParams mu = cfg.mu();
    Output o;
    if (cfg.output_format == "json") {
        nlohmann::ordered_json levels = nlohmann::ordered_json::array();
        for (int N = 0; N <= cfg.level_max; ++N) {
            std::vector<std::string> cart;
            std::vector<std::string> pol;
            for (const auto& c : cartesian_states(N)) cart.push_back(c.str());
            for (const auto& p : polar_states(N)) pol.push_back(p.str());
            levels.push_back({{"level", N},
                              {"energy", energy_level(N, mu)},
                              {"degeneracy", cart.size()},
                              {"cartesian", cart},
                              {"polar", pol}});
        }
        o.text = nlohmann::ordered_json({{"mu_x", mu.x}, {"mu_y", mu.y}, {"levels", levels}}).dump(2) + "\n";
        return o;
    }
    o.text = "level,energy,basis,label,degeneracy\n";
    for (int N = 0; N <= cfg.level_max; ++N) {
        const std::string e = io::format_double(energy_level(N, mu));
        const auto cs = cartesian_states(N);
        const auto ps = polar_states(N);
        for (const auto& c : cs) {
            o.text += io::csv_row({std::to_string(N), e, "cartesian", c.str(), std::to_string(cs.size())});
        }
        for (const auto& p : ps) {
            o.text += io::csv_row({std::to_string(N), e, "polar", p.str(), std::to_string(ps.size())});
        }
    }
    return o;
}

// --- wavefunction ---

struct WaveRequest {
    std::string kind = "cartesian";
    int nx = 0;
    int ny = 0;
    int k = 0;
    std::string n = "0";
    std::string sx = "+";
    std::string sy = "+";
    int epsilon = 1;
    int branch = 1;
    std::string grid;
    std::string grid2;
};

inline Output cmd_wavefunction(const RunConfig& cfg, const WaveRequest& req)
{
    const MuParams mu = cfg.mu();
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows; // coordinates..., real, imag

    if (req.kind == "cartesian") {
        if (req.nx < 0 || req.ny < 0) throw UsageError("cartesian indices must be non-negative");
        const CartesianIndex idx{req.nx, req.ny};
        const Grid gx = Grid::parse(req.grid.empty() ? "-3:3:7" : req.grid);
        const Grid gy = req.grid2.empty() ? gx : Grid::parse(req.grid2);
        header = {"x", "y", "real", "imag"};
        for (double x : gx.points()) {
            for (double y : gy.points()) rows.push_back({x, y, psi_cartesian(idx, mu, x, y), 0.0});
        }
    } else if (req.kind == "polar") {
        const PolarIndex idx{req.k, HalfInt::parse(req.n), parse_sign(req.sx, "--sx"), parse_sign(req.sy, "--sy")};
        idx.validate();
        const Grid gphi = Grid::parse(req.grid.empty() ? "0:3.141592653589793:9" : req.grid);
        if (req.grid2.empty()) {
            header = {"phi", "real", "imag"};
            for (double p : gphi.points()) rows.push_back({p, phi_angular(idx, mu, p), 0.0});
        } else {
            const Grid grho = Grid::parse(req.grid2);
            header = {"rho", "phi", "real", "imag"};
            for (double r : grho.points()) {
                for (double p : gphi.points()) rows.push_back({r, p, psi_polar(idx, mu, r, p), 0.0});
            }
        }
    } else if (req.kind == "jacobi-dunkl") {
        const JacobiDunklIndex idx{HalfInt::parse(req.n), req.epsilon, req.branch};
        idx.validate();
        const Grid gphi = Grid::parse(req.grid.empty() ? "0:3.141592653589793:9" : req.grid);
        header = {"phi", "real", "imag"};
        for (double p : gphi.points()) {
            const complex v = jacobi_dunkl_F(idx, mu, p);
            rows.push_back({p, v.real(), v.imag()});
        }
    } else {
        throw UsageError("unknown wavefunction kind '" + req.kind + "' (cartesian, polar, jacobi-dunkl)");
    }

    Output o;
    if (cfg.output_format == "json") {
        nlohmann::ordered_json j;
        j["kind"] = req.kind;
        j["columns"] = header;
        j["rows"] = rows;
        o.text = j.dump(2) + "\n";
        return o;
    }
    o.text = io::csv_row(header);
    for (const auto& r : rows) {
        std::vector<std::string> f;
        for (double v : r) f.push_back(io::format_double(v));
        o.text += io::csv_row(f);
    }
    return o;
}

// --- overlaps ---

inline Output cmd_overlaps(const RunConfig& cfg, int N)
{
    if (N < 0 || N > cfg.level_max) {
        throw UsageError("--level must lie in [0, level_max=" + std::to_string(cfg.level_max) + "]");
    }
    const MuParams mu = cfg.mu();
    const OverlapTable closed = polar_cartesian_overlap(N, mu);
    const OverlapTable diag = polar_from_q_table(q_overlap_oracle(N, mu), mu);
    const OverlapTable quad = overlap_quadrature_table(N, mu, cfg.quadrature_nodes);
    const double d_diag = max_entry_difference(closed, diag);
    const double d_quad = max_entry_difference(closed, quad);
    const double worst = std::max(d_diag, d_quad);

    Output o;
    o.code = worst > cfg.tolerance ? exit_verification : exit_ok;
    if (cfg.output_format == "json") {
        nlohmann::ordered_json j;
        j["level"] = N;
        j["mu_x"] = mu.x;
        j["mu_y"] = mu.y;
        j["tables"] = {io::overlap_json(closed), io::overlap_json(diag), io::overlap_json(quad)};
        j["discrepancy"] = {{"closed-form vs diagonalization", d_diag},
                            {"closed-form vs quadrature", d_quad},
                            {"max", worst}};
        j["tolerance"] = cfg.tolerance;
        j["pass"] = o.code == exit_ok;
        o.text = j.dump(2) + "\n";
        return o;
    }
    o.text = "# level " + std::to_string(N) + "\n";
    o.text += "# weight_indexing " + closed.weight_indexing + "\n";
    o.text += io::overlap_csv_header;
    o.text += io::overlap_csv_rows(closed);
    o.text += io::overlap_csv_rows(diag);
    o.text += io::overlap_csv_rows(quad);
    o.text += "# discrepancy closed-form vs diagonalization " + io::format_double(d_diag) + "\n";
    o.text += "# discrepancy closed-form vs quadrature " + io::format_double(d_quad) + "\n";
    o.text += "# discrepancy max " + io::format_double(worst) + "\n";
    return o;
}

// --- check ---

inline double sorted_spectrum_gap(std::vector<double> got, std::vector<double> want)
{
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
    return worst;
}

/// Every identity verified by the library, maximized over levels <= level_max.
inline Report run_all_checks(const RunConfig& cfg)
{
    const MuParams mu = cfg.mu();
    Report r;
    for (int N = 0; N <= cfg.level_max; ++N) {
        r.merge_max(check_sd2_relations(N, mu));
        r.merge_max(check_casimir(N, mu));
        r.merge_max(sl12_casimir_check(N, mu));
    }
    r.merge_max(check_parabose(cfg.level_max + 2, mu));

    for (int N = 0; N <= cfg.level_max; ++N) {
        const auto q = eigen_decompose(symmetry_block(Symmetry::Q, N, mu)).values;
        r.add_max("spectrum Q", sorted_spectrum_gap(q, expected_q_spectrum(N, mu)));
        const auto j2 = eigen_decompose(symmetry_block(Symmetry::J2, N, mu)).values;
        r.add_max("spectrum J2", sorted_spectrum_gap(j2, expected_j2_spectrum(N, mu)));
    }

    for (const auto& [axis, m] : {std::pair{"x", mu.x}, std::pair{"y", mu.y}}) {
        const QuadratureRule rule = gauss_rule(WeightSpec::generalized_hermite(m), cfg.quadrature_nodes);
        double worst = 0.0;
        for (int a = 0; a < 8; ++a) {
            for (int b = 0; b < 8; ++b) {
                const double d = antihermiticity_defect([a, m](auto t) { return psi_1d(a, m, t); },
                                                        [b, m](auto t) { return psi_1d(b, m, t); }, m, rule);
                worst = std::max(worst, std::abs(d));
            }
        }
        r.add(std::string("anti-hermiticity D_") + axis, worst);
    }

    for (int N = 0; N <= cfg.level_max; ++N) {
        const auto [alpha, beta] = overlap_hahn_parameters(N, mu);
        const DualMinusOneHahnFamily f = dual_m1_hahn_family(alpha, beta, N);
        double worst = 0.0;
        for (int n = 0; n <= N; ++n) {
            for (int m = 0; m <= N; ++m) {
                double s = 0.0;
                for (int l = 0; l <= N; ++l) {
                    s += f.weights[l] * dual_m1_hahn_eval(f, n, f.grid[l]) * dual_m1_hahn_eval(f, m, f.grid[l]);
                }
                s /= std::sqrt(dual_m1_hahn_norm(f, n) * dual_m1_hahn_norm(f, m));
                worst = std::max(worst, std::abs(s - (n == m ? 1.0 : 0.0)));
            }
        }
        r.add_max("dual -1 Hahn orthogonality", worst);

        const OverlapTable qc = q_overlap_closed_form(N, mu);
        const OverlapTable qd = q_overlap_oracle(N, mu);
        r.add_max("overlap recurrence", q_recurrence_residual(qc, mu));
        r.add_max("overlap closed-form vs diagonalization", max_entry_difference(qc, qd));
        const OverlapTable pc = polar_from_q_table(qc, mu);
        r.add_max("overlap unitarity", std::max(qc.unitarity_defect(), pc.unitarity_defect()));
        const OverlapTable pq = overlap_quadrature_table(N, mu, cfg.quadrature_nodes);
        r.add_max("overlap closed-form vs quadrature", max_entry_difference(pc, pq));
    }
    return r;
}

inline Output cmd_check(const RunConfig& cfg, const Styling& style)
{
    const Report r = run_all_checks(cfg);
    Output o;
    o.code = r.passed(cfg.tolerance) ? exit_ok : exit_verification;
    if (cfg.output_format == "json") {
        nlohmann::ordered_json j;
        j["tolerance"] = cfg.tolerance;
        j["checks"] = io::report_json(r, cfg.tolerance);
        j["pass"] = o.code == exit_ok;
        o.text = j.dump(2) + "\n";
        return o;
    }
    o.text = "identity,residual,status\n";
    for (const auto& c : r.checks) {
        const std::string status = c.residual < cfg.tolerance ? style.pass() : style.fail();
        o.text += io::csv_row({c.name, io::format_double(c.residual), status});
    }
    return o;
}

// --- entry point ---

/// Runs the command line; output goes to `out` unless --out is given.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color_allowed)
{
    CLI::App app{"Dunkl oscillator in the plane: spectra, wavefunctions, overlaps and algebra checks", "dunkl"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig flags;
    std::string config_path;
    auto* o_mux = app.add_option("--mu-x", flags.mu_x, "deformation parameter mu_x (> -1/2)");
    auto* o_muy = app.add_option("--mu-y", flags.mu_y, "deformation parameter mu_y (> -1/2)");
    auto* o_lmax = app.add_option("--level-max", flags.level_max, "highest energy level N");
    auto* o_nodes = app.add_option("--nodes", flags.quadrature_nodes, "quadrature nodes per dimension");
    auto* o_tol = app.add_option("--tol", flags.tolerance, "verification tolerance");
    auto* o_fmt = app.add_option("--format", flags.output_format, "output format: csv or json");
    auto* o_out = app.add_option("--out", flags.output_path, "output file (default: stdout)");
    app.add_option("--config", config_path, "key = value config file; flags override it");

    auto* spectrum = app.add_subcommand("spectrum", "energies and state labels per level");
    auto* wave = app.add_subcommand("wavefunction", "sample a wavefunction on a grid");
    WaveRequest req;
    wave->add_option("--kind", req.kind, "cartesian, polar or jacobi-dunkl");
    wave->add_option("--nx", req.nx, "cartesian n_x");
    wave->add_option("--ny", req.ny, "cartesian n_y");
    wave->add_option("--k", req.k, "polar radial index k");
    wave->add_option("--n", req.n, "polar / Jacobi-Dunkl n (integer or half-integer, e.g. 3/2)");
    wave->add_option("--sx", req.sx, "polar parity s_x (+ or -)");
    wave->add_option("--sy", req.sy, "polar parity s_y (+ or -)");
    wave->add_option("--epsilon", req.epsilon, "Jacobi-Dunkl sector (+1 or -1)");
    wave->add_option("--branch", req.branch, "Jacobi-Dunkl eigenvalue sign (+1 or -1)");
    wave->add_option("--grid", req.grid, "lo:hi:n for x (cartesian) or phi (polar, jacobi-dunkl)");
    wave->add_option("--grid2", req.grid2, "lo:hi:n for y (cartesian) or rho (polar)");
    auto* overlaps = app.add_subcommand("overlaps", "Cartesian/polar overlap tables from three methods");
    int level = 0;
    overlaps->add_option("--level", level, "energy level N")->required();
    auto* check = app.add_subcommand("check", "verify every algebraic and numerical identity");

    std::vector<const char*> argv;
    argv.push_back("dunkl");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) load_config_file(cfg, config_path);
        if (o_mux->count()) cfg.mu_x = flags.mu_x;
        if (o_muy->count()) cfg.mu_y = flags.mu_y;
        if (o_lmax->count()) cfg.level_max = flags.level_max;
        if (o_nodes->count()) cfg.quadrature_nodes = flags.quadrature_nodes;
        if (o_tol->count()) cfg.tolerance = flags.tolerance;
        if (o_fmt->count()) cfg.output_format = flags.output_format;
        if (o_out->count()) cfg.output_path = flags.output_path;
        cfg.validate();

        Styling style;
        style.color = color_allowed && cfg.output_path.empty() && cfg.output_format == "csv";

        Output result;
        if (spectrum->parsed()) result = cmd_spectrum(cfg);
        else if (wave->parsed()) result = cmd_wavefunction(cfg, req);
        else if (overlaps->parsed()) result = cmd_overlaps(cfg, level);
        else if (check->parsed()) result = cmd_check(cfg, style);

        if (cfg.output_path.empty()) {
            out << result.text;
        } else {
            std::ofstream f(cfg.output_path, std::ios::binary);
            if (!f) throw UsageError("cannot write '" + cfg.output_path + "'");
            f << result.text;
        }
        if (result.code == exit_verification) err << "dunkl: verification failed (tolerance " << cfg.tolerance << ")\n";
        return result.code;
    } catch (const UsageError& e) {
        err << "dunkl: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        err << "dunkl: " << e.what() << "\n";
        return exit_usage;
    } catch (const NumericalError& e) {
        err << "dunkl: numerical failure: " << e.what() << "\n";
        return exit_verification;
    }
}

} // namespace dunkl::cli

#endif
