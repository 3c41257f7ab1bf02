#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bicsim/config.hpp"
#include "bicsim/dynamics.hpp"
#include "bicsim/entanglement.hpp"
#include "bicsim/model.hpp"
#include "bicsim/spectral.hpp"
#include "bicsim/sweep.hpp"
#include "bicsim/table.hpp"
#include "bicsim/version.hpp"

namespace {

using namespace bicsim;

constexpr double pi = std::numbers::pi;

struct CommonOpts {
    std::string out;
    std::string format = "dsv";
    int workers = 0;  // 0 = machine parallelism
    std::string config_path;
    std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool out_required) {
    auto* out = cmd->add_option("--out", o.out, "output file path");
    if (out_required) out->required();
    cmd->add_option("--format", o.format, "output format: dsv|structured")
        ->check(CLI::IsMember({"dsv", "structured"}));
    cmd->add_option("--workers", o.workers, "worker pool size (0 = machine parallelism)");
    cmd->add_option("--config", o.config_path, "configuration file");
    cmd->add_option("--set", o.overrides, "override, repeatable: --set model.g=0.1");
}

Config resolve_config(const CommonOpts& o) {
    Config cfg = Config::defaults();
    if (!o.config_path.empty()) cfg.load_file(o.config_path);
    for (const std::string& kv : o.overrides) cfg.set_kv(kv);
    return cfg;
}

void emit(const CommonOpts& o, const Table& table, const std::vector<std::string>& notes,
          const std::string& resolved, const std::string& command,
          std::chrono::steady_clock::time_point start,
          const std::vector<std::pair<std::string, Table>>& extra_outputs = {}) {
    if (o.format == "structured")
        write_structured(o.out, table, notes, resolved);
    else
        write_dsv(o.out, table, notes);

    RunManifest manifest;
    manifest.command = command;
    manifest.resolved_config = resolved;
    manifest.output_paths.push_back(o.out);
    for (const auto& [path, extra] : extra_outputs) {
        if (o.format == "structured")
            write_structured(path, extra, notes, resolved);
        else
            write_dsv(path, extra, notes);
        manifest.output_paths.push_back(path);
    }
    manifest.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    append_manifest(manifest);
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > 0.0) || n < 1) throw ConfigError("log range requires positive bounds");
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    const double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (n - 1));
    return v;
}

std::vector<double> lin_spaced(double lo, double hi, int n) {
    if (n < 1) throw ConfigError("range requires at least one point");
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return v;
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        out.push_back(std::stod(item, &pos));
        if (pos != item.size()) throw ConfigError("cannot parse list entry: " + item);
    }
    return out;
}

// ---------------------------------------------------------------- dynamics

struct InitialSpec {
    cplx c1, c2;
};

InitialSpec parse_initial(const std::string& spec, double k_star, double dx) {
    const double s2 = std::sqrt(2.0);
    if (spec == "bell-plus") return {cplx(1.0 / s2, 0), cplx(1.0 / s2, 0)};
    if (spec == "bell-minus") return {cplx(1.0 / s2, 0), cplx(-1.0 / s2, 0)};
    if (spec.rfind("bic:", 0) == 0) {
        const std::string body = spec.substr(4);
        const auto comma = body.find(',');
        if (comma == std::string::npos)
            throw ConfigError("initial bic spec must be bic:<lambda>,<phi|auto>");
        const double lambda = std::stod(body.substr(0, comma));
        const std::string phi_str = body.substr(comma + 1);
        if (phi_str == "auto" && !std::isfinite(k_star))
            throw RegimeError("bic:<lambda>,auto needs an in-band transition frequency");
        const double phi = phi_str == "auto" ? k_star * dx : std::stod(phi_str);
        const TwoQubitPure psi = bic_state(lambda, phi);
        return {psi(idx_eg), psi(idx_ge)};
    }
    if (spec.rfind("custom:", 0) == 0) {
        const std::vector<double> v = parse_list(spec.substr(7));
        if (v.size() != 4)
            throw ConfigError("initial custom spec must be custom:<re1>,<im1>,<re2>,<im2>");
        const cplx c1(v[0], v[1]), c2(v[2], v[3]);
        if (std::abs(std::norm(c1) + std::norm(c2) - 1.0) > 1e-8)
            throw ConfigError("custom initial amplitudes must be normalized");
        return {c1, c2};
    }
    throw ConfigError("unknown initial state spec: " + spec);
}

int cmd_dynamics(const CommonOpts& o, const Config& cfg,
                 std::chrono::steady_clock::time_point start) {
    const ModelParams p = cfg.model();
    const Geometry geom = cfg.geometry();
    const MomentumGrid grid = build_momentum_grid(p.n_modes);

    const std::string engine = cfg.get("dynamics.engine");
    const double t_max = cfg.get_double("dynamics.tmax");
    const double dt = cfg.get_double("dynamics.dt");
    const int out_every = std::max(1, cfg.get_int("dynamics.out_every"));

    // k* is only needed by bic:<lambda>,auto; leave it NaN outside the band.
    double k_star = std::numeric_limits<double>::quiet_NaN();
    if (std::abs((p.omega_c - p.Omega) / (2.0 * p.xi)) < 1.0) k_star = resonant_wavevector(p.Omega, p);
    const InitialSpec init = parse_initial(cfg.get("dynamics.initial"), k_star, geom.dx());
    const BellAmplitudes bell0 = bell_transform(init.c1, init.c2);

    Trajectory traj;
    if (engine == "ed") {
        std::vector<double> times = uniform_times(t_max, dt * out_every);
        traj = to_interaction_picture(
            evolve_ed(p, geom, grid, atomic_initial_state(init.c1, init.c2, grid.size()), times),
            p.Omega);
    } else if (engine == "volterra") {
        const Trajectory fine =
            evolve_volterra_coupled(bell0.c_plus, bell0.c_minus, t_max, dt, p, geom, grid);
        for (std::size_t i = 0; i < fine.size(); i += static_cast<std::size_t>(out_every)) {
            traj.times.push_back(fine.times[i]);
            traj.c_plus.push_back(fine.c_plus[i]);
            traj.c_minus.push_back(fine.c_minus[i]);
            traj.concurrence.push_back(fine.concurrence[i]);
            traj.norm_leak.push_back(fine.norm_leak[i]);
        }
    } else if (engine == "markov") {
        traj = evolve_markov(bell0.c_plus, bell0.c_minus, uniform_times(t_max, dt * out_every), p,
                             geom);
    } else {
        throw ConfigError("unknown engine: " + engine + " (expected ed|volterra|markov)");
    }

    Table table;
    table.columns = {"t", "re_c_plus", "im_c_plus", "re_c_minus", "im_c_minus",
                     "concurrence", "norm_leak"};
    table.units = {"1/xi", "", "", "", "", "", ""};
    for (std::size_t i = 0; i < traj.size(); ++i)
        table.add_row({traj.times[i], traj.c_plus[i].real(), traj.c_plus[i].imag(),
                       traj.c_minus[i].real(), traj.c_minus[i].imag(), traj.concurrence[i],
                       traj.norm_leak[i]});

    emit(o, table,
         {"single-excitation dynamics, engine=" + engine,
          "Bell-channel amplitudes in the interaction picture"},
         cfg.resolved_text(), "dynamics", start);
    return 0;
}

// ------------------------------------------------------------------- maps

int cmd_concurrence_map(const CommonOpts& o, const Config& cfg, double lmin, double lmax,
                        int points, const std::string& list,
                        std::chrono::steady_clock::time_point start) {
    std::vector<double> lambdas = list.empty() ? log_spaced(lmin, lmax, points) : parse_list(list);

    Table table;
    table.columns = {"lambda", "concurrence"};
    table.units = {"", ""};
    for (double lam : lambdas) {
        if (!(lam > 0.0)) {
            std::fprintf(stderr, "concurrence-map: rejected non-positive lambda %s\n",
                         format_double(lam).c_str());
            continue;
        }
        table.add_row({lam, concurrence_closed_form(lam)});
    }

    std::ostringstream resolved;
    resolved << cfg.resolved_text() << "cli.lmin = " << lmin << "\ncli.lmax = " << lmax
             << "\ncli.points = " << points << "\n";
    emit(o, table, {"concurrence of the geometric bound state vs lambda = n1/n2"}, resolved.str(),
         "concurrence-map", start);
    return 0;
}

int cmd_fidelity_map(const CommonOpts& o, const Config& cfg, double lmin, double lmax, int lpoints,
                     int thetas, double varphi, const std::vector<double>& contour_levels,
                     std::chrono::steady_clock::time_point start) {
    const std::vector<double> lambdas = log_spaced(lmin, lmax, lpoints);
    const std::vector<double> theta =
        lin_spaced(0.0, 2.0 * pi * (thetas - 1) / thetas, thetas);  // [0, 2pi)

    std::vector<std::vector<double>> F(static_cast<std::size_t>(lpoints),
                                       std::vector<double>(static_cast<std::size_t>(thetas)));
    parallel_for(lpoints, o.workers, [&](int i) {
        const double lam = lambdas[static_cast<std::size_t>(i)];
        for (int j = 0; j < thetas; ++j)
            F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                fidelity_to_phi(bic_state(lam, theta[static_cast<std::size_t>(j)]), varphi);
    });

    Table table;
    table.columns = {"lambda", "theta", "x", "y", "fidelity"};
    table.units = {"", "rad", "", "", ""};
    for (int i = 0; i < lpoints; ++i)
        for (int j = 0; j < thetas; ++j) {
            const double lam = lambdas[static_cast<std::size_t>(i)];
            const double th = theta[static_cast<std::size_t>(j)];
            table.add_row({lam, th, lam * std::cos(th), lam * std::sin(th),
                           F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
        }

    std::vector<std::pair<std::string, Table>> extras;
    if (!contour_levels.empty()) {
        Table contours;
        contours.columns = {"level", "lambda", "theta", "x", "y"};
        contours.units = {"", "", "rad", "", ""};
        const auto cross = [&](double level, double a, double b) {
            return (a - level) * (b - level) < 0.0;
        };
        for (double level : contour_levels) {
            for (int i = 0; i + 1 < lpoints; ++i)
                for (int j = 0; j < thetas; ++j) {
                    const double fa = F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    const double fb =
                        F[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)];
                    if (!cross(level, fa, fb)) continue;
                    const double t = (level - fa) / (fb - fa);
                    const double lam = lambdas[static_cast<std::size_t>(i)] +
                                       t * (lambdas[static_cast<std::size_t>(i + 1)] -
                                            lambdas[static_cast<std::size_t>(i)]);
                    const double th = theta[static_cast<std::size_t>(j)];
                    contours.add_row({level, lam, th, lam * std::cos(th), lam * std::sin(th)});
                }
            for (int i = 0; i < lpoints; ++i)
                for (int j = 0; j < thetas; ++j) {
                    const int jn = (j + 1) % thetas;  // the theta axis is periodic
                    const double fa = F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    const double fb = F[static_cast<std::size_t>(i)][static_cast<std::size_t>(jn)];
                    if (!cross(level, fa, fb)) continue;
                    const double t = (level - fa) / (fb - fa);
                    const double lam = lambdas[static_cast<std::size_t>(i)];
                    const double th = theta[static_cast<std::size_t>(j)] + t * (2.0 * pi / thetas);
                    contours.add_row({level, lam, th, lam * std::cos(th), lam * std::sin(th)});
                }
        }
        extras.emplace_back(o.out + ".contours", std::move(contours));
    }

    std::ostringstream resolved;
    resolved << cfg.resolved_text() << "cli.varphi = " << format_double(varphi) << "\n";
    emit(o, table,
         {"fidelity of the geometric bound state to (|e,g> + e^{i varphi}|g,e>)/sqrt(2)",
          "polar coordinates x = lambda cos(theta), y = lambda sin(theta), theta = k* dx"},
         resolved.str(), "fidelity-map", start, extras);
    return 0;
}

int cmd_rates_map(const CommonOpts& o, const Config& cfg, double lmin, double lmax, int lpoints,
                  int thetas, double n2, double kstar,
                  std::chrono::steady_clock::time_point start) {
    if (!(n2 > 0.0)) throw ConfigError("rates-map requires n2 > 0");
    if (!(kstar > 0.0) || !(kstar < pi) || std::abs(std::sin(kstar)) < 1e-9)
        throw RegimeError("kstar must lie strictly inside (0, pi), away from the band edges");

    ModelParams p = cfg.model();
    p.Omega = p.omega_c - 2.0 * p.xi * std::cos(kstar);  // resonance at kstar

    const std::vector<double> lambdas = lin_spaced(lmin, lmax, lpoints);
    const std::vector<double> theta = lin_spaced(0.0, 2.0 * pi * (thetas - 1) / thetas, thetas);

    std::vector<std::vector<std::pair<double, double>>> rates(
        static_cast<std::size_t>(lpoints),
        std::vector<std::pair<double, double>>(static_cast<std::size_t>(thetas)));
    parallel_for(lpoints, o.workers, [&](int i) {
        const double lam = lambdas[static_cast<std::size_t>(i)];
        for (int j = 0; j < thetas; ++j) {
            const double dx = theta[static_cast<std::size_t>(j)] / kstar;
            const Geometry geom = Geometry::from_dx(0.0, dx, lam * n2, n2);
            rates[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {
                decay_rate_continuum(p.Omega, Channel::plus, p, geom) / p.xi,
                decay_rate_continuum(p.Omega, Channel::minus, p, geom) / p.xi};
        }
    });

    Table table;
    table.columns = {"lambda", "theta", "gamma_plus_over_xi", "gamma_minus_over_xi"};
    table.units = {"", "rad", "", ""};
    for (int i = 0; i < lpoints; ++i)
        for (int j = 0; j < thetas; ++j)
            table.add_row({lambdas[static_cast<std::size_t>(i)],
                           theta[static_cast<std::size_t>(j)],
                           rates[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].first,
                           rates[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].second});

    std::ostringstream resolved;
    resolved << cfg.resolved_text() << "cli.n2 = " << format_double(n2)
             << "\ncli.kstar = " << format_double(kstar) << "\n";
    emit(o, table,
         {"normalized decay rates vs geometry: n1 = lambda n2, dx = theta / k*"},
         resolved.str(), "rates-map", start);
    return 0;
}

// ----------------------------------------------------------------- bic-find

int cmd_bic_find(const CommonOpts& o, const Config& cfg,
                 std::chrono::steady_clock::time_point start) {
    const ModelParams p = cfg.model();
    const Geometry geom = cfg.geometry();
    const MomentumGrid grid = build_momentum_grid(p.n_modes);

    std::optional<double> k_design;
    if (std::abs((p.omega_c - p.Omega) / (2.0 * p.xi)) < 1.0)
        k_design = resonant_wavevector(p.Omega, p);

    Table table;
    table.columns = {"channel", "energy", "residual_gamma", "gamma_discrete", "re_c1", "im_c1",
                     "re_c2", "im_c2", "k_star", "near_band_edge", "accepted", "concurrence",
                     "best_fit_phi"};
    table.units = {"", "xi", "xi", "xi", "", "", "", "", "rad", "", "", "", "rad"};

    std::printf("bic-find: g=%s, Omega=%s, n1=%s, n2=%s, dx=%s, Nc=%d\n",
                format_double(p.g).c_str(), format_double(p.Omega).c_str(),
                format_double(geom.n1).c_str(), format_double(geom.n2).c_str(),
                format_double(geom.dx()).c_str(), p.n_modes);
    if (k_design) {
        const RobustCheck r1 = robust_bic_check(*k_design, geom.n1);
        const RobustCheck r2 = robust_bic_check(*k_design, geom.n2);
        const auto describe = [](const RobustCheck& r) {
            return r.ok ? "ok (ell=" + std::to_string(r.ell) + ")" : std::string("fails");
        };
        std::printf("resonant wave vector k(Omega) = %.6f\n", *k_design);
        std::printf("robust condition k*.n odd multiple of pi: atom1 %s, atom2 %s\n",
                    describe(r1).c_str(), describe(r2).c_str());
        if (!(r1.ok && r2.ok)) std::printf("no robust bound state in the continuum at k(Omega)\n");
    } else {
        std::printf("transition frequency lies outside the band: no resonant wave vector\n");
    }

    for (Channel ch : {Channel::plus, Channel::minus}) {
        const std::vector<BicSolution> roots = scan_bound_state_roots(ch, p, geom, grid);
        std::printf("channel %s: %zu in-band root(s)\n", channel_name(ch), roots.size());
        for (const BicSolution& s : roots) {
            const bool accepted = s.residual_gamma < bic_residual_threshold_scale * p.xi;
            const double conc = concurrence_from_bell(bell_transform(s.c1, s.c2).c_plus,
                                                      bell_transform(s.c1, s.c2).c_minus);
            double phi_best = std::arg(s.c2) - std::arg(s.c1);
            if (phi_best < 0.0) phi_best += 2.0 * pi;
            std::printf("  E=% .12e  residual_gamma=%.3e  %s%s\n", s.energy, s.residual_gamma,
                        accepted ? "BIC" : "radiant", s.near_band_edge ? " [near band edge]" : "");
            if (accepted)
                std::printf("    c1=(%.6f,%.6f) c2=(%.6f,%.6f) concurrence=%.6f best-fit phi=%.6f\n",
                            s.c1.real(), s.c1.imag(), s.c2.real(), s.c2.imag(), conc, phi_best);
            table.add_row({channel_sign(ch), s.energy, s.residual_gamma, s.gamma_discrete,
                           s.c1.real(), s.c1.imag(), s.c2.real(), s.c2.imag(), s.k_star,
                           s.near_band_edge ? 1.0 : 0.0, accepted ? 1.0 : 0.0, conc, phi_best});
        }
    }

    if (!o.out.empty())
        emit(o, table, {"in-band roots of E - Omega - Delta(E) = 0 per Bell channel"},
             cfg.resolved_text(), "bic-find", start);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("bicsim ") + bicsim::version +
                 " - two giant atoms on a coupled-resonator waveguide: bound states in the "
                 "continuum, entanglement, and single-excitation dynamics"};
    app.require_subcommand(1);

    CommonOpts oc, of, or_, od, ob;

    auto* c_conc = app.add_subcommand("concurrence-map", "concurrence vs lambda table");
    double c_lmin = 1e-2, c_lmax = 1e2;
    int c_points = 401;
    std::string c_list;
    c_conc->add_option("--lmin", c_lmin, "smallest lambda (log-spaced grid)");
    c_conc->add_option("--lmax", c_lmax, "largest lambda");
    c_conc->add_option("--points", c_points, "number of grid points");
    c_conc->add_option("--list", c_list, "explicit comma-separated lambda list");
    add_common(c_conc, oc, true);

    auto* c_fid = app.add_subcommand("fidelity-map", "polar fidelity map vs (lambda, theta)");
    double f_lmin = 1e-2, f_lmax = 1e2, f_varphi = 0.0;
    int f_lpoints = 121, f_thetas = 240;
    std::vector<double> f_contours;
    c_fid->add_option("--lmin", f_lmin, "smallest lambda");
    c_fid->add_option("--lmax", f_lmax, "largest lambda");
    c_fid->add_option("--lpoints", f_lpoints, "lambda points (log-spaced)");
    c_fid->add_option("--thetas", f_thetas, "theta points over [0, 2pi)");
    c_fid->add_option("--varphi", f_varphi, "phase of the reference Bell-like state");
    c_fid->add_option("--contour", f_contours, "iso-fidelity level(s), repeatable");
    add_common(c_fid, of, true);

    auto* c_rates = app.add_subcommand("rates-map", "polar decay-rate map vs (lambda, theta)");
    double r_lmin = 0.05, r_lmax = 2.5, r_n2 = 2.0, r_kstar = 0.5 * pi;
    int r_lpoints = 50, r_thetas = 120;
    c_rates->add_option("--lmin", r_lmin, "smallest lambda");
    c_rates->add_option("--lmax", r_lmax, "largest lambda");
    c_rates->add_option("--lpoints", r_lpoints, "lambda points (linear)");
    c_rates->add_option("--thetas", r_thetas, "theta points over [0, 2pi)");
    c_rates->add_option("--n2", r_n2, "fixed second separation; n1 = lambda * n2");
    c_rates->add_option("--kstar", r_kstar, "resonant wave vector (sets Omega)");
    add_common(c_rates, or_, true);

    auto* c_dyn = app.add_subcommand("dynamics", "single-excitation time evolution");
    std::string d_engine, d_initial;
    double d_tmax = -1.0, d_dt = -1.0;
    int d_out_every = -1;
    c_dyn->add_option("--engine", d_engine, "ed|volterra|markov");
    c_dyn->add_option("--tmax", d_tmax, "final time (units 1/xi)");
    c_dyn->add_option("--dt", d_dt, "time step");
    c_dyn->add_option("--out-every", d_out_every, "output stride in steps");
    c_dyn->add_option("--initial", d_initial,
                      "bell-plus|bell-minus|bic:<lambda>,<phi|auto>|custom:<re1>,<im1>,<re2>,<im2>");
    add_common(c_dyn, od, true);

    auto* c_bic = app.add_subcommand("bic-find", "locate bound states in the continuum");
    add_common(c_bic, ob, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (c_conc->parsed())
            return cmd_concurrence_map(oc, resolve_config(oc), c_lmin, c_lmax, c_points, c_list,
                                       start);
        if (c_fid->parsed())
            return cmd_fidelity_map(of, resolve_config(of), f_lmin, f_lmax, f_lpoints, f_thetas,
                                    f_varphi, f_contours, start);
        if (c_rates->parsed())
            return cmd_rates_map(or_, resolve_config(or_), r_lmin, r_lmax, r_lpoints, r_thetas,
                                 r_n2, r_kstar, start);
        if (c_dyn->parsed()) {
            Config cfg = resolve_config(od);
            if (!d_engine.empty()) cfg.set("dynamics.engine", d_engine);
            if (d_tmax >= 0.0) cfg.set("dynamics.tmax", format_double(d_tmax));
            if (d_dt > 0.0) cfg.set("dynamics.dt", format_double(d_dt));
            if (d_out_every > 0) cfg.set("dynamics.out_every", std::to_string(d_out_every));
            if (!d_initial.empty()) cfg.set("dynamics.initial", d_initial);
            return cmd_dynamics(od, cfg, start);
        }
        if (c_bic->parsed()) return cmd_bic_find(ob, resolve_config(ob), start);
    } catch (const bicsim::ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const bicsim::RegimeError& e) {
        std::fprintf(stderr, "invalid physical regime: %s\n", e.what());
        return 4;
    } catch (const bicsim::NumericalError& e) {
        std::fprintf(stderr, "numerical backend error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
