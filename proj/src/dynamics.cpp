#include "bicsim/dynamics.hpp"

#include <cmath>
#include <string>

#include "bicsim/spectral.hpp"

namespace bicsim {

double SingleExcitationState::norm() const {
    double s = std::norm(c1) + std::norm(c2);
    for (Eigen::Index i = 0; i < field.size(); ++i) s += std::norm(field(i));
    return std::sqrt(s);
}

SingleExcitationState atomic_initial_state(cplx c1, cplx c2, int n_modes) {
    SingleExcitationState st;
    st.c1 = c1;
    st.c2 = c2;
    st.field = Eigen::VectorXcd::Zero(n_modes);
    return st;
}

Eigen::MatrixXcd build_hamiltonian(const ModelParams& p, const Geometry& geom,
                                   const MomentumGrid& grid) {
    p.validate();
    geom.validate();
    const int nc = grid.size();
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(nc + 2, nc + 2);
    H(0, 0) = p.Omega;
    H(1, 1) = p.Omega;
    for (int m = 0; m < nc; ++m) {
        const double k = grid.k[static_cast<std::size_t>(m)];
        H(2 + m, 2 + m) = dispersion(k, p);
        const cplx g1 = coupling_amplitude(1, k, p, geom);
        const cplx g2 = coupling_amplitude(2, k, p, geom);
        H(0, 2 + m) = g1;
        H(1, 2 + m) = g2;
        H(2 + m, 0) = std::conj(g1);
        H(2 + m, 1) = std::conj(g2);
    }
    return H;
}

namespace {

double bell_concurrence_raw(cplx cp, cplx cm) {
    const double re = std::norm(cp) - std::norm(cm);
    const double im = 2.0 * std::imag(cm * std::conj(cp));
    return std::hypot(re, im);
}

void push_sample(Trajectory& traj, double t, cplx cp, cplx cm) {
    traj.times.push_back(t);
    traj.c_plus.push_back(cp);
    traj.c_minus.push_back(cm);
    traj.concurrence.push_back(bell_concurrence_raw(cp, cm));
    traj.norm_leak.push_back(1.0 - std::norm(cp) - std::norm(cm));
}

} // namespace

EdPropagator::EdPropagator(const ModelParams& p, const Geometry& geom, const MomentumGrid& grid)
    : n_modes_(grid.size()), eig_(eigh(build_hamiltonian(p, geom, grid))) {}

Eigen::VectorXcd EdPropagator::project(const SingleExcitationState& initial) const {
    if (initial.field.size() != n_modes_)
        throw ConfigError("initial state field size does not match the momentum grid");
    if (std::abs(initial.norm() - 1.0) > 1e-8)
        throw ConfigError("initial state is not normalized");
    Eigen::VectorXcd psi0(n_modes_ + 2);
    psi0(0) = initial.c1;
    psi0(1) = initial.c2;
    psi0.tail(n_modes_) = initial.field;
    return eig_.vectors.adjoint() * psi0;
}

double EdPropagator::norm_defect(const SingleExcitationState& initial) const {
    return std::abs(1.0 - project(initial).squaredNorm());
}

Trajectory EdPropagator::evolve(const SingleExcitationState& initial,
                                const std::vector<double>& times) const {
    const Eigen::VectorXcd b = project(initial);
    // The modal norm is conserved exactly along t; any defect is the
    // decomposition's own error and caps the norm error at every output time.
    if (std::abs(1.0 - b.squaredNorm()) > 1e-10)
        throw NumericalError("eigenbasis projection lost norm beyond 1e-10");

    const Eigen::VectorXcd row1 = eig_.vectors.row(0).transpose();
    const Eigen::VectorXcd row2 = eig_.vectors.row(1).transpose();
    const Eigen::ArrayXcd phase_rate = cplx(0.0, -1.0) * eig_.values.array();

    Trajectory traj;
    traj.times.reserve(times.size());
    for (double t : times) {
        const Eigen::ArrayXcd ph = (phase_rate * t).exp() * b.array();
        const cplx a1 = (row1.array() * ph).sum();
        const cplx a2 = (row2.array() * ph).sum();
        const BellAmplitudes bell = bell_transform(a1, a2);
        push_sample(traj, t, bell.c_plus, bell.c_minus);
    }
    return traj;
}

SingleExcitationState EdPropagator::state_at(const SingleExcitationState& initial,
                                             double t) const {
    const Eigen::VectorXcd b = project(initial);
    const Eigen::ArrayXcd ph = (cplx(0.0, -1.0) * eig_.values.array() * t).exp() * b.array();
    const Eigen::VectorXcd psi = eig_.vectors * ph.matrix();
    SingleExcitationState st;
    st.c1 = psi(0);
    st.c2 = psi(1);
    st.field = psi.tail(n_modes_);
    return st;
}

Trajectory evolve_ed(const ModelParams& p, const Geometry& geom, const MomentumGrid& grid,
                     const SingleExcitationState& initial, const std::vector<double>& times) {
    return EdPropagator(p, geom, grid).evolve(initial, times);
}

Trajectory to_interaction_picture(Trajectory traj, double Omega) {
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const cplx rot = std::polar(1.0, Omega * traj.times[i]);
        traj.c_plus[i] *= rot;
        traj.c_minus[i] *= rot;
    }
    return traj;
}

namespace {

std::vector<double> bell_weights(Channel ch, const ModelParams& p, const Geometry& geom,
                                 const MomentumGrid& grid) {
    std::vector<double> w(static_cast<std::size_t>(grid.size()));
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = std::norm(effective_bell_coupling(grid.k[i], ch, p, geom));
    return w;
}

std::vector<double> cross_weights(const ModelParams& p, const Geometry& geom,
                                  const MomentumGrid& grid) {
    // Even part of W+ W-*: (|g1|^2 - |g2|^2)/2 per mode; the odd imaginary
    // part cancels over the symmetric grid and is dropped here.
    const double pref = 2.0 * p.g * p.g / static_cast<double>(grid.size());
    std::vector<double> w(static_cast<std::size_t>(grid.size()));
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double a1 = form_factor(grid.k[i], geom.n1);
        const double a2 = form_factor(grid.k[i], geom.n2);
        w[i] = pref * (a1 * a1 - a2 * a2);
    }
    return w;
}

cplx kernel_at(double tau, const std::vector<double>& w, const ModelParams& p,
               const MomentumGrid& grid) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double theta = (p.Omega - dispersion(grid.k[i], p)) * tau;
        acc += w[i] * cplx(std::cos(theta), std::sin(theta));
    }
    return acc;
}

KernelTable tabulate(const std::vector<double>& w, double dt, int steps, const ModelParams& p,
                     const MomentumGrid& grid) {
    KernelTable table;
    table.dt = dt;
    table.values.resize(static_cast<std::size_t>(steps) + 1);
    for (int j = 0; j <= steps; ++j)
        table.values[static_cast<std::size_t>(j)] = kernel_at(j * dt, w, p, grid);
    return table;
}

void check_time_grid(double t_max, double dt) {
    if (!(dt > 0.0) || !(t_max >= 0.0) || !std::isfinite(dt) || !std::isfinite(t_max))
        throw ConfigError("invalid time grid: need dt > 0 and t_max >= 0");
}

} // namespace

cplx memory_kernel(double tau, Channel ch, const ModelParams& p, const Geometry& geom,
                   const MomentumGrid& grid) {
    if (tau < 0.0) throw ConfigError("memory kernel requires tau >= 0");
    return kernel_at(tau, bell_weights(ch, p, geom, grid), p, grid);
}

cplx memory_kernel_cross(double tau, const ModelParams& p, const Geometry& geom,
                         const MomentumGrid& grid) {
    if (tau < 0.0) throw ConfigError("memory kernel requires tau >= 0");
    return kernel_at(tau, cross_weights(p, geom, grid), p, grid);
}

KernelTable build_kernel_table(Channel ch, double dt, int steps, const ModelParams& p,
                               const Geometry& geom, const MomentumGrid& grid) {
    check_time_grid(steps * dt, dt);
    return tabulate(bell_weights(ch, p, geom, grid), dt, steps, p, grid);
}

KernelTable build_kernel_table_cross(double dt, int steps, const ModelParams& p,
                                     const Geometry& geom, const MomentumGrid& grid) {
    check_time_grid(steps * dt, dt);
    return tabulate(cross_weights(p, geom, grid), dt, steps, p, grid);
}

std::vector<double> uniform_times(double t_max, double dt) {
    check_time_grid(t_max, dt);
    const int steps = static_cast<int>(std::ceil(t_max / dt - 1e-9));
    std::vector<double> times(static_cast<std::size_t>(steps) + 1);
    for (int j = 0; j <= steps; ++j) times[static_cast<std::size_t>(j)] = j * dt;
    return times;
}

std::vector<cplx> volterra_solve(const KernelTable& kernel, cplx c0, int steps) {
    if (steps < 0 || !(kernel.dt > 0.0)) throw ConfigError("invalid time grid for volterra_solve");
    if (kernel.values.size() < static_cast<std::size_t>(steps) + 1)
        throw ConfigError("kernel table is shorter than the requested evolution");
    const double dt = kernel.dt;
    const std::vector<cplx>& K = kernel.values;

    std::vector<cplx> c(static_cast<std::size_t>(steps) + 1);
    c[0] = c0;
    cplx f_cur{0.0, 0.0};  // -int_0^{t_j} K(tau) c(t_j - tau) dtau, trapezoid
    for (int j = 0; j < steps; ++j) {
        // history part of the next integral, excluding the unknown endpoint
        cplx hist = 0.5 * K[static_cast<std::size_t>(j + 1)] * c[0];
        for (int m = 1; m <= j; ++m)
            hist += K[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(j + 1 - m)];
        const auto f_at = [&](cplx endpoint) { return -dt * (0.5 * K[0] * endpoint + hist); };

        const cplx pred = c[static_cast<std::size_t>(j)] + dt * f_cur;
        const cplx f_pred = f_at(pred);
        c[static_cast<std::size_t>(j + 1)] =
            c[static_cast<std::size_t>(j)] + 0.5 * dt * (f_cur + f_pred);
        f_cur = f_at(c[static_cast<std::size_t>(j + 1)]);
    }
    return c;
}

Trajectory evolve_volterra(Channel ch, cplx c0, double t_max, double dt, const ModelParams& p,
                           const Geometry& geom, const MomentumGrid& grid) {
    check_time_grid(t_max, dt);
    const int steps = static_cast<int>(std::ceil(t_max / dt - 1e-9));
    const KernelTable kt = build_kernel_table(ch, dt, steps, p, geom, grid);
    const std::vector<cplx> c = volterra_solve(kt, c0, steps);

    Trajectory traj;
    traj.times.reserve(c.size());
    for (int j = 0; j <= steps; ++j) {
        const cplx amp = c[static_cast<std::size_t>(j)];
        if (ch == Channel::plus)
            push_sample(traj, j * dt, amp, cplx(0.0, 0.0));
        else
            push_sample(traj, j * dt, cplx(0.0, 0.0), amp);
    }
    return traj;
}

Trajectory evolve_volterra_coupled(cplx c0_plus, cplx c0_minus, double t_max, double dt,
                                   const ModelParams& p, const Geometry& geom,
                                   const MomentumGrid& grid) {
    check_time_grid(t_max, dt);
    const int steps = static_cast<int>(std::ceil(t_max / dt - 1e-9));
    const KernelTable kp = build_kernel_table(Channel::plus, dt, steps, p, geom, grid);
    const KernelTable km = build_kernel_table(Channel::minus, dt, steps, p, geom, grid);
    const KernelTable kx = build_kernel_table_cross(dt, steps, p, geom, grid);

    struct Vec2 {
        cplx p, m;
    };
    const auto apply = [&](int j, const Vec2& v) {
        const std::size_t u = static_cast<std::size_t>(j);
        return Vec2{kp.values[u] * v.p + kx.values[u] * v.m,
                    kx.values[u] * v.p + km.values[u] * v.m};
    };

    std::vector<Vec2> c(static_cast<std::size_t>(steps) + 1);
    c[0] = Vec2{c0_plus, c0_minus};
    Vec2 f_cur{cplx(0, 0), cplx(0, 0)};
    for (int j = 0; j < steps; ++j) {
        Vec2 hist = apply(j + 1, c[0]);
        hist.p *= 0.5;
        hist.m *= 0.5;
        for (int m = 1; m <= j; ++m) {
            const Vec2 term = apply(m, c[static_cast<std::size_t>(j + 1 - m)]);
            hist.p += term.p;
            hist.m += term.m;
        }
        const auto f_at = [&](const Vec2& endpoint) {
            const Vec2 head = apply(0, endpoint);
            return Vec2{-dt * (0.5 * head.p + hist.p), -dt * (0.5 * head.m + hist.m)};
        };

        const Vec2 cj = c[static_cast<std::size_t>(j)];
        const Vec2 pred{cj.p + dt * f_cur.p, cj.m + dt * f_cur.m};
        const Vec2 f_pred = f_at(pred);
        c[static_cast<std::size_t>(j + 1)] = Vec2{cj.p + 0.5 * dt * (f_cur.p + f_pred.p),
                                                  cj.m + 0.5 * dt * (f_cur.m + f_pred.m)};
        f_cur = f_at(c[static_cast<std::size_t>(j + 1)]);
    }

    Trajectory traj;
    traj.times.reserve(c.size());
    for (int j = 0; j <= steps; ++j)
        push_sample(traj, j * dt, c[static_cast<std::size_t>(j)].p,
                    c[static_cast<std::size_t>(j)].m);
    return traj;
}

cplx markov_amplitude(double t, Channel ch, cplx c0, const ModelParams& p, const Geometry& geom) {
    const double gamma = decay_rate_continuum(p.Omega, ch, p, geom);
    return c0 * std::exp(-0.5 * gamma * t);
}

Trajectory evolve_markov(cplx c0_plus, cplx c0_minus, const std::vector<double>& times,
                         const ModelParams& p, const Geometry& geom) {
    const double gp = decay_rate_continuum(p.Omega, Channel::plus, p, geom);
    const double gm = decay_rate_continuum(p.Omega, Channel::minus, p, geom);
    Trajectory traj;
    traj.times.reserve(times.size());
    for (double t : times)
        push_sample(traj, t, c0_plus * std::exp(-0.5 * gp * t),
                    c0_minus * std::exp(-0.5 * gm * t));
    return traj;
}

std::vector<double> concurrence_trajectory(const Trajectory& traj_plus,
                                           const Trajectory& traj_minus) {
    if (traj_plus.size() != traj_minus.size())
        throw ConfigError("trajectories have different lengths");
    for (std::size_t i = 0; i < traj_plus.size(); ++i)
        if (std::abs(traj_plus.times[i] - traj_minus.times[i]) >
            1e-12 * std::max(1.0, std::abs(traj_plus.times[i])))
            throw ConfigError("trajectory time grids are not aligned");
    std::vector<double> out(traj_plus.size());
    for (std::size_t i = 0; i < traj_plus.size(); ++i)
        out[i] = bell_concurrence_raw(traj_plus.c_plus[i], traj_minus.c_minus[i]);
    return out;
}

} // namespace bicsim
