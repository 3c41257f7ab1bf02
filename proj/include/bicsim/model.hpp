#pragma once

#include <complex>
#include <vector>

#include "bicsim/errors.hpp"

namespace bicsim {

using cplx = std::complex<double>;

// Symmetric/antisymmetric Bell channel of the two-atom pair.
enum class Channel { plus, minus };

inline constexpr double channel_sign(Channel ch) {
    return ch == Channel::plus ? 1.0 : -1.0;
}

inline constexpr const char* channel_name(Channel ch) {
    return ch == Channel::plus ? "plus" : "minus";
}

/// Energy scales and discretization of the coupled-resonator waveguide.
/// xi is the hopping amplitude and sets the energy unit; the dispersion is
/// omega_k = omega_c - 2 xi cos k, a band of width 4 xi centered on omega_c.
struct ModelParams {
    double xi = 1.0;       // hopping amplitude (energy unit)
    double omega_c = 0.0;  // bare resonator frequency
    double g = 0.1;        // atom-waveguide coupling strength
    double Omega = 0.0;    // atomic transition frequency
    int n_modes = 2004;    // number of waveguide modes N_c
    double eta = 0.0;      // spectral broadening; <= 0 selects the default below

    // Default broadening: five mean level spacings, 5 * (4 xi / N_c).
    double broadening() const { return eta > 0.0 ? eta : 20.0 * xi / n_modes; }

    double band_bottom() const { return omega_c - 2.0 * xi; }
    double band_top() const { return omega_c + 2.0 * xi; }

    void validate() const;  // throws ConfigError
};

/// Connection-point layout of the two giant atoms. Atom i couples to the
/// waveguide at x_i and x_i + n_i; x_i and n_i are real-valued so that
/// detuned geometries are representable.
struct Geometry {
    double x1 = 0.0;
    double x2 = 2.0;
    double n1 = 2.0;
    double n2 = 2.0;

    double dx() const { return x2 - x1; }
    double dn() const { return n2 - n1; }
    double lambda() const { return n1 / n2; }

    static Geometry from_dx(double x1, double dx, double n1, double n2) {
        return Geometry{x1, x1 + dx, n1, n2};
    }

    void validate() const;  // throws ConfigError
};

/// Uniform quasi-momentum grid covering one Brillouin zone (-pi, pi].
/// k_m = pi (2m - N_c) / N_c for m = 1..N_c; contains k = 0, and contains
/// +-pi/2 exactly when N_c is divisible by 4.
struct MomentumGrid {
    std::vector<double> k;

    int size() const { return static_cast<int>(k.size()); }
    double spacing() const { return 2.0 * std::acos(-1.0) / static_cast<double>(k.size()); }
    bool contains(double k0, double tol = 0.0) const;
};

MomentumGrid build_momentum_grid(int n_modes);

// omega_k = omega_c - 2 xi cos k
double dispersion(double k, const ModelParams& p);

// A_{k,n} = cos(k n / 2), the two-point interference amplitude of one atom
double form_factor(double k, double n);

// g_{ik} = (2g/sqrt(N_c)) A_{k,n_i} exp(-i k (x_i + n_i/2)), atom in {1,2}
cplx coupling_amplitude(int atom, double k, const ModelParams& p, const Geometry& geom);

// Phi_k = k (dx + dn/2), the relative phase between the atomic pathways
double propagation_phase(double k, const Geometry& geom);

// f_k^{+-} = |A_{k,n1} +- A_{k,n2} e^{i Phi_k}|^2
double interference_factor(double k, Channel ch, const Geometry& geom);

// W_k^{+-} = (g_{1k} +- g_{2k}) / sqrt(2); |W_k^{+-}|^2 = (2 g^2/N_c) f_k^{+-}
cplx effective_bell_coupling(double k, Channel ch, const ModelParams& p, const Geometry& geom);

} // namespace bicsim
