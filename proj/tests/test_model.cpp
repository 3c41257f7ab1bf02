#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bicsim/model.hpp"

using namespace bicsim;

namespace {
constexpr double pi = std::numbers::pi;

ModelParams params(double g = 0.1, int nc = 2004) {
    ModelParams p;
    p.g = g;
    p.n_modes = nc;
    return p;
}
} // namespace

TEST_CASE("momentum grid covers (-pi, pi] with exact special points") {
    const MomentumGrid g4 = build_momentum_grid(4);
    REQUIRE(g4.size() == 4);
    CHECK(g4.k[0] == -pi / 2);
    CHECK(g4.k[1] == 0.0);
    CHECK(g4.k[2] == pi / 2);
    CHECK(g4.k[3] == pi);

    const MomentumGrid big = build_momentum_grid(2004);
    CHECK(big.contains(pi / 2));   // exact membership
    CHECK(big.contains(-pi / 2));
    CHECK(big.contains(0.0));
    CHECK(big.k.front() > -pi);
    CHECK(big.k.back() == pi);

    // spacing is uniform at 2 pi / N_c
    const double h = 2.0 * pi / 2004.0;
    for (int m = 1; m < big.size(); ++m)
        CHECK(std::abs(big.k[m] - big.k[m - 1] - h) < 1e-15);
}

TEST_CASE("momentum grid for N_c = 6 has no resonant pi/2 point") {
    const MomentumGrid g6 = build_momentum_grid(6);
    // enumerate all six points and test membership directly
    REQUIRE(g6.size() == 6);
    bool has_half_pi = false;
    for (double k : g6.k) has_half_pi = has_half_pi || k == pi / 2;
    CHECK_FALSE(has_half_pi);
}

TEST_CASE("odd mode counts are an invalid discretization") {
    CHECK_THROWS_AS(build_momentum_grid(5), ConfigError);
    CHECK_THROWS_AS(build_momentum_grid(0), ConfigError);
    ModelParams p = params();
    p.n_modes = 7;
    CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("dispersion spans the band omega_c +- 2 xi") {
    ModelParams p = params();
    CHECK(dispersion(0.0, p) == doctest::Approx(p.omega_c - 2.0 * p.xi).epsilon(1e-15));
    CHECK(dispersion(pi / 2, p) == doctest::Approx(p.omega_c).epsilon(1e-15));

    ModelParams q = params();
    q.omega_c = 0.0;
    q.xi = 1.0;
    CHECK(dispersion(pi / 3, q) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("form factor zeros and normalization") {
    CHECK(std::abs(form_factor(pi / 2, 2.0)) < 1e-15);
    CHECK(form_factor(0.0, 7.31) == 1.0);
    CHECK(form_factor(pi / 2, 1.0) == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    // even in k
    CHECK(form_factor(1.234, 3.3) == form_factor(-1.234, 3.3));
}

TEST_CASE("coupling amplitude magnitude and phase") {
    const ModelParams p = params(0.1, 4);

    SUBCASE("k = 0 is real, positive and geometry independent") {
        const Geometry a = Geometry::from_dx(0.0, 1.0, 1.0, 2.0);
        const Geometry b = Geometry::from_dx(5.0, -2.0, 3.0, 0.7);
        for (int atom : {1, 2}) {
            const cplx ga = coupling_amplitude(atom, 0.0, p, a);
            const cplx gb = coupling_amplitude(atom, 0.0, p, b);
            CHECK(ga.real() == doctest::Approx(2.0 * p.g / 2.0).epsilon(1e-15));
            CHECK(ga.imag() == 0.0);
            CHECK(gb == ga);
        }
    }

    SUBCASE("robust separation kills the resonant coupling") {
        const Geometry geom = Geometry::from_dx(0.3, 1.0, 2.0, 2.0);
        CHECK(std::abs(coupling_amplitude(1, pi / 2, p, geom)) < 1e-16);
    }

    SUBCASE("worked value at k = pi/2, n = 1, x = 0") {
        const Geometry geom = Geometry::from_dx(0.0, 1.0, 1.0, 1.0);
        const cplx g1 = coupling_amplitude(1, pi / 2, p, geom);
        CHECK(g1.real() == doctest::Approx(0.05).epsilon(1e-14));
        CHECK(g1.imag() == doctest::Approx(-0.05).epsilon(1e-14));
    }

    SUBCASE("atom index is validated") {
        const Geometry geom{};
        CHECK_THROWS_AS(coupling_amplitude(3, 0.1, p, geom), ConfigError);
    }
}

TEST_CASE("propagation phase") {
    SUBCASE("vanishes for coincident symmetric atoms") {
        const Geometry geom = Geometry::from_dx(0.7, 0.0, 1.5, 1.5);
        for (double k : {0.1, 1.0, 2.5}) CHECK(propagation_phase(k, geom) == 0.0);
    }
    SUBCASE("worked value") {
        const Geometry geom = Geometry::from_dx(0.0, 1.0, 1.0, 2.0);
        CHECK(propagation_phase(pi / 2, geom) == doctest::Approx(3.0 * pi / 4).epsilon(1e-15));
    }
    SUBCASE("odd in k") {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        for (int i = 0; i < 100; ++i) {
            const Geometry geom = Geometry::from_dx(u(rng), u(rng), std::abs(u(rng)) + 0.1,
                                                    std::abs(u(rng)) + 0.1);
            const double k = u(rng);
            CHECK(propagation_phase(-k, geom) == -propagation_phase(k, geom));
        }
    }
}

TEST_CASE("interference factor") {
    SUBCASE("identical amplitudes split 4A^2 / 0 between channels") {
        const Geometry geom = Geometry::from_dx(0.0, 0.0, 1.3, 1.3);
        for (double k : {0.3, 0.9, 2.2}) {
            const double a = form_factor(k, 1.3);
            CHECK(interference_factor(k, Channel::plus, geom) ==
                  doctest::Approx(4.0 * a * a).epsilon(1e-14));
            CHECK(interference_factor(k, Channel::minus, geom) == 0.0);
        }
    }

    SUBCASE("worked value: one form factor vanishing makes both channels A1^2") {
        const Geometry geom = Geometry::from_dx(0.0, 1.0, 1.0, 2.0);
        CHECK(interference_factor(pi / 2, Channel::plus, geom) ==
              doctest::Approx(0.5).epsilon(1e-14));
        CHECK(interference_factor(pi / 2, Channel::minus, geom) ==
              doctest::Approx(0.5).epsilon(1e-14));
    }

    SUBCASE("even in k for random geometries") {
        std::mt19937 rng(23);
        std::uniform_real_distribution<double> u(0.2, 4.0);
        std::uniform_real_distribution<double> uk(-pi, pi);
        for (int i = 0; i < 1000; ++i) {
            const Geometry geom = Geometry::from_dx(u(rng), u(rng) - 2.0, u(rng), u(rng));
            const double k = uk(rng);
            for (Channel ch : {Channel::plus, Channel::minus})
                CHECK(interference_factor(k, ch, geom) == interference_factor(-k, ch, geom));
        }
    }

    SUBCASE("invariant under geometric rescaling (n, dx, k) -> (c n, c dx, k/c)") {
        std::mt19937 rng(37);
        std::uniform_real_distribution<double> u(0.3, 3.0);
        for (int i = 0; i < 200; ++i) {
            const double n1 = u(rng), n2 = u(rng), dx = u(rng) - 1.5, k = u(rng), c = u(rng);
            const Geometry geom = Geometry::from_dx(0.0, dx, n1, n2);
            const Geometry scaled = Geometry::from_dx(0.0, c * dx, c * n1, c * n2);
            for (Channel ch : {Channel::plus, Channel::minus})
                CHECK(interference_factor(k / c, ch, scaled) ==
                      doctest::Approx(interference_factor(k, ch, geom)).epsilon(1e-12));
        }
    }
}

TEST_CASE("lambda is a pure ratio") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.2, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double n1 = u(rng), n2 = u(rng), c = u(rng);
        const Geometry a = Geometry::from_dx(0, 1, n1, n2);
        const Geometry b = Geometry::from_dx(0, 1, c * n1, c * n2);
        CHECK(b.lambda() == doctest::Approx(a.lambda()).epsilon(1e-14));
    }
    CHECK_THROWS_AS(Geometry::from_dx(0, 1, -1.0, 2.0).validate(), ConfigError);
}

TEST_CASE("effective Bell coupling") {
    const ModelParams p = params();

    SUBCASE("antisymmetric channel decouples for identical couplings") {
        const Geometry geom = Geometry::from_dx(0.0, 0.0, 2.0, 2.0);
        for (double k : {0.2, 1.1, 2.9})
            CHECK(std::abs(effective_bell_coupling(k, Channel::minus, p, geom)) == 0.0);
    }

    SUBCASE("Bell rotation preserves the total coupling weight") {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> u(0.2, 4.0);
        std::uniform_real_distribution<double> uk(-pi, pi);
        for (int i = 0; i < 500; ++i) {
            const Geometry geom = Geometry::from_dx(u(rng), u(rng) - 2.0, u(rng), u(rng));
            const double k = uk(rng);
            const double wp = std::norm(effective_bell_coupling(k, Channel::plus, p, geom));
            const double wm = std::norm(effective_bell_coupling(k, Channel::minus, p, geom));
            const double g1 = std::norm(coupling_amplitude(1, k, p, geom));
            const double g2 = std::norm(coupling_amplitude(2, k, p, geom));
            CHECK(wp + wm == doctest::Approx(g1 + g2).epsilon(1e-12));

            // channel identity against the form factors
            const double a1 = form_factor(k, geom.n1);
            const double a2 = form_factor(k, geom.n2);
            CHECK((wp + wm) * p.n_modes / (4.0 * p.g * p.g) ==
                  doctest::Approx(a1 * a1 + a2 * a2).epsilon(1e-12));

            // |W^{+-}|^2 = (2 g^2 / N_c) f^{+-}
            CHECK(wp * p.n_modes / (2.0 * p.g * p.g) ==
                  doctest::Approx(interference_factor(k, Channel::plus, geom)).epsilon(1e-12));
            CHECK(wm * p.n_modes / (2.0 * p.g * p.g) ==
                  doctest::Approx(interference_factor(k, Channel::minus, geom)).epsilon(1e-12));
        }
    }

    SUBCASE("worked value at the half-split geometry") {
        const Geometry geom = Geometry::from_dx(0.0, 1.0, 1.0, 2.0);
        const double expect = 2.0 * p.g * p.g / p.n_modes * 0.5;
        CHECK(std::norm(effective_bell_coupling(pi / 2, Channel::plus, p, geom)) ==
              doctest::Approx(expect).epsilon(1e-12));
        CHECK(std::norm(effective_bell_coupling(pi / 2, Channel::minus, p, geom)) ==
              doctest::Approx(expect).epsilon(1e-12));
    }
}
