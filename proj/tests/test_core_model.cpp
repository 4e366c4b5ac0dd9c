#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "sagnac/absorption.hpp"
#include "sagnac/medium.hpp"
#include "sagnac/phase.hpp"
#include "sagnac/report.hpp"
#include "sagnac/validity.hpp"

using namespace sagnac;
using Catch::Approx;

namespace {

// Reference species/probe used throughout: sodium-like atom, 500 nm probe,
// 1 mm^2 beam.
const AtomSpecies kSpecies{23.0 * constants.amu, 2.1e-29, 0.0};
const ProbeField kProbe{500e-9, 1e-6};

// Hand-evaluated oracle values for the reference pair, frozen. Each test
// also recomputes its oracle from first principles with an independent
// expression tree.
constexpr double kCouplingOracle = 29826.832479200304;      // rad/s per sqrt(m^-3)
constexpr double kVrecOracle = 0.034698371407195276;        // m/s
constexpr double kSOracle = 8639957607.285082;              // c/v_rec
constexpr double kVgrAtCritEta0 = 0.03469837140317924;      // c/(1 + c/v_rec)
constexpr double kXiAtTwoVrec = 1.0000000002314826;         // S/(S - 2)
constexpr double kEarthOpticalPhase = 1.919979350086023e-7; // rad
constexpr double kMatterPhaseOracle = 1658.8540191606003;   // 2 m Omega A/hbar
constexpr double kEnhancementLowXi = 8631326281.005077;     // at xi = 1e-3
constexpr double kEnhancementHighXi = 1.009999999998831;    // at xi = 100 S
constexpr double kFig3LeftKnee = 125.16470085804914;        // kappa L = 1
constexpr double kFig3RightKnee = 39737.85306632998;

constexpr double kEarthRate = 7.29e-5; // rad/s

// Uniform full-loop medium hitting a target xi and opacity. Density is set
// from the opacity target, the control Rabi frequency from xi.
MediumSegment medium_for(double xi, double eta, double temperature_ratio, double alpha,
                         double gamma, double length) {
    const double g = coupling_constant(kSpecies, kProbe);
    const double n = alpha * gamma * constants.c / (g * g * length);
    const double s = tan2_theta_critical(kProbe, kSpecies);
    const double rabi = g * std::sqrt(n) * std::sqrt(xi / s);
    return MediumSegment{length, n, gamma, ControlField{{rabi, 0.0}, eta}, temperature_ratio};
}

LoopGeometry uniform_loop_for(double xi, double eta, double temperature_ratio = 0.0,
                              double radius = 0.1, double alpha = 100.0, double gamma = 1e7) {
    return uniform_loop(radius,
                        medium_for(xi, eta, temperature_ratio, alpha, gamma, two_pi * radius));
}

} // namespace

TEST_CASE("coupling constant formula and scalings", "[medium]") {
    const double g = coupling_constant(kSpecies, kProbe);

    SECTION("independent recomputation and frozen value") {
        // different association order on purpose
        const double omega_p = two_pi * constants.c / kProbe.wavelength;
        const double oracle =
            kSpecies.dipole_moment / std::sqrt(2.0 * constants.hbar) *
            std::sqrt(omega_p / constants.eps0 / kProbe.beam_area);
        REQUIRE(g == Approx(oracle).epsilon(1e-12));
        REQUIRE(g == Approx(kCouplingOracle).epsilon(1e-12));
    }
    SECTION("linear in the dipole moment") {
        AtomSpecies doubled = kSpecies;
        doubled.dipole_moment *= 2.0;
        REQUIRE(coupling_constant(doubled, kProbe) == Approx(2.0 * g).epsilon(1e-15));
    }
    SECTION("inverse square root in the beam area") {
        ProbeField wide = kProbe;
        wide.beam_area *= 4.0;
        REQUIRE(coupling_constant(kSpecies, wide) == Approx(0.5 * g).epsilon(1e-15));
    }
}

TEST_CASE("group velocity limits and monotonicity", "[medium]") {
    const double v_rec = recoil_velocity(kProbe, kSpecies);
    REQUIRE(v_rec == Approx(kVrecOracle).epsilon(1e-12));

    SECTION("empty medium propagates at c") {
        REQUIRE(group_velocity(0.0, 1.0, v_rec) == constants.c);
    }
    SECTION("pure matter limit is v_rec at eta = 1") {
        REQUIRE(group_velocity(std::numeric_limits<double>::infinity(), 1.0, v_rec) == v_rec);
        // large but finite mixing angle approaches it from above
        REQUIRE(group_velocity(1e30, 1.0, v_rec) == Approx(v_rec).epsilon(1e-9));
    }
    SECTION("at the critical mixing angle with eta = 0") {
        const double crit = tan2_theta_critical(kProbe, kSpecies);
        const double oracle = constants.c / (1.0 + constants.c / v_rec);
        REQUIRE(group_velocity(crit, 0.0, v_rec) == Approx(oracle).epsilon(1e-12));
        REQUIRE(group_velocity(crit, 0.0, v_rec) == Approx(kVgrAtCritEta0).epsilon(1e-12));
    }
    SECTION("strictly decreasing in tan2_theta, infimum eta v_rec") {
        for (double eta : {0.0, 0.5, 1.0, 2.0}) {
            double prev = group_velocity(1e-8, eta, v_rec);
            for (double t = 1e-6; t < 1e19; t *= 100.0) {
                const double v = group_velocity(t, eta, v_rec);
                REQUIRE(v < prev);
                REQUIRE(v >= eta * v_rec);
                prev = v;
            }
        }
    }
}

TEST_CASE("xi parameter definition and inversion", "[medium]") {
    const double crit = tan2_theta_critical(kProbe, kSpecies);
    REQUIRE(crit == Approx(kSOracle).epsilon(1e-12));

    SECTION("definition ratios") {
        REQUIRE(xi_parameter(crit, crit) == 1.0);
        REQUIRE(xi_parameter(2.0 * crit, crit) == Approx(0.5).epsilon(1e-15));
    }
    SECTION("vacuum signals infinite xi") {
        REQUIRE(std::isinf(xi_parameter(0.0, crit)));
    }
    SECTION("inverting v_gr = 2 v_rec at eta = 1 lands on xi just above 1") {
        const double v_rec = recoil_velocity(kProbe, kSpecies);
        // bisect the monotone group velocity for tan2_theta
        double lo = 1.0, hi = 1e30;
        for (int i = 0; i < 200; ++i) {
            const double mid = std::sqrt(lo * hi);
            (group_velocity(mid, 1.0, v_rec) > 2.0 * v_rec ? lo : hi) = mid;
        }
        const double xi = xi_parameter(std::sqrt(lo * hi), crit);
        REQUIRE(xi == Approx(kXiAtTwoVrec).epsilon(1e-9));
        REQUIRE(xi == Approx(crit / (crit - 2.0)).epsilon(1e-9));
    }
}

TEST_CASE("derived medium quantities satisfy the construction identities", "[medium]") {
    std::mt19937 rng(20260819);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const double xi = std::pow(10.0, -6.0 + 18.0 * u(rng));
        const double eta = 2.0 * u(rng);
        const double alpha = std::pow(10.0, 2.0 * u(rng));
        const MediumSegment seg = medium_for(xi, eta, u(rng), alpha, 1e7, 0.1);
        const DerivedMediumQuantities q = derive_medium(seg, kProbe, kSpecies);

        const double cos2 = 1.0 / (1.0 + q.tan2_theta);
        const double sin2 = q.tan2_theta / (1.0 + q.tan2_theta);
        REQUIRE(constants.c * cos2 == Approx(q.xi * q.v_rec * sin2).epsilon(1e-12));
        REQUIRE(q.v_gr >= eta * q.v_rec);
        REQUIRE(q.xi == Approx(xi).epsilon(1e-12));
        REQUIRE(q.alpha == Approx(alpha).epsilon(1e-12));
    }
}

TEST_CASE("optical Sagnac phase", "[phase]") {
    const LoopGeometry loop = uniform_loop(0.1, vacuum_segment(1.0));

    SECTION("zero rotation gives zero phase") {
        REQUIRE(sagnac_phase_optical(loop, 0.0, kProbe) == 0.0);
    }
    SECTION("linear in the rotation rate") {
        const double p1 = sagnac_phase_optical(loop, kEarthRate, kProbe);
        const double p2 = sagnac_phase_optical(loop, 2.0 * kEarthRate, kProbe);
        REQUIRE(p2 == Approx(2.0 * p1).epsilon(1e-15));
    }
    SECTION("Earth rate, R = 0.1 m, 500 nm") {
        const double phase = sagnac_phase_optical(loop, kEarthRate, kProbe);
        const double oracle =
            4.0 * pi * kEarthRate * (pi * 0.1 * 0.1) / (500e-9 * 299792458.0);
        REQUIRE(phase == Approx(oracle).epsilon(1e-12));
        REQUIRE(phase == Approx(kEarthOpticalPhase).epsilon(1e-12));
    }
}

TEST_CASE("hybrid phase reduces to the optical phase at eta = 0", "[phase]") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> nseg(1, 5);

    for (int trial = 0; trial < 100; ++trial) {
        std::vector<MediumSegment> segs;
        const int n = nseg(rng);
        for (int i = 0; i < n; ++i) {
            const double length = std::pow(10.0, -4.0 + 4.0 * u(rng));
            if (u(rng) < 0.25) {
                segs.push_back(vacuum_segment(length));
            } else {
                const double xi = std::pow(10.0, -4.0 + 14.0 * u(rng));
                MediumSegment m =
                    medium_for(xi, 0.0, u(rng), std::pow(10.0, 2.0 * u(rng)), 1e7, length);
                segs.push_back(m);
            }
        }
        const LoopGeometry loop = loop_from_segments(std::move(segs));
        const double omega = std::pow(10.0, -8.0 + 6.0 * u(rng));
        const double hybrid = sagnac_phase_hybrid(loop, omega, kProbe, kSpecies);
        const double optical = sagnac_phase_optical(loop, omega, kProbe);
        REQUIRE(hybrid == Approx(optical).epsilon(1e-13));
    }
}

TEST_CASE("hybrid phase limits for a uniform eta = 1 medium", "[phase]") {
    SECTION("large xi approaches the optical phase") {
        const LoopGeometry loop = uniform_loop_for(1e14, 1.0);
        const double hybrid = sagnac_phase_hybrid(loop, kEarthRate, kProbe, kSpecies);
        const double optical = sagnac_phase_optical(loop, kEarthRate, kProbe);
        REQUIRE(hybrid == Approx(optical).epsilon(1e-4));
        REQUIRE(hybrid > optical); // matter admixture only adds phase
    }
    SECTION("small xi approaches the matter-wave phase 2 m Omega A/hbar") {
        const double matter_oracle =
            2.0 * kSpecies.mass * kEarthRate * (pi * 0.1 * 0.1) / constants.hbar;
        REQUIRE(matter_oracle == Approx(kMatterPhaseOracle).epsilon(1e-12));

        const LoopGeometry mild = uniform_loop_for(1e-3, 1.0);
        REQUIRE(sagnac_phase_hybrid(mild, kEarthRate, kProbe, kSpecies) ==
                Approx(matter_oracle).epsilon(2e-3));

        const LoopGeometry deep = uniform_loop_for(1e-6, 1.0);
        REQUIRE(sagnac_phase_hybrid(deep, kEarthRate, kProbe, kSpecies) ==
                Approx(matter_oracle).epsilon(1e-4));
    }
    SECTION("linearity in omega to machine precision") {
        const LoopGeometry loop = uniform_loop_for(2.5, 1.0);
        const double p1 = sagnac_phase_hybrid(loop, kEarthRate, kProbe, kSpecies);
        const double p2 = sagnac_phase_hybrid(loop, 2.0 * kEarthRate, kProbe, kSpecies);
        REQUIRE(p2 == Approx(2.0 * p1).epsilon(1e-15));
    }
    SECTION("pure function: identical inputs give bit-identical outputs") {
        const LoopGeometry loop = uniform_loop_for(3.7, 1.3, 0.5);
        const double a = sagnac_phase_hybrid(loop, kEarthRate, kProbe, kSpecies);
        const double b = sagnac_phase_hybrid(loop, kEarthRate, kProbe, kSpecies);
        REQUIRE(a == b);
    }
}

TEST_CASE("degenerate segment with xi = 0 and eta = 0 is rejected", "[phase]") {
    REQUIRE_THROWS_AS(light_weight(0.0, 0.0), std::domain_error);
    REQUIRE_THROWS_AS(matter_weight(0.0, 0.0), std::domain_error);
}

TEST_CASE("enhancement factor", "[phase]") {
    const double s = tan2_theta_critical(kProbe, kSpecies);

    SECTION("eta = 0 gives exactly 1 for any xi") {
        for (double xi : {1e-6, 1.0, 1e6}) {
            const LoopGeometry loop = uniform_loop_for(xi, 0.0);
            REQUIRE(enhancement_factor(loop, kEarthRate, kProbe, kSpecies) ==
                    Approx(1.0).epsilon(1e-13));
            REQUIRE(enhancement_uniform(xi, 0.0, s) == 1.0);
        }
    }
    SECTION("matter regime saturates at S") {
        REQUIRE(enhancement_uniform(1e-3, 1.0, s) == Approx(kEnhancementLowXi).epsilon(1e-12));
        REQUIRE(enhancement_uniform(1e-3, 1.0, s) == Approx(s).epsilon(2e-3));
        const LoopGeometry loop = uniform_loop_for(1e-3, 1.0);
        REQUIRE(enhancement_factor(loop, kEarthRate, kProbe, kSpecies) ==
                Approx(kEnhancementLowXi).epsilon(1e-9));
    }
    SECTION("light regime decays to 1") {
        REQUIRE(enhancement_uniform(100.0 * s, 1.0, s) ==
                Approx(kEnhancementHighXi).epsilon(1e-12));
    }
    SECTION("monotone decreasing in xi, bounded in [1, S]") {
        double prev = enhancement_uniform(1e-4, 1.0, s);
        for (double xi = 1e-3; xi < 1e13; xi *= 2.0) {
            const double e = enhancement_uniform(xi, 1.0, s);
            REQUIRE(e < prev);
            REQUIRE(e >= 1.0);
            REQUIRE(e <= s);
            prev = e;
        }
    }
    SECTION("undefined at omega = 0") {
        const LoopGeometry loop = uniform_loop_for(1.0, 1.0);
        REQUIRE_THROWS_AS(enhancement_factor(loop, 0.0, kProbe, kSpecies), std::domain_error);
    }
    SECTION("closed form matches the loop evaluation") {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 50; ++i) {
            const double xi = std::pow(10.0, -5.0 + 15.0 * u(rng));
            const double eta = 0.1 + 1.9 * u(rng);
            const LoopGeometry loop = uniform_loop_for(xi, eta);
            REQUIRE(enhancement_factor(loop, kEarthRate, kProbe, kSpecies) ==
                    Approx(enhancement_uniform(xi, eta, s)).epsilon(1e-9));
        }
    }
}

TEST_CASE("opacity", "[medium]") {
    const double g = coupling_constant(kSpecies, kProbe);

    SECTION("linear in density") {
        MediumSegment seg = medium_for(1.0, 1.0, 0.0, 50.0, 1e7, 0.01);
        const double alpha = opacity(seg, g);
        seg.density *= 2.0;
        REQUIRE(opacity(seg, g) == Approx(2.0 * alpha).epsilon(1e-15));
    }
    SECTION("vacuum has zero opacity") {
        REQUIRE(opacity(vacuum_segment(1.0), g) == 0.0);
    }
    SECTION("figure parameter sets are representable by choosing the density") {
        for (auto [alpha, length] : {std::pair{100.0, 100e-6}, std::pair{10.0, 1e-2}}) {
            const MediumSegment seg = medium_for(200.0, 1.0, 1.0, alpha, 1e7, length);
            REQUIRE(opacity(seg, g) == Approx(alpha).epsilon(1e-12));
        }
    }
}

TEST_CASE("absorption coefficient forms and knees", "[absorption]") {
    SECTION("general and fig3 bookkeepings coincide at eta = 1") {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            const double xi = std::pow(10.0, -2.0 + 10.0 * u(rng));
            const double kp_l = std::pow(10.0, 1.0 + 5.0 * u(rng));
            const double alpha = std::pow(10.0, 2.0 * u(rng));
            const double t = std::pow(10.0, 6.0 * u(rng));
            REQUIRE(kappa_l(xi, 1.0, kp_l, alpha, t, AbsorptionMode::general) ==
                    Approx(kappa_l(xi, 1.0, kp_l, alpha, t, AbsorptionMode::fig3))
                        .epsilon(1e-12));
        }
    }
    SECTION("eta = 0: general form vanishes, fig3 form is undefined") {
        REQUIRE(kappa_l(10.0, 0.0, 100.0, 10.0, 1.0, AbsorptionMode::general) == 0.0);
        REQUIRE_THROWS_AS(kappa_l(10.0, 0.0, 100.0, 10.0, 1.0, AbsorptionMode::fig3),
                          std::domain_error);
    }
    SECTION("kappa L = 1 knees for the two figure parameter sets") {
        const double kp = kProbe.wavenumber();
        // independent quadratic oracle: xi (xi+1) = (kp L)^2/alpha
        {
            const double c100 = (kp * 100e-6) * (kp * 100e-6) / 100.0;
            const double knee = 0.5 * (std::sqrt(1.0 + 4.0 * c100) - 1.0);
            REQUIRE(knee == Approx(kFig3LeftKnee).epsilon(1e-12));
            REQUIRE(kappa_l(knee, 1.0, kp * 100e-6, 100.0, 1.0, AbsorptionMode::fig3) ==
                    Approx(1.0).epsilon(1e-12));
        }
        {
            const double c10 = (kp * 1e-2) * (kp * 1e-2) / 10.0;
            const double knee = 0.5 * (std::sqrt(1.0 + 4.0 * c10) - 1.0);
            REQUIRE(knee == Approx(kFig3RightKnee).epsilon(1e-12));
            REQUIRE(kappa_l(knee, 1.0, kp * 1e-2, 10.0, 1.0, AbsorptionMode::fig3) ==
                    Approx(1.0).epsilon(1e-12));
        }
    }
    SECTION("linear in the temperature ratio") {
        for (double t : {0.5, 1.0, 1e3, 1e6}) {
            const double base = kappa_l(300.0, 1.0, 1256.6, 100.0, t, AbsorptionMode::fig3);
            const double scaled =
                kappa_l(300.0, 1.0, 1256.6, 100.0, 3.0 * t, AbsorptionMode::fig3);
            REQUIRE(scaled == Approx(3.0 * base).epsilon(1e-12));
        }
    }
    SECTION("segment-level evaluation matches the dimensionless form") {
        const MediumSegment seg = medium_for(200.0, 1.0, 1.0, 100.0, 1e7, 100e-6);
        const double direct =
            absorption_coefficient(seg, kProbe, kSpecies, AbsorptionMode::general);
        const double kp_l = kProbe.wavenumber() * seg.length;
        REQUIRE(direct ==
                Approx(kappa_l(200.0, 1.0, kp_l, 100.0, 1.0, AbsorptionMode::general))
                    .epsilon(1e-9));
        REQUIRE(absorption_coefficient(vacuum_segment(1.0), kProbe, kSpecies,
                                       AbsorptionMode::general) == 0.0);
    }
}

TEST_CASE("minimum xi for an absorption budget", "[absorption]") {
    const MediumSegment left = medium_for(200.0, 1.0, 1.0, 100.0, 1e7, 100e-6);

    SECTION("unbounded budget needs no slow-light margin") {
        REQUIRE(min_xi_for_absorption(left, kProbe, kSpecies, 1e30, AbsorptionMode::fig3) <
                1e-10);
    }
    SECTION("budget 1 lands on the knee") {
        REQUIRE(min_xi_for_absorption(left, kProbe, kSpecies, 1.0, AbsorptionMode::fig3) ==
                Approx(kFig3LeftKnee).epsilon(1e-12));
    }
    SECTION("plugging the minimum back reproduces the budget") {
        std::mt19937 rng(13);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 500; ++i) {
            const double eta = 0.05 + 1.95 * u(rng);
            const double t = std::pow(10.0, 6.0 * u(rng));
            const double budget = std::pow(10.0, -3.0 + 5.0 * u(rng));
            const double alpha = std::pow(10.0, 2.0 * u(rng));
            const double length = std::pow(10.0, -4.0 + 2.0 * u(rng));
            const MediumSegment seg = medium_for(1.0, eta, t, alpha, 1e7, length);
            for (auto mode : {AbsorptionMode::general, AbsorptionMode::fig3}) {
                const double xi_min =
                    min_xi_for_absorption(seg, kProbe, kSpecies, budget, mode);
                const double kl = kappa_l(xi_min, eta, kProbe.wavenumber() * length, alpha,
                                          t, mode);
                REQUIRE(kl == Approx(budget).epsilon(1e-9));
            }
        }
    }
    SECTION("monotone in the temperature ratio") {
        MediumSegment warm = left;
        warm.temperature_ratio *= 2.0;
        REQUIRE(min_xi_for_absorption(warm, kProbe, kSpecies, 1.0, AbsorptionMode::fig3) >
                min_xi_for_absorption(left, kProbe, kSpecies, 1.0, AbsorptionMode::fig3));
    }
}

TEST_CASE("collision-limited group velocity bound", "[absorption]") {
    SECTION("coherent sample has no collision limit") {
        MediumSegment seg = medium_for(1.0, 1.0, 1.0, 10.0, 1e7, 1e-2);
        REQUIRE(collision_limited_vgr_min(seg, kSpecies) == 0.0);
    }
    SECTION("gas cell: L = 1 cm, n = 1e11 cm^-3") {
        MediumSegment cell = medium_for(1.0, 1.0, 1.0, 10.0, 1e7, 1e-2);
        cell.density = 1e11 * 1e6; // cm^-3 to m^-3
        AtomSpecies atom = kSpecies;
        atom.cross_section = 1e-10 * 1e-4; // cm^2 to m^2
        REQUIRE(collision_limited_vgr_min(cell, atom) == Approx(10.0).epsilon(1e-12));
        atom.cross_section = 1e-12 * 1e-4;
        REQUIRE(collision_limited_vgr_min(cell, atom) == Approx(0.1).epsilon(1e-12));
        // sqrt(T/T_rec) scaling
        cell.temperature_ratio = 4.0;
        REQUIRE(collision_limited_vgr_min(cell, atom) == Approx(0.2).epsilon(1e-12));
    }
}

TEST_CASE("validity flags", "[validity]") {
    const double omega_r = kEarthRate * 0.1;

    SECTION("vacuum segment passes everything") {
        REQUIRE(validity_check(vacuum_segment(1.0), kProbe, kSpecies, omega_r).all());
    }
    SECTION("xi below the inverse opacity fails flag (c)") {
        const double alpha = 50.0;
        const MediumSegment seg =
            medium_for(1.0 / (2.0 * alpha), 1.0, 0.0, alpha, 1e7, 0.01);
        const ValidityFlags f = validity_check(seg, kProbe, kSpecies, omega_r);
        REQUIRE_FALSE(f.xi_above_inverse_opacity);
    }
    SECTION("knee point passes the opacity and absorption flags at the boundary") {
        const MediumSegment seg = medium_for(kFig3LeftKnee, 1.0, 1.0, 100.0, 1e7, 100e-6);
        const ValidityFlags f = validity_check(seg, kProbe, kSpecies, omega_r);
        REQUIRE(f.xi_above_inverse_opacity);
        REQUIRE(f.absorption_within_budget);
    }
    SECTION("fast rotation breaks the first-order treatment") {
        const ValidityFlags f =
            validity_check(vacuum_segment(1.0), kProbe, kSpecies, 0.1 * kVrecOracle);
        REQUIRE_FALSE(f.rotation_first_order);
    }
    SECTION("hot medium with weak control fails the Doppler comparisons") {
        const MediumSegment seg = medium_for(100.0, 1.0, 1e6, 100.0, 1e7, 100e-6);
        const ValidityFlags f = validity_check(seg, kProbe, kSpecies, omega_r);
        REQUIRE_FALSE(f.doppler_vs_control);
        REQUIRE_FALSE(f.doppler_vs_linewidth);
    }
}

TEST_CASE("report assembles phases, absorption and flags", "[report]") {
    const LoopGeometry loop = uniform_loop_for(200.0, 1.0, 1.0, 0.1, 100.0);
    const SagnacReport r = make_report(loop, kEarthRate, kProbe, kSpecies);
    REQUIRE(r.phase_optical == Approx(kEarthOpticalPhase).epsilon(1e-12));
    REQUIRE(r.enhancement == Approx(r.phase_hybrid / r.phase_optical).epsilon(1e-15));
    REQUIRE(r.kappa_l_total > 0.0);
    REQUIRE(r.flags.all() == false); // kappa L far above 1 for the full-loop medium
    REQUIRE(std::isnan(make_report(loop, 0.0, kProbe, kSpecies).enhancement));
}
