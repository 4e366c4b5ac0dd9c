#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "sagnac/constants.hpp"

namespace sagnac {

/// Working atom of the interferometer medium.
struct AtomSpecies {
    double mass = 0.0;          ///< [kg]
    double dipole_moment = 0.0; ///< probe-transition dipole moment d [C m]
    double cross_section = 0.0; ///< velocity-changing collision cross section [m^2]
};

inline void validate(const AtomSpecies& s) {
    if (!(s.mass > 0.0))
        throw std::invalid_argument("AtomSpecies: mass must be > 0");
    if (!(s.dipole_moment > 0.0))
        throw std::invalid_argument("AtomSpecies: dipole_moment must be > 0");
    if (!(s.cross_section >= 0.0))
        throw std::invalid_argument("AtomSpecies: cross_section must be >= 0");
}

/// Probe beam: wavelength plus transverse cross section F.
struct ProbeField {
    double wavelength = 0.0; ///< [m]
    double beam_area = 0.0;  ///< [m^2]

    double wavenumber() const { return two_pi / wavelength; }
    double angular_frequency() const { return constants.c * wavenumber(); }
};

inline void validate(const ProbeField& p) {
    if (!(p.wavelength > 0.0))
        throw std::invalid_argument("ProbeField: wavelength must be > 0");
    if (!(p.beam_area > 0.0))
        throw std::invalid_argument("ProbeField: beam_area must be > 0");
}

/// Control (coupling) field of one medium segment. eta = 1 - k_c_parallel/k_p
/// is the net photon momentum handed to the atom per Raman transfer, in units
/// of hbar k_p: 0 for co-propagating degenerate beams, 2 for counter-propagating.
struct ControlField {
    std::complex<double> rabi_frequency{0.0, 0.0}; ///< Omega_c [rad/s]
    double eta = 1.0;                              ///< dimensionless, in [0, 2]
};

inline void validate(const ControlField& f) {
    if (!(std::abs(f.rabi_frequency) > 0.0))
        throw std::invalid_argument("ControlField: |rabi_frequency| must be > 0");
    if (f.eta < 0.0)
        throw std::invalid_argument(
            "ControlField: eta < 0 rejected; with negative momentum transfer the "
            "medium becomes opaque as soon as the group velocity crosses zero");
    if (f.eta > 2.0)
        throw std::invalid_argument(
            "ControlField: eta > 2 is unphysical for optical control beams");
}

/// One stretch of the loop periphery. density = 0 marks a vacuum segment;
/// vacuum segments ignore gamma, control and temperature_ratio.
struct MediumSegment {
    double length = 0.0;  ///< [m]
    double density = 0.0; ///< n [m^-3]
    double gamma = 0.0;   ///< excited-state decay rate [rad/s]
    ControlField control{};
    double temperature_ratio = 0.0; ///< <v^2>/v_rec^2

    bool is_vacuum() const { return density == 0.0; }
};

inline void validate(const MediumSegment& s) {
    if (!(s.length > 0.0))
        throw std::invalid_argument("MediumSegment: length must be > 0");
    if (!(s.density >= 0.0))
        throw std::invalid_argument("MediumSegment: density must be >= 0");
    if (!(s.temperature_ratio >= 0.0))
        throw std::invalid_argument("MediumSegment: temperature_ratio must be >= 0");
    if (!s.is_vacuum()) {
        if (!(s.gamma > 0.0))
            throw std::invalid_argument("MediumSegment: gamma must be > 0 when density > 0");
        validate(s.control);
    }
}

inline MediumSegment vacuum_segment(double length) {
    return MediumSegment{length, 0.0, 0.0, ControlField{}, 0.0};
}

/// Closed circular loop of radius R tiled by ordered segments. The segment
/// lengths must sum to the circumference within 1e-9 relative.
struct LoopGeometry {
    double radius = 0.0; ///< R [m]
    std::vector<MediumSegment> segments;

    double circumference() const { return two_pi * radius; }
    double area() const { return pi * radius * radius; }
};

inline void validate(const LoopGeometry& loop) {
    if (!(loop.radius > 0.0))
        throw std::invalid_argument("LoopGeometry: radius must be > 0");
    if (loop.segments.empty())
        throw std::invalid_argument("LoopGeometry: at least one segment required");
    double total = 0.0;
    for (const auto& s : loop.segments) {
        validate(s);
        total += s.length;
    }
    const double target = loop.circumference();
    if (std::abs(total - target) > 1e-9 * target)
        throw std::invalid_argument(
            "LoopGeometry: segment lengths must tile the circumference "
            "(got " + std::to_string(total) + " m for 2*pi*R = " +
            std::to_string(target) + " m)");
}

/// Builds the loop whose radius matches the given segments exactly,
/// R = sum(L)/(2 pi).
inline LoopGeometry loop_from_segments(std::vector<MediumSegment> segments) {
    double total = 0.0;
    for (const auto& s : segments) total += s.length;
    LoopGeometry loop{total / two_pi, std::move(segments)};
    validate(loop);
    return loop;
}

/// Single medium segment covering the whole periphery.
inline LoopGeometry uniform_loop(double radius, MediumSegment prototype) {
    prototype.length = two_pi * radius;
    LoopGeometry loop{radius, {std::move(prototype)}};
    validate(loop);
    return loop;
}

/// Given segments plus a vacuum filler completing the periphery of a loop of
/// radius R. Errors if the segments already overrun the circumference.
inline LoopGeometry loop_with_vacuum_filler(double radius, std::vector<MediumSegment> segments) {
    double total = 0.0;
    for (const auto& s : segments) total += s.length;
    const double target = two_pi * radius;
    const double rest = target - total;
    if (rest < -1e-9 * target)
        throw std::invalid_argument("LoopGeometry: segments longer than the loop circumference");
    if (rest > 1e-9 * target) segments.push_back(vacuum_segment(rest));
    LoopGeometry loop{radius, std::move(segments)};
    validate(loop);
    return loop;
}

} // namespace sagnac
