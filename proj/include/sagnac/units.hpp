#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sagnac/constants.hpp"

namespace sagnac {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

/// exp10 == no_pow10 marks scales that are not powers of ten; those fall
/// back to plain multiplication by to_si.
inline constexpr int no_pow10 = 9999;

struct UnitScale {
    std::string_view symbol;
    double to_si;
    int exp10;
};

/// Accepted spellings per SI target unit. "µ" and "μ" are the two
/// Unicode micro signs.
inline const UnitScale* unit_scales(std::string_view si_unit, std::size_t& count) {
    static const UnitScale length[] = {{"m", 1.0, 0},     {"cm", 1e-2, -2},
                                       {"mm", 1e-3, -3},  {"um", 1e-6, -6},
                                       {"µm", 1e-6, -6},  {"μm", 1e-6, -6},
                                       {"nm", 1e-9, -9}};
    static const UnitScale area[] = {{"m^2", 1.0, 0}, {"cm^2", 1e-4, -4}, {"mm^2", 1e-6, -6},
                                     {"um^2", 1e-12, -12}};
    static const UnitScale density[] = {{"m^-3", 1.0, 0}, {"cm^-3", 1e6, 6}, {"mm^-3", 1e9, 9}};
    static const UnitScale mass[] = {{"kg", 1.0, 0},
                                     {"g", 1e-3, -3},
                                     {"amu", constants.amu, no_pow10},
                                     {"u", constants.amu, no_pow10},
                                     {"Da", constants.amu, no_pow10}};
    static const UnitScale rate[] = {{"rad/s", 1.0, 0}};
    static const UnitScale dipole[] = {{"C m", 1.0, 0}, {"C*m", 1.0, 0},
                                       {"D", 3.33564e-30, no_pow10}};
    if (si_unit == "m") { count = std::size(length); return length; }
    if (si_unit == "m^2") { count = std::size(area); return area; }
    if (si_unit == "m^-3") { count = std::size(density); return density; }
    if (si_unit == "kg") { count = std::size(mass); return mass; }
    if (si_unit == "rad/s") { count = std::size(rate); return rate; }
    if (si_unit == "C m") { count = std::size(dipole); return dipole; }
    count = 0;
    return nullptr;
}

/// Rewrites a decimal number so its exponent grows by `shift`. Rescaling on
/// the text instead of multiplying keeps "500 nm" bit-identical to "5e-7 m".
inline bool shift_exponent(std::string& number, int shift) {
    long long exponent = 0;
    std::string mantissa = number;
    if (const auto pos = number.find_first_of("eE"); pos != std::string::npos) {
        mantissa = number.substr(0, pos);
        const std::string tail = number.substr(pos + 1);
        const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), exponent);
        if (ec != std::errc{} || ptr != tail.data() + tail.size()) return false;
    }
    number = mantissa + "e" + std::to_string(exponent + shift);
    return true;
}

inline double apply_scale(std::string_view number, double value, const UnitScale& scale) {
    if (scale.exp10 == 0) return value;
    if (scale.exp10 != no_pow10) {
        std::string shifted(number);
        if (shift_exponent(shifted, scale.exp10)) {
            double rescaled = 0.0;
            const auto [ptr, ec] =
                std::from_chars(shifted.data(), shifted.data() + shifted.size(), rescaled);
            if (ec == std::errc{} && ptr == shifted.data() + shifted.size()) return rescaled;
        }
    }
    return value * scale.to_si;
}

} // namespace detail

/// Parses "<number> [unit]" into the SI value for the requested unit, e.g.
/// parse_quantity("500 nm", "m") = 5e-7. A bare number is taken to already be
/// in the SI unit. An empty si_unit means dimensionless: no suffix allowed.
inline double parse_quantity(std::string_view text, std::string_view si_unit) {
    const std::string_view whole = detail::trim(text);
    if (whole.empty()) throw std::invalid_argument("empty value where a number was expected");
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), value);
    if (ec != std::errc{} || ptr == whole.data())
        throw std::invalid_argument("could not parse \"" + std::string(whole) + "\" as a number");
    const std::string_view suffix = detail::trim(whole.substr(ptr - whole.data()));
    if (suffix.empty()) return value;
    if (si_unit.empty())
        throw std::invalid_argument("\"" + std::string(whole) +
                                    "\": expected a dimensionless number, got unit \"" +
                                    std::string(suffix) + "\"");
    std::size_t count = 0;
    const detail::UnitScale* scales = detail::unit_scales(si_unit, count);
    const std::string_view number = whole.substr(0, ptr - whole.data());
    for (std::size_t i = 0; i < count; ++i)
        if (scales[i].symbol == suffix) return detail::apply_scale(number, value, scales[i]);
    throw std::invalid_argument("unit \"" + std::string(suffix) + "\" in \"" + std::string(whole) +
                                "\" not recognized; expected a quantity in " +
                                std::string(si_unit));
}

} // namespace sagnac
