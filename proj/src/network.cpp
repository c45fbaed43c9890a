#include "mwgates/network.hpp"

#include <cmath>
#include <stdexcept>

namespace mwgates {

TwoPortAbcd abcd_series(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("abcd_series: impedance must be finite");
    }
    return {1.0, z, 0.0, 1.0};
}

TwoPortAbcd abcd_line(double phi, double z0) {
    if (!(z0 > 0.0) || !std::isfinite(phi)) {
        throw std::invalid_argument("abcd_line: need z0 > 0 and finite phi");
    }
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {c, Complex(0.0, z0 * s), Complex(0.0, s / z0), c};
}

TwoPortAbcd cascade(const TwoPortAbcd& lhs, const TwoPortAbcd& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

TwoPortAbcd cascade(std::span<const TwoPortAbcd> elements) {
    if (elements.empty()) {
        throw std::invalid_argument("cascade: element list is empty");
    }
    TwoPortAbcd acc = elements[0];
    for (std::size_t i = 1; i < elements.size(); ++i) {
        acc = cascade(acc, elements[i]);
    }
    return acc;
}

SMatrix s_params(const TwoPortAbcd& m, double z0) {
    if (!(z0 > 0.0)) {
        throw std::invalid_argument("s_params: need z0 > 0");
    }
    const Complex den = m.a + m.b / z0 + m.c * z0 + m.d;
    if (std::abs(den) < 1e-300) {
        throw std::domain_error("s_params: singular network (vanishing denominator)");
    }
    SMatrix s;
    s.z0 = z0;
    s.s11 = (m.a + m.b / z0 - m.c * z0 - m.d) / den;
    s.s12 = 2.0 * m.determinant() / den;
    s.s21 = 2.0 / den;
    s.s22 = (-m.a + m.b / z0 - m.c * z0 + m.d) / den;
    return s;
}

SMatrix wave_convention(const SMatrix& s) {
    return {std::conj(s.s11), std::conj(s.s12), std::conj(s.s21), std::conj(s.s22), s.z0};
}

} // namespace mwgates
