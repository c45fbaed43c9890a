#pragma once

#include <complex>
#include <span>
#include <vector>

namespace mwgates {

using Complex = std::complex<double>;

/// Chain (ABCD) matrix of a reciprocal two-port. b carries ohms, c siemens.
struct TwoPortAbcd {
    Complex a{1.0};
    Complex b{0.0};
    Complex c{0.0};
    Complex d{1.0};

    Complex determinant() const { return a * d - b * c; }
};

/// Two-port scattering parameters at a common real reference impedance z0.
///
/// Phase convention: s_params() performs the textbook ABCD->S conversion,
/// which corresponds to the e^{+j omega t} time dependence; a matched line of
/// electrical length phi then has s21 = e^{-i phi}.  The physics convention
/// used throughout this toolkit (e^{-i omega t}, matched line contributes
/// e^{+i phi}) is obtained with wave_convention().  All reported S21 values
/// follow the physics convention.
struct SMatrix {
    Complex s11, s12, s21, s22;
    double z0{50.0};
};

/// Series impedance element: [[1, Z], [0, 1]].
TwoPortAbcd abcd_series(Complex z);

/// Lossless transmission-line segment of electrical length phi (radians)
/// and characteristic impedance z0.
TwoPortAbcd abcd_line(double phi, double z0);

/// Left-to-right cascade in propagation order.
TwoPortAbcd cascade(std::span<const TwoPortAbcd> elements);
TwoPortAbcd cascade(const TwoPortAbcd& lhs, const TwoPortAbcd& rhs);

/// Standard ABCD -> S conversion with equal source/load impedance z0.
SMatrix s_params(const TwoPortAbcd& m, double z0);

/// Conjugate all entries: switches to the e^{-i omega t} wave convention.
SMatrix wave_convention(const SMatrix& s);

} // namespace mwgates
