#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qroots {

/// Univariate polynomial with real coefficients, stored in ascending degree.
struct RealPolynomial {
    std::vector<double> coeffs;

    RealPolynomial() = default;
    explicit RealPolynomial(std::vector<double> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    double eval(double x) const {
        double acc = 0.0;
        for (std::size_t m = coeffs.size(); m-- > 0;) acc = acc * x + coeffs[m];
        return acc;
    }

    std::complex<double> eval(std::complex<double> x) const {
        std::complex<double> acc = 0.0;
        for (std::size_t m = coeffs.size(); m-- > 0;) acc = acc * x + coeffs[m];
        return acc;
    }

    bool operator==(const RealPolynomial&) const = default;
};

}  // namespace qroots
