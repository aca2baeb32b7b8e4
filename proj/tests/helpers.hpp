#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "qroots/qpoly.hpp"
#include "qroots/quaternion.hpp"

namespace qroots::testing {

/// n-fold multiplication, the oracle for the power reduction.
inline Quaternion mul_chain(const Quaternion& w, int n) {
    Quaternion acc = Quaternion::one();
    for (int i = 0; i < n; ++i) acc = acc * w;
    return acc;
}

inline double max_component_gap(const Quaternion& a, const Quaternion& b) {
    const Quaternion d = a - b;
    return std::max({std::abs(d.s), std::abs(d.x), std::abs(d.y), std::abs(d.z)});
}

/// Plain real convolution, the oracle for expanded coefficient lists.
inline std::vector<double> real_convolve(const std::vector<double>& a,
                                         const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline QuatPolynomial from_reals(const std::vector<double>& coeffs,
                                 Side side = Side::right) {
    QuatPolynomial poly;
    poly.side = side;
    for (double c : coeffs) poly.coeffs.push_back(Quaternion::real(c));
    return poly;
}

}  // namespace qroots::testing
