/*
   Copyright 2026 The zetacode Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ZETACODE_ROOTS_HPP
#define ZETACODE_ROOTS_HPP

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "common.hpp"

namespace zetacode {

inline constexpr double kDefaultRhTolerance = 1e-8;

/// Outcome of testing whether every root of a polynomial lies on |T| = 1/sqrt(q).
struct RhVerdict {
    bool holds = true;
    std::vector<std::complex<double>> roots;
    double max_deviation = 0.0;  ///< max over roots of | |T| sqrt(q) - 1 |
    double tolerance = kDefaultRhTolerance;
    double max_residual = 0.0;  ///< max |P(root)| / sum |a_j| |root|^j
    bool ill_conditioned = false;
};

namespace detail {

inline std::complex<long double> horner(const std::vector<long double>& c, std::complex<long double> z) {
    std::complex<long double> v = 0;
    for (std::size_t j = c.size(); j-- > 0;) v = v * z + c[j];
    return v;
}

inline std::complex<long double> horner_derivative(const std::vector<long double>& c, std::complex<long double> z) {
    std::complex<long double> v = 0;
    for (std::size_t j = c.size(); j-- > 1;) v = v * z + static_cast<long double>(j) * c[j];
    return v;
}

inline long double relative_residual(const std::vector<long double>& c, std::complex<long double> z) {
    long double scale = 0, zp = 1;
    for (auto a : c) {
        scale += std::fabs(a) * zp;
        zp *= std::abs(z);
    }
    return scale == 0 ? 0 : std::abs(horner(c, z)) / scale;
}

}  // namespace detail

/// Complex roots (with multiplicity) of sum_j coeffs[j] T^j: eigenvalues of
/// the companion matrix of the monic normalization, then one guarded Newton
/// step per root in extended precision.
inline std::vector<std::complex<double>> polynomial_roots(const std::vector<Rational>& coeffs,
                                                          double* max_residual = nullptr) {
    std::size_t deg = coeffs.size();
    while (deg > 0 && coeffs[deg - 1] == 0) --deg;
    if (deg <= 1) {
        if (max_residual) *max_residual = 0;
        return {};
    }
    --deg;
    std::vector<long double> c(deg + 1);
    for (std::size_t j = 0; j <= deg; ++j) c[j] = static_cast<long double>(coeffs[j] / coeffs[deg]);

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
    for (std::size_t i = 1; i < deg; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1;
    for (std::size_t i = 0; i < deg; ++i)
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = -static_cast<double>(c[i]);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw InvariantViolation("companion eigenvalue iteration did not converge");

    std::vector<std::complex<double>> roots;
    long double worst = 0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        std::complex<long double> z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
        const auto dp = detail::horner_derivative(c, z);
        if (std::abs(dp) > 0) {
            const std::complex<long double> refined = z - detail::horner(c, z) / dp;
            if (detail::relative_residual(c, refined) < detail::relative_residual(c, z)) z = refined;
        }
        worst = std::max(worst, detail::relative_residual(c, z));
        roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    if (max_residual) *max_residual = static_cast<double>(worst);
    return roots;
}

/// Tests | |T| sqrt(q) - 1 | <= tol for every root. Constant polynomials hold vacuously.
inline RhVerdict circle_verdict(const std::vector<Rational>& coeffs, std::uint32_t q,
                                double tol = kDefaultRhTolerance) {
    if (!(tol > 0)) throw InvalidInput("RH tolerance must be positive");
    RhVerdict v;
    v.tolerance = tol;
    v.roots = polynomial_roots(coeffs, &v.max_residual);
    const double sq = std::sqrt(static_cast<double>(q));
    for (const auto& r : v.roots) v.max_deviation = std::max(v.max_deviation, std::fabs(std::abs(r) * sq - 1.0));
    v.holds = v.max_deviation <= tol;
    // Nearly coincident roots lose about half their digits in double precision.
    for (std::size_t i = 0; i < v.roots.size(); ++i)
        for (std::size_t j = i + 1; j < v.roots.size(); ++j)
            if (std::abs(v.roots[i] - v.roots[j]) < 1e-6) v.ill_conditioned = true;
    return v;
}

}  // namespace zetacode

#endif
