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

#ifndef ZETACODE_ZETA_HPP
#define ZETACODE_ZETA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "common.hpp"
#include "enumerator.hpp"
#include "roots.hpp"

namespace zetacode {

/// Zeta polynomial P(T) = sum_j a_j T^j of a code or virtual enumerator,
/// together with the parameters it was computed from.
struct ZetaPolynomial {
    std::vector<Rational> coeffs;  ///< a_0 .. a_r, no trailing zeros (P = 0 is never produced)
    std::uint32_t q = 2;
    std::size_t n = 0, d = 0, d_dual = 0;
    long long g = 0, g_dual = 0;

    std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    Rational coeff(std::size_t j) const { return j < coeffs.size() ? coeffs[j] : Rational(0); }

    Rational operator()(const Rational& t) const {
        Rational v = 0;
        for (std::size_t j = coeffs.size(); j-- > 0;) v = v * t + coeffs[j];
        return v;
    }

    bool operator==(const ZetaPolynomial& o) const {
        return coeffs == o.coeffs && q == o.q && n == o.n && d == o.d && d_dual == o.d_dual && g == o.g &&
               g_dual == o.g_dual;
    }
};

/// Minimum distance of the MacWilliams image of F; n + 1 when the image is a multiple of x^n.
inline std::size_t dual_min_distance(const WeightEnumerator& f, std::uint32_t q) {
    const auto image = substitute(f, 1, static_cast<long long>(q) - 1, 1, -1);
    return image.min_distance().value_or(f.n() + 1);
}

/// k with |F(1,1)| = q^k, the dimension a code enumerator carries implicitly.
inline std::size_t infer_dimension(const WeightEnumerator& f, std::uint32_t q) {
    Rational total = f.total();
    if (total < 0) total = -total;
    if (!is_integer(total)) throw InvalidInput("cannot infer dimension: F(1,1) is not an integer");
    BigInt t = to_integer(total);
    std::size_t k = 0;
    while (t > 1 && t % q == 0) {
        t /= q;
        ++k;
    }
    if (t != 1) throw InvalidInput("cannot infer dimension: |F(1,1)| is not a power of q; pass k explicitly");
    return k;
}

namespace detail {

struct ZetaShape {
    std::size_t n, d, d_dual, k;
};

inline ZetaShape zeta_shape(const WeightEnumerator& a, std::uint32_t q, std::optional<std::size_t> k) {
    if (q < 2) throw InvalidInput("zeta: q must be at least 2");
    if (a[0] != 1) throw InvalidInput("zeta: enumerator must be normalized with f_0 = 1");
    const auto d = a.min_distance();
    if (!d) throw InvalidInput("zeta: enumerator x^n has no minimum distance");
    const std::size_t dd = dual_min_distance(a, q);
    if (dd < 2)
        throw InvalidInput("zeta: degenerate input (dual distance 1); puncture the zero coordinates first");
    const std::size_t dim = k ? *k : infer_dimension(a, q);
    return {a.n(), *d, dd, dim};
}

inline ZetaPolynomial finish_zeta(std::vector<Rational> a, std::uint32_t q, const ZetaShape& s) {
    const std::size_t r = s.n + 2 - s.d - s.d_dual;
    for (std::size_t j = r + 1; j < a.size(); ++j)
        if (a[j] != 0) throw InvariantViolation("zeta: nonzero coefficient above degree n + 2 - d - d_dual");
    a.resize(r + 1);
    ZetaPolynomial p;
    p.coeffs = std::move(a);
    p.q = q;
    p.n = s.n;
    p.d = s.d;
    p.d_dual = s.d_dual;
    const auto n = static_cast<long long>(s.n), k = static_cast<long long>(s.k);
    p.g = n + 1 - k - static_cast<long long>(s.d);
    p.g_dual = n + 1 - (n - k) - static_cast<long long>(s.d_dual);
    return p;
}

// b_{k,l} = sum_{i=l}^{k} ((q^{k-i+1} - 1)/(q - 1)) (-1)^{i-l} C(n,i) C(i,l), for 0 <= l <= k <= n - d.
class ChinenCache {
   public:
    using Table = std::vector<std::vector<BigInt>>;

    static ChinenCache& instance() {
        static ChinenCache cache;
        return cache;
    }

    std::shared_ptr<const Table> get(std::size_t n, std::size_t d, std::uint32_t q) {
        const auto key = std::make_tuple(n, d, q);
        {
            std::shared_lock lock(mu_);
            if (auto it = tables_.find(key); it != tables_.end()) return it->second;
        }
        auto table = std::make_shared<const Table>(build(n, d, q));
        std::unique_lock lock(mu_);
        return tables_.emplace(key, std::move(table)).first->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mu_);
        return tables_.size();
    }

   private:
    static Table build(std::size_t n, std::size_t d, std::uint32_t q) {
        const std::size_t top = n - d;
        Table b(top + 1, std::vector<BigInt>(top + 1, 0));
        for (std::size_t k = 0; k <= top; ++k)
            for (std::size_t l = 0; l <= k; ++l) {
                BigInt s = 0;
                for (std::size_t i = l; i <= k; ++i) {
                    BigInt term = (ipow(BigInt(q), k - i + 1) - 1) / (q - 1) * binomial(n, i) * binomial(i, l);
                    s += ((i - l) % 2 == 0) ? term : BigInt(-term);
                }
                b[k][l] = s;
            }
        return b;
    }

    mutable std::shared_mutex mu_;
    std::map<std::tuple<std::size_t, std::size_t, std::uint32_t>, std::shared_ptr<const Table>> tables_;
};

}  // namespace detail

/// Coefficients of A in the basis {M_{n,d}, ..., M_{n,n}, M_{n,n+1}} by
/// triangular elimination on the lowest unmatched weight.
inline ZetaPolynomial zeta_from_mds_basis(const WeightEnumerator& a, std::uint32_t q,
                                          std::optional<std::size_t> k = std::nullopt) {
    const auto shape = detail::zeta_shape(a, q, k);
    const std::size_t n = shape.n, d = shape.d;
    std::vector<Rational> residual = a.coeffs();
    std::vector<Rational> coef(n + 2 - d, Rational(0));
    for (std::size_t j = 0; d + j <= n; ++j) {
        const std::size_t i = d + j;
        if (residual[i] == 0) continue;
        const auto m = mds_enumerator(n, i, q);
        coef[j] = residual[i] / m[i];
        for (std::size_t t = 0; t <= n; ++t) residual[t] -= coef[j] * m[t];
    }
    coef[n + 1 - d] = residual[0];  // M_{n,n+1} = x^n
    residual[0] = 0;
    for (const auto& r : residual)
        if (r != 0) throw InvalidInput("zeta_from_mds_basis: nonzero remainder, input is not of the declared shape");
    return detail::finish_zeta(std::move(coef), q, shape);
}

/// Solves B a = (A_n, ..., A_d)/(q-1) with b_{k,l} from the generating
/// function (y(1-T) + xT)^n / ((1-T)(1-qT)). Requires d_dual >= 2.
inline ZetaPolynomial zeta_from_chinen(const WeightEnumerator& a, std::uint32_t q,
                                       std::optional<std::size_t> k = std::nullopt) {
    const auto shape = detail::zeta_shape(a, q, k);
    const std::size_t n = shape.n, d = shape.d, top = n - d;
    const auto table = detail::ChinenCache::instance().get(n, d, q);
    const auto& b = *table;
    std::vector<Rational> coef(top + 1, Rational(0));
    for (std::size_t j = 0; j <= top; ++j) {
        const std::size_t l = top - j;
        Rational rhs = a[d + j] / Rational(q - 1);
        for (std::size_t i = 0; i < j; ++i) rhs -= coef[i] * Rational(b[top - i][l]);
        const BigInt& diag = b[l][l];
        if (diag == 0) throw InvariantViolation("zeta_from_chinen: singular triangular system");
        coef[j] = rhs / Rational(diag);
    }
    return detail::finish_zeta(std::move(coef), q, shape);
}

/// Default zeta algorithm.
inline ZetaPolynomial zeta(const WeightEnumerator& a, std::uint32_t q, std::optional<std::size_t> k = std::nullopt) {
    return zeta_from_chinen(a, q, k);
}

/// P-perp(T) = q^g T^{g + g_dual} P(1/(qT)).
inline ZetaPolynomial functional_dual(const ZetaPolynomial& p) {
    const std::size_t r = p.degree();
    ZetaPolynomial out = p;
    for (std::size_t j = 0; j <= r; ++j)
        out.coeffs[j] = rpow(p.q, p.g - static_cast<long long>(r - j)) * p.coeffs[r - j];
    std::swap(out.d, out.d_dual);
    std::swap(out.g, out.g_dual);
    return out;
}

/// a_j = q^{j-g} a_{2g-j} for all j, the exact form of P(T/sqrt q) being self-reciprocal.
inline bool self_reciprocal_check(const ZetaPolynomial& p) {
    if (p.g < 0 || p.degree() != static_cast<std::size_t>(2 * p.g)) return false;
    const auto two_g = static_cast<std::size_t>(2 * p.g);
    for (std::size_t j = 0; j <= two_g; ++j)
        if (p.coeffs[j] != rpow(p.q, static_cast<long long>(j) - p.g) * p.coeffs[two_g - j]) return false;
    return true;
}

inline RhVerdict riemann_hypothesis(const ZetaPolynomial& p, double tol = kDefaultRhTolerance) {
    return circle_verdict(p.coeffs, p.q, tol);
}

/// P(0) = A_d/((q-1)C(n,d)) and A_{d+1}/(q-1) = C(n,d+1)(P(0)(q-d) + P'(0)).
inline bool corollary_ad_check(const ZetaPolynomial& p, const WeightEnumerator& a) {
    if (p.d_dual < 2 || a.n() != p.n) return false;
    const std::size_t n = p.n, d = p.d;
    const Rational q1(p.q - 1);
    const Rational p0 = p.coeff(0), p1 = p.coeff(1);
    if (p0 != a[d] / (q1 * Rational(binomial(n, d)))) return false;
    const Rational a_next = d + 1 <= n ? a[d + 1] : Rational(0);
    const Rational rhs = Rational(binomial(n, d + 1)) * (p0 * Rational(static_cast<long long>(p.q) -
                                                                       static_cast<long long>(d)) +
                                                         p1);
    return a_next / q1 == rhs;
}

struct RootDistance {
    Rational reciprocal_root_sum;  ///< sum over zeros alpha of 1/alpha, exactly -a_1/a_0
    Rational d_exact;              ///< q - sum 1/alpha - (A_{d+1}/A_d)(d+1)/(n-d)
    Rational d_bound;              ///< q - sum 1/alpha
    double d_bound_from_roots;     ///< the same bound from the numeric roots
};

inline RootDistance min_distance_from_roots(const ZetaPolynomial& p, const WeightEnumerator& a) {
    const std::size_t n = p.n, d = p.d;
    if (a[d] == 0) throw InvalidInput("min_distance_from_roots: A_d = 0");
    if (p.coeff(0) == 0) throw InvalidInput("min_distance_from_roots: P(0) = 0");
    RootDistance out;
    out.reciprocal_root_sum = -p.coeff(1) / p.coeff(0);
    out.d_bound = Rational(p.q) - out.reciprocal_root_sum;
    Rational correction = 0;
    if (d < n) correction = (a[d + 1] / a[d]) * Rational(d + 1, n - d);
    out.d_exact = out.d_bound - correction;
    double s = 0;
    for (const auto& r : polynomial_roots(p.coeffs)) s += (1.0 / r).real();
    out.d_bound_from_roots = static_cast<double>(p.q) - s;
    return out;
}

inline std::string format_polynomial(const ZetaPolynomial& p) {
    std::string out;
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
        Rational c = p.coeffs[j];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (j == 0)
            out += to_string(c);
        else {
            if (c != 1) out += to_string(c) + "*";
            out += j == 1 ? "T" : "T^" + std::to_string(j);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace zetacode

#endif
