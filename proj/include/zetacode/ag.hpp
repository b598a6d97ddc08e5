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

#ifndef ZETACODE_AG_HPP
#define ZETACODE_AG_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "common.hpp"
#include "curve.hpp"
#include "linear_code.hpp"

namespace zetacode {

// ---------------------------------------------------------------------------
// Generalized Reed-Solomon codes (genus 0)
// ---------------------------------------------------------------------------

/// Rows i = 0..k-1 are (v_1 a_1^i, ..., v_n a_n^i).
inline LinearCode grs_code(const FieldPtr& spec, const std::vector<std::uint32_t>& alphas,
                           const std::vector<std::uint32_t>& multipliers, std::size_t k) {
    const std::size_t n = alphas.size();
    if (n == 0 || n > spec->q()) throw InvalidInput("grs_code: need 1 <= n <= q evaluation points");
    if (multipliers.size() != n) throw InvalidInput("grs_code: one multiplier per evaluation point");
    if (k < 1 || k > n) throw InvalidInput("grs_code: need 1 <= k <= n");
    std::set<std::uint32_t> seen;
    for (auto a : alphas) {
        if (a >= spec->q()) throw InvalidInput("grs_code: evaluation point out of field range");
        if (!seen.insert(a).second) throw InvalidInput("grs_code: repeated evaluation point " + std::to_string(a));
    }
    for (auto v : multipliers)
        if (v == 0 || v >= spec->q()) throw InvalidInput("grs_code: multipliers must be nonzero field elements");
    Matrix g(spec, k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) g.at(i, j) = spec->mul(multipliers[j], spec->pow(alphas[j], i));
    return LinearCode(std::move(g));
}

inline LinearCode grs_code(const FieldPtr& spec, std::size_t n, std::size_t k) {
    std::vector<std::uint32_t> alphas(n), ones(n, 1);
    std::iota(alphas.begin(), alphas.end(), 0u);
    return grs_code(spec, alphas, ones, k);
}

// ---------------------------------------------------------------------------
// One-point elliptic codes C_L(D, kO)
// ---------------------------------------------------------------------------

/// Exponents (i, j) of the monomials x^i y^j spanning L(kO): j in {0,1}, 2i + 3j <= k.
inline std::vector<std::pair<std::size_t, std::size_t>> riemann_roch_basis(std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    for (std::size_t pole = 0; pole <= k; ++pole) {
        if (pole == 1) continue;
        if (pole % 2 == 0)
            basis.emplace_back(pole / 2, 0);
        else
            basis.emplace_back((pole - 3) / 2, 1);
    }
    return basis;
}

inline LinearCode elliptic_code(const EllipticCurve& e, std::size_t k,
                                std::optional<std::vector<CurvePoint>> eval_points = std::nullopt) {
    std::vector<CurvePoint> pts;
    if (eval_points) {
        pts = *eval_points;
    } else {
        for (const auto& p : points(e))
            if (!p.infinity) pts.push_back(p);
    }
    const std::size_t n = pts.size();
    for (const auto& p : pts) {
        if (p.infinity) throw InvalidInput("elliptic_code: O is the support of G and cannot be an evaluation point");
        if (!e.contains(p)) throw InvalidInput("elliptic_code: evaluation point " + to_string(p) + " not on curve");
    }
    if (std::set<CurvePoint>(pts.begin(), pts.end()).size() != n)
        throw InvalidInput("elliptic_code: repeated evaluation point");
    if (k < 1 || k >= n) throw InvalidInput("elliptic_code: need 1 <= k < n");
    const auto& f = *e.spec();
    const auto basis = riemann_roch_basis(k);
    Matrix g(e.spec(), basis.size(), n);
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const auto [i, j] = basis[r];
            g.at(r, c) = f.mul(f.pow(pts[c].x, i), j ? pts[c].y : 1u);
        }
    return LinearCode(std::move(g));
}

/// Distribution of an [n, k, n-k] elliptic code from its count of minimum-weight words:
/// A_{n-k+l} = C(n,k-l) sum_{i<l} (-1)^i C(n-k+l,i)(q^{l-i}-1) + (-1)^l C(k,k-l) A_{n-k}.
inline WeightDistribution elliptic_distribution_from_amin(std::size_t n, std::size_t k, std::uint32_t q,
                                                          const BigInt& a_min) {
    if (k < 1 || k >= n) throw InvalidInput("elliptic_distribution_from_amin: need 1 <= k < n");
    WeightDistribution w{n, std::vector<BigInt>(n + 1, 0)};
    w.counts[0] = 1;
    for (std::size_t l = 0; l <= k; ++l) {
        BigInt s = 0;
        for (std::size_t i = 0; i < l; ++i) {
            BigInt term = binomial(n - k + l, i) * (ipow(BigInt(q), l - i) - 1);
            s += (i % 2 == 0) ? term : BigInt(-term);
        }
        BigInt value = binomial(n, k - l) * s + ((l % 2 == 0) ? 1 : -1) * binomial(k, k - l) * a_min;
        if (value < 0)
            throw InvalidInput("elliptic_distribution_from_amin: negative count at weight " + std::to_string(n - k + l) +
                               ", A_min is invalid");
        w.counts[n - k + l] = value;
    }
    return w;
}

/// A_{n-k} = (q-1)/n C(n,k) when gcd(k, n) = 1 and D covers every rational point.
inline Rational amin_coprime(std::size_t n, std::size_t k, std::uint32_t q) {
    if (k < 1 || k >= n) throw InvalidInput("amin_coprime: need 0 < k < n");
    if (std::gcd(n, k) != 1) throw InvalidInput("amin_coprime: k and n are not coprime");
    Rational v = Rational(q - 1, n) * Rational(binomial(n, k));
    if (!is_integer(v)) throw InvalidInput("amin_coprime: non-integer count, hypotheses violated");
    return v;
}

/// A_{n-k} = (q-1)/(n+1) [C(n,k) + (-1)^k n] for G = kO, D = all affine points, gcd(k!, n+1) = 1.
inline Rational amin_onepoint(std::size_t n, std::size_t k, std::uint32_t q) {
    if (k < 1 || k >= n) throw InvalidInput("amin_onepoint: need 0 < k < n");
    BigInt fact = 1;
    for (std::size_t i = 2; i <= k; ++i) fact *= i;
    if (boost::multiprecision::gcd(fact, BigInt(n + 1)) != 1)
        throw InvalidInput("amin_onepoint: k! and n + 1 are not coprime");
    const BigInt sign_n = (k % 2 == 0) ? BigInt(n) : BigInt(-static_cast<long long>(n));
    Rational v = Rational(q - 1, n + 1) * Rational(binomial(n, k) + sign_n);
    if (!is_integer(v)) throw InvalidInput("amin_onepoint: non-integer count, hypotheses violated");
    return v;
}

// ---------------------------------------------------------------------------
// Higher-genus parameters B_l
// ---------------------------------------------------------------------------

/// B_l = sum_{i=n-m}^{n-l} C(n-i, l) A_i, the coefficients of A - x^n in the
/// basis (x-y)^l y^{n-l}.
inline std::vector<BigInt> bl_coefficients(const WeightDistribution& a, std::size_t m) {
    const std::size_t n = a.n;
    if (m > n) throw InvalidInput("bl_coefficients: m exceeds n");
    std::vector<BigInt> b(m + 1, 0);
    for (std::size_t l = 0; l <= m; ++l)
        for (std::size_t i = n - m; i + l <= n; ++i) {
            if (i == 0) continue;  // the x^n term is kept apart
            b[l] += binomial(n - i, l) * a.counts[i];
        }
    return b;
}

struct BlBound {
    std::size_t l = 0;
    bool exact = false;
    Rational lower, upper;  ///< equal when exact
};

/// Exact values for 0 <= l <= m-2g+1, the interval
/// [max(0, C(n,l)(q^{m-l-g+1}-1)), C(n,l)(q^{floor((m-l)/2)+1}-1)] above that.
inline std::vector<BlBound> bl_bounds(std::size_t n, std::size_t m, std::size_t g, std::uint32_t q) {
    std::vector<BlBound> out;
    const auto mm = static_cast<long long>(m), gg = static_cast<long long>(g);
    for (std::size_t l = 0; l <= m; ++l) {
        const auto ll = static_cast<long long>(l);
        const Rational riemann = Rational(binomial(n, l)) * (rpow(q, mm - ll - gg + 1) - 1);
        BlBound b;
        b.l = l;
        if (ll <= mm - 2 * gg + 1) {
            b.exact = true;
            b.lower = b.upper = riemann;
        } else {
            b.lower = riemann > 0 ? riemann : Rational(0);
            b.upper = Rational(binomial(n, l)) * (rpow(q, (mm - ll) / 2 + 1) - 1);
        }
        out.push_back(b);
    }
    return out;
}

inline bool bl_within_bounds(const std::vector<BigInt>& b, const std::vector<BlBound>& bounds) {
    if (b.size() != bounds.size()) return false;
    for (std::size_t l = 0; l < b.size(); ++l) {
        const Rational v(b[l]);
        if (bounds[l].exact ? v != bounds[l].lower : (v < bounds[l].lower || v > bounds[l].upper)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Divisors and the fiber-count oracle
// ---------------------------------------------------------------------------

/// Finite formal sum of rational points of a curve.
class Divisor {
   public:
    Divisor() = default;

    void add(const CurvePoint& p, long long mult) {
        if (mult == 0) return;
        auto& m = terms_[p];
        m += mult;
        if (m == 0) terms_.erase(p);
    }

    static Divisor multiple(const CurvePoint& p, long long mult) {
        Divisor d;
        d.add(p, mult);
        return d;
    }

    long long degree() const {
        long long s = 0;
        for (const auto& [p, m] : terms_) s += m;
        return s;
    }

    bool effective() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
    }

    std::vector<CurvePoint> support() const {
        std::vector<CurvePoint> s;
        for (const auto& [p, m] : terms_) s.push_back(p);
        return s;
    }

    const std::map<CurvePoint, long long>& terms() const noexcept { return terms_; }

    /// Image of the degree-zero class [G - deg(G) O] in E(F_q).
    CurvePoint class_point(const EllipticCurve& e) const {
        CurvePoint acc = CurvePoint::at_infinity();
        for (const auto& [p, m] : terms_) acc = e.add(acc, e.multiply(m, p));
        return acc;
    }

   private:
    std::map<CurvePoint, long long> terms_;
};

/// Lines "point multiplicity" where point is "O" or "x,y".
inline Divisor parse_divisor(std::istream& in, const EllipticCurve& e) {
    Divisor d;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string pt, mult, extra;
        if (!(ls >> pt)) continue;
        auto fail = [&](const std::string& why) {
            throw InvalidInput("divisor line " + std::to_string(line_no) + ": " + why);
        };
        if (!(ls >> mult) || (ls >> extra)) fail("expected 'point multiplicity'");
        CurvePoint p;
        if (pt != "O") {
            const auto comma = pt.find(',');
            if (comma == std::string::npos) fail("point must be 'O' or 'x,y'");
            try {
                std::size_t ux = 0, uy = 0;
                const long long x = std::stoll(pt.substr(0, comma), &ux);
                const long long y = std::stoll(pt.substr(comma + 1), &uy);
                if (ux != comma || uy != pt.size() - comma - 1 || x < 0 || y < 0) fail("bad coordinates '" + pt + "'");
                p = CurvePoint::affine(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
            } catch (const std::logic_error&) {
                fail("bad coordinates '" + pt + "'");
            }
        }
        if (!e.contains(p)) fail("point " + pt + " is not on the curve");
        long long m = 0;
        try {
            std::size_t used = 0;
            m = std::stoll(mult, &used);
            if (used != mult.size()) fail("bad multiplicity '" + mult + "'");
        } catch (const std::logic_error&) {
            fail("bad multiplicity '" + mult + "'");
        }
        d.add(p, m);
    }
    return d;
}

inline Divisor parse_divisor(const std::string& text, const EllipticCurve& e) {
    std::istringstream in(text);
    return parse_divisor(in, e);
}

inline constexpr std::uint64_t kDefaultFiberBudget = 1'000'000;
inline constexpr std::uint32_t kExtensionFieldCap = 1u << 22;

namespace detail {

// A family of `count` places of one degree and divisor class that are not in D,
// or a single rational place of D (count = 1, in_d = true).
struct PlaceFamily {
    std::size_t degree;
    std::size_t cls;
    BigInt count;
    bool in_d;
};

// dp[deg][cls][i]: effective divisors of degree deg, class cls, i distinct D-places in the support.
using FiberTable = std::vector<std::vector<std::vector<BigInt>>>;

inline FiberTable fiber_dp(const std::vector<PlaceFamily>& families, std::size_t max_degree,
                           const std::vector<std::vector<std::size_t>>& group_add, std::size_t n_d) {
    const std::size_t classes = group_add.size();
    FiberTable dp(max_degree + 1, std::vector<std::vector<BigInt>>(classes, std::vector<BigInt>(n_d + 1, 0)));
    dp[0][0][0] = 1;
    // multiples[c][s] = class of s*c
    std::vector<std::vector<std::size_t>> multiples(classes, std::vector<std::size_t>(max_degree + 1, 0));
    for (std::size_t c = 0; c < classes; ++c)
        for (std::size_t s = 1; s <= max_degree; ++s) multiples[c][s] = group_add[multiples[c][s - 1]][c];
    for (const auto& fam : families) {
        if (fam.degree > max_degree || fam.count == 0) continue;
        const std::size_t max_s = max_degree / fam.degree;
        // ways[s]: multisets of total size s from `count` interchangeable places
        std::vector<BigInt> ways(max_s + 1);
        for (std::size_t s = 0; s <= max_s; ++s) {
            BigInt w = 1;
            for (std::size_t t = 0; t < s; ++t) w = w * (fam.count + t) / (t + 1);
            ways[s] = w;
        }
        FiberTable next = dp;  // s = 0 contribution
        for (std::size_t deg = 0; deg <= max_degree; ++deg)
            for (std::size_t c = 0; c < classes; ++c)
                for (std::size_t i = 0; i <= n_d; ++i) {
                    const BigInt& cur = dp[deg][c][i];
                    if (cur == 0) continue;
                    for (std::size_t s = 1; s <= max_s && deg + s * fam.degree <= max_degree; ++s) {
                        const std::size_t ni = i + (fam.in_d ? 1 : 0);
                        if (ni > n_d) break;
                        next[deg + s * fam.degree][group_add[c][multiples[fam.cls][s]]][ni] += cur * ways[s];
                    }
                }
        dp = std::move(next);
    }
    return dp;
}

inline std::vector<BigInt> fiber_counts(const FiberTable& dp, std::size_t degree, std::size_t cls, std::uint32_t q,
                                        std::uint64_t budget) {
    BigInt total = 0;
    for (const auto& per_class : dp[degree])
        for (const auto& v : per_class) total += v;
    if (total > budget)
        throw BudgetExceeded("fiber_count: " + total.str() + " effective divisors of degree " + std::to_string(degree) +
                             " exceed budget " + std::to_string(budget));
    std::vector<BigInt> a;
    for (const auto& v : dp[degree][cls]) a.push_back(v * (q - 1));
    return a;
}

// Number of monic irreducible polynomials of degree r over GF(q).
inline BigInt irreducible_count(std::uint32_t q, std::size_t r) {
    auto mobius = [](std::size_t v) {
        int mu = 1;
        for (std::size_t p = 2; p * p <= v; ++p)
            if (v % p == 0) {
                v /= p;
                if (v % p == 0) return 0;
                mu = -mu;
            }
        if (v > 1) mu = -mu;
        return mu;
    };
    BigInt s = 0;
    for (std::size_t d = 1; d <= r; ++d)
        if (r % d == 0) s += mobius(d) * ipow(BigInt(q), r / d);
    return s / r;
}

// Closed points of exact degree r on E, grouped by the rational point equal to
// the sum of their Frobenius conjugates. Realized through E over GF(q^r).
inline std::map<CurvePoint, BigInt> closed_point_classes(const EllipticCurve& e, std::size_t r) {
    const auto& base = *e.spec();
    const std::uint32_t p = base.p(), m0 = base.m();
    std::uint64_t big_q = 1;
    for (std::size_t i = 0; i < m0 * r; ++i) {
        big_q *= p;
        if (big_q > kExtensionFieldCap)
            throw BudgetExceeded("fiber_count: extension field GF(" + std::to_string(base.q()) + "^" + std::to_string(r) +
                                 ") exceeds the supported size");
    }
    const auto big = FieldSpec::make(p, m0 * static_cast<std::uint32_t>(r), kExtensionFieldCap);
    // embed GF(q) -> GF(q^r): send t to a root beta of the base modulus
    std::vector<std::uint32_t> embed(base.q());
    if (m0 == 1) {
        for (std::uint32_t c = 0; c < base.q(); ++c) embed[c] = c;
    } else {
        std::uint32_t beta = 0;
        bool found = false;
        for (std::uint32_t z = 0; z < big->q() && !found; ++z) {
            std::uint32_t v = 0;
            for (std::size_t i = base.modulus().size(); i-- > 0;) v = big->add(big->mul(v, z), base.modulus()[i]);
            if (v == 0) {
                beta = z;
                found = true;
            }
        }
        if (!found) throw InvariantViolation("no root of the base modulus in the extension field");
        for (std::uint32_t c = 0; c < base.q(); ++c) {
            std::uint32_t v = 0, digits = c, beta_pow = 1;
            for (std::uint32_t i = 0; i < m0; ++i, digits /= p) {
                v = big->add(v, big->mul(digits % p, beta_pow));
                beta_pow = big->mul(beta_pow, beta);
            }
            embed[c] = v;
        }
    }
    std::map<std::uint32_t, std::uint32_t> unembed;
    for (std::uint32_t c = 0; c < base.q(); ++c) unembed[embed[c]] = c;
    const EllipticCurve ext(big, embed[e.a1()], embed[e.a2()], embed[e.a3()], embed[e.a4()], embed[e.a6()]);
    auto frob = [&](const CurvePoint& pt) {
        return CurvePoint::affine(big->pow(pt.x, base.q()), big->pow(pt.y, base.q()));
    };
    std::map<CurvePoint, BigInt> classes;
    for (std::uint32_t x = 0; x < big->q(); ++x)
        for (auto y : ext.solve_y(x)) {
            const auto pt = CurvePoint::affine(x, y);
            std::vector<CurvePoint> orbit{pt};
            for (auto cur = frob(pt); !(cur == pt); cur = frob(cur)) orbit.push_back(cur);
            if (orbit.size() != r || *std::min_element(orbit.begin(), orbit.end()) != pt) continue;
            CurvePoint sum = CurvePoint::at_infinity();
            for (const auto& o : orbit) sum = ext.add(sum, o);
            CurvePoint rational = CurvePoint::at_infinity();
            if (!sum.infinity) {
                const auto ix = unembed.find(sum.x), iy = unembed.find(sum.y);
                if (ix == unembed.end() || iy == unembed.end())
                    throw InvariantViolation("conjugate sum is not a rational point");
                rational = CurvePoint::affine(ix->second, iy->second);
            }
            classes[rational] += 1;
        }
    return classes;
}

}  // namespace detail

/// Counts a_i = (q-1) #{H ~ G, H >= 0, exactly i places of D in supp(H)} for
/// i = 0..|D| on an elliptic curve, using Pic^0(E) = E(F_q) for linear equivalence.
/// Only deg G and the class of G enter, so G may be given by those two data.
inline std::vector<BigInt> fiber_distribution(const EllipticCurve& e, long long degree, const CurvePoint& g_class,
                                              const std::vector<CurvePoint>& d_points,
                                              std::uint64_t budget = kDefaultFiberBudget) {
    if (degree < 0) throw InvalidInput("fiber_count: deg G must be nonnegative");
    if (!e.contains(g_class)) throw InvalidInput("fiber_count: class point is not on the curve");
    const auto deg = static_cast<std::size_t>(degree);
    const auto rational = points(e);
    std::map<CurvePoint, std::size_t> index;
    for (std::size_t i = 0; i < rational.size(); ++i) index[rational[i]] = i;
    std::set<CurvePoint> in_d;
    for (const auto& p : d_points) {
        if (!index.count(p)) throw InvalidInput("fiber_count: D point " + to_string(p) + " is not a rational point");
        if (!in_d.insert(p).second) throw InvalidInput("fiber_count: repeated D point");
    }
    std::vector<std::vector<std::size_t>> group_add(rational.size(), std::vector<std::size_t>(rational.size()));
    for (std::size_t a = 0; a < rational.size(); ++a)
        for (std::size_t b = 0; b < rational.size(); ++b) group_add[a][b] = index.at(e.add(rational[a], rational[b]));

    // #{H >= 0, deg H = m} = N (q^m - 1)/(q - 1) for m >= 1
    const std::uint32_t q = e.spec()->q();
    if (deg > 0 && BigInt(rational.size()) * (ipow(BigInt(q), deg) - 1) / (q - 1) > budget)
        throw BudgetExceeded("fiber_count: effective divisors of degree " + std::to_string(deg) + " exceed budget " +
                             std::to_string(budget));
    std::vector<detail::PlaceFamily> families;
    for (const auto& p : rational) families.push_back({1, index.at(p), 1, in_d.count(p) > 0});
    for (std::size_t r = 2; r <= deg; ++r)
        for (const auto& [cls, count] : detail::closed_point_classes(e, r))
            families.push_back({r, index.at(cls), count, false});
    const auto dp = detail::fiber_dp(families, deg, group_add, d_points.size());
    return detail::fiber_counts(dp, deg, index.at(g_class), q, budget);
}

inline std::vector<BigInt> fiber_distribution(const EllipticCurve& e, const Divisor& g,
                                              const std::vector<CurvePoint>& d_points,
                                              std::uint64_t budget = kDefaultFiberBudget) {
    for (const auto& p : d_points)
        if (g.terms().count(p)) throw InvalidInput("fiber_count: supp G meets D at " + to_string(p));
    return fiber_distribution(e, g.degree(), g.class_point(e), d_points, budget);
}

inline BigInt fiber_count(const EllipticCurve& e, const Divisor& g, const std::vector<CurvePoint>& d_points,
                          std::size_t i, std::uint64_t budget = kDefaultFiberBudget) {
    const auto a = fiber_distribution(e, g, d_points, budget);
    if (i >= a.size()) throw InvalidInput("fiber_count: i exceeds |D|");
    return a[i];
}

/// The projective line: every divisor class of a given degree is one class.
/// D consists of the affine points `alphas`, G has degree `degree`.
inline std::vector<BigInt> fiber_distribution_line(const FieldPtr& spec, std::size_t degree,
                                                   const std::vector<std::uint32_t>& alphas,
                                                   std::uint64_t budget = kDefaultFiberBudget) {
    const std::uint32_t q = spec->q();
    if (std::set<std::uint32_t>(alphas.begin(), alphas.end()).size() != alphas.size())
        throw InvalidInput("fiber_count: repeated D point");
    for (auto a : alphas)
        if (a >= q) throw InvalidInput("fiber_count: D point out of field range");
    if ((ipow(BigInt(q), degree + 1) - 1) / (q - 1) > budget)
        throw BudgetExceeded("fiber_count: effective divisors of degree " + std::to_string(degree) + " exceed budget " +
                             std::to_string(budget));
    std::vector<detail::PlaceFamily> families;
    for (std::size_t i = 0; i < alphas.size(); ++i) families.push_back({1, 0, 1, true});
    families.push_back({1, 0, BigInt(q + 1 - alphas.size()), false});
    for (std::size_t r = 2; r <= degree; ++r) families.push_back({r, 0, detail::irreducible_count(q, r), false});
    const std::vector<std::vector<std::size_t>> trivial_group{{0}};
    const auto dp = detail::fiber_dp(families, degree, trivial_group, alphas.size());
    return detail::fiber_counts(dp, degree, 0, q, budget);
}

/// Weight distribution implied by fiber counts: A_{n-i} = a_i for nonzero words, A_0 = 1.
inline WeightDistribution distribution_from_fibers(const std::vector<BigInt>& a) {
    const std::size_t n = a.size() - 1;
    WeightDistribution w{n, std::vector<BigInt>(n + 1, 0)};
    for (std::size_t i = 0; i <= n; ++i) w.counts[n - i] += a[i];
    w.counts[0] += 1;
    return w;
}

}  // namespace zetacode

#endif
