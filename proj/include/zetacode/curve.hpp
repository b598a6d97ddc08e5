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

#ifndef ZETACODE_CURVE_HPP
#define ZETACODE_CURVE_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "gf.hpp"
#include "roots.hpp"

namespace zetacode {

/// Affine point or the point at infinity O.
struct CurvePoint {
    bool infinity = true;
    std::uint32_t x = 0, y = 0;

    static CurvePoint at_infinity() { return {}; }
    static CurvePoint affine(std::uint32_t x, std::uint32_t y) { return {false, x, y}; }

    // O sorts first, then affine points by (x, y).
    auto operator<=>(const CurvePoint& o) const {
        if (infinity != o.infinity) return infinity ? std::strong_ordering::less : std::strong_ordering::greater;
        if (infinity) return std::strong_ordering::equal;
        if (auto c = x <=> o.x; c != 0) return c;
        return y <=> o.y;
    }
    bool operator==(const CurvePoint& o) const { return (*this <=> o) == 0; }
};

inline std::string to_string(const CurvePoint& p) {
    return p.infinity ? "O" : std::to_string(p.x) + "," + std::to_string(p.y);
}

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over GF(q), nonsingular.
class EllipticCurve {
   public:
    EllipticCurve(FieldPtr spec, std::uint32_t a1, std::uint32_t a2, std::uint32_t a3, std::uint32_t a4,
                  std::uint32_t a6)
        : spec_(std::move(spec)), a_{a1, a2, a3, a4, a6} {
        for (auto c : a_)
            if (c >= spec_->q()) throw InvalidInput("curve coefficient out of field range");
        if (discriminant() == 0) throw InvalidInput("singular curve: discriminant is zero");
        build_tables();
    }

    const FieldPtr& spec() const noexcept { return spec_; }
    std::uint32_t a1() const noexcept { return a_[0]; }
    std::uint32_t a2() const noexcept { return a_[1]; }
    std::uint32_t a3() const noexcept { return a_[2]; }
    std::uint32_t a4() const noexcept { return a_[3]; }
    std::uint32_t a6() const noexcept { return a_[4]; }

    std::uint32_t discriminant() const {
        const auto& f = *spec_;
        auto c = [&](long long v) { return f.from_int(v); };
        auto m = [&](std::uint32_t a, std::uint32_t b) { return f.mul(a, b); };
        auto add = [&](std::uint32_t a, std::uint32_t b) { return f.add(a, b); };
        auto sub = [&](std::uint32_t a, std::uint32_t b) { return f.sub(a, b); };
        const auto [a1, a2, a3, a4, a6] = a_;
        const auto b2 = add(m(a1, a1), m(c(4), a2));
        const auto b4 = add(m(c(2), a4), m(a1, a3));
        const auto b6 = add(m(a3, a3), m(c(4), a6));
        const auto b8 = sub(add(add(m(m(a1, a1), a6), m(c(4), m(a2, a6))), m(a2, m(a3, a3))),
                            add(m(a1, m(a3, a4)), m(a4, a4)));
        auto disc = f.neg(m(m(b2, b2), b8));
        disc = sub(disc, m(c(8), m(b4, m(b4, b4))));
        disc = sub(disc, m(c(27), m(b6, b6)));
        disc = add(disc, m(c(9), m(b2, m(b4, b6))));
        return disc;
    }

    bool contains(const CurvePoint& p) const {
        if (p.infinity) return true;
        if (p.x >= spec_->q() || p.y >= spec_->q()) return false;
        const auto& f = *spec_;
        const auto lhs = f.add(f.mul(p.y, p.y), f.mul(p.y, f.add(f.mul(a1(), p.x), a3())));
        const auto x2 = f.mul(p.x, p.x);
        const auto rhs = f.add(f.add(f.mul(x2, p.x), f.mul(a2(), x2)), f.add(f.mul(a4(), p.x), a6()));
        return lhs == rhs;
    }

    CurvePoint negate(const CurvePoint& p) const {
        if (p.infinity) return p;
        const auto& f = *spec_;
        return CurvePoint::affine(p.x, f.sub(f.neg(p.y), f.add(f.mul(a1(), p.x), a3())));
    }

    /// Chord-and-tangent addition with identity O.
    CurvePoint add(const CurvePoint& p, const CurvePoint& r) const {
        if (p.infinity) return r;
        if (r.infinity) return p;
        const auto& f = *spec_;
        auto c = [&](long long v) { return f.from_int(v); };
        std::uint32_t lambda, nu;
        if (p.x == r.x) {
            if (f.add(f.add(p.y, r.y), f.add(f.mul(a1(), r.x), a3())) == 0) return CurvePoint::at_infinity();
            // doubling
            const auto den = f.add(f.add(f.mul(c(2), p.y), f.mul(a1(), p.x)), a3());
            const auto x2 = f.mul(p.x, p.x);
            const auto num_l = f.sub(f.add(f.add(f.mul(c(3), x2), f.mul(f.mul(c(2), a2()), p.x)), a4()),
                                     f.mul(a1(), p.y));
            const auto num_n =
                f.sub(f.add(f.add(f.neg(f.mul(x2, p.x)), f.mul(a4(), p.x)), f.mul(c(2), a6())), f.mul(a3(), p.y));
            lambda = f.div(num_l, den);
            nu = f.div(num_n, den);
        } else {
            const auto den = f.sub(r.x, p.x);
            lambda = f.div(f.sub(r.y, p.y), den);
            nu = f.div(f.sub(f.mul(p.y, r.x), f.mul(r.y, p.x)), den);
        }
        const auto x3 = f.sub(f.sub(f.sub(f.add(f.mul(lambda, lambda), f.mul(a1(), lambda)), a2()), p.x), r.x);
        const auto y3 = f.sub(f.sub(f.neg(f.mul(f.add(lambda, a1()), x3)), nu), a3());
        return CurvePoint::affine(x3, y3);
    }

    CurvePoint multiply(long long k, CurvePoint p) const {
        if (k < 0) {
            k = -k;
            p = negate(p);
        }
        CurvePoint acc = CurvePoint::at_infinity();
        while (k) {
            if (k & 1) acc = add(acc, p);
            p = add(p, p);
            k >>= 1;
        }
        return acc;
    }

    /// Every y with (x, y) on the curve, via a square-root / Artin-Schreier table.
    std::vector<std::uint32_t> solve_y(std::uint32_t x) const {
        const auto& f = *spec_;
        const auto b = f.add(f.mul(a1(), x), a3());
        const auto x2 = f.mul(x, x);
        const auto c = f.add(f.add(f.mul(x2, x), f.mul(a2(), x2)), f.add(f.mul(a4(), x), a6()));
        std::vector<std::uint32_t> ys;
        if (f.p() != 2) {
            // (y + b/2)^2 = c + b^2/4
            const auto half = f.inv(f.from_int(2));
            const auto shift = f.mul(b, half);
            const auto disc = f.add(c, f.mul(shift, shift));
            if (disc == 0) return {f.neg(shift)};
            const auto r = sqrt_[disc];
            if (r == kNone) return {};
            ys = {f.sub(r, shift), f.sub(f.neg(r), shift)};
        } else if (b == 0) {
            ys = {sqrt_[c]};
        } else {
            // y = b z with z^2 + z = c / b^2
            const auto w = f.div(c, f.mul(b, b));
            const auto z = as_[w];
            if (z == kNone) return {};
            ys = {f.mul(b, z), f.mul(b, f.add(z, 1))};
        }
        std::sort(ys.begin(), ys.end());
        return ys;
    }

   private:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    void build_tables() {
        const auto& f = *spec_;
        sqrt_.assign(f.q(), kNone);
        for (std::uint32_t z = 0; z < f.q(); ++z) {
            auto& slot = sqrt_[f.mul(z, z)];
            if (slot == kNone) slot = z;
        }
        if (f.p() == 2) {
            as_.assign(f.q(), kNone);
            for (std::uint32_t z = 0; z < f.q(); ++z) {
                auto& slot = as_[f.add(f.mul(z, z), z)];
                if (slot == kNone) slot = z;
            }
        }
    }

    FieldPtr spec_;
    std::array<std::uint32_t, 5> a_;
    std::vector<std::uint32_t> sqrt_, as_;
};

/// All rational points: O first, then affine points in (x, y) order.
inline std::vector<CurvePoint> points(const EllipticCurve& e) {
    std::vector<CurvePoint> out{CurvePoint::at_infinity()};
    for (std::uint32_t x = 0; x < e.spec()->q(); ++x)
        for (std::uint32_t y = 0; y < e.spec()->q(); ++y)
            if (e.contains(CurvePoint::affine(x, y))) out.push_back(CurvePoint::affine(x, y));
    return out;
}

inline CurvePoint add_points(const EllipticCurve& e, const CurvePoint& a, const CurvePoint& b) {
    if (!e.contains(a) || !e.contains(b)) throw InvalidInput("add_points: point not on the curve");
    return e.add(a, b);
}

// --- curve input format: "q a1 a2 a3 a4 a6" ---

inline EllipticCurve parse_curve(std::istream& in) {
    std::vector<long long> v;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::getline(in, tok);
            continue;
        }
        std::size_t used = 0;
        long long x = -1;
        try {
            x = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || x < 0) throw InvalidInput("curve: token " + std::to_string(v.size() + 1) + " '" + tok +
                                                            "' is not a nonnegative integer");
        v.push_back(x);
    }
    if (v.size() != 6) throw InvalidInput("curve: expected 'q a1 a2 a3 a4 a6', got " + std::to_string(v.size()) +
                                          " values");
    const auto spec = FieldSpec::of_order(static_cast<std::uint32_t>(v[0]));
    for (std::size_t i = 1; i < 6; ++i)
        if (v[i] >= spec->q()) throw InvalidInput("curve: coefficient " + std::to_string(i) + " not in GF(q)");
    return EllipticCurve(spec, static_cast<std::uint32_t>(v[1]), static_cast<std::uint32_t>(v[2]),
                         static_cast<std::uint32_t>(v[3]), static_cast<std::uint32_t>(v[4]),
                         static_cast<std::uint32_t>(v[5]));
}

inline EllipticCurve parse_curve(const std::string& text) {
    std::istringstream in(text);
    return parse_curve(in);
}

/// L-polynomial of a genus-g curve: L(0) = 1, deg 2g, l_i = q^{i-g} l_{2g-i}.
class CurveZeta {
   public:
    CurveZeta(std::uint32_t q, std::size_t g, std::vector<BigInt> l) : q_(q), g_(g), l_(std::move(l)) {
        if (l_.size() != 2 * g_ + 1) throw InvalidInput("L-polynomial must have degree exactly 2g");
        if (l_[0] != 1) throw InvalidInput("L-polynomial must satisfy L(0) = 1");
        for (std::size_t i = 0; i <= 2 * g_; ++i)
            if (Rational(l_[i]) !=
                rpow(q_, static_cast<long long>(i) - static_cast<long long>(g_)) * Rational(l_[2 * g_ - i]))
                throw InvalidInput("L-polynomial violates the functional equation at T^" + std::to_string(i));
    }

    /// Validates integrality before the CurveZeta invariants.
    static CurveZeta from_rational(std::uint32_t q, std::size_t g, const std::vector<Rational>& l) {
        std::vector<BigInt> out;
        for (const auto& c : l) {
            if (!is_integer(c)) throw InvalidInput("L-polynomial coefficients must be integers");
            out.push_back(to_integer(c));
        }
        return CurveZeta(q, g, std::move(out));
    }

    std::uint32_t q() const noexcept { return q_; }
    std::size_t g() const noexcept { return g_; }
    const std::vector<BigInt>& coeffs() const noexcept { return l_; }

    std::vector<Rational> rational_coeffs() const {
        std::vector<Rational> r;
        for (const auto& c : l_) r.emplace_back(c);
        return r;
    }

    /// N_r = q^r + 1 - sum alpha_i^r, with the power sums from Newton's identities.
    BigInt point_count(std::size_t r) const {
        const std::size_t deg = 2 * g_;
        std::vector<BigInt> e(deg + 1), s(r + 1, 0);
        for (std::size_t i = 0; i <= deg; ++i) e[i] = (i % 2 == 0) ? l_[i] : BigInt(-l_[i]);
        for (std::size_t j = 1; j <= r; ++j) {
            BigInt acc = 0;
            for (std::size_t i = 1; i < j && i <= deg; ++i) acc += ((i % 2 == 1) ? 1 : -1) * e[i] * s[j - i];
            if (j <= deg) acc += ((j % 2 == 1) ? 1 : -1) * BigInt(static_cast<long long>(j)) * e[j];
            s[j] = acc;
        }
        return ipow(BigInt(q_), static_cast<long long>(r)) + 1 - s[r];
    }

    bool operator==(const CurveZeta&) const = default;

   private:
    std::uint32_t q_;
    std::size_t g_;
    std::vector<BigInt> l_;
};

/// L from N_1..N_g: log L(T) = sum_k (N_k - q^k - 1) T^k / k up to T^g, the rest by the functional equation.
inline CurveZeta zeta_from_point_counts(std::uint32_t q, std::size_t g, const std::vector<BigInt>& counts) {
    if (counts.size() != g) throw InvalidInput("zeta_from_point_counts: need exactly g point counts");
    std::vector<Rational> l(2 * g + 1, Rational(0));
    l[0] = 1;
    for (std::size_t k = 1; k <= g; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            const BigInt c = counts[j - 1] - ipow(BigInt(q), j) - 1;
            acc += Rational(c) * l[k - j];
        }
        l[k] = acc / Rational(k);
        if (!is_integer(l[k]))
            throw InvalidInput("zeta_from_point_counts: non-integer L coefficient, inconsistent counts");
    }
    for (std::size_t j = g + 1; j <= 2 * g; ++j)
        l[j] = rpow(q, static_cast<long long>(j) - static_cast<long long>(g)) * l[2 * g - j];
    return CurveZeta::from_rational(q, g, l);
}

inline RhVerdict curve_rh(const CurveZeta& z, double tol = kDefaultRhTolerance) {
    return circle_verdict(z.rational_coeffs(), z.q(), tol);
}

}  // namespace zetacode

#endif
