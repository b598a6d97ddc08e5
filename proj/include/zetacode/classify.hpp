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

#ifndef ZETACODE_CLASSIFY_HPP
#define ZETACODE_CLASSIFY_HPP

#include <numeric>
#include <optional>
#include <string>

#include "enumerator.hpp"
#include "zeta.hpp"

namespace zetacode {

enum class DivisibilityType { I, II, III, IV, V, None };

inline std::string to_string(DivisibilityType t) {
    switch (t) {
        case DivisibilityType::I: return "I";
        case DivisibilityType::II: return "II";
        case DivisibilityType::III: return "III";
        case DivisibilityType::IV: return "IV";
        case DivisibilityType::V: return "V";
        case DivisibilityType::None: return "none";
    }
    return "none";
}

struct DivisibilityReport {
    std::size_t b_max = 1;
    DivisibilityType type = DivisibilityType::None;
    bool v_pattern = false;  ///< F == (x^2 + (q-1)y^2)^{n/2}
    std::optional<std::size_t> d;
    std::optional<std::size_t> d_bound;
    bool extremal = false;
    bool virtually_self_dual = false;
    std::string reason;
};

/// Largest b with supp(F) in bZ, or 1 when no b > 1 works.
inline std::size_t divisibility(const WeightEnumerator& f) {
    std::size_t b = 0;
    for (auto i : f.support()) b = std::gcd(b, i);
    return b > 1 ? b : 1;
}

/// Upper bound on d for an enumerator of the given type and length.
inline std::optional<std::size_t> type_distance_bound(DivisibilityType t, std::size_t n) {
    switch (t) {
        case DivisibilityType::I: return 2 * (n / 8) + 2;
        case DivisibilityType::II: return 4 * (n / 24) + 4;
        case DivisibilityType::III: return 3 * (n / 12) + 3;
        case DivisibilityType::IV: return 2 * (n / 6) + 2;
        default: return std::nullopt;
    }
}

/// (x^2 + (q-1) y^2)^{n/2}.
inline WeightEnumerator v_pattern_enumerator(std::size_t n, std::uint32_t q) {
    std::vector<Rational> base{Rational(1), Rational(0), Rational(q - 1)};
    return WeightEnumerator(std::move(base), q).pow(n / 2);
}

/// Divisibility type and extremality of a virtually self-dual enumerator.
/// When several types apply the one with the larger divisor wins (II over I);
/// the case V shape is reported as a flag next to any type label.
inline DivisibilityReport classify(const WeightEnumerator& f, std::uint32_t q) {
    DivisibilityReport r;
    const std::size_t n = f.n();
    r.b_max = divisibility(f);
    r.d = f.min_distance();
    if (n % 2 != 0) {
        r.reason = "odd length";
        return r;
    }
    r.virtually_self_dual = is_virtually_self_dual(f, q);
    if (!r.virtually_self_dual) {
        r.reason = "not virtually self-dual over GF(" + std::to_string(q) + ")";
        return r;
    }
    const bool even_b = r.b_max % 2 == 0;
    r.v_pattern = even_b && f == v_pattern_enumerator(n, q);
    if (q == 2 && r.b_max % 4 == 0 && n % 8 == 0)
        r.type = DivisibilityType::II;
    else if (q == 2 && even_b)
        r.type = DivisibilityType::I;
    else if (q == 3 && r.b_max % 3 == 0 && n % 4 == 0)
        r.type = DivisibilityType::III;
    else if (q == 4 && even_b)
        r.type = DivisibilityType::IV;
    else if (r.v_pattern)
        r.type = DivisibilityType::V;
    else
        r.reason = r.b_max == 1 ? "support is not b-divisible for any b > 1" : "no Gleason-Pierce type matches";
    r.d_bound = type_distance_bound(r.type, n);
    r.extremal = r.d && r.d_bound && *r.d == *r.d_bound;
    return r;
}

inline WeightEnumerator w8() { return WeightEnumerator::from_integers({1, 0, 0, 0, 14, 0, 0, 0, 1}, 2); }

inline WeightEnumerator w12() {
    return WeightEnumerator::from_integers({1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1}, 2);
}

/// W(x+y, x-y) = -2^{n/2} W(x,y) with every nonzero coefficient at an index divisible by 4.
inline bool is_formal_weight_enumerator(const WeightEnumerator& w, std::string* reason = nullptr) {
    auto fail = [&](const char* why) {
        if (reason) *reason = why;
        return false;
    };
    if (w.n() % 2 != 0) return fail("odd length cannot satisfy the anti-invariance exactly");
    for (std::size_t i = 0; i <= w.n(); ++i)
        if (w[i] != 0 && i % 4 != 0) return fail("a nonzero coefficient sits at an index not divisible by 4");
    const auto image = substitute(w, 1, 1, 1, -1);
    if (image != w.scaled(-rpow(2, static_cast<long long>(w.n() / 2))))
        return fail("not anti-invariant under the binary MacWilliams substitution");
    return true;
}

struct FormalReport {
    bool formal = false;
    std::string reason;
    std::size_t n_mod_8 = 0;
    bool symmetric = false;
    bool support_in_4z = false;
    std::optional<ZetaPolynomial> zeta;
    bool anti_functional_equation = false;
    long long d_bound = 0;
    std::optional<std::size_t> d;
    bool extremal = false;
    std::optional<RhVerdict> rh;
};

/// 4 floor((n - 12)/24) + 4.
inline long long formal_distance_bound(std::size_t n) {
    const long long t = static_cast<long long>(n) - 12;
    const long long fl = t >= 0 ? t / 24 : -((-t + 23) / 24);
    return 4 * fl + 4;
}

/// a_j = -2^{j-g} a_{2g-j}, the exact form of P(T) = -P(1/2T) 2^g T^{2g}.
inline bool anti_functional_check(const ZetaPolynomial& p) {
    if (p.g < 0 || p.degree() != static_cast<std::size_t>(2 * p.g)) return false;
    const auto two_g = static_cast<std::size_t>(2 * p.g);
    for (std::size_t j = 0; j <= two_g; ++j)
        if (p.coeffs[j] != -rpow(2, static_cast<long long>(j) - p.g) * p.coeffs[two_g - j]) return false;
    return true;
}

inline FormalReport formal_checks(const WeightEnumerator& w, double tol = kDefaultRhTolerance) {
    FormalReport r;
    r.n_mod_8 = w.n() % 8;
    r.formal = is_formal_weight_enumerator(w, &r.reason);
    r.symmetric = w.swapped() == w;
    r.support_in_4z = true;
    for (auto i : w.support()) r.support_in_4z = r.support_in_4z && i % 4 == 0;
    r.d = w.min_distance();
    r.d_bound = formal_distance_bound(w.n());
    r.extremal = r.d && static_cast<long long>(*r.d) == r.d_bound;
    if (!r.formal) return r;
    r.zeta = zeta_from_chinen(w, 2, w.n() / 2);
    r.anti_functional_equation = anti_functional_check(*r.zeta);
    r.rh = riemann_hypothesis(*r.zeta, tol);
    return r;
}

}  // namespace zetacode

#endif
