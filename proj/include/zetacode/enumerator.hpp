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

#ifndef ZETACODE_ENUMERATOR_HPP
#define ZETACODE_ENUMERATOR_HPP

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "linear_code.hpp"

namespace zetacode {

/// Homogeneous degree-n polynomial sum_i f_i x^{n-i} y^i with exact rational
/// coefficients. Covers code enumerators as well as virtual and formal ones.
class WeightEnumerator {
   public:
    WeightEnumerator() = default;
    explicit WeightEnumerator(std::vector<Rational> coeffs, std::optional<std::uint32_t> q = std::nullopt)
        : coeffs_(std::move(coeffs)), q_(q) {
        if (coeffs_.empty()) throw InvalidInput("an enumerator needs at least one coefficient");
    }

    static WeightEnumerator from_integers(const std::vector<long long>& c,
                                          std::optional<std::uint32_t> q = std::nullopt) {
        std::vector<Rational> r;
        r.reserve(c.size());
        for (auto v : c) r.emplace_back(v);
        return WeightEnumerator(std::move(r), q);
    }

    std::size_t n() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    std::optional<std::uint32_t> q() const noexcept { return q_; }

    /// F(1, 1).
    Rational total() const {
        Rational s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    /// Least positive index with a nonzero coefficient, if any.
    std::optional<std::size_t> min_distance() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return std::nullopt;
    }

    /// {0} together with every index carrying a nonzero coefficient.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s{0};
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) s.push_back(i);
        return s;
    }

    bool has_negative_coefficient() const {
        for (const auto& c : coeffs_)
            if (c < 0) return true;
        return false;
    }

    /// W(y, x).
    WeightEnumerator swapped() const { return WeightEnumerator({coeffs_.rbegin(), coeffs_.rend()}, q_); }

    WeightEnumerator operator*(const WeightEnumerator& o) const {
        std::vector<Rational> out(n() + o.n() + 1, Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        return WeightEnumerator(std::move(out), q_ ? q_ : o.q_);
    }

    WeightEnumerator scaled(const Rational& s) const {
        auto c = coeffs_;
        for (auto& v : c) v *= s;
        return WeightEnumerator(std::move(c), q_);
    }

    WeightEnumerator pow(std::size_t e) const {
        WeightEnumerator r({Rational(1)}, q_);
        for (std::size_t i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// Coefficients compared exactly; the attached q is metadata.
    bool operator==(const WeightEnumerator& o) const { return coeffs_ == o.coeffs_; }

   private:
    std::vector<Rational> coeffs_;
    std::optional<std::uint32_t> q_;
};

inline WeightEnumerator from_distribution(const WeightDistribution& w, std::optional<std::uint32_t> q = std::nullopt) {
    std::vector<Rational> c;
    c.reserve(w.counts.size());
    for (const auto& a : w.counts) c.emplace_back(a);
    return WeightEnumerator(std::move(c), q);
}

/// Integer view of an enumerator; throws if any coefficient is fractional or negative.
inline WeightDistribution to_distribution(const WeightEnumerator& e) {
    WeightDistribution w{e.n(), {}};
    for (const auto& c : e.coeffs()) {
        if (!is_integer(c) || c < 0) throw InvalidInput("enumerator is not a nonnegative integral distribution");
        w.counts.push_back(to_integer(c));
    }
    return w;
}

/// F(ax + by, cx + dy) for integer a, b, c, d, expanded by binomial convolution.
inline WeightEnumerator substitute(const WeightEnumerator& f, long long a, long long b, long long c, long long d) {
    const std::size_t n = f.n();
    std::vector<Rational> out(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i] == 0) continue;
        // (ax + by)^{n-i}: coefficient of x^{n-i-s} y^s is C(n-i,s) a^{n-i-s} b^s
        std::vector<BigInt> left(n - i + 1), right(i + 1);
        for (std::size_t s = 0; s <= n - i; ++s)
            left[s] = binomial(n - i, s) * ipow(BigInt(a), n - i - s) * boost::multiprecision::pow(BigInt(b), s);
        for (std::size_t t = 0; t <= i; ++t)
            right[t] = binomial(i, t) * ipow(BigInt(c), i - t) * boost::multiprecision::pow(BigInt(d), t);
        for (std::size_t s = 0; s <= n - i; ++s) {
            if (left[s] == 0) continue;
            for (std::size_t t = 0; t <= i; ++t) out[s + t] += f[i] * Rational(left[s] * right[t]);
        }
    }
    return WeightEnumerator(std::move(out), f.q());
}

/// q^{-k} A(x + (q-1)y, x - y). Negative coefficients in the result are legal
/// for virtual enumerators; query has_negative_coefficient() to detect them.
inline WeightEnumerator macwilliams_dual(const WeightEnumerator& a, std::uint32_t q, std::size_t k) {
    if (q < 2) throw InvalidInput("macwilliams_dual: q must be at least 2");
    if (k > a.n()) throw InvalidInput("macwilliams_dual: k exceeds n");
    auto t = substitute(a, 1, static_cast<long long>(q) - 1, 1, -1);
    t = t.scaled(rpow(q, -static_cast<long long>(k)));
    return WeightEnumerator(t.coeffs(), q);
}

/// q^{n/2} F(x, y) == F(x + (q-1)y, x - y), the integral form of self-duality.
inline bool is_virtually_self_dual(const WeightEnumerator& f, std::uint32_t q) {
    if (f.n() % 2 != 0) throw InvalidInput("is_virtually_self_dual: odd length");
    const auto image = substitute(f, 1, static_cast<long long>(q) - 1, 1, -1);
    return image == f.scaled(rpow(q, static_cast<long long>(f.n() / 2)));
}

/// Enumerator M_{n,d} of an [n, n-d+1, d] MDS code; M_{n,n+1} = x^n.
inline WeightEnumerator mds_enumerator(std::size_t n, std::size_t d, std::uint32_t q) {
    if (n < 1 || d < 1 || d > n + 1) throw InvalidInput("mds_enumerator: need 1 <= d <= n + 1");
    if (q < 2) throw InvalidInput("mds_enumerator: q must be at least 2");
    std::vector<Rational> c(n + 1, Rational(0));
    c[0] = 1;
    if (d == n + 1) return WeightEnumerator(std::move(c), q);
    for (std::size_t i = d; i <= n; ++i) {
        BigInt s = 0;
        for (std::size_t m = 0; m <= i - d; ++m) {
            BigInt term = binomial(i - 1, m) * ipow(BigInt(q), i - d - m);
            s += (m % 2 == 0) ? term : BigInt(-term);
        }
        c[i] = Rational(binomial(n, i) * (q - 1) * s);
    }
    return WeightEnumerator(std::move(c), q);
}

/// Completes A_{n-d_dual+1..n} from A_d..A_{n-d_dual} by back-substitution
/// through sum_{i=d}^{n-l} C(n-i, l) A_i = C(n, l)(q^{k-l} - 1), l = d_dual-1 .. 0.
inline WeightDistribution solve_macwilliams(std::size_t n, std::size_t k, std::uint32_t q, std::size_t d,
                                            std::size_t d_dual, const std::vector<BigInt>& knowns) {
    if (d < 1 || d_dual < 1 || d > n || d_dual > n + 1 || k < 1 || k > n)
        throw InvalidInput("solve_macwilliams: parameters out of range");
    if (d + d_dual > n + 2) throw InvalidInput("solve_macwilliams: d + d_dual exceeds n + 2");
    const std::size_t expected = d + d_dual == n + 2 ? 0 : n - d_dual - d + 1;
    if (knowns.size() != expected)
        throw InvalidInput("solve_macwilliams: expected " + std::to_string(expected) + " known values A_d..A_{n-d_dual}");
    std::vector<BigInt> a(n + 1, 0);
    a[0] = 1;
    for (std::size_t i = 0; i < knowns.size(); ++i) a[d + i] = knowns[i];
    auto rhs = [&](std::size_t l) {
        return binomial(n, l) * (ipow(BigInt(q), static_cast<long long>(k) - static_cast<long long>(l)) - 1);
    };
    for (std::size_t l = d_dual; l-- > 0;) {
        BigInt known_sum = 0;
        const std::size_t top = n - l;  // the unknown A_{n-l} has coefficient C(l, l) = 1
        for (std::size_t i = d; i < top; ++i) known_sum += binomial(n - i, l) * a[i];
        if (static_cast<long long>(k) - static_cast<long long>(l) < 0)
            throw InvalidInput("solve_macwilliams: d_dual - 1 exceeds k");
        const BigInt value = rhs(l) - known_sum;
        if (top < d) {
            // MDS case: this equation has no unknown and must hold identically.
            if (value != 0) throw InvalidInput("solve_macwilliams: inconsistent identity at l = " + std::to_string(l));
            continue;
        }
        if (value < 0)
            throw InvalidInput("solve_macwilliams: knowns force A_" + std::to_string(top) + " = " + value.str() +
                               " < 0");
        a[top] = value;
    }
    if (a[d] == 0) throw InvalidInput("solve_macwilliams: A_d must be positive");
    return WeightDistribution{n, std::move(a)};
}

// --- enumerator text format: "n" then n+1 rationals, index order 0..n ---

inline WeightEnumerator parse_enumerator(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    if (tokens.empty()) throw InvalidInput("enumerator file is empty");
    long long n = -1;
    try {
        std::size_t used = 0;
        n = std::stoll(tokens[0], &used);
        if (used != tokens[0].size()) n = -1;
    } catch (const std::exception&) {
        n = -1;
    }
    if (n < 0) throw InvalidInput("enumerator: expected length n, got '" + tokens[0] + "'");
    if (tokens.size() != static_cast<std::size_t>(n) + 2)
        throw InvalidInput("enumerator: expected " + std::to_string(n + 1) + " coefficients, got " +
                           std::to_string(tokens.size() - 1));
    std::vector<Rational> c;
    for (std::size_t i = 1; i < tokens.size(); ++i) c.push_back(parse_rational(tokens[i]));
    return WeightEnumerator(std::move(c));
}

inline WeightEnumerator parse_enumerator(const std::string& text) {
    std::istringstream in(text);
    return parse_enumerator(in);
}

inline std::string format_enumerator(const WeightEnumerator& e) {
    std::string out = std::to_string(e.n()) + "\n";
    for (std::size_t i = 0; i <= e.n(); ++i) out += (i ? " " : "") + to_string(e[i]);
    return out + "\n";
}

/// Human-readable polynomial, e.g. "x^4 + 8*x*y^3".
inline std::string format_polynomial(const WeightEnumerator& e) {
    std::string out;
    const std::size_t n = e.n();
    for (std::size_t i = 0; i <= n; ++i) {
        Rational c = e[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono;
        auto var = [&](const char* v, std::size_t p) {
            if (p == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (p > 1) mono += "^" + std::to_string(p);
        };
        var("x", n - i);
        var("y", i);
        if (mono.empty())
            out += to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += to_string(c) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

}  // namespace zetacode

#endif
