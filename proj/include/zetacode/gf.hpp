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

#ifndef ZETACODE_GF_HPP
#define ZETACODE_GF_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace zetacode {

inline constexpr std::uint32_t kDefaultFieldCap = 1024;

namespace detail {

inline bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), little-endian coefficients, no trailing zeros.
using PolyP = std::vector<std::uint32_t>;

inline void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b (b nonzero).
inline PolyP poly_mod(PolyP a, const PolyP& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t f = std::uint64_t{a.back()} * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * b[i] % p) % p);
        trim(a);
    }
    return a;
}

// Trial division against every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const PolyP& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    for (std::size_t deg = 1; deg <= m / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PolyP g(deg + 1);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < deg; ++i, v /= p) g[i] = static_cast<std::uint32_t>(v % p);
            g[deg] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Fixed moduli for the common extension fields; anything else falls back to
// the lexicographically first monic irreducible.
inline PolyP builtin_modulus(std::uint32_t p, std::uint32_t m) {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, PolyP> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {{3, 2}, {1, 0, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{5, 2}, {2, 1, 1}},
        {{7, 2}, {1, 0, 1}},
    };
    if (auto it = table.find({p, m}); it != table.end()) return it->second;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        PolyP f(m + 1);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < m; ++i, v /= p) f[i] = static_cast<std::uint32_t>(v % p);
        f[m] = 1;
        if (f[0] != 0 && is_irreducible(f, p)) return f;
    }
    throw InvariantViolation("no irreducible polynomial found");
}

}  // namespace detail

/// Arithmetic in GF(p^m). Elements are integer indices in [0, q) whose base-p
/// digits, least significant first, are the coefficients of the polynomial
/// representative modulo `modulus()`.
class FieldSpec {
   public:
    /// Cached instance for (p, m) with the built-in modulus.
    static std::shared_ptr<const FieldSpec> make(std::uint32_t p, std::uint32_t m,
                                                 std::uint32_t cap = kDefaultFieldCap) {
        static std::mutex mu;
        static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const FieldSpec>> cache;
        validate_order(p, m, cap);
        std::lock_guard lock(mu);
        auto& slot = cache[{p, m}];
        if (!slot) {
            detail::PolyP mod = m > 1 ? detail::builtin_modulus(p, m) : detail::PolyP{};
            slot = std::shared_ptr<const FieldSpec>(new FieldSpec(p, m, std::move(mod)));
        }
        return slot;
    }

    static std::shared_ptr<const FieldSpec> of_order(std::uint32_t q, std::uint32_t cap = kDefaultFieldCap) {
        if (q < 2) throw InvalidInput("field order must be at least 2");
        std::uint32_t p = 2;
        while (q % p != 0) ++p;
        std::uint32_t m = 0;
        for (std::uint32_t r = q; r > 1; r /= p, ++m)
            if (r % p != 0) throw InvalidInput("field order " + std::to_string(q) + " is not a prime power");
        return make(p, m, cap);
    }

    /// Uncached field with an explicit modulus (monic, degree m, irreducible).
    static std::shared_ptr<const FieldSpec> with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                                                         std::uint32_t cap = kDefaultFieldCap) {
        detail::trim(modulus);
        if (modulus.size() < 2) throw InvalidInput("modulus must have degree >= 1");
        const auto m = static_cast<std::uint32_t>(modulus.size() - 1);
        validate_order(p, m, cap);
        if (modulus.back() != 1) throw InvalidInput("modulus must be monic");
        for (auto c : modulus)
            if (c >= p) throw InvalidInput("modulus coefficient out of range");
        if (m == 1) modulus.clear();
        return std::shared_ptr<const FieldSpec>(new FieldSpec(p, m, std::move(modulus)));
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    bool same_as(const FieldSpec& other) const noexcept {
        return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        if (m_ == 1) {
            const std::uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return digitwise(a, b, false);
    }

    std::uint32_t neg(std::uint32_t a) const noexcept {
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        if (p_ == 2) return a;
        return digitwise(0, a, true);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("inversion of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
        if (e == 0) return 1;
        if (a == 0) return 0;
        return exp_[static_cast<std::uint32_t>((std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1))];
    }

    /// The prime-field embedding of an integer.
    std::uint32_t from_int(long long v) const noexcept {
        const long long r = ((v % static_cast<long long>(p_)) + p_) % p_;
        return static_cast<std::uint32_t>(r);
    }

    /// A fixed generator of the multiplicative group.
    std::uint32_t primitive() const noexcept { return exp_[q_ > 2 ? 1 : 0]; }

    /// Human-readable polynomial form, e.g. "t+1"; used only in diagnostics.
    std::string format(std::uint32_t a) const {
        if (m_ == 1 || a == 0) return std::to_string(a);
        std::string out;
        for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
            std::uint32_t v = a;
            for (int j = 0; j < i; ++j) v /= p_;
            const std::uint32_t c = v % p_;
            if (c == 0) continue;
            if (!out.empty()) out += "+";
            if (c != 1 || i == 0) out += std::to_string(c);
            if (i >= 1) out += "t";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

   private:
    FieldSpec(std::uint32_t p, std::uint32_t m, detail::PolyP modulus)
        : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
        for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;
        if (m_ > 1 && !detail::is_irreducible(modulus_, p_))
            throw InvalidInput("modulus is reducible over GF(" + std::to_string(p_) + ")");
        build_tables();
    }

    static void validate_order(std::uint32_t p, std::uint32_t m, std::uint32_t cap) {
        if (!detail::is_prime(p)) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
        if (m < 1) throw InvalidInput("extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > cap) throw InvalidInput("field order exceeds cap " + std::to_string(cap));
        }
    }

    std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, bool negate_b) const noexcept {
        std::uint32_t r = 0, place = 1;
        for (std::uint32_t i = 0; i < m_; ++i, place *= p_) {
            const std::uint32_t da = a % p_, db = b % p_;
            a /= p_;
            b /= p_;
            r += ((da + (negate_b ? p_ - db : db)) % p_) * place;
        }
        return r;
    }

    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        if (m_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
        detail::PolyP pa, pb;
        for (std::uint32_t i = 0; i < m_; ++i, a /= p_, b /= p_) {
            pa.push_back(a % p_);
            pb.push_back(b % p_);
        }
        detail::PolyP prod(2 * m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i)
            for (std::uint32_t j = 0; j < m_; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
        auto r = detail::poly_mod(std::move(prod), modulus_, p_);
        std::uint32_t out = 0, place = 1;
        for (std::size_t i = 0; i < r.size(); ++i, place *= p_) out += r[i] * place;
        return out;
    }

    void build_tables() {
        log_.assign(q_, 0);
        exp_.assign(q_, 0);
        if (q_ == 2) {
            exp_[0] = 1;
            log_[1] = 0;
        } else {
            for (std::uint32_t cand = 2; cand < q_; ++cand) {
                std::uint32_t x = 1, order = 0;
                do {
                    x = slow_mul(x, cand);
                    ++order;
                } while (x != 1 && order < q_);
                if (order != q_ - 1) continue;
                x = 1;
                for (std::uint32_t i = 0; i < q_ - 1; ++i) {
                    exp_[i] = x;
                    log_[x] = i;
                    x = slow_mul(x, cand);
                }
                break;
            }
        }
        if (m_ > 1 && p_ != 2 && q_ <= 256) {
            add_table_.resize(std::size_t{q_} * q_);
            for (std::uint32_t a = 0; a < q_; ++a)
                for (std::uint32_t b = 0; b < q_; ++b) add_table_[a * q_ + b] = digitwise(a, b, false);
        }
    }

    std::uint32_t p_, m_, q_;
    detail::PolyP modulus_;
    std::vector<std::uint32_t> log_, exp_;
    std::vector<std::uint32_t> add_table_;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

/// A value in a specific GF(q). Mixing elements of different fields throws.
class FieldElement {
   public:
    FieldElement(FieldPtr spec, std::uint32_t repr) : spec_(std::move(spec)), repr_(repr) {
        if (repr_ >= spec_->q()) throw InvalidInput("element index " + std::to_string(repr) + " out of range");
    }

    static FieldElement zero(FieldPtr spec) { return {std::move(spec), 0}; }
    static FieldElement one(FieldPtr spec) { return {std::move(spec), 1}; }

    std::uint32_t repr() const noexcept { return repr_; }
    const FieldPtr& spec() const noexcept { return spec_; }
    bool is_zero() const noexcept { return repr_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {spec_, spec_->add(repr_, check(o))}; }
    FieldElement operator-(const FieldElement& o) const { return {spec_, spec_->sub(repr_, check(o))}; }
    FieldElement operator*(const FieldElement& o) const { return {spec_, spec_->mul(repr_, check(o))}; }
    FieldElement operator/(const FieldElement& o) const { return {spec_, spec_->div(repr_, check(o))}; }
    FieldElement operator-() const { return {spec_, spec_->neg(repr_)}; }

    FieldElement inv() const {
        if (repr_ == 0) throw InvalidInput("inversion of zero");
        return {spec_, spec_->inv(repr_)};
    }
    FieldElement pow(std::uint64_t e) const { return {spec_, spec_->pow(repr_, e)}; }

    bool operator==(const FieldElement& o) const { return repr_ == check(o); }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
        return os << a.spec_->format(a.repr_);
    }

   private:
    std::uint32_t check(const FieldElement& o) const {
        if (!spec_->same_as(*o.spec_)) throw InvalidInput("field elements belong to different fields");
        return o.repr_;
    }

    FieldPtr spec_;
    std::uint32_t repr_;
};

inline std::vector<FieldElement> elements(const FieldPtr& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec->q());
    for (std::uint32_t i = 0; i < spec->q(); ++i) out.emplace_back(spec, i);
    return out;
}

}  // namespace zetacode

#endif
