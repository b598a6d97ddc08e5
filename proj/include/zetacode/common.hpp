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

#ifndef ZETACODE_COMMON_HPP
#define ZETACODE_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zetacode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed or out-of-contract input. CLI exit code 1.
class InvalidInput : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured budget. CLI exit code 2.
class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed. CLI exit code 3.
class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt ipow(const BigInt& base, long long e) {
    if (e < 0) throw std::domain_error("ipow: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

/// q^e for any integer e, as an exact rational.
inline Rational rpow(long long q, long long e) {
    if (e >= 0) return Rational(ipow(BigInt(q), e));
    return Rational(BigInt(1), ipow(BigInt(q), -e));
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline BigInt to_integer(const Rational& r) {
    if (!is_integer(r)) throw InvariantViolation("expected an integer, got a proper fraction");
    return boost::multiprecision::numerator(r);
}

/// "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> BigInt {
        if (s.empty()) throw InvalidInput("empty number in '" + std::string(text) + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw InvalidInput("bad number '" + std::string(text) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw InvalidInput("bad number '" + std::string(text) + "'");
        return BigInt(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

/// Checked q^e as a 64-bit value; returns false on overflow past `limit`.
inline bool checked_power(std::uint64_t q, std::uint64_t e, std::uint64_t limit, std::uint64_t& out) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > limit / q) return false;
        r *= q;
    }
    out = r;
    return r <= limit;
}

}  // namespace zetacode

#endif
