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

// Independent reference computations shared by the test binaries. None of
// these call into the library routine they are used to check.

#ifndef ZETACODE_TESTS_ORACLES_HPP
#define ZETACODE_TESTS_ORACLES_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <zetacode/ag.hpp>
#include <zetacode/classify.hpp>

namespace oracle {

using namespace zetacode;

inline std::string data_file(const std::string& name) {
    std::ifstream f(std::string(ZETACODE_DATA_DIR) + "/" + name);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

/// Walks every message with an odometer and FieldElement arithmetic.
inline std::vector<BigInt> naive_distribution(const LinearCode& c) {
    const auto& spec = c.spec();
    const std::size_t n = c.n(), k = c.k();
    std::vector<BigInt> out(n + 1, 0);
    std::vector<std::uint32_t> msg(k, 0);
    while (true) {
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) {
            FieldElement s(spec, 0);
            for (std::size_t i = 0; i < k; ++i)
                s = s + FieldElement(spec, msg[i]) * FieldElement(spec, c.generator().at(i, j));
            if (!(s == FieldElement(spec, 0))) ++w;
        }
        out[w] += 1;
        std::size_t pos = 0;
        while (pos < k && ++msg[pos] == spec->q()) msg[pos++] = 0;
        if (pos == k) break;
    }
    return out;
}

/// A'_j = q^{-k} sum_i A_i K_j(i) with K_j(i) = sum_s (-1)^s (q-1)^{j-s} C(i,s) C(n-i,j-s).
inline std::vector<Rational> krawtchouk_dual(const std::vector<BigInt>& a, std::uint32_t q, std::size_t k) {
    const auto n = static_cast<long long>(a.size()) - 1;
    std::vector<Rational> out;
    for (long long j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (long long i = 0; i <= n; ++i) {
            BigInt kj = 0;
            for (long long s = 0; s <= j; ++s) {
                BigInt t = binomial(i, s) * binomial(n - i, j - s) * ipow(BigInt(q - 1), j - s);
                kj += (s % 2 == 0) ? t : BigInt(-t);
            }
            acc += a[static_cast<std::size_t>(i)] * kj;
        }
        out.push_back(Rational(acc) / Rational(ipow(BigInt(q), static_cast<long long>(k))));
    }
    return out;
}

/// A_w = C(n,w) sum_{j=0}^{w-d} (-1)^j C(w,j) (q^{w-d+1-j} - 1) for w >= d.
inline std::vector<BigInt> mds_closed_form(std::size_t n, std::size_t d, std::uint32_t q) {
    std::vector<BigInt> a(n + 1, 0);
    a[0] = 1;
    for (std::size_t w = d; w <= n; ++w) {
        BigInt s = 0;
        for (std::size_t j = 0; j <= w - d; ++j) {
            BigInt t = binomial(w, j) * (ipow(BigInt(q), static_cast<long long>(w - d + 1 - j)) - 1);
            s += (j % 2 == 0) ? t : BigInt(-t);
        }
        a[w] = binomial(n, w) * s;
    }
    return a;
}

/// Uniform full-rank k x n generator over GF(q).
inline LinearCode random_code(std::mt19937_64& rng, const FieldPtr& spec, std::size_t n, std::size_t k) {
    std::uniform_int_distribution<std::uint32_t> pick(0, spec->q() - 1);
    while (true) {
        Matrix g(spec, k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) g.at(i, j) = pick(rng);
        if (rref(g).rank == k) return LinearCode(std::move(g));
    }
}

/// Coefficients of x^{n-i} y^i in sum_l B_l (x - y)^l y^{n-l}.
inline std::vector<BigInt> expand_bl(const std::vector<BigInt>& b, std::size_t n) {
    std::vector<BigInt> out(n + 1, 0);
    for (std::size_t l = 0; l < b.size(); ++l)
        for (std::size_t s = 0; s <= l; ++s) {
            // (x - y)^l = sum_s C(l,s) x^{l-s} (-y)^s, times y^{n-l}: x^{l-s} y^{n-l+s}
            BigInt t = b[l] * binomial(l, s);
            out[n - l + s] += (s % 2 == 0) ? t : BigInt(-t);
        }
    return out;
}

/// Product of univariate rational polynomials.
inline std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

/// Distance bounds, restated.
inline std::size_t type_bound(const std::string& type, std::size_t n) {
    if (type == "I") return 2 * (n / 8) + 2;
    if (type == "II") return 4 * (n / 24) + 4;
    if (type == "III") return 3 * (n / 12) + 3;
    return 2 * (n / 6) + 2;
}

}  // namespace oracle

#endif
