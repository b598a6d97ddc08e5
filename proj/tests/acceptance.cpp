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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: acceptance <path-to-zetacode-cli>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <unistd.h>

#include "oracles.hpp"

using namespace zetacode;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Accumulates failures with the first few messages kept.
struct Tally {
    bool ok = true;
    int failures = 0;
    std::ostringstream first;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (failures++ < 3) first << (failures > 1 ? "; " : "") << what;
    }

    Outcome done(const std::string& summary) const {
        if (ok) return {true, summary};
        return {false, summary + "; " + std::to_string(failures) + " failure(s): " + first.str()};
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

// --- shared corpus ---------------------------------------------------------

struct CorpusCode {
    LinearCode code;
    LinearCode dual_code;
    WeightDistribution w, w_dual;
};

std::vector<CorpusCode> random_corpus(std::size_t count) {
    std::mt19937_64 rng(20240601);
    const std::uint32_t fields[] = {2, 3, 4, 5, 7, 8, 9};
    std::vector<CorpusCode> out;
    std::uint64_t limit = std::uint64_t{1} << 20;
    while (out.size() < count) {
        const std::uint32_t q = fields[out.size() % 7];
        const std::size_t n = 2 + rng() % 15, k = 1 + rng() % (n - 1);
        std::uint64_t a = 0, b = 0;
        if (!checked_power(q, k, limit, a) || !checked_power(q, n - k, limit, b)) continue;
        const auto c = oracle::random_code(rng, FieldSpec::of_order(q), n, k);
        const auto dc = dual(c);
        out.push_back({c, dc, weight_distribution(c), weight_distribution(dc)});
    }
    return out;
}

// --- criteria ----------------------------------------------------------------

Outcome criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    const auto i2 = parse_matrix(oracle::data_file("i2.txt"));
    t.expect(format_polynomial(from_distribution(weight_distribution(i2))) == "x^2 + y^2", "i2 enumerator");
    const auto tetra = parse_matrix(oracle::data_file("tetra.txt"));
    t.expect(format_polynomial(from_distribution(weight_distribution(tetra))) == "x^4 + 8*x*y^3", "tetra enumerator");
    const auto c = parse_matrix(oracle::data_file("fsd10.txt"));
    const auto dc = dual(c);
    const auto expected = ints({1, 0, 0, 0, 15, 0, 15, 0, 0, 0, 1});
    t.expect(weight_distribution(c).counts == expected, "[10,5] distribution");
    t.expect(weight_distribution(dc).counts == expected, "[10,5] dual distribution");
    t.expect(!same_code(c, dc), "[10,5] code equals its dual");
    const double secs = seconds_since(t0);
    t.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
    return t.done("i2, tetracode, [10,5] formally self-dual code exact");
}

Outcome criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    const auto c = parse_matrix(oracle::data_file("hamming8.txt"));
    const auto a = from_distribution(weight_distribution(c), 2);
    const std::vector<Rational> expected{Rational(1, 5), Rational(2, 5), Rational(2, 5)};
    const auto p1 = zeta_from_chinen(a, 2), p2 = zeta_from_mds_basis(a, 2);
    t.expect(p1.coeffs == expected, "triangular-system zeta");
    t.expect(p2.coeffs == expected, "MDS-basis zeta");
    const auto v = riemann_hypothesis(p1);
    t.expect(v.holds, "RH verdict");
    t.expect(v.roots.size() == 2, "two roots");
    double worst = 0;
    for (const auto& r : v.roots) {
        worst = std::max(worst, std::fabs(std::abs(r) * std::sqrt(2.0) - 1));
        t.expect(std::abs(r - std::complex<double>(-0.5, r.imag() > 0 ? 0.5 : -0.5)) < 1e-10, "root location");
    }
    t.expect(worst < 1e-10, "root deviation");
    const double secs = seconds_since(t0);
    t.expect(secs < 1.0, "took " + std::to_string(secs) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    return t.done("P = (1+2T+2T^2)/5 by both algorithms, max | |T|sqrt2 - 1 | = " + std::string(buf));
}

Outcome criterion3(const std::vector<CorpusCode>& corpus, double build_secs) {
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    std::set<std::uint32_t> fields;
    for (const auto& cc : corpus) {
        const auto q = cc.code.q();
        fields.insert(q);
        const auto image = macwilliams_dual(from_distribution(cc.w), q, cc.code.k());
        t.expect(image == from_distribution(cc.w_dual), "transform mismatch for\n" + format_matrix(cc.code));
    }
    t.expect(corpus.size() >= 200, "corpus too small");
    t.expect(fields.size() == 7, "not every field size sampled");
    const double secs = build_secs + seconds_since(t0);
    t.expect(secs < 120.0, "took " + std::to_string(secs) + " s");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", secs);
    return t.done(std::to_string(corpus.size()) + " random codes over 7 fields, " + buf + " s");
}

Outcome criterion4(const std::vector<CorpusCode>& corpus) {
    Tally t;
    std::size_t used = 0;
    for (const auto& cc : corpus) {
        const auto q = cc.code.q();
        const auto d = min_distance(cc.w), dd = min_distance(cc.w_dual);
        if (d < 2 || dd < 2) continue;
        ++used;
        const auto a = from_distribution(cc.w, q), b = from_distribution(cc.w_dual, q);
        const auto p = zeta(a, q, cc.code.k());
        const auto pd = zeta(b, q, cc.dual_code.k());
        const std::string id = format_matrix(cc.code);
        t.expect(p == zeta_from_mds_basis(a, q, cc.code.k()), "algorithms disagree\n" + id);
        t.expect(p.degree() == cc.code.n() + 2 - d - dd, "degree\n" + id);
        t.expect(p(Rational(1)) == 1, "P(1)\n" + id);
        t.expect(functional_dual(p) == pd, "functional equation\n" + id);
        t.expect(p.coeff(0) == a[d] / (Rational(q - 1) * Rational(binomial(cc.code.n(), d))), "P(0)\n" + id);
        t.expect(corollary_ad_check(p, a), "A_{d+1} relation\n" + id);
    }
    t.expect(used >= 100, "too few non-degenerate codes");
    return t.done(std::to_string(used) + " non-degenerate codes: degree, P(1), functional equation, corollaries");
}

struct AgCode {
    WeightDistribution w;
    std::size_t m, g;
    std::uint32_t q;
};

Outcome criterion5(std::vector<AgCode>& ag) {
    Tally t;
    std::mt19937_64 rng(77);
    std::size_t count = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const auto spec = FieldSpec::of_order(q);
        for (std::size_t n = 1; n <= q; ++n)
            for (std::size_t k = 1; k <= n; ++k) {
                std::uint64_t words = 0;
                if (!checked_power(q, k, std::uint64_t{1} << 20, words)) break;
                std::vector<std::uint32_t> alphas(q), mult(n);
                std::iota(alphas.begin(), alphas.end(), 0u);
                std::shuffle(alphas.begin(), alphas.end(), rng);
                alphas.resize(n);
                for (auto& v : mult) v = 1 + static_cast<std::uint32_t>(rng() % (q - 1));
                const auto c = grs_code(spec, alphas, mult, k);
                const auto w = weight_distribution(c);
                const std::string id = "GRS q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" +
                                       std::to_string(k);
                t.expect(min_distance(w) == n - k + 1, id + " not MDS");
                t.expect(w.counts == oracle::mds_closed_form(n, n - k + 1, q), id + " distribution");
                t.expect(from_distribution(w) == mds_enumerator(n, n - k + 1, q), id + " mds_enumerator");
                if (k < n) t.expect(zeta(from_distribution(w, q), q, k).coeffs == std::vector<Rational>{1}, id + " P");
                ag.push_back({w, k - 1, 0, q});
                ++count;
            }
    }
    return t.done(std::to_string(count) + " GRS codes over q <= 9: d = n-k+1, closed-form distribution, P = 1");
}

Outcome criterion6() {
    Tally t;
    const auto r8 = classify(w8(), 2);
    t.expect(r8.type == DivisibilityType::II, "W8 type");
    t.expect(r8.extremal && r8.d_bound == std::optional<std::size_t>(4), "W8 extremal with bound 4");
    t.expect(type_distance_bound(DivisibilityType::I, 8) == std::optional<std::size_t>(4), "Type I n=8");
    t.expect(type_distance_bound(DivisibilityType::III, 12) == std::optional<std::size_t>(6), "Type III n=12");
    t.expect(type_distance_bound(DivisibilityType::IV, 6) == std::optional<std::size_t>(4), "Type IV n=6");
    const auto f = formal_checks(w12());
    t.expect(f.formal, "W12 formal test");
    t.expect(f.d_bound == 4 && f.extremal, "W12 extremal for the formal bound");
    t.expect(f.zeta.has_value(), "W12 zeta");
    std::string rh = "n/a";
    if (f.zeta) {
        const auto& p = *f.zeta;
        // P(T) = -2^g T^{2g} P(1/(2T)) coefficientwise
        t.expect(anti_functional_check(p), "anti-functional equation");
        const auto two_g = static_cast<std::size_t>(2 * p.g);
        bool mirrored = true;
        for (std::size_t j = 0; j <= two_g; ++j)
            mirrored = mirrored && p.coeffs[j] == -rpow(2, p.g - static_cast<long long>(j)) * p.coeffs[two_g - j];
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3g", f.rh->max_deviation);
        rh = std::string(f.rh->holds ? "holds" : "fails") + " (max deviation " + buf + ")";
        return t.done("W8 Type II extremal; bounds 4/6/4; W12 formal, extremal, a_j = -2^(j-g) a_(2g-j) exact" +
                      std::string(mirrored ? "" : " [mirrored exponent g-j does not hold]") + "; W12 RH " + rh);
    }
    return t.done("W12 zeta missing");
}

Outcome criterion7(std::vector<AgCode>& ag) {
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    std::size_t curves = 0, codes = 0, non_mds = 0, fibers = 0;
    for (const auto* file : {"e2.curve", "e2b.curve", "e3.curve", "e5.curve", "e5b.curve", "e7.curve", "e7b.curve"}) {
        const auto e = parse_curve(oracle::data_file(file));
        const std::uint32_t q = e.spec()->q();
        ++curves;
        const auto pts = points(e);
        const auto o = CurvePoint::at_infinity();
        bool group_ok = true;
        for (const auto& a : pts) {
            group_ok = group_ok && e.add(a, o) == a && e.add(a, e.negate(a)) == o;
            for (const auto& b : pts) {
                const auto ab = e.add(a, b);
                group_ok = group_ok && e.contains(ab) && ab == e.add(b, a);
                for (const auto& c : pts) group_ok = group_ok && e.add(ab, c) == e.add(a, e.add(b, c));
            }
        }
        t.expect(group_ok, std::string(file) + " group law");
        const long long trace = static_cast<long long>(q) + 1 - static_cast<long long>(pts.size());
        const CurveZeta l(q, 1, {BigInt(1), BigInt(-trace), BigInt(q)});
        t.expect(curve_rh(l, 1e-8).holds, std::string(file) + " curve RH");

        std::vector<CurvePoint> affine(pts.begin() + 1, pts.end());
        const std::size_t n = affine.size();
        for (std::size_t k = 1; k < n; ++k) {
            std::uint64_t words = 0;
            if (!checked_power(q, k, std::uint64_t{1} << 22, words)) break;
            const std::string id = std::string(file) + " k=" + std::to_string(k);
            const auto c = elliptic_code(e, k, affine);
            const auto w = weight_distribution(c, std::uint64_t{1} << 22);
            const auto d = min_distance(w);
            ++codes;
            t.expect(c.k() == k, id + " dimension");
            t.expect(d == n - k || d == n - k + 1, id + " distance");
            if (d == n - k) {
                ++non_mds;
                t.expect(elliptic_distribution_from_amin(n, k, q, w.counts[n - k]) == w, id + " recursion");
            }
            const auto fib = fiber_distribution(e, Divisor::multiple(o, static_cast<long long>(k)), affine, 10'000'000);
            // a_i = A_{n-i} for i < n; no nonzero f in L(kO) vanishes on all of D
            bool fib_ok = fib.size() == n + 1 && fib[n] == 0;
            for (std::size_t i = 0; fib_ok && i < n; ++i) fib_ok = fib[i] == w.counts[n - i];
            t.expect(fib_ok, id + " fiber counts");
            ++fibers;
            ag.push_back({w, k, 1, q});
        }
    }
    t.expect(curves >= 5, "fewer than 5 curves");
    const double secs = seconds_since(t0);
    t.expect(secs < 300.0, "took " + std::to_string(secs) + " s");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", secs);
    return t.done(std::to_string(curves) + " curves, " + std::to_string(codes) + " one-point codes (" +
                  std::to_string(non_mds) + " non-MDS), " + std::to_string(fibers) + " fiber checks, " + buf + " s");
}

Outcome criterion8(const std::vector<AgCode>& ag) {
    Tally t;
    std::size_t exact = 0, interval = 0;
    for (const auto& code : ag) {
        const auto b = bl_coefficients(code.w, code.m);
        const auto bounds = bl_bounds(code.w.n, code.m, code.g, code.q);
        for (std::size_t l = 0; l <= code.m; ++l) {
            const Rational v(b[l]);
            if (bounds[l].exact) {
                ++exact;
                t.expect(v == bounds[l].lower, "exact B_l mismatch at l=" + std::to_string(l));
            } else {
                ++interval;
                t.expect(bounds[l].lower <= v && v <= bounds[l].upper, "B_l outside interval at l=" + std::to_string(l));
            }
        }
        auto expect = code.w.counts;
        expect[0] -= 1;
        t.expect(oracle::expand_bl(b, code.w.n) == expect, "B_l do not expand back to A - x^n");
    }
    return t.done(std::to_string(ag.size()) + " AG codes: " + std::to_string(exact) + " exact values, " +
                  std::to_string(interval) + " interval checks");
}

Outcome criterion9(const std::string& cli) {
    Tally t;
    const std::string data = ZETACODE_DATA_DIR;
    const std::vector<std::string> commands{
        "wdist " + data + "/hamming8.txt",
        "wdist " + data + "/tetra.txt",
        "dual " + data + "/fsd10.txt",
        "zeta " + data + "/hamming8.txt",
        "zeta " + data + "/fsd10.txt",
        "zeta " + data + "/degenerate.txt",
        "rh " + data + "/w8.enum --q 2",
        "classify " + data + "/w8.enum --q 2",
        "classify " + data + "/w12.enum --q 2",
        "mds --n 4 --d 3 --q 3",
        "grs --q 7 --n 6 --k 3 --multipliers 1,2,3,4,5,6",
        "elliptic " + data + "/e5.curve --k 3",
        "curve-zeta --q 5 --g 1 --counts 9",
    };
    const fs::path dir = fs::temp_directory_path() / ("zetacode_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto slurp = [](const fs::path& p) {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream s;
        s << f.rdbuf();
        return s.str();
    };
    std::size_t runs = 0;
    for (const auto& format : {"json", "text"})
        for (std::size_t i = 0; i < commands.size(); ++i) {
            std::string outputs[2];
            for (int rep = 0; rep < 2; ++rep) {
                const auto out = dir / ("run" + std::to_string(i) + "_" + std::to_string(rep));
                const std::string cmd = "\"" + cli + "\" " + commands[i] + " --format " + format + " --out \"" +
                                        out.string() + "\" 2>/dev/null";
                const int rc = std::system(cmd.c_str());
                t.expect(rc == 0, "exit status for: " + commands[i]);
                outputs[rep] = slurp(out);
                ++runs;
            }
            t.expect(!outputs[0].empty() && outputs[0] == outputs[1], "output differs for: " + commands[i]);
        }
    fs::remove_all(dir);
    return t.done(std::to_string(commands.size()) + " commands x 2 formats, " + std::to_string(runs) +
                  " runs, byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <zetacode-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    int failed = 0;
    auto report = [&](int id, const std::function<Outcome()>& fn) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << o.detail << std::endl;
        failed += o.ok ? 0 : 1;
    };

    report(1, criterion1);
    report(2, criterion2);
    const auto t0 = std::chrono::steady_clock::now();
    const auto corpus = random_corpus(240);
    const double build = seconds_since(t0);
    report(3, [&] { return criterion3(corpus, build); });
    report(4, [&] { return criterion4(corpus); });
    std::vector<AgCode> ag;
    report(5, [&] { return criterion5(ag); });
    report(6, criterion6);
    report(7, [&] { return criterion7(ag); });
    report(8, [&] { return criterion8(ag); });
    report(9, [&] { return criterion9(cli); });
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
