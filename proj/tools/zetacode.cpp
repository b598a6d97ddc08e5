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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <zetacode/ag.hpp>
#include <zetacode/classify.hpp>

namespace {

using namespace zetacode;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInvariant = 3;

struct RunConfig {
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t fiber_budget = kDefaultFiberBudget;
    double tol = kDefaultRhTolerance;
    std::string format = "json";
    std::string out;
};

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

std::string fixed17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json big(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json big_list(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(big(x));
    return a;
}

Json rational_list(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

Json rh_json(const RhVerdict& v) {
    Json roots = Json::array();
    for (const auto& r : v.roots) roots.push_back(Json::array({fixed17(r.real()), fixed17(r.imag())}));
    return Json{{"holds", v.holds},
                {"tolerance", fixed17(v.tolerance)},
                {"max_deviation", fixed17(v.max_deviation)},
                {"max_residual", fixed17(v.max_residual)},
                {"ill_conditioned", v.ill_conditioned},
                {"roots", roots}};
}

Json zeta_json(const ZetaPolynomial& p) {
    return Json{{"coefficients", rational_list(p.coeffs)},
                {"polynomial", format_polynomial(p)},
                {"degree", p.degree()},
                {"g", p.g},
                {"g_dual", p.g_dual},
                {"d", p.d},
                {"d_dual", p.d_dual}};
}

Json distribution_json(const WeightDistribution& w) { return big_list(w.counts); }

Json envelope(const std::string& command) {
    return Json{{"schema", "zetacode/1"}, {"command", command}};
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
        return;
    }
    out << prefix << ":";
    if (j.is_array()) {
        for (const auto& v : j) out << ' ' << (v.is_string() ? v.get<std::string>() : v.dump());
    } else {
        out << ' ' << (j.is_string() ? j.get<std::string>() : j.dump());
    }
    out << '\n';
}

void emit(const Json& report, const RunConfig& cfg) {
    std::ostringstream buf;
    if (cfg.format == "text")
        render_text(report, "", buf);
    else
        buf << report.dump(2) << '\n';
    if (cfg.out.empty()) {
        std::cout << buf.str();
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw InvalidInput("cannot open output file " + cfg.out);
    f << buf.str();
}

// ---------------------------------------------------------------------------
// input
// ---------------------------------------------------------------------------

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

LinearCode load_code(const std::string& path) {
    try {
        return parse_matrix(slurp(path));
    } catch (const InvalidInput& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

WeightEnumerator load_enumerator(const std::string& path) {
    try {
        return parse_enumerator(slurp(path));
    } catch (const InvalidInput& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

EllipticCurve load_curve(const std::string& path) {
    try {
        return parse_curve(slurp(path));
    } catch (const InvalidInput& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

Json code_json(const LinearCode& c) { return Json{{"q", c.q()}, {"n", c.n()}, {"k", c.k()}}; }

Json cmd_wdist(const std::string& path, const RunConfig& cfg) {
    const auto c = load_code(path);
    const auto w = weight_distribution(c, cfg.budget);
    const auto d = min_distance(w);
    Json r = envelope("wdist");
    r["code"] = code_json(c);
    r["distribution"] = distribution_json(w);
    r["d"] = d;
    r["genus"] = static_cast<long long>(c.n() + 1 - c.k() - d);
    r["checks"] = Json{{"total_is_q_pow_k", w.total() == ipow(BigInt(c.q()), c.k())}};
    return r;
}

Json cmd_dual(const std::string& path, const RunConfig& cfg) {
    const auto c = load_code(path);
    const auto dc = dual(c);
    const auto w = weight_distribution(c, cfg.budget);
    const auto image = macwilliams_dual(from_distribution(w), c.q(), c.k());
    Json r = envelope("dual");
    r["code"] = code_json(c);
    r["dual"] = Json{{"k", dc.k()}, {"generator", format_matrix(dc)}};
    r["distribution"] = distribution_json(w);
    r["macwilliams_image"] = rational_list(image.coeffs());
    Json checks;
    if (!dc.is_zero_code()) {
        const auto wd = weight_distribution(dc, cfg.budget);
        r["dual"]["distribution"] = distribution_json(wd);
        checks["macwilliams_identity"] = image == from_distribution(wd);
        checks["dual_involution"] = same_code(dual(dc), c);
    } else {
        checks["macwilliams_identity"] = image == WeightEnumerator::from_integers([&] {
            std::vector<long long> v(c.n() + 1, 0);
            v[0] = 1;
            return v;
        }());
    }
    checks["self_orthogonal"] = is_self_orthogonal(c);
    checks["self_dual"] = is_self_dual(c);
    checks["formally_self_dual"] = 2 * c.k() == c.n() && image == from_distribution(w);
    r["checks"] = checks;
    return r;
}

// zeta of an enumerator with dimension k; shared by zeta, rh and classify.
Json zeta_block(const WeightEnumerator& a, std::uint32_t q, std::size_t k, const RunConfig& cfg, Json& checks) {
    const auto chinen = zeta_from_chinen(a, q, k);
    const auto basis = zeta_from_mds_basis(a, q, k);
    Json z = zeta_json(chinen);
    checks["algorithms_agree"] = chinen == basis;
    checks["degree_is_n_plus_2_minus_d_minus_d_dual"] = chinen.degree() == chinen.n + 2 - chinen.d - chinen.d_dual;
    checks["p_at_1_is_1"] = chinen(Rational(1)) == 1;
    if (k < a.n()) {
        const auto image = macwilliams_dual(a, q, k);
        checks["functional_equation"] = functional_dual(chinen) == zeta_from_chinen(image, q, a.n() - k);
    }
    checks["corollary_a_d"] = corollary_ad_check(chinen, a);
    if (chinen.g >= 0 && chinen.g == chinen.g_dual) checks["self_reciprocal"] = self_reciprocal_check(chinen);
    z["rh"] = rh_json(riemann_hypothesis(chinen, cfg.tol));
    const auto rd = min_distance_from_roots(chinen, a);
    z["distance_from_roots"] = Json{{"reciprocal_root_sum", to_string(rd.reciprocal_root_sum)},
                                    {"d_exact", to_string(rd.d_exact)},
                                    {"d_bound", to_string(rd.d_bound)},
                                    {"d_bound_from_roots", fixed17(rd.d_bound_from_roots)}};
    checks["distance_from_roots_exact"] = rd.d_exact == Rational(chinen.d);
    return z;
}

Json cmd_zeta(const std::string& path, const RunConfig& cfg) {
    auto c = load_code(path);
    Json r = envelope("zeta");
    r["code"] = code_json(c);
    if (is_degenerate(c)) {
        const auto zeros = zero_columns(c).size();
        const std::string notice =
            "punctured " + std::to_string(zeros) + " coordinate" + (zeros == 1 ? "" : "s");
        std::cerr << "notice: " << notice << '\n';
        r["notice"] = notice;
        c = puncture_degenerate(c);
        r["punctured_code"] = code_json(c);
    }
    const auto w = weight_distribution(c, cfg.budget);
    const auto a = from_distribution(w, c.q());
    r["distribution"] = distribution_json(w);
    Json checks;
    r["zeta"] = zeta_block(a, c.q(), c.k(), cfg, checks);
    r["checks"] = checks;
    return r;
}

Json cmd_rh(const std::string& path, std::uint32_t q, std::optional<std::size_t> k, const RunConfig& cfg) {
    const auto a = load_enumerator(path);
    const std::size_t dim = k ? *k : infer_dimension(a, q);
    Json r = envelope("rh");
    r["enumerator"] = Json{{"n", a.n()}, {"q", q}, {"k", dim}, {"coefficients", rational_list(a.coeffs())}};
    Json checks;
    r["zeta"] = zeta_block(a, q, dim, cfg, checks);
    r["checks"] = checks;
    return r;
}

Json cmd_classify(const std::string& path, std::uint32_t q, const RunConfig& cfg) {
    const auto a = load_enumerator(path);
    const auto rep = classify(a, q);
    Json r = envelope("classify");
    r["enumerator"] = Json{{"n", a.n()}, {"q", q}, {"coefficients", rational_list(a.coeffs())}};
    Json cls{{"b_max", rep.b_max}, {"type", to_string(rep.type)}, {"v_pattern", rep.v_pattern}};
    cls["d"] = rep.d ? Json(*rep.d) : Json(nullptr);
    cls["d_bound"] = rep.d_bound ? Json(*rep.d_bound) : Json(nullptr);
    cls["extremal"] = rep.extremal;
    if (!rep.reason.empty()) cls["reason"] = rep.reason;
    r["classification"] = cls;

    Json checks{{"virtually_self_dual", rep.virtually_self_dual}};
    const auto formal = formal_checks(a, cfg.tol);
    Json f{{"formal", formal.formal}, {"d_bound", formal.d_bound}, {"extremal", formal.extremal}};
    if (!formal.reason.empty()) f["reason"] = formal.reason;
    if (formal.zeta) {
        f["zeta"] = zeta_json(*formal.zeta);
        f["zeta"]["rh"] = rh_json(*formal.rh);
        checks["anti_functional_equation"] = formal.anti_functional_equation;
    }
    r["formal"] = f;
    if (rep.virtually_self_dual && a.n() % 2 == 0) {
        try {
            const auto p = zeta(a, q, a.n() / 2);
            Json z = zeta_json(p);
            z["rh"] = rh_json(riemann_hypothesis(p, cfg.tol));
            checks["self_reciprocal"] = self_reciprocal_check(p);
            r["zeta"] = z;
        } catch (const InvalidInput& e) {
            r["zeta"] = Json{{"unavailable", e.what()}};
        }
    }
    r["checks"] = checks;
    return r;
}

Json cmd_mds(std::size_t n, std::size_t d, std::uint32_t q) {
    FieldSpec::of_order(q);
    const auto m = mds_enumerator(n, d, q);
    const std::size_t k = n + 1 - d;
    Json r = envelope("mds");
    r["parameters"] = Json{{"n", n}, {"d", d}, {"q", q}, {"k", k}};
    r["coefficients"] = rational_list(m.coeffs());
    r["polynomial"] = format_polynomial(m);
    Json checks{{"total_is_q_pow_k", m.total() == rpow(q, static_cast<long long>(k))}};
    if (d >= 2 && d <= n) checks["dual_is_mds"] = macwilliams_dual(m, q, k) == mds_enumerator(n, n + 2 - d, q);
    r["checks"] = checks;
    return r;
}

Json cmd_grs(std::uint32_t q, std::size_t n, std::size_t k, const std::vector<std::uint32_t>& alphas_in,
             const std::vector<std::uint32_t>& mult_in, const RunConfig& cfg) {
    const auto spec = FieldSpec::of_order(q);
    std::vector<std::uint32_t> alphas = alphas_in, mult = mult_in;
    if (alphas.empty()) {
        alphas.resize(n);
        std::iota(alphas.begin(), alphas.end(), 0u);
    }
    if (mult.empty()) mult.assign(alphas.size(), 1);
    if (alphas.size() != n) throw InvalidInput("grs: --alphas must list exactly n points");
    const auto c = grs_code(spec, alphas, mult, k);
    const auto w = weight_distribution(c, cfg.budget);
    const auto d = min_distance(w);
    Json r = envelope("grs");
    r["code"] = code_json(c);
    r["generator"] = format_matrix(c);
    r["distribution"] = distribution_json(w);
    r["d"] = d;
    Json checks{{"mds", d == n - k + 1},
                {"distribution_is_mds_enumerator", from_distribution(w) == mds_enumerator(n, n - k + 1, q)}};
    if (k < n) {
        const auto p = zeta(from_distribution(w, q), q, k);
        r["zeta"] = zeta_json(p);
        checks["zeta_is_one"] = p.coeffs == std::vector<Rational>{Rational(1)};
    }
    const auto bl = bl_coefficients(w, k - 1);
    r["b_l"] = big_list(bl);
    checks["b_l_exact"] = bl_within_bounds(bl, bl_bounds(n, k - 1, 0, q));
    r["checks"] = checks;
    return r;
}

Json bounds_json(const std::vector<BlBound>& bounds) {
    Json a = Json::array();
    for (const auto& b : bounds)
        a.push_back(Json{{"l", b.l}, {"exact", b.exact}, {"lower", to_string(b.lower)}, {"upper", to_string(b.upper)}});
    return a;
}

Json cmd_elliptic(const std::string& path, std::size_t k, const RunConfig& cfg) {
    const auto e = load_curve(path);
    const std::uint32_t q = e.spec()->q();
    const auto pts = points(e);
    std::vector<CurvePoint> affine;
    for (const auto& p : pts)
        if (!p.infinity) affine.push_back(p);
    const std::size_t n = affine.size();
    Json r = envelope("elliptic");
    Json pj = Json::array();
    for (const auto& p : pts) pj.push_back(to_string(p));
    const long long trace = static_cast<long long>(q) + 1 - static_cast<long long>(pts.size());
    const CurveZeta lz(q, 1, {BigInt(1), BigInt(-trace), BigInt(q)});
    r["curve"] = Json{{"q", q},
                      {"a", Json::array({e.a1(), e.a2(), e.a3(), e.a4(), e.a6()})},
                      {"points", pts.size()},
                      {"point_list", pj},
                      {"l_polynomial", big_list(lz.coeffs())}};
    r["curve"]["rh"] = rh_json(curve_rh(lz, cfg.tol));

    const auto c = elliptic_code(e, k, affine);
    const auto w = weight_distribution(c, cfg.budget);
    const auto d = min_distance(w);
    r["code"] = code_json(c);
    r["distribution"] = distribution_json(w);
    r["d"] = d;
    Json checks{{"hasse", trace * trace <= 4 * static_cast<long long>(q)},
                {"curve_rh", curve_rh(lz, cfg.tol).holds},
                {"dimension_is_k", c.k() == k},
                {"distance_in_range", d + k == n || d + k == n + 1}};
    if (d + k == n) {
        const auto amin = w.counts[n - k];
        checks["a_min_recursion"] = elliptic_distribution_from_amin(n, k, q, amin) == w;
        BigInt fact = 1;
        for (std::size_t i = 2; i <= k; ++i) fact *= i;
        if (boost::multiprecision::gcd(fact, BigInt(n + 1)) == 1)
            checks["a_min_one_point_formula"] = amin_onepoint(n, k, q) == Rational(amin);
    }
    try {
        const auto fib = fiber_distribution(e, Divisor::multiple(CurvePoint::at_infinity(), static_cast<long long>(k)),
                                            affine, cfg.fiber_budget);
        r["fiber_counts"] = big_list(fib);
        checks["fiber_count_matches"] = distribution_from_fibers(fib) == w;
    } catch (const BudgetExceeded& ex) {
        r["fiber_counts"] = Json{{"skipped", ex.what()}};
    }
    const auto bl = bl_coefficients(w, k);
    const auto bounds = bl_bounds(n, k, 1, q);
    r["b_l"] = big_list(bl);
    r["b_l_bounds"] = bounds_json(bounds);
    checks["b_l_within_bounds"] = bl_within_bounds(bl, bounds);
    r["checks"] = checks;
    return r;
}

Json cmd_curve_zeta(std::uint32_t q, std::size_t g, const std::vector<std::string>& counts_in, const RunConfig& cfg) {
    FieldSpec::of_order(q);
    std::vector<BigInt> counts;
    for (const auto& s : counts_in) {
        try {
            counts.emplace_back(s);
        } catch (const std::exception&) {
            throw InvalidInput("curve-zeta: bad point count '" + s + "'");
        }
    }
    const auto z = zeta_from_point_counts(q, g, counts);
    const auto rh = curve_rh(z, cfg.tol);
    Json r = envelope("curve-zeta");
    r["parameters"] = Json{{"q", q}, {"g", g}, {"counts", big_list(counts)}};
    r["l_polynomial"] = big_list(z.coeffs());
    std::vector<BigInt> predicted;
    for (std::size_t i = 1; i <= std::max<std::size_t>(g, 1) + 2; ++i) predicted.push_back(z.point_count(i));
    r["predicted_counts"] = big_list(predicted);
    r["rh"] = rh_json(rh);
    bool reproduces = true;
    for (std::size_t i = 0; i < g; ++i) reproduces = reproduces && predicted[i] == counts[i];
    r["checks"] = Json{{"functional_equation", true}, {"reproduces_counts", reproduces}, {"rh", rh.holds}};
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("ZETACODE_BUDGET")) {
        try {
            cfg.budget = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: ZETACODE_BUDGET is not a positive integer\n";
            return kExitInvalid;
        }
    }

    CLI::App app{"Weight enumerators, zeta polynomials and AG codes over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--budget", cfg.budget, "Codeword enumeration budget")->check(CLI::PositiveNumber);
    app.add_option("--fiber-budget", cfg.fiber_budget, "Effective divisor budget for fiber counts")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol", cfg.tol, "Tolerance on | |T| sqrt(q) - 1 |")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", cfg.out, "Write the report to this file");

    std::string file;
    std::uint32_t q = 0;
    std::size_t n = 0, k = 0, d = 0, g = 0;
    std::optional<std::size_t> opt_k;
    std::vector<std::uint32_t> alphas, mults;
    std::vector<std::string> counts;
    std::function<Json()> run;

    auto* wdist = app.add_subcommand("wdist", "Weight distribution of a code");
    wdist->add_option("matrix", file, "Generator matrix file")->required();
    wdist->callback([&] { run = [&] { return cmd_wdist(file, cfg); }; });

    auto* dualc = app.add_subcommand("dual", "Dual code and MacWilliams check");
    dualc->add_option("matrix", file, "Generator matrix file")->required();
    dualc->callback([&] { run = [&] { return cmd_dual(file, cfg); }; });

    auto* zetac = app.add_subcommand("zeta", "Zeta polynomial of a code");
    zetac->add_option("matrix", file, "Generator matrix file")->required();
    zetac->callback([&] { run = [&] { return cmd_zeta(file, cfg); }; });

    auto* rh = app.add_subcommand("rh", "Zeta polynomial and RH verdict of an enumerator");
    rh->add_option("enumerator", file, "Enumerator file")->required();
    rh->add_option("--q", q, "Field size")->required();
    rh->add_option("--k", opt_k, "Dimension (inferred from F(1,1) when omitted)");
    rh->callback([&] { run = [&] { return cmd_rh(file, q, opt_k, cfg); }; });

    auto* cls = app.add_subcommand("classify", "Divisibility type, extremality and formal checks");
    cls->add_option("enumerator", file, "Enumerator file")->required();
    cls->add_option("--q", q, "Field size")->required();
    cls->callback([&] { run = [&] { return cmd_classify(file, q, cfg); }; });

    auto* mds = app.add_subcommand("mds", "MDS weight enumerator");
    mds->add_option("--n", n, "Length")->required();
    mds->add_option("--d", d, "Minimum distance")->required();
    mds->add_option("--q", q, "Field size")->required();
    mds->callback([&] { run = [&] { return cmd_mds(n, d, q); }; });

    auto* grs = app.add_subcommand("grs", "Generalized Reed-Solomon code");
    grs->add_option("--q", q, "Field size")->required();
    grs->add_option("--n", n, "Length")->required();
    grs->add_option("--k", k, "Dimension")->required();
    grs->add_option("--alphas", alphas, "Evaluation points as element indices")->delimiter(',');
    grs->add_option("--multipliers", mults, "Column multipliers as element indices")->delimiter(',');
    grs->callback([&] { run = [&] { return cmd_grs(q, n, k, alphas, mults, cfg); }; });

    auto* ell = app.add_subcommand("elliptic", "One-point elliptic code C_L(D, kO)");
    ell->add_option("curve", file, "Curve file")->required();
    ell->add_option("--k", k, "Degree of G = kO")->required();
    ell->callback([&] { run = [&] { return cmd_elliptic(file, k, cfg); }; });

    auto* cz = app.add_subcommand("curve-zeta", "L-polynomial from point counts");
    cz->add_option("--q", q, "Field size")->required();
    cz->add_option("--g", g, "Genus")->required();
    cz->add_option("--counts", counts, "Point counts N_1..N_g")->delimiter(',');
    cz->callback([&] { run = [&] { return cmd_curve_zeta(q, g, counts, cfg); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        emit(run(), cfg);
        return kExitOk;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
}
