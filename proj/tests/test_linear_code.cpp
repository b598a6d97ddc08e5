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

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace zetacode;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(WeightDistribution, ExtendedHamming) {
    const auto c = parse_matrix(oracle::data_file("hamming8.txt"));
    EXPECT_EQ(weight_distribution(c).counts, ints({1, 0, 0, 0, 14, 0, 0, 0, 1}));
    EXPECT_EQ(min_distance(c), 4u);
    EXPECT_EQ(genus(c), 1);
}

TEST(WeightDistribution, Tetracode) {
    const auto c = parse_matrix(oracle::data_file("tetra.txt"));
    EXPECT_EQ(weight_distribution(c).counts, ints({1, 0, 0, 8, 0}));
    EXPECT_EQ(genus(c), 0);
}

TEST(WeightDistribution, RepetitionI2) {
    const auto c = parse_matrix(oracle::data_file("i2.txt"));
    EXPECT_EQ(weight_distribution(c).counts, ints({1, 0, 1}));
    EXPECT_TRUE(is_self_dual(c));
}

TEST(WeightDistribution, FormallySelfDualButNotSelfDual) {
    const auto c = parse_matrix(oracle::data_file("fsd10.txt"));
    const auto dc = dual(c);
    const auto expected = ints({1, 0, 0, 0, 15, 0, 15, 0, 0, 0, 1});
    EXPECT_EQ(weight_distribution(c).counts, expected);
    EXPECT_EQ(weight_distribution(dc).counts, expected);
    EXPECT_FALSE(same_code(c, dc));
    EXPECT_FALSE(is_self_dual(c));
    EXPECT_TRUE(is_formally_self_dual(c));
}

TEST(WeightDistribution, MatchesNaiveOracleOnRandomCodes) {
    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
        for (int t = 0; t < 6; ++t) {
            const std::size_t n = 2 + rng() % 7, k = 1 + rng() % std::min<std::size_t>(n, 4);
            const auto c = oracle::random_code(rng, FieldSpec::of_order(q), n, k);
            ASSERT_EQ(weight_distribution(c).counts, oracle::naive_distribution(c)) << format_matrix(c);
        }
}

TEST(WeightDistribution, ThreadedSplitIsDeterministic) {
    std::mt19937_64 rng(5);
    const auto c = oracle::random_code(rng, FieldSpec::of_order(2), 22, 16);
    const auto a = weight_distribution(c), b = weight_distribution(c);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.total(), BigInt(1) << 16);
    std::vector<std::uint64_t> whole = detail::weight_histogram(c, 0, 1u << 16);
    EXPECT_EQ(a, detail::to_distribution(22, whole));
}

TEST(WeightDistribution, BudgetExceeded) {
    std::mt19937_64 rng(1);
    const auto c = oracle::random_code(rng, FieldSpec::of_order(3), 12, 10);
    EXPECT_THROW(weight_distribution(c, 1000), BudgetExceeded);
    EXPECT_NO_THROW(weight_distribution(c, 59049));
}

TEST(DistanceDistribution, EqualsWeightDistributionForLinearCodes) {
    std::mt19937_64 rng(3);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const auto c = oracle::random_code(rng, FieldSpec::of_order(q), 6, 3);
        EXPECT_EQ(distance_distribution(c), weight_distribution(c));
    }
}

TEST(Dual, InvolutionAndOrthogonality) {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
        for (int t = 0; t < 8; ++t) {
            const std::size_t n = 2 + rng() % 9, k = 1 + rng() % (n - 1);
            const auto c = oracle::random_code(rng, FieldSpec::of_order(q), n, k);
            const auto dc = dual(c);
            ASSERT_EQ(dc.k(), n - k);
            EXPECT_TRUE((c.generator() * dc.generator().transpose()).is_zero());
            EXPECT_TRUE(same_code(dual(dc), c));
        }
}

TEST(Dual, FullSpaceAndZeroCode) {
    const auto spec = FieldSpec::of_order(3);
    const LinearCode full(Matrix::from_rows(spec, {{1, 0}, {0, 1}}));
    const auto z = dual(full);
    EXPECT_TRUE(z.is_zero_code());
    EXPECT_EQ(dual(z).k(), 2u);
    EXPECT_THROW(weight_distribution(z), InvalidInput);
}

TEST(Dual, HammingIsSelfDual) {
    const auto c = parse_matrix(oracle::data_file("hamming8.txt"));
    EXPECT_TRUE(is_self_orthogonal(c));
    EXPECT_TRUE(is_self_dual(c));
}

TEST(Degenerate, PunctureZeroColumns) {
    const auto c = parse_matrix(oracle::data_file("degenerate.txt"));
    EXPECT_TRUE(is_degenerate(c));
    EXPECT_EQ(zero_columns(c), (std::vector<std::size_t>{2}));
    const auto p = puncture_degenerate(c);
    EXPECT_EQ(p.n(), 2u);
    EXPECT_FALSE(is_degenerate(p));
    EXPECT_EQ(weight_distribution(p).counts, ints({1, 0, 1}));
}

TEST(Rref, RankAndPivots) {
    const auto spec = FieldSpec::of_order(5);
    const auto m = Matrix::from_rows(spec, {{1, 2, 3}, {2, 4, 1}, {3, 1, 0}});
    const auto r = rref(m);
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 2}));
    EXPECT_THROW(LinearCode{m}, InvalidInput);
}

TEST(Parse, RoundTrip) {
    const auto c = parse_matrix(oracle::data_file("tetra.txt"));
    EXPECT_EQ(format_matrix(c), "3 4 2\n1 1 1 0\n0 1 2 1\n");
    EXPECT_EQ(parse_matrix(format_matrix(c)).generator(), c.generator());
}

TEST(Parse, ErrorsNameTheLine) {
    auto message = [](const std::string& text) {
        try {
            parse_matrix(text);
        } catch (const InvalidInput& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message("2 3 1\n1 x 0\n").find("line 2, column 2"), std::string::npos);
    EXPECT_NE(message("2 3 2\n1 0 0\n").find("line 3"), std::string::npos);
    EXPECT_NE(message("3 3 1\n# c\n1 0 3\n").find("line 3, column 3"), std::string::npos);
    EXPECT_NE(message("2 3 1\n1 0\n").find("line 2: expected 3 values"), std::string::npos);
    EXPECT_NE(message("6 3 1\n1 0 0\n").find("prime power"), std::string::npos);
    EXPECT_NE(message("").find("line 1"), std::string::npos);
    EXPECT_NE(message("2 2 2\n1 1\n1 1\n").find("full row rank"), std::string::npos);
}
