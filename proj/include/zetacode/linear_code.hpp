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

#ifndef ZETACODE_LINEAR_CODE_HPP
#define ZETACODE_LINEAR_CODE_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "common.hpp"
#include "gf.hpp"

namespace zetacode {

/// Row-major matrix of element indices over one field.
class Matrix {
   public:
    Matrix(FieldPtr spec, std::size_t rows, std::size_t cols)
        : spec_(std::move(spec)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    Matrix(FieldPtr spec, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries)
        : spec_(std::move(spec)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw InvalidInput("matrix entry count does not match its shape");
        for (auto e : entries_)
            if (e >= spec_->q()) throw InvalidInput("matrix entry " + std::to_string(e) + " out of field range");
    }

    static Matrix from_rows(FieldPtr spec, const std::vector<std::vector<std::uint32_t>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        std::vector<std::uint32_t> flat;
        for (const auto& r : rows) {
            if (r.size() != cols) throw InvalidInput("ragged matrix rows");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return Matrix(std::move(spec), rows.size(), cols, std::move(flat));
    }

    const FieldPtr& spec() const noexcept { return spec_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t at(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    std::uint32_t& at(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
    const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

    std::vector<std::uint32_t> row(std::size_t r) const {
        return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    Matrix transpose() const {
        Matrix t(spec_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_ || !spec_->same_as(*o.spec_)) throw InvalidInput("matrix product shape mismatch");
        Matrix out(spec_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < o.cols_; ++j) {
                std::uint32_t s = 0;
                for (std::size_t l = 0; l < cols_; ++l) s = spec_->add(s, spec_->mul(at(i, l), o.at(l, j)));
                out.at(i, j) = s;
            }
        return out;
    }

    bool is_zero() const noexcept {
        return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && spec_->same_as(*o.spec_) && entries_ == o.entries_;
    }

   private:
    FieldPtr spec_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
inline RrefResult rref(const Matrix& m) {
    const auto& f = *m.spec();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t sel = r;
        while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
        const std::uint32_t inv = f.inv(a.at(r, c));
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            const std::uint32_t factor = a.at(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

/// Counts (A_0, ..., A_n) of codewords (or codeword pairs) by weight.
struct WeightDistribution {
    std::size_t n = 0;
    std::vector<BigInt> counts;

    BigInt total() const {
        BigInt s = 0;
        for (const auto& c : counts) s += c;
        return s;
    }
    bool operator==(const WeightDistribution&) const = default;
};

/// A q-ary [n, k] linear code given by a full-rank k x n generator matrix.
/// k = 0 is the zero code, which only arises as the output of dual() or
/// puncture_degenerate().
class LinearCode {
   public:
    explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {
        if (gen_.rows() == 0) throw InvalidInput("a generator matrix needs at least one row");
        if (gen_.cols() < gen_.rows()) throw InvalidInput("generator has more rows than columns");
        if (rref(gen_).rank != gen_.rows())
            throw InvalidInput("generator matrix is not of full row rank (rank " + std::to_string(rref(gen_).rank) +
                               " < k = " + std::to_string(gen_.rows()) + ")");
    }

    static LinearCode zero_code(FieldPtr spec, std::size_t n) { return LinearCode(Matrix(std::move(spec), 0, n), 0); }

    const FieldPtr& spec() const noexcept { return gen_.spec(); }
    std::uint32_t q() const noexcept { return gen_.spec()->q(); }
    std::size_t n() const noexcept { return gen_.cols(); }
    std::size_t k() const noexcept { return gen_.rows(); }
    const Matrix& generator() const noexcept { return gen_; }
    bool is_zero_code() const noexcept { return gen_.rows() == 0; }

   private:
    LinearCode(Matrix gen, int) : gen_(std::move(gen)) {}
    Matrix gen_;
};

namespace detail {

inline void require_nonzero_code(const LinearCode& c, const char* op) {
    if (c.is_zero_code()) throw InvalidInput(std::string(op) + ": the zero code is not a valid input");
}

inline std::uint64_t message_space(const LinearCode& c, std::size_t exponent_scale, std::uint64_t budget) {
    std::uint64_t total = 0;
    if (!checked_power(c.q(), c.k() * exponent_scale, budget, total))
        throw BudgetExceeded("enumeration of " + std::to_string(c.q()) + "^" + std::to_string(c.k() * exponent_scale) +
                             " words exceeds budget " + std::to_string(budget));
    return total;
}

inline unsigned worker_count(std::uint64_t work) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return work < (1u << 14) ? 1u : hw;
}

// Weight histogram of x*G for x in [first, last) of the lexicographic message
// order (x_0 most significant digit).
inline std::vector<std::uint64_t> weight_histogram(const LinearCode& c, std::uint64_t first, std::uint64_t last) {
    const auto& f = *c.spec();
    const std::size_t n = c.n(), k = c.k();
    const std::uint32_t q = f.q();
    // multiples[i][a] = a * row_i
    std::vector<std::vector<std::uint32_t>> multiples(k, std::vector<std::uint32_t>(std::size_t{q} * n));
    for (std::size_t i = 0; i < k; ++i)
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::size_t j = 0; j < n; ++j) multiples[i][a * n + j] = f.mul(a, c.generator().at(i, j));

    std::vector<std::uint64_t> hist(n + 1, 0);
    std::vector<std::uint32_t> digits(k, 0);
    std::uint64_t v = first;
    for (std::size_t i = k; i-- > 0; v /= q) digits[i] = static_cast<std::uint32_t>(v % q);

    // partial[i] = sum_{l < i} digits[l] * row_l, so partial[k] is the codeword.
    std::vector<std::vector<std::uint32_t>> partial(k + 1, std::vector<std::uint32_t>(n, 0));
    auto rebuild_from = [&](std::size_t level) {
        for (std::size_t i = level; i < k; ++i) {
            const std::uint32_t* mrow = &multiples[i][digits[i] * n];
            for (std::size_t j = 0; j < n; ++j) partial[i + 1][j] = f.add(partial[i][j], mrow[j]);
        }
    };
    rebuild_from(0);
    for (std::uint64_t idx = first; idx < last; ++idx) {
        const auto& word = partial[k];
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) w += word[j] != 0;
        ++hist[w];
        // increment the message, least significant digit last
        std::size_t level = k;
        while (level > 0) {
            --level;
            if (++digits[level] < q) break;
            digits[level] = 0;
        }
        rebuild_from(level);
    }
    return hist;
}

inline WeightDistribution to_distribution(std::size_t n, const std::vector<std::uint64_t>& hist) {
    WeightDistribution d{n, {}};
    d.counts.reserve(hist.size());
    for (auto h : hist) d.counts.emplace_back(h);
    return d;
}

}  // namespace detail

/// Exact weight distribution by enumerating all q^k codewords. The message
/// space is split into contiguous ranges whose histograms are summed, so the
/// result does not depend on the number of workers.
inline WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t budget = kDefaultBudget) {
    detail::require_nonzero_code(c, "weight_distribution");
    const std::uint64_t total = detail::message_space(c, 1, budget);
    const unsigned workers = detail::worker_count(total);
    std::vector<std::vector<std::uint64_t>> parts(workers);
    if (workers == 1) {
        parts[0] = detail::weight_histogram(c, 0, total);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
            pool.emplace_back([&, w, lo, hi] { parts[w] = detail::weight_histogram(c, lo, hi); });
        }
        for (auto& t : pool) t.join();
    }
    std::vector<std::uint64_t> hist(c.n() + 1, 0);
    for (const auto& part : parts)
        for (std::size_t i = 0; i < part.size(); ++i) hist[i] += part[i];
    return detail::to_distribution(c.n(), hist);
}

/// Distance distribution B_i: pairs of codewords at distance i, divided by q^k.
inline WeightDistribution distance_distribution(const LinearCode& c, std::uint64_t budget = kDefaultBudget) {
    detail::require_nonzero_code(c, "distance_distribution");
    const std::uint64_t total = detail::message_space(c, 1, budget);
    detail::message_space(c, 2, budget);
    const auto& f = *c.spec();
    const std::size_t n = c.n(), k = c.k();
    std::vector<std::vector<std::uint32_t>> words;
    words.reserve(total);
    std::vector<std::uint32_t> digits(k, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint32_t> word(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(digits[i], c.generator().at(i, j)));
        words.push_back(std::move(word));
        for (std::size_t level = k; level-- > 0;) {
            if (++digits[level] < f.q()) break;
            digits[level] = 0;
        }
    }
    std::vector<std::uint64_t> hist(n + 1, 0);
    for (const auto& a : words)
        for (const auto& b : words) {
            std::size_t dist = 0;
            for (std::size_t j = 0; j < n; ++j) dist += a[j] != b[j];
            ++hist[dist];
        }
    WeightDistribution out{n, {}};
    for (auto h : hist) {
        if (h % total != 0) throw InvariantViolation("pair counts not divisible by code size");
        out.counts.emplace_back(h / total);
    }
    return out;
}

/// Least positive weight with a nonzero count.
inline std::size_t min_distance(const WeightDistribution& w) {
    for (std::size_t i = 1; i < w.counts.size(); ++i)
        if (w.counts[i] != 0) return i;
    throw InvalidInput("the zero code has no minimum distance");
}

inline std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kDefaultBudget) {
    if (c.is_zero_code()) throw InvalidInput("the zero code has no minimum distance");
    return min_distance(weight_distribution(c, budget));
}

/// gamma(C) = n + 1 - k - d.
inline long long genus(const LinearCode& c, std::uint64_t budget = kDefaultBudget) {
    const auto d = min_distance(c, budget);
    return static_cast<long long>(c.n()) + 1 - static_cast<long long>(c.k()) - static_cast<long long>(d);
}

/// Generator of C-perp from the null space of the rref of G.
inline LinearCode dual(const LinearCode& c) {
    const auto& f = *c.spec();
    const std::size_t n = c.n();
    if (c.is_zero_code()) {
        std::vector<std::uint32_t> id(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
        return LinearCode(Matrix(c.spec(), n, n, std::move(id)));
    }
    const auto r = rref(c.generator());
    if (r.rank == n) return LinearCode::zero_code(c.spec(), n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix h(c.spec(), free_cols.size(), n);
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        const std::size_t fc = free_cols[t];
        h.at(t, fc) = 1;
        for (std::size_t i = 0; i < r.rank; ++i) h.at(t, r.pivots[i]) = f.neg(r.reduced.at(i, fc));
    }
    return LinearCode(std::move(h));
}

/// Positions where every codeword is zero.
inline std::vector<std::size_t> zero_columns(const LinearCode& c) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < c.n(); ++j) {
        bool all_zero = true;
        for (std::size_t i = 0; i < c.k() && all_zero; ++i) all_zero = c.generator().at(i, j) == 0;
        if (all_zero) cols.push_back(j);
    }
    return cols;
}

/// True iff C-perp contains a word of weight one, i.e. some coordinate of C is identically zero.
inline bool is_degenerate(const LinearCode& c) { return !zero_columns(c).empty(); }

/// Deletes every identically-zero coordinate. The result has d-perp >= 2.
inline LinearCode puncture_degenerate(const LinearCode& c) {
    if (c.is_zero_code()) throw InvalidInput("cannot puncture the zero code");
    const auto zeros = zero_columns(c);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0, z = 0; j < c.n(); ++j) {
        if (z < zeros.size() && zeros[z] == j) {
            ++z;
            continue;
        }
        keep.push_back(j);
    }
    Matrix g(c.spec(), c.k(), keep.size());
    for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t t = 0; t < keep.size(); ++t) g.at(i, t) = c.generator().at(i, keep[t]);
    return LinearCode(std::move(g));
}

/// Row spaces compared through their reduced echelon forms.
inline bool same_code(const LinearCode& a, const LinearCode& b) {
    if (a.n() != b.n() || a.k() != b.k() || !a.spec()->same_as(*b.spec())) return false;
    if (a.is_zero_code()) return true;
    return rref(a.generator()).reduced == rref(b.generator()).reduced;
}

inline bool is_self_orthogonal(const LinearCode& c) {
    if (c.is_zero_code()) return true;
    return (c.generator() * c.generator().transpose()).is_zero();
}

inline bool is_self_dual(const LinearCode& c) { return 2 * c.k() == c.n() && same_code(c, dual(c)); }

inline bool is_formally_self_dual(const LinearCode& c, std::uint64_t budget = kDefaultBudget) {
    if (2 * c.k() != c.n()) return false;
    return weight_distribution(c, budget) == weight_distribution(dual(c), budget);
}

// --- matrix text format: "q n k" then k rows of n element indices ---

inline LinearCode parse_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto read_ints = [&](std::size_t expected) {
        std::vector<long long> vals;
        std::size_t col = 0;
        std::size_t pos = 0;
        while (true) {
            pos = line.find_first_not_of(" \t\r", pos);
            if (pos == std::string::npos) break;
            const std::size_t end = line.find_first_of(" \t\r", pos);
            const std::string tok = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            ++col;
            long long v = 0;
            std::size_t used = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || v < 0)
                throw InvalidInput("line " + std::to_string(line_no) + ", column " + std::to_string(col) +
                                   ": expected a nonnegative integer, got '" + tok + "'");
            vals.push_back(v);
            pos = end;
            if (pos == std::string::npos) break;
        }
        if (vals.size() != expected)
            throw InvalidInput("line " + std::to_string(line_no) + ": expected " + std::to_string(expected) +
                               " values, got " + std::to_string(vals.size()));
        return vals;
    };
    if (!next_line()) throw InvalidInput("line 1: missing header 'q n k'");
    const auto header = read_ints(3);
    if (header[0] > static_cast<long long>(kDefaultFieldCap))
        throw InvalidInput("line " + std::to_string(line_no) + ": field order " + std::to_string(header[0]) +
                           " exceeds cap " + std::to_string(kDefaultFieldCap));
    const auto spec = FieldSpec::of_order(static_cast<std::uint32_t>(header[0]));
    const auto n = static_cast<std::size_t>(header[1]), k = static_cast<std::size_t>(header[2]);
    if (k < 1 || k > n) throw InvalidInput("line " + std::to_string(line_no) + ": need 1 <= k <= n");
    std::vector<std::uint32_t> entries;
    for (std::size_t r = 0; r < k; ++r) {
        if (!next_line())
            throw InvalidInput("line " + std::to_string(line_no + 1) + ": missing matrix row " + std::to_string(r + 1));
        const auto vals = read_ints(n);
        for (std::size_t c = 0; c < n; ++c) {
            if (vals[c] >= spec->q())
                throw InvalidInput("line " + std::to_string(line_no) + ", column " + std::to_string(c + 1) +
                                   ": element " + std::to_string(vals[c]) + " not in GF(" + std::to_string(spec->q()) +
                                   ")");
            entries.push_back(static_cast<std::uint32_t>(vals[c]));
        }
    }
    return LinearCode(Matrix(spec, k, n, std::move(entries)));
}

inline LinearCode parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

inline std::string format_matrix(const LinearCode& c) {
    std::ostringstream out;
    out << c.q() << ' ' << c.n() << ' ' << c.k() << '\n';
    for (std::size_t i = 0; i < c.k(); ++i) {
        for (std::size_t j = 0; j < c.n(); ++j) out << (j ? " " : "") << c.generator().at(i, j);
        out << '\n';
    }
    return out.str();
}

}  // namespace zetacode

#endif
