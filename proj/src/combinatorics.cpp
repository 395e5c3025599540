#include "hyperphase/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "hyperphase/errors.hpp"

namespace hyperphase {

namespace {

constexpr std::size_t kPascalRows = 65;

// C(64, 32) < 2^64, so every entry of the first 65 rows fits.
constexpr auto make_pascal() {
    std::array<std::array<std::uint64_t, kPascalRows>, kPascalRows> t{};
    for (std::size_t n = 0; n < kPascalRows; ++n) {
        t[n][0] = 1;
        for (std::size_t r = 1; r <= n; ++r) t[n][r] = t[n - 1][r - 1] + t[n - 1][r];
    }
    return t;
}

constexpr auto kPascal = make_pascal();

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    if (n < kPascalRows) return kPascal[n][r];
    r = std::min(r, n - r);
    // After step i the accumulator equals C(n - r + i, i) <= C(n, r), so an
    // intermediate overflow implies the result overflows.
    std::uint64_t acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        const std::uint64_t g = std::gcd(acc, i);
        const std::uint64_t factor = (n - r + i) / (i / g);
        std::uint64_t next = 0;
        if (__builtin_mul_overflow(acc / g, factor, &next)) {
            throw ArithmeticOverflow("binomial(" + std::to_string(n) + ", " +
                                     std::to_string(r) + ") exceeds 64 bits");
        }
        acc = next;
    }
    return acc;
}

void Params::validate() const {
    if (k < 2) throw ValidationError("k must be at least 2 (got " + std::to_string(k) + ")");
    if (j < 1 || j > k - 1) {
        throw ValidationError("j must satisfy 1 <= j <= k-1 (got j=" + std::to_string(j) +
                              ", k=" + std::to_string(k) + ")");
    }
    if (n < static_cast<std::uint32_t>(k)) {
        throw ValidationError("n must be at least k (got n=" + std::to_string(n) +
                              ", k=" + std::to_string(k) + ")");
    }
}

std::uint64_t Params::num_jsets() const { return binomial(n, static_cast<std::uint64_t>(j)); }
std::uint64_t Params::num_ksets() const { return binomial(n, static_cast<std::uint64_t>(k)); }

void validate_vertex_set(std::span<const VertexId> s, std::size_t expected_size,
                         std::uint32_t n, const char* what) {
    if (s.size() != expected_size) {
        throw ValidationError(std::string(what) + " must have " + std::to_string(expected_size) +
                              " vertices (got " + std::to_string(s.size()) + ")");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n) {
            throw ValidationError(std::string(what) + ": vertex " + std::to_string(s[i]) +
                                  " outside [1, " + std::to_string(n) + "]");
        }
        if (i > 0 && s[i] <= s[i - 1]) {
            throw ValidationError(std::string(what) +
                                  ": vertices must be strictly increasing");
        }
    }
}

JSetRank rank_jset(std::span<const VertexId> s, const Params& params) {
    validate_vertex_set(s, static_cast<std::size_t>(params.j), params.n, "j-set");
    JSetRank r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += binomial(s[i] - 1, i + 1);
    return r;
}

JSet unrank_jset(JSetRank r, const Params& params) {
    const std::uint64_t total = params.num_jsets();
    if (r >= total) {
        throw ValidationError("rank " + std::to_string(r) + " outside [0, " +
                              std::to_string(total) + ")");
    }
    JSet out(static_cast<std::size_t>(params.j));
    std::uint64_t hi = params.n;  // exclusive bound on the next 0-based vertex
    for (int i = params.j; i >= 1; --i) {
        // Largest c < hi with C(c, i) <= r; C(., i) is nondecreasing in c.
        std::uint64_t lo = static_cast<std::uint64_t>(i) - 1, up = hi - 1;
        while (lo < up) {
            const std::uint64_t mid = lo + (up - lo + 1) / 2;
            if (binomial(mid, static_cast<std::uint64_t>(i)) <= r) lo = mid;
            else up = mid - 1;
        }
        out[static_cast<std::size_t>(i - 1)] = static_cast<VertexId>(lo + 1);
        r -= binomial(lo, static_cast<std::uint64_t>(i));
        hi = lo;
    }
    return out;
}

std::vector<std::vector<int>> subset_positions(int arity, int size) {
    if (size < 0 || size > arity) {
        throw ValidationError("subset size " + std::to_string(size) + " outside [0, " +
                              std::to_string(arity) + "]");
    }
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<std::size_t>(size));
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        out.push_back(c);
        // Colex successor: bump the first position that has room below its
        // right neighbour, reset everything left of it.
        int i = 0;
        while (i < size && c[static_cast<std::size_t>(i)] + 1 ==
                               (i + 1 < size ? c[static_cast<std::size_t>(i + 1)] : arity)) {
            ++i;
        }
        if (i == size) break;
        ++c[static_cast<std::size_t>(i)];
        for (int t = 0; t < i; ++t) c[static_cast<std::size_t>(t)] = t;
    }
    return out;
}

std::vector<JSet> sub_jsets(std::span<const VertexId> e, int j) {
    if (j < 1 || static_cast<std::size_t>(j) >= e.size()) {
        throw ValidationError("sub_jsets needs 1 <= j < |e|");
    }
    for (std::size_t i = 1; i < e.size(); ++i) {
        if (e[i] <= e[i - 1]) throw ValidationError("edge vertices must be strictly increasing");
    }
    std::vector<JSet> out;
    for (const auto& pos : subset_positions(static_cast<int>(e.size()), j)) {
        JSet s;
        s.reserve(pos.size());
        for (int p : pos) s.push_back(e[static_cast<std::size_t>(p)]);
        out.push_back(std::move(s));
    }
    return out;
}

ColexRanker::ColexRanker(std::uint32_t n, int size)
    : n_(n), size_(size), count_(binomial(n, static_cast<std::uint64_t>(size))),
      table_(static_cast<std::size_t>(size + 1) * (n + 1)) {
    if (size < 1) throw ValidationError("ranker set size must be positive");
    for (int i = 0; i <= size; ++i) {
        for (std::uint32_t v = 0; v <= n; ++v) {
            table_[static_cast<std::size_t>(i) * (n_ + 1) + v] =
                binomial(v, static_cast<std::uint64_t>(i));
        }
    }
}

JSetRank ColexRanker::rank(std::span<const VertexId> s) const noexcept {
    JSetRank r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += c(s[i] - 1, static_cast<int>(i + 1));
    return r;
}

JSetRank ColexRanker::rank_positions(std::span<const VertexId> e,
                                     std::span<const int> positions) const noexcept {
    JSetRank r = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        r += c(e[static_cast<std::size_t>(positions[i])] - 1, static_cast<int>(i + 1));
    }
    return r;
}

VertexSet ColexRanker::unrank(JSetRank r) const {
    VertexSet out;
    unrank_into(r, out);
    return out;
}

void ColexRanker::unrank_into(JSetRank r, VertexSet& out) const {
    if (r >= count_) {
        throw ValidationError("rank " + std::to_string(r) + " outside [0, " +
                              std::to_string(count_) + ")");
    }
    out.resize(static_cast<std::size_t>(size_));
    std::uint32_t hi = n_;
    for (int i = size_; i >= 1; --i) {
        const std::uint64_t* row = table_.data() + static_cast<std::size_t>(i) * (n_ + 1);
        // First index in [0, hi) whose binomial exceeds r, minus one.
        const auto* it = std::upper_bound(row, row + hi, r);
        const auto v = static_cast<std::uint32_t>(it - row) - 1;
        out[static_cast<std::size_t>(i - 1)] = v + 1;
        r -= row[v];
        hi = v;
    }
}

}  // namespace hyperphase
