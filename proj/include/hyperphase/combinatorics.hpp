#pragma once

// Exact binomials and colexicographic ranking of vertex sets.
//
// Vertex labels are 1-based everywhere in the public types; rank arithmetic
// shifts them to 0-based internally. With 0-based v_1 < ... < v_r the colex
// rank is sum_i C(v_i, i), which does not depend on n.

#include <cstdint>
#include <span>
#include <vector>

#include "hyperphase/params.hpp"

namespace hyperphase {

/// C(n, r) in exact 64-bit arithmetic; 0 when r > n.
/// Throws ArithmeticOverflow if the result does not fit.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Checks length, strict increase and range [1, n]. Throws ValidationError.
void validate_vertex_set(std::span<const VertexId> s, std::size_t expected_size,
                         std::uint32_t n, const char* what = "vertex set");

JSetRank rank_jset(std::span<const VertexId> s, const Params& params);
JSet unrank_jset(JSetRank r, const Params& params);

/// All C(k, j) j-subsets of `e` in colex order.
std::vector<JSet> sub_jsets(std::span<const VertexId> e, int j);

/// Position masks of all `size`-subsets of `arity` slots, in colex order.
/// Each entry lists the chosen positions in increasing order.
std::vector<std::vector<int>> subset_positions(int arity, int size);

/// Colex ranker for `size`-subsets of [n] backed by a precomputed binomial
/// table; the hot-path counterpart of rank_jset/unrank_jset.
class ColexRanker {
public:
    ColexRanker(std::uint32_t n, int size);

    std::uint32_t n() const noexcept { return n_; }
    int size() const noexcept { return size_; }
    /// C(n, size).
    std::uint64_t count() const noexcept { return count_; }

    /// Rank of a canonical set; no validation.
    JSetRank rank(std::span<const VertexId> s) const noexcept;
    /// Rank of the subset of `e` picked by `positions`; no validation.
    JSetRank rank_positions(std::span<const VertexId> e,
                            std::span<const int> positions) const noexcept;
    /// Throws ValidationError when r >= count().
    VertexSet unrank(JSetRank r) const;
    void unrank_into(JSetRank r, VertexSet& out) const;

private:
    std::uint64_t c(std::uint32_t v, int i) const noexcept {
        return table_[static_cast<std::size_t>(i) * (n_ + 1) + v];
    }

    std::uint32_t n_;
    int size_;
    std::uint64_t count_;
    // table_[i * (n+1) + v] = C(v, i) for i in [0, size], v in [0, n].
    std::vector<std::uint64_t> table_;
};

}  // namespace hyperphase
