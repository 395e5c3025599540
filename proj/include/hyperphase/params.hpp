#pragma once

#include <cstdint>
#include <vector>

namespace hyperphase {

/// 1-based vertex label in [1, n].
using VertexId = std::uint32_t;

/// Strictly increasing tuple of vertex labels.
using VertexSet = std::vector<VertexId>;

/// A set of j vertices.
using JSet = VertexSet;

/// A set of k vertices.
using Edge = VertexSet;

/// Dense colexicographic index of a j-set (or a k-set, for edges).
using JSetRank = std::uint64_t;

/// Uniformity k, connectivity order j, and vertex count n.
struct Params {
    int k = 3;
    int j = 2;
    std::uint32_t n = 3;

    /// Throws ValidationError unless k >= 2, 1 <= j <= k-1 and n >= k.
    void validate() const;

    /// C(n, j): number of j-sets.
    std::uint64_t num_jsets() const;
    /// C(n, k): number of possible edges.
    std::uint64_t num_ksets() const;

    friend bool operator==(const Params&, const Params&) = default;
};

}  // namespace hyperphase
