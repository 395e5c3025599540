#pragma once

// Random k-uniform hypergraph models on [n]: the binomial model H(n, p),
// the uniform model H(n, M), and the edge-by-edge random process.

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "hyperphase/combinatorics.hpp"
#include "hyperphase/params.hpp"
#include "hyperphase/rng.hpp"

namespace hyperphase {

/// A k-uniform hypergraph. Edges are canonical (sorted, 1-based) and
/// pairwise distinct; `from_edges` enforces this.
struct Hypergraph {
    Params params;
    std::vector<Edge> edges;

    std::size_t m() const noexcept { return edges.size(); }

    /// Validates params, every edge, and absence of duplicates.
    static Hypergraph from_edges(const Params& params, std::vector<Edge> edges);

    /// Same hypergraph with edges sorted by colex rank.
    Hypergraph canonical() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// Each of the C(n,k) k-sets is an edge independently with probability p.
/// Edges come out sorted by rank.
Hypergraph sample_binomial(const Params& params, double p, std::uint64_t seed);

/// Exactly M distinct edges, uniform over all M-subsets of k-sets.
/// Edges come out sorted by rank.
Hypergraph sample_uniform(const Params& params, std::uint64_t m, std::uint64_t seed);

/// Edgewise union of two hypergraphs on the same params.
Hypergraph union_of(const Hypergraph& a, const Hypergraph& b);

/// p* = (p - p0) / (1 - p0): the second-round probability that makes
/// H(p0) u H(p*) distributed as H(p).
double second_round_probability(double p, double p0);

/// The random hypergraph process: each pull adds a k-set chosen uniformly
/// among those not yet drawn. Single consumer.
class EdgeStream {
public:
    EdgeStream(const Params& params, std::uint64_t seed);

    /// Next edge, or nullopt once all C(n,k) k-sets have been drawn.
    std::optional<Edge> next();

    /// Number of edges yielded so far (the process time M).
    std::uint64_t position() const noexcept { return position_; }
    const Params& params() const noexcept { return params_; }
    bool exhausted() const noexcept { return position_ == total_; }

private:
    JSetRank draw_rank();

    Params params_;
    ColexRanker edge_ranker_;
    Rng rng_;
    std::uint64_t total_;
    std::uint64_t position_ = 0;
    std::unordered_set<JSetRank> drawn_;
    // Once half of all k-sets are drawn, rejection gets slow; the complement
    // is materialized and pulled from without replacement instead.
    std::vector<JSetRank> remaining_;
    bool dense_ = false;
};

}  // namespace hyperphase
