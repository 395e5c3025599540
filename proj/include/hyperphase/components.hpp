#pragma once

// j-components of a k-uniform hypergraph.
//
// Two edges meet in at least j vertices exactly when they share a j-set, so
// uniting the C(k,j) j-subsets of every edge yields the closure of the
// j-walk relation. DisjointSets does this incrementally; bfs_components
// recomputes the partition from the walk definition and serves as an oracle.

#include <cstdint>
#include <span>
#include <vector>

#include "hyperphase/combinatorics.hpp"
#include "hyperphase/models.hpp"
#include "hyperphase/params.hpp"

namespace hyperphase {

inline constexpr std::uint64_t kDefaultMaxJSets = 200'000'000;

/// Cap on C(n,j) for dense per-j-set arrays. HYPERPHASE_MAX_JSETS overrides
/// the default of 2e8.
std::uint64_t max_jsets();

/// Throws ResourceError naming the cap when count > max_jsets().
void check_jset_guardrail(std::uint64_t count);

/// Union-find over the ranked j-sets of [n], with per-j-set "touched" flags.
class DisjointSets {
public:
    explicit DisjointSets(const Params& params);

    /// Unites all j-subsets of `e` and marks them touched. Returns the number
    /// of unions performed (0 on re-application). Validates `e`.
    std::uint64_t apply_edge(std::span<const VertexId> e);

    JSetRank find(JSetRank x);
    std::uint64_t component_size(JSetRank x) { return size_[find(x)]; }
    bool touched(JSetRank x) const { return touched_[x] != 0; }

    const Params& params() const noexcept { return params_; }
    std::uint64_t num_jsets() const noexcept { return parent_.size(); }
    std::uint64_t num_sets_remaining() const noexcept { return num_sets_; }
    std::uint64_t untouched_count() const noexcept { return untouched_; }
    std::uint64_t edges_applied() const noexcept { return edges_applied_; }
    /// Size of the largest set, in j-sets (isolated j-sets count as 1).
    std::uint64_t largest_set_size() const noexcept { return largest_; }
    const ColexRanker& ranker() const noexcept { return ranker_; }

private:
    Params params_;
    ColexRanker ranker_;
    std::vector<std::vector<int>> positions_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::vector<std::uint8_t> touched_;
    std::uint64_t num_sets_;
    std::uint64_t untouched_;
    std::uint64_t edges_applied_ = 0;
    std::uint64_t largest_ = 1;
    std::vector<JSetRank> scratch_;
};

struct ComponentSummary {
    Params params;
    std::uint64_t m = 0;
    /// Size of L1 in j-sets; 0 when there are no edges.
    std::uint64_t largest = 0;
    std::uint64_t second = 0;
    /// Components containing at least one edge-covered j-set.
    std::uint64_t num_nontrivial = 0;
    std::uint64_t isolated_count = 0;
    bool is_j_connected = false;
    /// Smallest j-set rank in L1; ties on size go to the smaller value.
    /// Meaningless when largest == 0.
    JSetRank largest_min_rank = 0;
};

/// Census of a sealed union-find state.
ComponentSummary summarize(DisjointSets& dsu);

ComponentSummary component_summary(const Hypergraph& h);

/// Partition into non-trivial components, each a sorted list of ranks;
/// components ordered by smallest rank. Isolated j-sets are left out.
std::vector<std::vector<JSetRank>> dsu_components(const Hypergraph& h);

/// Ranks of the j-sets in L1 (tie-break as in ComponentSummary), sorted.
std::vector<JSetRank> largest_component(DisjointSets& dsu);

inline constexpr std::uint64_t kBfsOracleMaxJSets = 10'000;

/// Reference oracle computed straight from the walk definition (edge
/// adjacency by intersection size >= j). Same output shape as
/// dsu_components. Refuses C(n,j) > 1e4 with ResourceError.
std::vector<std::vector<JSetRank>> bfs_components(const Hypergraph& h);

struct ExplorationRecord {
    JSet start;
    /// generations[0] == {start}; each generation sorted by rank.
    std::vector<std::vector<JSet>> generations;
    /// True iff no unseen j-set is reachable from the last generation.
    bool exhausted = false;

    const std::vector<JSet>& boundary() const { return generations.back(); }
};

/// Breadth-first exploration of the j-component of `start`, generation by
/// generation, for at most `max_generations` steps beyond generation 0.
ExplorationRecord bfs_explore(const Hypergraph& h, const JSet& start,
                              std::uint64_t max_generations);

}  // namespace hyperphase
