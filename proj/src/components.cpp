#include "hyperphase/components.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "hyperphase/errors.hpp"

namespace hyperphase {

std::uint64_t max_jsets() {
    const char* env = std::getenv("HYPERPHASE_MAX_JSETS");
    if (env == nullptr || *env == '\0') return kDefaultMaxJSets;
    std::uint64_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ValidationError(std::string("HYPERPHASE_MAX_JSETS is not an integer: ") + env);
    }
    return value;
}

void check_jset_guardrail(std::uint64_t count) {
    const std::uint64_t cap = max_jsets();
    if (count > cap) {
        throw ResourceError("C(n,j)=" + std::to_string(count) +
                            " j-sets exceeds the memory guardrail of " + std::to_string(cap) +
                            " (HYPERPHASE_MAX_JSETS)");
    }
}

DisjointSets::DisjointSets(const Params& params)
    : params_((params.validate(), params)), ranker_(params.n, params.j) {
    const std::uint64_t count = ranker_.count();
    check_jset_guardrail(count);
    if (count > std::numeric_limits<std::uint32_t>::max()) {
        throw ResourceError("C(n,j)=" + std::to_string(count) +
                            " exceeds the 32-bit union-find index range");
    }
    positions_ = subset_positions(params.k, params.j);
    parent_.resize(count);
    for (std::uint32_t i = 0; i < count; ++i) parent_[i] = i;
    size_.assign(count, 1);
    touched_.assign(count, 0);
    num_sets_ = count;
    untouched_ = count;
    scratch_.resize(positions_.size());
}

JSetRank DisjointSets::find(JSetRank x) {
    auto i = static_cast<std::uint32_t>(x);
    while (parent_[i] != i) {
        parent_[i] = parent_[parent_[i]];
        i = parent_[i];
    }
    return i;
}

std::uint64_t DisjointSets::apply_edge(std::span<const VertexId> e) {
    validate_vertex_set(e, static_cast<std::size_t>(params_.k), params_.n, "edge");
    for (std::size_t s = 0; s < positions_.size(); ++s) {
        const JSetRank r = ranker_.rank_positions(e, positions_[s]);
        scratch_[s] = r;
        if (touched_[r] == 0) {
            touched_[r] = 1;
            --untouched_;
        }
    }
    std::uint64_t unions = 0;
    auto root = static_cast<std::uint32_t>(find(scratch_[0]));
    for (std::size_t s = 1; s < scratch_.size(); ++s) {
        auto other = static_cast<std::uint32_t>(find(scratch_[s]));
        if (other == root) continue;
        if (size_[root] < size_[other]) std::swap(root, other);
        parent_[other] = root;
        size_[root] += size_[other];
        largest_ = std::max<std::uint64_t>(largest_, size_[root]);
        ++unions;
    }
    num_sets_ -= unions;
    ++edges_applied_;
    return unions;
}

ComponentSummary summarize(DisjointSets& dsu) {
    ComponentSummary out;
    out.params = dsu.params();
    out.m = dsu.edges_applied();
    const std::uint64_t total = dsu.num_jsets();
    std::vector<std::uint8_t> seen(total, 0);
    for (JSetRank r = 0; r < total; ++r) {
        if (!dsu.touched(r)) {
            ++out.isolated_count;
            continue;
        }
        const JSetRank root = dsu.find(r);
        if (seen[root] != 0) continue;
        seen[root] = 1;
        // Roots are first met at their smallest rank, so strict comparison
        // keeps the smaller rank on ties.
        ++out.num_nontrivial;
        const std::uint64_t size = dsu.component_size(root);
        if (size > out.largest) {
            out.second = out.largest;
            out.largest = size;
            out.largest_min_rank = r;
        } else if (size > out.second) {
            out.second = size;
        }
    }
    out.is_j_connected = out.largest == total;
    return out;
}

ComponentSummary component_summary(const Hypergraph& h) {
    DisjointSets dsu(h.params);
    for (const auto& e : h.edges) dsu.apply_edge(e);
    return summarize(dsu);
}

std::vector<std::vector<JSetRank>> dsu_components(const Hypergraph& h) {
    DisjointSets dsu(h.params);
    for (const auto& e : h.edges) dsu.apply_edge(e);
    std::unordered_map<JSetRank, std::size_t> slot;
    std::vector<std::vector<JSetRank>> out;
    for (JSetRank r = 0; r < dsu.num_jsets(); ++r) {
        if (!dsu.touched(r)) continue;
        auto [it, inserted] = slot.try_emplace(dsu.find(r), out.size());
        if (inserted) out.emplace_back();
        out[it->second].push_back(r);
    }
    return out;
}

std::vector<JSetRank> largest_component(DisjointSets& dsu) {
    const ComponentSummary summary = summarize(dsu);
    std::vector<JSetRank> out;
    if (summary.largest == 0) return out;
    const JSetRank root = dsu.find(summary.largest_min_rank);
    out.reserve(summary.largest);
    for (JSetRank r = summary.largest_min_rank; r < dsu.num_jsets(); ++r) {
        if (dsu.find(r) == root) out.push_back(r);
    }
    return out;
}

namespace {

std::size_t intersection_size(const Edge& a, const Edge& b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

}  // namespace

std::vector<std::vector<JSetRank>> bfs_components(const Hypergraph& h) {
    h.params.validate();
    const std::uint64_t total = h.params.num_jsets();
    if (total > kBfsOracleMaxJSets) {
        throw ResourceError("bfs oracle limited to C(n,j) <= " +
                            std::to_string(kBfsOracleMaxJSets) + " (got " +
                            std::to_string(total) + ")");
    }
    const std::size_t m = h.m();
    const auto j = static_cast<std::size_t>(h.params.j);
    std::vector<std::vector<std::size_t>> adjacent(m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (intersection_size(h.edges[a], h.edges[b]) >= j) {
                adjacent[a].push_back(b);
                adjacent[b].push_back(a);
            }
        }
    }

    std::vector<std::vector<JSetRank>> out;
    std::vector<bool> visited(m, false);
    for (std::size_t s = 0; s < m; ++s) {
        if (visited[s]) continue;
        std::vector<std::size_t> queue{s};
        visited[s] = true;
        std::vector<JSetRank> members;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t e = queue[head];
            for (const auto& js : sub_jsets(h.edges[e], h.params.j)) {
                members.push_back(rank_jset(js, h.params));
            }
            for (std::size_t f : adjacent[e]) {
                if (!visited[f]) {
                    visited[f] = true;
                    queue.push_back(f);
                }
            }
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

ExplorationRecord bfs_explore(const Hypergraph& h, const JSet& start,
                              std::uint64_t max_generations) {
    h.params.validate();
    const ColexRanker ranker(h.params.n, h.params.j);
    const auto positions = subset_positions(h.params.k, h.params.j);
    const JSetRank start_rank = rank_jset(start, h.params);

    std::unordered_map<JSetRank, std::vector<std::size_t>> containing;
    for (std::size_t e = 0; e < h.m(); ++e) {
        for (const auto& pos : positions) {
            containing[ranker.rank_positions(h.edges[e], pos)].push_back(e);
        }
    }

    ExplorationRecord rec;
    rec.start = start;
    rec.generations.push_back({start});
    std::unordered_set<JSetRank> seen{start_rank};
    std::vector<JSetRank> frontier{start_rank};
    while (true) {
        std::vector<JSetRank> next;
        for (JSetRank r : frontier) {
            auto it = containing.find(r);
            if (it == containing.end()) continue;
            for (std::size_t e : it->second) {
                for (const auto& pos : positions) {
                    const JSetRank s = ranker.rank_positions(h.edges[e], pos);
                    if (seen.insert(s).second) next.push_back(s);
                }
            }
        }
        if (next.empty()) {
            rec.exhausted = true;
            break;
        }
        if (rec.generations.size() - 1 >= max_generations) break;
        std::sort(next.begin(), next.end());
        std::vector<JSet> generation;
        generation.reserve(next.size());
        for (JSetRank r : next) generation.push_back(ranker.unrank(r));
        rec.generations.push_back(std::move(generation));
        frontier = std::move(next);
    }
    return rec;
}

}  // namespace hyperphase
