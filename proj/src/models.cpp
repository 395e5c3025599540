#include "hyperphase/models.hpp"

#include <algorithm>
#include <string>

#include "hyperphase/errors.hpp"

namespace hyperphase {

namespace {

// M distinct ranks uniform over M-subsets of [0, total), sorted ascending.
std::vector<JSetRank> draw_distinct_ranks(Rng& rng, std::uint64_t total, std::uint64_t m) {
    const bool complement = m > total / 2;
    const std::uint64_t draws = complement ? total - m : m;
    std::unordered_set<JSetRank> chosen;
    chosen.reserve(draws);
    while (chosen.size() < draws) chosen.insert(rng.uniform_below(total));

    std::vector<JSetRank> out;
    out.reserve(m);
    if (complement) {
        for (JSetRank r = 0; r < total; ++r) {
            if (!chosen.contains(r)) out.push_back(r);
        }
    } else {
        out.assign(chosen.begin(), chosen.end());
        std::sort(out.begin(), out.end());
    }
    return out;
}

std::vector<Edge> unrank_edges(const ColexRanker& ranker, const std::vector<JSetRank>& ranks) {
    std::vector<Edge> edges(ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) ranker.unrank_into(ranks[i], edges[i]);
    return edges;
}

}  // namespace

Hypergraph Hypergraph::from_edges(const Params& params, std::vector<Edge> edges) {
    params.validate();
    const ColexRanker ranker(params.n, params.k);
    std::unordered_set<JSetRank> seen;
    seen.reserve(edges.size());
    for (const auto& e : edges) {
        validate_vertex_set(e, static_cast<std::size_t>(params.k), params.n, "edge");
        if (!seen.insert(ranker.rank(e)).second) {
            throw ValidationError("duplicate edge");
        }
    }
    return Hypergraph{params, std::move(edges)};
}

Hypergraph Hypergraph::canonical() const {
    const ColexRanker ranker(params.n, params.k);
    std::vector<std::pair<JSetRank, std::size_t>> order(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) order[i] = {ranker.rank(edges[i]), i};
    std::sort(order.begin(), order.end());
    Hypergraph out{params, {}};
    out.edges.reserve(edges.size());
    for (const auto& [rank, i] : order) out.edges.push_back(edges[i]);
    return out;
}

Hypergraph sample_binomial(const Params& params, double p, std::uint64_t seed) {
    params.validate();
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("edge probability must lie in [0, 1] (got " + std::to_string(p) +
                              ")");
    }
    const ColexRanker ranker(params.n, params.k);
    Rng rng(seed);
    const std::uint64_t m = rng.binomial(ranker.count(), p);
    return Hypergraph{params, unrank_edges(ranker, draw_distinct_ranks(rng, ranker.count(), m))};
}

Hypergraph sample_uniform(const Params& params, std::uint64_t m, std::uint64_t seed) {
    params.validate();
    const ColexRanker ranker(params.n, params.k);
    if (m > ranker.count()) {
        throw ValidationError("M=" + std::to_string(m) + " exceeds C(n,k)=" +
                              std::to_string(ranker.count()));
    }
    Rng rng(seed);
    return Hypergraph{params, unrank_edges(ranker, draw_distinct_ranks(rng, ranker.count(), m))};
}

Hypergraph union_of(const Hypergraph& a, const Hypergraph& b) {
    if (!(a.params == b.params)) throw ValidationError("union of hypergraphs with different params");
    const ColexRanker ranker(a.params.n, a.params.k);
    std::vector<JSetRank> ranks;
    ranks.reserve(a.m() + b.m());
    for (const auto& e : a.edges) ranks.push_back(ranker.rank(e));
    for (const auto& e : b.edges) ranks.push_back(ranker.rank(e));
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    return Hypergraph{a.params, unrank_edges(ranker, ranks)};
}

double second_round_probability(double p, double p0) {
    if (!(p0 >= 0.0 && p <= 1.0)) throw ValidationError("probabilities must lie in [0, 1]");
    if (p0 > p) throw ValidationError("first-round probability exceeds target probability");
    if (p0 >= 1.0) throw ValidationError("first-round probability must be below 1");
    return (p - p0) / (1.0 - p0);
}

EdgeStream::EdgeStream(const Params& params, std::uint64_t seed)
    : params_((params.validate(), params)),
      edge_ranker_(params.n, params.k),
      rng_(seed),
      total_(edge_ranker_.count()) {}

JSetRank EdgeStream::draw_rank() {
    if (!dense_ && 2 * drawn_.size() >= total_) {
        remaining_.reserve(total_ - drawn_.size());
        for (JSetRank r = 0; r < total_; ++r) {
            if (!drawn_.contains(r)) remaining_.push_back(r);
        }
        drawn_ = {};
        dense_ = true;
    }
    if (dense_) {
        const auto i = static_cast<std::size_t>(rng_.uniform_below(remaining_.size()));
        const JSetRank r = remaining_[i];
        remaining_[i] = remaining_.back();
        remaining_.pop_back();
        return r;
    }
    while (true) {
        const JSetRank r = rng_.uniform_below(total_);
        if (drawn_.insert(r).second) return r;
    }
}

std::optional<Edge> EdgeStream::next() {
    if (exhausted()) return std::nullopt;
    const JSetRank r = draw_rank();
    ++position_;
    return edge_ranker_.unrank(r);
}

}  // namespace hyperphase
