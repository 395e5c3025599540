#include "hyperphase/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "hyperphase/combinatorics.hpp"
#include "hyperphase/components.hpp"
#include "hyperphase/errors.hpp"
#include "hyperphase/rng.hpp"

namespace hyperphase {

namespace {

double binom_d(std::uint64_t n, std::uint64_t r) { return static_cast<double>(binomial(n, r)); }

std::uint64_t uk(int x) { return static_cast<std::uint64_t>(x); }

}  // namespace

Thresholds thresholds(const Params& params) {
    params.validate();
    const double pool = binom_d(params.n, uk(params.k - params.j));
    Thresholds t;
    t.p_g = 1.0 / ((binom_d(uk(params.k), uk(params.j)) - 1.0) * pool);
    t.p_c = params.j * std::log(static_cast<double>(params.n)) / pool;
    return t;
}

double predicted_giant_fraction(const Params& params, double eps) {
    params.validate();
    if (!(eps > 0.0)) {
        throw ValidationError("predicted giant fraction needs eps > 0 (subcritical has no giant)");
    }
    return 2.0 * eps / (binom_d(uk(params.k), uk(params.j)) - 1.0);
}

std::vector<std::string> regime_warnings(const Params& params, const RegimeParams& regime) {
    std::vector<std::string> out;
    const double n = params.n;
    char buf[160];
    const double e = std::abs(regime.eps);
    const double a = e * e * e * std::pow(n, params.j);
    if (a < 100.0) {
        std::snprintf(buf, sizeof buf, "eps^3 n^j = %.4g < 100: far from the eps^3 n^j -> inf regime", a);
        out.emplace_back(buf);
    }
    const double b = e * e * std::pow(n, 1.0 - 2.0 * regime.delta);
    if (b < 100.0) {
        std::snprintf(buf, sizeof buf, "eps^2 n^(1-2 delta) = %.4g < 100", b);
        out.emplace_back(buf);
    }
    const double g = regime.gamma * regime.gamma * regime.gamma * n;
    if (g < 100.0) {
        std::snprintf(buf, sizeof buf, "gamma^3 n = %.4g < 100", g);
        out.emplace_back(buf);
    }
    return out;
}

DegreeProfile degree_profile(const Hypergraph& h) {
    h.params.validate();
    const ColexRanker ranker(h.params.n, h.params.j);
    check_jset_guardrail(ranker.count());
    const auto positions = subset_positions(h.params.k, h.params.j);
    std::vector<std::uint32_t> degree(ranker.count(), 0);
    for (const auto& e : h.edges) {
        for (const auto& pos : positions) ++degree[ranker.rank_positions(e, pos)];
    }
    DegreeProfile out;
    out.params = h.params;
    out.m = h.m();
    std::uint32_t top = 0;
    for (auto d : degree) top = std::max(top, d);
    out.counts.assign(static_cast<std::size_t>(top) + 1, 0);
    for (auto d : degree) ++out.counts[d];
    return out;
}

double poisson_limit_rate(const Params& params, std::uint64_t s, double c) {
    params.validate();
    const double j = params.j;
    return std::exp(s * std::log(j) - c - std::lgamma(j + 1.0) -
                    std::lgamma(static_cast<double>(s) + 1.0));
}

double degree_regime_p(const Params& params, std::uint64_t s, double c) {
    params.validate();
    const double ln_n = std::log(static_cast<double>(params.n));
    const double p = (params.j * ln_n + static_cast<double>(s) * std::log(ln_n) + c) /
                     binom_d(params.n, uk(params.k - params.j));
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("degree-regime probability " + std::to_string(p) +
                              " falls outside [0, 1]");
    }
    return p;
}

double poisson_pmf(double lambda, std::uint64_t i) {
    if (lambda < 0.0) throw ValidationError("Poisson rate must be nonnegative");
    if (lambda == 0.0) return i == 0 ? 1.0 : 0.0;
    const double x = static_cast<double>(i);
    return std::exp(-lambda + x * std::log(lambda) - std::lgamma(x + 1.0));
}

SmoothnessReport smoothness_score(const std::vector<JSetRank>& subset, int ell,
                                  const Params& params, std::uint64_t sample_cap,
                                  std::uint64_t seed) {
    params.validate();
    if (ell < 0 || ell >= params.j) {
        throw ValidationError("ell must satisfy 0 <= ell < j (got " + std::to_string(ell) + ")");
    }
    if (subset.empty()) throw ValidationError("smoothness needs a nonempty set of j-sets");
    const std::uint64_t total = params.num_jsets();
    {
        std::vector<JSetRank> sorted = subset;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.back() >= total) throw ValidationError("j-set rank out of range");
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ValidationError("smoothness set contains duplicate j-sets");
        }
    }

    SmoothnessReport rep;
    rep.ell = ell;
    rep.subset_size = subset.size();
    rep.expected_per_ellset = static_cast<double>(subset.size()) *
                              binom_d(params.n, uk(params.j - ell)) / static_cast<double>(total);
    if (ell == 0) {
        // The empty set lies in every member.
        const double dev = std::abs(static_cast<double>(subset.size()) / rep.expected_per_ellset - 1.0);
        rep.max_rel_dev = rep.mean_rel_dev = dev;
        rep.ellsets_scored = 1;
        return rep;
    }

    const ColexRanker jranker(params.n, params.j);
    const ColexRanker lranker(params.n, ell);
    const auto positions = subset_positions(params.j, ell);
    JSet js;
    auto for_each_ellset = [&](auto&& visit) {
        for (JSetRank r : subset) {
            jranker.unrank_into(r, js);
            for (const auto& pos : positions) visit(lranker.rank_positions(js, pos));
        }
    };
    auto deviation = [&](std::uint64_t deg) {
        return std::abs(static_cast<double>(deg) / rep.expected_per_ellset - 1.0);
    };

    double sum = 0.0;
    if (lranker.count() <= sample_cap) {
        std::vector<std::uint64_t> deg(lranker.count(), 0);
        for_each_ellset([&](JSetRank l) { ++deg[l]; });
        for (auto d : deg) {
            const double dev = deviation(d);
            rep.max_rel_dev = std::max(rep.max_rel_dev, dev);
            sum += dev;
        }
        rep.ellsets_scored = lranker.count();
    } else {
        rep.sampled = true;
        Rng rng(seed);
        std::vector<JSetRank> draws(sample_cap);
        std::unordered_map<JSetRank, std::uint64_t> deg;
        deg.reserve(sample_cap);
        for (auto& d : draws) {
            d = rng.uniform_below(lranker.count());
            deg.try_emplace(d, 0);
        }
        for_each_ellset([&](JSetRank l) {
            if (auto it = deg.find(l); it != deg.end()) ++it->second;
        });
        for (JSetRank d : draws) {
            const double dev = deviation(deg[d]);
            rep.max_rel_dev = std::max(rep.max_rel_dev, dev);
            sum += dev;
        }
        rep.ellsets_scored = sample_cap;
    }
    rep.mean_rel_dev = sum / static_cast<double>(rep.ellsets_scored);
    return rep;
}

SmoothnessReport smoothness_score(const std::vector<JSet>& subset, int ell, const Params& params,
                                  std::uint64_t sample_cap, std::uint64_t seed) {
    std::vector<JSetRank> ranks;
    ranks.reserve(subset.size());
    for (const auto& s : subset) ranks.push_back(rank_jset(s, params));
    return smoothness_score(ranks, ell, params, sample_cap, seed);
}

GWResult gw_survival(const Params& params, double p) {
    params.validate();
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("edge probability must lie in [0, 1]");
    const double pool = binom_d(params.n, uk(params.k - params.j));
    const std::uint64_t batch = binomial(uk(params.k), uk(params.j)) - 1;
    // Decide criticality against p_g as computed by thresholds(); the
    // product r * lambda can round above 1 at p == p_g.
    if (p <= 1.0 / (static_cast<double>(batch) * pool)) {
        GWResult out;
        out.offspring_rate = pool * p;
        out.batch = batch;
        out.mean_offspring = static_cast<double>(batch) * out.offspring_rate;
        return out;
    }
    return gw_survival_rate(pool * p, batch);
}

GWResult gw_survival_rate(double lambda, std::uint64_t batch, std::uint64_t max_iterations) {
    if (!(lambda >= 0.0) || batch == 0) {
        throw ValidationError("offspring rate must be >= 0 and batch >= 1");
    }
    GWResult out;
    out.offspring_rate = lambda;
    out.batch = batch;
    out.mean_offspring = static_cast<double>(batch) * lambda;
    if (out.mean_offspring <= 1.0) return out;

    const double r = static_cast<double>(batch);
    double q = 0.0;
    double step = 0.0;
    for (std::uint64_t it = 1; it <= max_iterations; ++it) {
        const double next = std::exp(lambda * (std::pow(q, r) - 1.0));
        step = std::abs(next - q);
        q = next;
        if (step < kGwTolerance) {
            out.survival = 1.0 - q;
            out.iterations = it;
            return out;
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "extinction fixed point did not converge after %llu iterations "
                  "(lambda=%.17g, r=%llu, q=%.17g, last step=%.3g)",
                  static_cast<unsigned long long>(max_iterations), lambda,
                  static_cast<unsigned long long>(batch), q, step);
    throw NumericError(buf);
}

}  // namespace hyperphase
