#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperphase/models.hpp"
#include "hyperphase/params.hpp"

namespace hyperphase {

struct Thresholds {
    /// Giant-component threshold 1 / ((C(k,j) - 1) C(n, k-j)).
    double p_g = 0.0;
    /// j-connectivity threshold j ln(n) / C(n, k-j).
    double p_c = 0.0;
};

Thresholds thresholds(const Params& params);

/// Asymptotic |L1| / C(n,j) just above p_g: 2 eps / (C(k,j) - 1).
/// Throws ValidationError for eps <= 0.
double predicted_giant_fraction(const Params& params, double eps);

/// Regime knobs of a concrete run. Only `regime_warnings` interprets them
/// jointly; each experiment reads the fields it needs.
struct RegimeParams {
    double eps = 0.2;
    double gamma = 0.3;
    double omega = 3.0;
    std::uint64_t s = 0;
    double c = 0.0;
    double delta = 0.25;

    friend bool operator==(const RegimeParams&, const RegimeParams&) = default;
};

/// Human-readable warnings for finite-n proxies that are far from their
/// asymptotic regime (eps^3 n^j < 100, eps^2 n^(1-2 delta) < 100,
/// gamma^3 n < 100). Advisory only.
std::vector<std::string> regime_warnings(const Params& params, const RegimeParams& regime);

struct DegreeProfile {
    Params params;
    std::uint64_t m = 0;
    /// counts[s] = D_s, the number of j-sets lying in exactly s edges.
    std::vector<std::uint64_t> counts;

    std::uint64_t count(std::uint64_t s) const { return s < counts.size() ? counts[s] : 0; }
};

DegreeProfile degree_profile(const Hypergraph& h);

/// j^s e^(-c) / (j! s!).
double poisson_limit_rate(const Params& params, std::uint64_t s, double c);

/// (j ln n + s ln ln n + c) / C(n, k-j); ValidationError outside [0, 1].
double degree_regime_p(const Params& params, std::uint64_t s, double c);

/// e^(-lambda) lambda^i / i!, evaluated in log space.
double poisson_pmf(double lambda, std::uint64_t i);

struct SmoothnessReport {
    int ell = 0;
    std::uint64_t subset_size = 0;
    /// (|S| / C(n,j)) * C(n, j - ell).
    double expected_per_ellset = 0.0;
    double max_rel_dev = 0.0;
    double mean_rel_dev = 0.0;
    /// Number of ell-sets scored.
    std::uint64_t ellsets_scored = 0;
    bool sampled = false;
};

inline constexpr std::uint64_t kDefaultSampleCap = 1'000'000;

/// Scores how evenly the j-sets of `subset` cover the ell-sets of [n]: for
/// every ell-set L (or `sample_cap` uniform draws when C(n, ell) exceeds the
/// cap) the degree #{S in subset : L c S} is compared to its expectation.
/// `subset` must be nonempty and contain distinct ranks of j-sets.
SmoothnessReport smoothness_score(const std::vector<JSetRank>& subset, int ell,
                                  const Params& params,
                                  std::uint64_t sample_cap = kDefaultSampleCap,
                                  std::uint64_t seed = 0);

/// Convenience overload taking explicit j-sets.
SmoothnessReport smoothness_score(const std::vector<JSet>& subset, int ell, const Params& params,
                                  std::uint64_t sample_cap = kDefaultSampleCap,
                                  std::uint64_t seed = 0);

struct GWResult {
    /// lambda: mean number of fresh edges found from one j-set.
    double offspring_rate = 0.0;
    /// r = C(k,j) - 1 new j-sets per edge.
    std::uint64_t batch = 0;
    double mean_offspring = 0.0;
    double survival = 0.0;
    std::uint64_t iterations = 0;
};

inline constexpr double kGwTolerance = 1e-12;
inline constexpr std::uint64_t kGwMaxIterations = 1'000'000;

/// Survival probability of the branching process that approximates the
/// exploration of a j-component: each j-set finds Poisson(lambda) new
/// edges, lambda = C(n, k-j) p, and each edge brings r fresh j-sets, so the
/// offspring PGF is exp(lambda (x^r - 1)). The extinction probability is the
/// smallest fixed point, reached by iterating from 0.
GWResult gw_survival(const Params& params, double p);

/// Same fixed point for an explicit (lambda, r) pair. Throws NumericError
/// with diagnostics when the iteration cap is reached.
GWResult gw_survival_rate(double lambda, std::uint64_t batch,
                          std::uint64_t max_iterations = kGwMaxIterations);

}  // namespace hyperphase
