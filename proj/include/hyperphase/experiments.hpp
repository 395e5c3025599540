#pragma once

// Seeded Monte Carlo drivers. Trial i of an experiment uses the sampler
// seed trial_seed(base_seed, i); that seed is stored in every record so a
// single trial can be replayed with the samplers directly. Trials may run
// on several threads; results are stored by trial index, so output does not
// depend on scheduling.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperphase/analysis.hpp"
#include "hyperphase/params.hpp"

namespace hyperphase {

struct ExperimentConfig {
    Params params;
    RegimeParams regime;
    std::uint64_t trials = 50;
    std::uint64_t base_seed = 1;
    /// eps values for phase sweeps; p = (1 + eps) p_g.
    std::vector<double> eps_grid;
    /// ell values for smoothness probes.
    std::vector<int> ell_list;
    std::uint64_t sample_cap = kDefaultSampleCap;
    /// Worker threads for trials; 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Explicit edge probability for `sample` (otherwise (1 + eps) p_g).
    std::optional<double> p;
    /// Explicit edge count for `sample`; selects the uniform model.
    std::optional<std::uint64_t> m;

    /// Params validity, trials >= 1, nonzero eps grid, ell range.
    void validate() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct Stats {
    double mean = 0.0;
    /// Sample standard deviation (n - 1 denominator); 0 for a single value.
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
    double median = 0.0;
};

/// Throws ValidationError on an empty input.
Stats aggregate(const std::vector<double>& values);

struct SweepTrial {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t m = 0;
    std::uint64_t largest = 0;
    std::uint64_t second = 0;
    std::uint64_t isolated = 0;
};

struct SweepPoint {
    double eps = 0.0;
    double p = 0.0;
    std::uint64_t num_jsets = 0;
    std::vector<SweepTrial> trials;
    /// Statistics of largest / C(n,j) over trials.
    Stats largest_fraction;
    /// 2 eps / (C(k,j) - 1) for eps > 0, nullopt otherwise.
    std::optional<double> predicted;
};

/// For each eps in the grid: `trials` draws of H(n, (1 + eps) p_g).
std::vector<SweepPoint> run_phase_sweep(const ExperimentConfig& cfg);

struct HittingRecord {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    /// First process step at which the hypergraph is j-connected.
    std::uint64_t t_connected = 0;
    /// First process step with no isolated j-set.
    std::uint64_t t_isolated = 0;
    bool equal = false;
};

/// Runs the random process once per trial until j-connectivity, tracking
/// both hitting times in a single pass.
std::vector<HittingRecord> run_hitting_time(const ExperimentConfig& cfg);

struct DegreeTrial {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t m = 0;
    std::uint64_t d_s = 0;
};

struct DegreeRunResult {
    std::uint64_t s = 0;
    double c = 0.0;
    double p = 0.0;
    /// Limiting Poisson rate j^s e^(-c) / (j! s!).
    double lambda = 0.0;
    std::vector<DegreeTrial> trials;
    /// empirical_pmf[i] = fraction of trials with D_s == i.
    std::vector<double> empirical_pmf;
    double tv_distance = 0.0;
    double mean_d_s = 0.0;
};

/// Total-variation distance between an empirical pmf on {0, 1, ...} and
/// Poisson(lambda), including the Poisson tail beyond the empirical support.
double tv_distance_to_poisson(const std::vector<double>& pmf, double lambda);

DegreeRunResult run_degree_experiment(const ExperimentConfig& cfg);

struct ProbeTrial {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t m = 0;
    std::uint64_t isolated = 0;
    bool j_connected = false;
};

struct ProbePoint {
    /// "below" for (j ln n - omega) / C(n, k-j), "above" for + omega.
    std::string side;
    double p = 0.0;
    std::vector<ProbeTrial> trials;
    double frac_connected = 0.0;
    double frac_isolated = 0.0;
};

/// Probes a single edge probability.
ProbePoint probe_connectivity(const ExperimentConfig& cfg, const std::string& side, double p);

/// Probes both sides of the connectivity threshold at distance omega.
std::vector<ProbePoint> run_connectivity_probe(const ExperimentConfig& cfg);

struct SmoothTrial {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t m = 0;
    std::uint64_t largest = 0;
    /// Set when L1 is empty; no reports then.
    bool flagged = false;
    std::vector<SmoothnessReport> reports;
};

/// At p = (1 + gamma) p_g scores the j-sets of L1 for each ell in ell_list.
std::vector<SmoothTrial> run_smoothness_probe(const ExperimentConfig& cfg);

}  // namespace hyperphase
