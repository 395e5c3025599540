#include "hyperphase/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "hyperphase/combinatorics.hpp"
#include "hyperphase/components.hpp"
#include "hyperphase/errors.hpp"
#include "hyperphase/models.hpp"
#include "hyperphase/rng.hpp"

namespace hyperphase {

namespace {

unsigned worker_count(unsigned requested, std::uint64_t jobs) {
    unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(n, jobs));
}

// Runs body(i) for i in [0, count); each index writes only its own slot.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, Body&& body) {
    const unsigned workers = worker_count(threads, count);
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::uint64_t i = next++; i < count; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next = count;
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

void require_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(std::string(what) + " edge probability " + std::to_string(p) +
                              " falls outside [0, 1]");
    }
}

std::vector<int> effective_ells(const ExperimentConfig& cfg) {
    if (!cfg.ell_list.empty()) return cfg.ell_list;
    return {cfg.params.j - 1};
}

}  // namespace

void ExperimentConfig::validate() const {
    params.validate();
    if (trials < 1) throw ValidationError("trials must be at least 1");
    for (double e : eps_grid) {
        if (e == 0.0 || !std::isfinite(e)) throw ValidationError("eps grid values must be nonzero and finite");
    }
    for (int ell : ell_list) {
        if (ell < 0 || ell >= params.j) throw ValidationError("ell values must satisfy 0 <= ell < j");
    }
    if (sample_cap < 1) throw ValidationError("sample_cap must be positive");
}

Stats aggregate(const std::vector<double>& values) {
    if (values.empty()) throw ValidationError("cannot aggregate an empty list");
    Stats st;
    const auto n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    st.mean = sum / n;
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - st.mean) * (v - st.mean);
        st.stddev = std::sqrt(ss / (n - 1.0));
    }
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    st.min = sorted.front();
    st.max = sorted.back();
    const std::size_t mid = sorted.size() / 2;
    st.median = sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    return st;
}

std::vector<SweepPoint> run_phase_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.eps_grid.empty()) throw ValidationError("phase sweep needs a nonempty eps grid");
    const double p_g = thresholds(cfg.params).p_g;
    const std::uint64_t total = cfg.params.num_jsets();
    check_jset_guardrail(total);

    std::vector<SweepPoint> out;
    for (double eps : cfg.eps_grid) {
        SweepPoint pt;
        pt.eps = eps;
        pt.p = (1.0 + eps) * p_g;
        require_probability(pt.p, "sweep");
        pt.num_jsets = total;
        pt.trials.resize(cfg.trials);
        parallel_for(cfg.trials, cfg.threads, [&](std::uint64_t t) {
            const std::uint64_t seed = trial_seed(cfg.base_seed, t);
            const Hypergraph h = sample_binomial(cfg.params, pt.p, seed);
            const ComponentSummary sum = component_summary(h);
            pt.trials[t] = SweepTrial{t, seed, h.m(), sum.largest, sum.second, sum.isolated_count};
        });
        std::vector<double> fractions;
        fractions.reserve(pt.trials.size());
        for (const auto& tr : pt.trials) {
            fractions.push_back(static_cast<double>(tr.largest) / static_cast<double>(total));
        }
        pt.largest_fraction = aggregate(fractions);
        if (eps > 0.0) pt.predicted = predicted_giant_fraction(cfg.params, eps);
        out.push_back(std::move(pt));
    }
    return out;
}

std::vector<HittingRecord> run_hitting_time(const ExperimentConfig& cfg) {
    cfg.validate();
    check_jset_guardrail(cfg.params.num_jsets());
    std::vector<HittingRecord> out(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::uint64_t t) {
        HittingRecord rec;
        rec.trial = t;
        rec.seed = trial_seed(cfg.base_seed, t);
        EdgeStream stream(cfg.params, rec.seed);
        DisjointSets dsu(cfg.params);
        while (true) {
            const auto e = stream.next();
            if (!e) {
                throw std::logic_error("edge stream exhausted before j-connectivity");
            }
            dsu.apply_edge(*e);
            if (rec.t_isolated == 0 && dsu.untouched_count() == 0) {
                rec.t_isolated = stream.position();
            }
            if (dsu.num_sets_remaining() == 1) {
                rec.t_connected = stream.position();
                break;
            }
        }
        rec.equal = rec.t_connected == rec.t_isolated;
        out[t] = rec;
    });
    return out;
}

double tv_distance_to_poisson(const std::vector<double>& pmf, double lambda) {
    double diff = 0.0;
    double covered = 0.0;
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        const double q = poisson_pmf(lambda, i);
        diff += std::abs(pmf[i] - q);
        covered += q;
    }
    diff += std::max(0.0, 1.0 - covered);
    return std::clamp(0.5 * diff, 0.0, 1.0);
}

DegreeRunResult run_degree_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    DegreeRunResult res;
    res.s = cfg.regime.s;
    res.c = cfg.regime.c;
    res.p = degree_regime_p(cfg.params, res.s, res.c);
    res.lambda = poisson_limit_rate(cfg.params, res.s, res.c);
    res.trials.resize(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::uint64_t t) {
        const std::uint64_t seed = trial_seed(cfg.base_seed, t);
        const Hypergraph h = sample_binomial(cfg.params, res.p, seed);
        res.trials[t] = DegreeTrial{t, seed, h.m(), degree_profile(h).count(res.s)};
    });
    std::uint64_t top = 0;
    double sum = 0.0;
    for (const auto& tr : res.trials) {
        top = std::max(top, tr.d_s);
        sum += static_cast<double>(tr.d_s);
    }
    res.empirical_pmf.assign(top + 1, 0.0);
    const auto n = static_cast<double>(res.trials.size());
    for (const auto& tr : res.trials) res.empirical_pmf[tr.d_s] += 1.0 / n;
    res.mean_d_s = sum / n;
    res.tv_distance = tv_distance_to_poisson(res.empirical_pmf, res.lambda);
    return res;
}

ProbePoint probe_connectivity(const ExperimentConfig& cfg, const std::string& side, double p) {
    cfg.validate();
    require_probability(p, "probe");
    check_jset_guardrail(cfg.params.num_jsets());
    ProbePoint pt;
    pt.side = side;
    pt.p = p;
    pt.trials.resize(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::uint64_t t) {
        const std::uint64_t seed = trial_seed(cfg.base_seed, t);
        const Hypergraph h = sample_binomial(cfg.params, p, seed);
        const ComponentSummary sum = component_summary(h);
        pt.trials[t] = ProbeTrial{t, seed, h.m(), sum.isolated_count, sum.is_j_connected};
    });
    std::uint64_t connected = 0, isolated = 0;
    for (const auto& tr : pt.trials) {
        connected += tr.j_connected ? 1 : 0;
        isolated += tr.isolated > 0 ? 1 : 0;
    }
    pt.frac_connected = static_cast<double>(connected) / static_cast<double>(cfg.trials);
    pt.frac_isolated = static_cast<double>(isolated) / static_cast<double>(cfg.trials);
    return pt;
}

std::vector<ProbePoint> run_connectivity_probe(const ExperimentConfig& cfg) {
    cfg.validate();
    const Params& pr = cfg.params;
    const double pool = static_cast<double>(binomial(pr.n, static_cast<std::uint64_t>(pr.k - pr.j)));
    const double base = pr.j * std::log(static_cast<double>(pr.n));
    const double omega = cfg.regime.omega;
    return {probe_connectivity(cfg, "below", (base - omega) / pool),
            probe_connectivity(cfg, "above", (base + omega) / pool)};
}

std::vector<SmoothTrial> run_smoothness_probe(const ExperimentConfig& cfg) {
    cfg.validate();
    if (!(cfg.regime.gamma > 0.0)) throw ValidationError("smoothness probe needs gamma > 0");
    const double p = (1.0 + cfg.regime.gamma) * thresholds(cfg.params).p_g;
    require_probability(p, "smoothness");
    const std::vector<int> ells = effective_ells(cfg);
    std::vector<SmoothTrial> out(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::uint64_t t) {
        SmoothTrial tr;
        tr.trial = t;
        tr.seed = trial_seed(cfg.base_seed, t);
        const Hypergraph h = sample_binomial(cfg.params, p, tr.seed);
        tr.m = h.m();
        DisjointSets dsu(cfg.params);
        for (const auto& e : h.edges) dsu.apply_edge(e);
        const std::vector<JSetRank> l1 = largest_component(dsu);
        tr.largest = l1.size();
        if (l1.empty()) {
            tr.flagged = true;
        } else {
            for (int ell : ells) {
                tr.reports.push_back(smoothness_score(l1, ell, cfg.params, cfg.sample_cap, tr.seed));
            }
        }
        out[t] = std::move(tr);
    });
    return out;
}

}  // namespace hyperphase
