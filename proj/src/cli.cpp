#include "hyperphase/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperphase/analysis.hpp"
#include "hyperphase/combinatorics.hpp"
#include "hyperphase/components.hpp"
#include "hyperphase/errors.hpp"
#include "hyperphase/experiments.hpp"
#include "hyperphase/io.hpp"
#include "hyperphase/models.hpp"

namespace hyperphase {

namespace {

struct GlobalOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string format;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

class Runner {
public:
    Runner(const GlobalOptions& opts, std::ostream& out, std::ostream& err)
        : opts_(opts), out_(out), err_(err) {}

    ExperimentConfig config() const {
        if (opts_.config_path.empty()) throw ValidationError("this command needs --config PATH");
        ExperimentConfig cfg = parse_config(read_file(opts_.config_path));
        if (opts_.seed) cfg.base_seed = *opts_.seed;
        for (const auto& w : regime_warnings(cfg.params, cfg.regime)) {
            err_ << "warning: " << w << "\n";
        }
        return cfg;
    }

    void emit_text(const std::string& text) const {
        if (opts_.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(opts_.out_path, std::ios::binary);
        if (!file) throw ValidationError("cannot write '" + opts_.out_path + "'");
        file << text;
    }

    /// Tables default to CSV; single-object results default to JSON.
    void emit(const ResultTable& t, bool single_object) const {
        const std::string fmt = opts_.format.empty() ? (single_object ? "json" : "csv") : opts_.format;
        if (fmt == "csv") emit_text(write_csv(t));
        else if (single_object) emit_text(write_json_object(t));
        else emit_text(write_json(t));
    }

    const GlobalOptions& opts() const { return opts_; }

private:
    const GlobalOptions& opts_;
    std::ostream& out_;
    std::ostream& err_;
};

void cmd_sample(const Runner& run) {
    ExperimentConfig cfg = run.config();
    const std::uint64_t seed = cfg.base_seed;
    Hypergraph h;
    if (cfg.m) {
        h = sample_uniform(cfg.params, *cfg.m, seed);
    } else {
        const double p = cfg.p ? *cfg.p : (1.0 + cfg.regime.eps) * thresholds(cfg.params).p_g;
        h = sample_binomial(cfg.params, p, seed);
    }
    run.emit_text(write_hypergraph(h));
}

Hypergraph load_hypergraph(const Runner& run, const std::string& path, std::optional<int> j) {
    if (!j && !run.opts().config_path.empty()) j = run.config().params.j;
    return parse_hypergraph(read_file(path), j);
}

void cmd_components(const Runner& run, const std::string& path, std::optional<int> j) {
    const Hypergraph h = load_hypergraph(run, path, j);
    const ComponentSummary s = component_summary(h);
    ResultTable t({"k", "j", "n", "m", "largest", "second", "num_nontrivial", "isolated",
                   "is_j_connected"});
    t.add_row({static_cast<std::int64_t>(h.params.k), static_cast<std::int64_t>(h.params.j),
               static_cast<std::uint64_t>(h.params.n), s.m, s.largest, s.second,
               s.num_nontrivial, s.isolated_count, s.is_j_connected});
    run.emit(t, true);
}

nlohmann::ordered_json jset_json(const JSet& s) { return nlohmann::ordered_json(s); }

void cmd_explore(const Runner& run, const std::string& path, std::optional<int> j,
                 const std::vector<VertexId>& start, std::uint64_t max_generations) {
    const Hypergraph h = load_hypergraph(run, path, j);
    const ExplorationRecord rec = bfs_explore(h, start, max_generations);
    if (run.opts().format == "csv") {
        ResultTable t({"generation", "jset"});
        for (std::size_t g = 0; g < rec.generations.size(); ++g) {
            for (const auto& s : rec.generations[g]) {
                std::string label;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i > 0) label += ' ';
                    label += std::to_string(s[i]);
                }
                t.add_row({static_cast<std::uint64_t>(g), label});
            }
        }
        run.emit_text(write_csv(t));
        return;
    }
    nlohmann::ordered_json doc;
    doc["start"] = jset_json(rec.start);
    doc["generations"] = nlohmann::ordered_json::array();
    for (const auto& gen : rec.generations) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& s : gen) arr.push_back(jset_json(s));
        doc["generations"].push_back(arr);
    }
    doc["boundary"] = doc["generations"].back();
    doc["exhausted"] = rec.exhausted;
    run.emit_text(doc.dump() + "\n");
}

void cmd_sweep(const Runner& run) {
    const auto points = run_phase_sweep(run.config());
    ResultTable t({"eps", "p", "trial", "seed", "m", "largest", "second", "isolated",
                   "largest_fraction", "mean_fraction", "predicted"});
    for (const auto& pt : points) {
        for (const auto& tr : pt.trials) {
            t.add_row({pt.eps, pt.p, tr.trial, tr.seed, tr.m, tr.largest, tr.second, tr.isolated,
                       static_cast<double>(tr.largest) / static_cast<double>(pt.num_jsets),
                       pt.largest_fraction.mean, pt.predicted.value_or(std::nan(""))});
        }
    }
    run.emit(t, false);
}

void cmd_hitting(const Runner& run) {
    const auto recs = run_hitting_time(run.config());
    ResultTable t({"trial", "seed", "t_connected", "t_isolated", "equal"});
    for (const auto& r : recs) t.add_row({r.trial, r.seed, r.t_connected, r.t_isolated, r.equal});
    run.emit(t, false);
}

void cmd_degrees(const Runner& run) {
    const DegreeRunResult res = run_degree_experiment(run.config());
    ResultTable t({"trial", "seed", "p", "s", "c", "m", "d_s", "lambda", "tv_distance"});
    for (const auto& tr : res.trials) {
        t.add_row({tr.trial, tr.seed, res.p, res.s, res.c, tr.m, tr.d_s, res.lambda,
                   res.tv_distance});
    }
    run.emit(t, false);
}

void cmd_connprobe(const Runner& run) {
    const auto points = run_connectivity_probe(run.config());
    ResultTable t({"side", "p", "trial", "seed", "m", "isolated", "j_connected",
                   "frac_connected", "frac_isolated"});
    for (const auto& pt : points) {
        for (const auto& tr : pt.trials) {
            t.add_row({pt.side, pt.p, tr.trial, tr.seed, tr.m, tr.isolated, tr.j_connected,
                       pt.frac_connected, pt.frac_isolated});
        }
    }
    run.emit(t, false);
}

void cmd_smooth(const Runner& run) {
    const auto trials = run_smoothness_probe(run.config());
    ResultTable t({"trial", "seed", "m", "largest", "flagged", "ell", "subset_size",
                   "expected_per_ellset", "max_rel_dev", "mean_rel_dev", "sampled"});
    for (const auto& tr : trials) {
        if (tr.flagged) {
            t.add_row({tr.trial, tr.seed, tr.m, tr.largest, true, std::int64_t{-1},
                       std::uint64_t{0}, std::nan(""), std::nan(""), std::nan(""), false});
        }
        for (const auto& rep : tr.reports) {
            t.add_row({tr.trial, tr.seed, tr.m, tr.largest, false,
                       static_cast<std::int64_t>(rep.ell), rep.subset_size,
                       rep.expected_per_ellset, rep.max_rel_dev, rep.mean_rel_dev, rep.sampled});
        }
    }
    run.emit(t, false);
}

void cmd_gw(const Runner& run, std::optional<double> p) {
    const ExperimentConfig cfg = run.config();
    const double prob = p ? *p : (cfg.p ? *cfg.p : (1.0 + cfg.regime.eps) * thresholds(cfg.params).p_g);
    const GWResult g = gw_survival(cfg.params, prob);
    ResultTable t({"p", "offspring_rate", "batch", "mean_offspring", "survival", "iterations"});
    t.add_row({prob, g.offspring_rate, g.batch, g.mean_offspring, g.survival, g.iterations});
    run.emit(t, true);
}

void cmd_thresholds(const Runner& run) {
    const Thresholds th = thresholds(run.config().params);
    ResultTable t({"p_g", "p_c"});
    t.add_row({th.p_g, th.p_c});
    run.emit(t, true);
}

std::vector<VertexId> parse_start(const std::string& text) {
    std::vector<VertexId> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() ||
            v > std::numeric_limits<VertexId>::max()) {
            throw ValidationError("--start expects comma-separated vertex ids, got '" + text + "'");
        }
        out.push_back(static_cast<VertexId>(v));
    }
    return out;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulation and analysis of j-components in random k-uniform hypergraphs",
                 "hyperphase"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--config", opts.config_path, "Experiment configuration file (key=value)");
    app.add_option("--seed", opts.seed, "Override the configured base seed");
    app.add_option("--out", opts.out_path, "Write output to PATH instead of stdout");
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    std::string file;
    std::optional<int> j;
    std::string start_text;
    std::uint64_t max_generations = std::numeric_limits<std::uint64_t>::max();
    std::optional<double> gw_p;

    auto* sample = app.add_subcommand("sample", "Sample a hypergraph and write it as an edge list");
    auto* components = app.add_subcommand("components", "Print the j-component census of a file");
    components->add_option("file", file, "Hypergraph file")->required();
    components->add_option("--j", j, "Connectivity order (default k-1)");
    auto* explore = app.add_subcommand("explore", "Breadth-first exploration from a j-set");
    explore->add_option("file", file, "Hypergraph file")->required();
    explore->add_option("--j", j, "Connectivity order (default k-1)");
    explore->add_option("--start", start_text, "Start j-set, e.g. 1,2")->required();
    explore->add_option("--max-generations", max_generations, "Generation limit");
    auto* sweep = app.add_subcommand("sweep", "Largest component across an eps grid");
    auto* hitting = app.add_subcommand("hitting", "Hitting times of connectivity and isolation");
    auto* degrees = app.add_subcommand("degrees", "Degree counts D_s versus their Poisson limit");
    auto* connprobe = app.add_subcommand("connprobe", "Connectivity on both sides of p_c");
    auto* smooth = app.add_subcommand("smooth", "Smoothness of the largest component");
    auto* gw = app.add_subcommand("gw", "Branching-process survival probability");
    gw->add_option("--p", gw_p, "Edge probability (default (1+eps) p_g)");
    auto* thresh = app.add_subcommand("thresholds", "Print p_g and p_c");

    std::vector<char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    const Runner run(opts, out, err);
    try {
        if (sample->parsed()) cmd_sample(run);
        else if (components->parsed()) cmd_components(run, file, j);
        else if (explore->parsed()) cmd_explore(run, file, j, parse_start(start_text), max_generations);
        else if (sweep->parsed()) cmd_sweep(run);
        else if (hitting->parsed()) cmd_hitting(run);
        else if (degrees->parsed()) cmd_degrees(run);
        else if (connprobe->parsed()) cmd_connprobe(run);
        else if (smooth->parsed()) cmd_smooth(run);
        else if (gw->parsed()) cmd_gw(run, gw_p);
        else if (thresh->parsed()) cmd_thresholds(run);
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const ArithmeticOverflow& e) {
        err << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

int cli_dispatch(int argc, char** argv) {
    return cli_dispatch(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace hyperphase
