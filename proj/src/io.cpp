#include "hyperphase/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <unordered_set>

#include "json.hpp"

#include "hyperphase/combinatorics.hpp"
#include "hyperphase/errors.hpp"

namespace hyperphase {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') continue;
        out.push_back({number, line});
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto start = line.find_first_not_of(" \t", pos);
        if (start == std::string_view::npos) break;
        auto end = line.find_first_of(" \t", start);
        if (end == std::string_view::npos) end = line.size();
        out.push_back(line.substr(start, end - start));
        pos = end;
    }
    return out;
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text, std::optional<int> j) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header line 'k n m'");

    const Line& header = lines.front();
    const auto head = tokens(header.text);
    std::uint64_t k = 0, n = 0, m = 0;
    if (head.size() != 3 || !parse_u64(head[0], k) || !parse_u64(head[1], n) ||
        !parse_u64(head[2], m)) {
        throw ParseError(header.number, "header must be three nonnegative integers 'k n m'");
    }
    if (k > 64 || n > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError(header.number, "k or n out of supported range");
    }
    Params params{static_cast<int>(k), j.value_or(static_cast<int>(k) - 1),
                  static_cast<std::uint32_t>(n)};
    try {
        params.validate();
    } catch (const ValidationError& e) {
        throw ParseError(header.number, e.what());
    }
    if (lines.size() - 1 != m) {
        throw ParseError(header.number, "header declares " + std::to_string(m) + " edges but " +
                                            std::to_string(lines.size() - 1) + " follow");
    }

    const ColexRanker ranker(params.n, params.k);
    std::unordered_set<JSetRank> seen;
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto toks = tokens(line.text);
        if (toks.size() != k) {
            throw ParseError(line.number, "expected " + std::to_string(k) + " vertices, found " +
                                              std::to_string(toks.size()));
        }
        Edge e(k);
        for (std::size_t t = 0; t < k; ++t) {
            std::uint64_t v = 0;
            if (!parse_u64(toks[t], v)) {
                throw ParseError(line.number, "invalid vertex id '" + std::string(toks[t]) + "'");
            }
            if (v < 1 || v > n) {
                throw ParseError(line.number, "vertex " + std::to_string(v) + " outside [1, " +
                                                  std::to_string(n) + "]");
            }
            e[t] = static_cast<VertexId>(v);
            if (t > 0 && e[t] <= e[t - 1]) {
                throw ParseError(line.number, "vertices must be strictly increasing");
            }
        }
        if (!seen.insert(ranker.rank(e)).second) throw ParseError(line.number, "duplicate edge");
        edges.push_back(std::move(e));
    }
    return Hypergraph{params, std::move(edges)};
}

std::string write_hypergraph(const Hypergraph& h) {
    const Hypergraph c = h.canonical();
    std::string out = std::to_string(c.params.k) + " " + std::to_string(c.params.n) + " " +
                      std::to_string(c.m()) + "\n";
    for (const auto& e : c.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
    std::set<std::string> unique(columns_.begin(), columns_.end());
    if (unique.size() != columns_.size()) throw ValidationError("duplicate column name");
}

void ResultTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) {
        throw ValidationError("row has " + std::to_string(row.size()) + " cells, table has " +
                              std::to_string(columns_.size()) + " columns");
    }
    rows_.push_back(std::move(row));
}

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else if constexpr (std::is_same_v<T, double>) return format_real(v);
            else if constexpr (std::is_same_v<T, std::string>) return csv_field(v);
            else return std::to_string(v);
        },
        cell);
}

nlohmann::ordered_json row_object(const ResultTable& t, const std::vector<Cell>& row) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
        std::visit([&](const auto& v) { obj[t.columns()[c]] = v; }, row[c]);
    }
    return obj;
}

}  // namespace

std::string write_csv(const ResultTable& t) {
    std::string out;
    for (std::size_t c = 0; c < t.columns().size(); ++c) {
        if (c > 0) out += ',';
        out += csv_field(t.columns()[c]);
    }
    out += '\n';
    for (const auto& row : t.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += cell_text(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string write_json(const ResultTable& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows()) arr.push_back(row_object(t, row));
    return arr.dump() + "\n";
}

std::string write_json_object(const ResultTable& t) {
    if (t.rows().size() != 1) throw ValidationError("JSON object output needs exactly one row");
    return row_object(t, t.rows().front()).dump() + "\n";
}

namespace {

template <typename T>
T parse_number(const std::string& key, std::string_view value) {
    T out{};
    const char* first = value.data();
    const char* last = value.data() + value.size();
    if (!value.empty() && value.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (value.empty() || ec != std::errc{} || ptr != last) {
        throw ConfigError(key, "cannot parse '" + std::string(value) + "' as " +
                                   (std::is_floating_point_v<T> ? "a real number" : "an integer"));
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(out)) throw ConfigError(key, "value must be finite");
    }
    return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, std::string_view value) {
    std::vector<T> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = value.find(',', pos);
        out.push_back(parse_number<T>(key, trim(value.substr(pos, comma - pos))));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

const std::set<std::string, std::less<>> kConfigKeys = {
    "k", "j", "n", "trials", "seed", "eps", "gamma", "omega", "s", "c", "delta",
    "eps_grid", "ell_list", "sample_cap", "threads", "p", "m"};

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
    std::map<std::string, std::string, std::less<>> kv;
    for (const Line& line : content_lines(text)) {
        const auto eq = line.text.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(std::string(trim(line.text)),
                              "line " + std::to_string(line.number) + " is not key=value");
        }
        std::string key(trim(line.text.substr(0, eq)));
        const std::string_view value = trim(line.text.substr(eq + 1));
        if (!kConfigKeys.contains(key)) throw ConfigError(key, "unknown key");
        if (!kv.emplace(key, std::string(value)).second) throw ConfigError(key, "duplicate key");
    }

    auto get = [&](const char* key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    auto require = [&](const char* key) -> const std::string& {
        const std::string* v = get(key);
        if (v == nullptr) throw ConfigError(key, "required key is missing");
        return *v;
    };

    ExperimentConfig cfg;
    const auto k = parse_number<std::int64_t>("k", require("k"));
    const auto j = parse_number<std::int64_t>("j", require("j"));
    const auto n = parse_number<std::int64_t>("n", require("n"));
    if (k < 2 || k > 64) throw ConfigError("k", "k must satisfy 2 <= k <= 64");
    if (j < 1 || j > k - 1) throw ConfigError("j", "j must satisfy 1 <= j <= k-1");
    if (n < k || n > std::numeric_limits<std::uint32_t>::max()) {
        throw ConfigError("n", "n must satisfy n >= k");
    }
    cfg.params = Params{static_cast<int>(k), static_cast<int>(j), static_cast<std::uint32_t>(n)};

    if (auto v = get("trials")) cfg.trials = parse_number<std::uint64_t>("trials", *v);
    if (cfg.trials < 1) throw ConfigError("trials", "trials must be at least 1");
    if (auto v = get("seed")) cfg.base_seed = parse_number<std::uint64_t>("seed", *v);
    if (auto v = get("eps")) cfg.regime.eps = parse_number<double>("eps", *v);
    if (auto v = get("gamma")) cfg.regime.gamma = parse_number<double>("gamma", *v);
    if (auto v = get("omega")) cfg.regime.omega = parse_number<double>("omega", *v);
    if (auto v = get("s")) cfg.regime.s = parse_number<std::uint64_t>("s", *v);
    if (auto v = get("c")) cfg.regime.c = parse_number<double>("c", *v);
    if (auto v = get("delta")) cfg.regime.delta = parse_number<double>("delta", *v);
    if (cfg.regime.gamma <= 0.0) throw ConfigError("gamma", "gamma must be positive");
    if (cfg.regime.omega <= 0.0) throw ConfigError("omega", "omega must be positive");
    if (cfg.regime.delta <= 0.0) throw ConfigError("delta", "delta must be positive");

    if (auto v = get("eps_grid")) {
        cfg.eps_grid = parse_list<double>("eps_grid", *v);
        for (double e : cfg.eps_grid) {
            if (e == 0.0) throw ConfigError("eps_grid", "values must be nonzero");
        }
    } else if (cfg.regime.eps != 0.0) {
        cfg.eps_grid = {cfg.regime.eps};
    }
    if (auto v = get("ell_list")) {
        cfg.ell_list = parse_list<int>("ell_list", *v);
        for (int ell : cfg.ell_list) {
            if (ell < 0 || ell >= j) throw ConfigError("ell_list", "values must satisfy 0 <= ell < j");
        }
    } else {
        cfg.ell_list = {static_cast<int>(j) - 1};
    }
    if (auto v = get("sample_cap")) cfg.sample_cap = parse_number<std::uint64_t>("sample_cap", *v);
    if (cfg.sample_cap < 1) throw ConfigError("sample_cap", "sample_cap must be positive");
    if (auto v = get("threads")) cfg.threads = parse_number<unsigned>("threads", *v);
    if (auto v = get("p")) {
        cfg.p = parse_number<double>("p", *v);
        if (*cfg.p < 0.0 || *cfg.p > 1.0) throw ConfigError("p", "p must lie in [0, 1]");
    }
    if (auto v = get("m")) cfg.m = parse_number<std::uint64_t>("m", *v);
    return cfg;
}

std::string write_config(const ExperimentConfig& cfg) {
    std::string out;
    auto line = [&](const char* key, const std::string& value) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    };
    line("k", std::to_string(cfg.params.k));
    line("j", std::to_string(cfg.params.j));
    line("n", std::to_string(cfg.params.n));
    line("trials", std::to_string(cfg.trials));
    line("seed", std::to_string(cfg.base_seed));
    line("eps", format_real(cfg.regime.eps));
    line("gamma", format_real(cfg.regime.gamma));
    line("omega", format_real(cfg.regime.omega));
    line("s", std::to_string(cfg.regime.s));
    line("c", format_real(cfg.regime.c));
    line("delta", format_real(cfg.regime.delta));
    if (!cfg.eps_grid.empty()) {
        std::string grid;
        for (std::size_t i = 0; i < cfg.eps_grid.size(); ++i) {
            if (i > 0) grid += ',';
            grid += format_real(cfg.eps_grid[i]);
        }
        line("eps_grid", grid);
    }
    std::string ells;
    for (std::size_t i = 0; i < cfg.ell_list.size(); ++i) {
        if (i > 0) ells += ',';
        ells += std::to_string(cfg.ell_list[i]);
    }
    if (!ells.empty()) line("ell_list", ells);
    line("sample_cap", std::to_string(cfg.sample_cap));
    line("threads", std::to_string(cfg.threads));
    if (cfg.p) line("p", format_real(*cfg.p));
    if (cfg.m) line("m", std::to_string(*cfg.m));
    return out;
}

}  // namespace hyperphase
