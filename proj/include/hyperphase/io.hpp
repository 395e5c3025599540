#pragma once

// Text formats.
//
// Hypergraph files:
//     # optional comment lines start with '#'
//     k n m
//     v_1 v_2 ... v_k        (m lines, 1-based, strictly increasing)
// LF line endings, no duplicate edges. The file does not carry j; readers
// supply it (default j = k - 1).
//
// Configs: flat `key=value` lines, '#' comments; see parse_config.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperphase/experiments.hpp"
#include "hyperphase/models.hpp"

namespace hyperphase {

/// Throws ParseError naming the offending line. Without `j`, uses k - 1.
Hypergraph parse_hypergraph(std::string_view text, std::optional<int> j = std::nullopt);

/// Canonical form: header, then edges sorted by colex rank.
std::string write_hypergraph(const Hypergraph& h);

using Cell = std::variant<std::int64_t, std::uint64_t, double, bool, std::string>;

class ResultTable {
public:
    ResultTable() = default;
    /// Column names must be unique.
    explicit ResultTable(std::vector<std::string> columns);

    /// Row length must equal the column count.
    void add_row(std::vector<Cell> row);

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

/// 17 significant digits, so the value round-trips exactly.
std::string format_real(double x);

/// RFC 4180 CSV with a header row and LF line endings.
std::string write_csv(const ResultTable& t);

/// JSON array with one object per row, keys in column order.
std::string write_json(const ResultTable& t);

/// Single-row tables as a bare JSON object.
std::string write_json_object(const ResultTable& t);

/// Keys: k, j, n (required); trials, seed, eps, gamma, omega, s, c, delta,
/// eps_grid, ell_list, sample_cap, threads, p, m (optional). Defaults:
/// trials=50, seed=1, eps=0.2, gamma=0.3, omega=3, s=0, c=0, delta=0.25,
/// sample_cap=1e6, eps_grid={eps}, ell_list={j-1}, threads=0.
/// Throws ConfigError naming the key.
ExperimentConfig parse_config(std::string_view text);

/// Serializes every field explicitly; parse_config inverts it.
std::string write_config(const ExperimentConfig& cfg);

}  // namespace hyperphase
