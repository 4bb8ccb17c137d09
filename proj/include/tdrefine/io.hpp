#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "tdrefine/counters.hpp"
#include "tdrefine/decomposition.hpp"
#include "tdrefine/graph.hpp"

namespace tdr {

// PACE-style .gr: optional `c` comment lines, header `p tw <n> <m>`, then m
// lines `<u> <v>` (1-indexed). Duplicate edges are deduplicated with a
// warning on stderr.
Graph parse_gr(std::istream& in);
void write_gr(std::ostream& out, const Graph& g);
Graph read_gr_file(const std::string& path);
void write_gr_file(const std::string& path, const Graph& g);

// PACE-style .td: header `s td <#bags> <max-bag-size> <n>`, bag lines
// `b <i> <v...>`, then tree edges `<i> <j>`. Rooted at bag 1 on parse.
TreeDecomposition parse_td(std::istream& in);
void write_td(std::ostream& out, const TreeDecomposition& td);
TreeDecomposition read_td_file(const std::string& path);
void write_td_file(const std::string& path, const TreeDecomposition& td);
std::string td_to_string(const TreeDecomposition& td);

nlohmann::json report_to_json(const ValidationReport& rep);

// One JSON-lines row per (graph, mode) run; achieved <= bound is certified
// before a row is emitted.
struct StatsRecord {
    std::string graph_id;
    int n = 0;
    long long m = 0;
    std::string mode;
    int k = 0;
    int d = 0;
    std::uint64_t seed = 0;
    int width = 0;
    int order = 0;
    int degree = 0;
    int max_spread = 0;
    long long width_bound = 0;
    double order_bound = 0;
    int degree_bound = 0;
    std::string spread_bound;
    double wall_ms = 0;
    BuildCounters cases;

    nlohmann::json to_json() const;
};

}  // namespace tdr
