#include "tdrefine/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tdrefine/errors.hpp"

namespace tdr {

namespace {

bool next_payload_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == 'c') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph parse_gr(std::istream& in) {
    std::string line;
    if (!next_payload_line(in, line)) throw UserError(".gr: missing header");
    std::istringstream hs(line);
    std::string p, tw;
    long long n = -1, m = -1;
    hs >> p >> tw >> n >> m;
    if (p != "p" || tw != "tw" || n < 0 || m < 0)
        throw UserError(".gr: malformed header: " + line);

    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> seen;
    for (long long i = 0; i < m; ++i) {
        if (!next_payload_line(in, line))
            throw UserError(".gr: expected " + std::to_string(m) + " edges, got " +
                            std::to_string(i));
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v)) throw UserError(".gr: malformed edge line: " + line);
        if (u < 1 || u > n || v < 1 || v > n)
            throw UserError(".gr: vertex index out of range: " + line);
        edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
    }
    // dedupe with a warning
    auto canon = edges;
    for (auto& e : canon)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
        std::cerr << "warning: duplicate edges in .gr input, deduplicated\n";
    return Graph::from_edges(static_cast<int>(n), edges);
}

void write_gr(std::ostream& out, const Graph& g) {
    out << "p tw " << g.universe() << " " << g.num_edges() << "\n";
    g.for_each_edge([&](int v, int w) { out << v + 1 << " " << w + 1 << "\n"; });
}

TreeDecomposition parse_td(std::istream& in) {
    std::string line;
    if (!next_payload_line(in, line)) throw UserError(".td: missing header");
    std::istringstream hs(line);
    std::string s, td_tag;
    long long bags = -1, max_bag = -1, n = -1;
    hs >> s >> td_tag >> bags >> max_bag >> n;
    if (s != "s" || td_tag != "td" || bags < 1 || max_bag < 0 || n < 0)
        throw UserError(".td: malformed header: " + line);

    TreeDecomposition td;
    td.graph_universe = static_cast<int>(n);
    td.kind = DecompKind::strong;
    td.bags.assign(bags, {});
    std::vector<char> bag_seen(bags, 0);
    for (long long i = 0; i < bags; ++i) {
        if (!next_payload_line(in, line)) throw UserError(".td: missing bag line");
        std::istringstream bs(line);
        std::string b;
        long long id = 0;
        if (!(bs >> b >> id) || b != "b" || id < 1 || id > bags)
            throw UserError(".td: malformed bag line: " + line);
        if (bag_seen[id - 1]) throw UserError(".td: duplicate bag " + std::to_string(id));
        bag_seen[id - 1] = 1;
        long long v;
        while (bs >> v) {
            if (v < 1 || v > n)
                throw UserError(".td: bag references unknown vertex " + std::to_string(v));
            td.bags[id - 1].push_back(static_cast<int>(v - 1));
        }
        std::sort(td.bags[id - 1].begin(), td.bags[id - 1].end());
        td.bags[id - 1].erase(std::unique(td.bags[id - 1].begin(), td.bags[id - 1].end()),
                              td.bags[id - 1].end());
    }

    std::vector<std::vector<int>> adj(bags);
    long long edge_count = 0;
    while (next_payload_line(in, line)) {
        std::istringstream es(line);
        long long a = 0, b = 0;
        if (!(es >> a >> b)) throw UserError(".td: malformed tree edge line: " + line);
        if (a < 1 || a > bags || b < 1 || b > bags || a == b)
            throw UserError(".td: tree edge out of range: " + line);
        adj[a - 1].push_back(static_cast<int>(b - 1));
        adj[b - 1].push_back(static_cast<int>(a - 1));
        ++edge_count;
    }
    if (edge_count != bags - 1)
        throw UserError(".td: bag tree must have exactly #bags-1 edges");
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<int> parent(bags, -1);
    parent[0] = 0;
    std::vector<int> bfs = {0};
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (int c : adj[bfs[i]])
            if (parent[c] == -1) {
                parent[c] = bfs[i];
                bfs.push_back(c);
            }
    if (static_cast<long long>(bfs.size()) != bags)
        throw UserError(".td: bag tree is disconnected");
    td.tree = RootedTree::from_parents(parent, 0);

    if (width(td) + 1 > max_bag)
        throw UserError(".td: a bag exceeds the declared maximum bag size");
    return td;
}

void write_td(std::ostream& out, const TreeDecomposition& td) {
    std::size_t max_bag = 0;
    for (const auto& b : td.bags) max_bag = std::max(max_bag, b.size());
    out << "s td " << td.bags.size() << " " << max_bag << " " << td.graph_universe << "\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i]) out << " " << v + 1;
        out << "\n";
    }
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < td.tree.size(); ++x)
        if (x != td.tree.root())
            edges.push_back({std::min(x, td.tree.parent(x)), std::max(x, td.tree.parent(x))});
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) out << a + 1 << " " << b + 1 << "\n";
}

Graph read_gr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UserError("cannot open " + path);
    return parse_gr(in);
}

void write_gr_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw UserError("cannot write " + path);
    write_gr(out, g);
}

TreeDecomposition read_td_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UserError("cannot open " + path);
    return parse_td(in);
}

void write_td_file(const std::string& path, const TreeDecomposition& td) {
    std::ofstream out(path);
    if (!out) throw UserError("cannot write " + path);
    write_td(out, td);
}

std::string td_to_string(const TreeDecomposition& td) {
    std::ostringstream os;
    write_td(os, td);
    return os.str();
}

nlohmann::json report_to_json(const ValidationReport& rep) {
    nlohmann::json out;
    out["valid"] = rep.ok();
    out["violations"] = nlohmann::json::array();
    for (const auto& v : rep.violations) {
        nlohmann::json jv;
        jv["message"] = v.to_string();
        if (v.a >= 0) jv["a"] = v.a + 1;
        if (v.b >= 0) jv["b"] = v.b + 1;
        if (v.node >= 0) jv["node"] = v.node + 1;
        out["violations"].push_back(jv);
    }
    return out;
}

nlohmann::json StatsRecord::to_json() const {
    nlohmann::json j;
    j["graph"] = graph_id;
    j["n"] = n;
    j["m"] = m;
    j["mode"] = mode;
    j["k"] = k;
    j["d"] = d;
    j["seed"] = seed;
    j["width"] = width;
    j["order"] = order;
    j["degree"] = degree;
    j["max_spread"] = max_spread;
    j["width_bound"] = width_bound;
    j["order_bound"] = order_bound;
    j["degree_bound"] = degree_bound;
    j["spread_bound"] = spread_bound;
    j["wall_ms"] = wall_ms;
    j["cases"] = {{"heart_case1", cases.heart_case1},
                  {"heart_case2", cases.heart_case2},
                  {"heart_case3", cases.heart_case3},
                  {"alpha_beta_base", cases.alpha_beta_base},
                  {"alpha_beta_recursive", cases.alpha_beta_recursive}};
    return j;
}

}  // namespace tdr
