#include "ehrgraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace ehrgraph {

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("loop at vertex " + std::to_string(a));
        if (a > b)
            std::swap(a, b);
        if (a < 1 || b > vertex_count)
            throw std::invalid_argument("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                        "} outside vertex range 1.." + std::to_string(vertex_count));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g;
    g.vertex_count = vertex_count;
    g.edges = std::move(edges);
    return g;
}

int Graph::degree(int v) const {
    int deg = 0;
    for (const auto& [a, b] : edges)
        if (a == v || b == v)
            ++deg;
    return deg;
}

std::vector<int> Graph::isolated_vertices() const {
    std::vector<bool> seen(static_cast<size_t>(vertex_count) + 1, false);
    for (const auto& [a, b] : edges) {
        seen[static_cast<size_t>(a)] = true;
        seen[static_cast<size_t>(b)] = true;
    }
    std::vector<int> iso;
    for (int v = 1; v <= vertex_count; ++v)
        if (!seen[static_cast<size_t>(v)])
            iso.push_back(v);
    return iso;
}

static std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count) + 1);
    for (const auto& [a, b] : g.edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    return adj;
}

bool Graph::is_connected() const {
    if (vertex_count <= 1)
        return true;
    auto adj = adjacency(*this);
    std::vector<bool> visited(static_cast<size_t>(vertex_count) + 1, false);
    std::queue<int> q;
    q.push(1);
    visited[1] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[static_cast<size_t>(v)]) {
            if (!visited[static_cast<size_t>(w)]) {
                visited[static_cast<size_t>(w)] = true;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == vertex_count;
}

Graph linear_graph(int n) {
    if (n < 1)
        throw std::invalid_argument("linear graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle graph needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete bipartite graph needs both parts nonempty");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(a + b, std::move(edges));
}

std::optional<Bipartition> bipartition(const Graph& g) {
    auto adj = adjacency(g);
    std::vector<int> color(static_cast<size_t>(g.vertex_count) + 1, -1);
    for (int root = 1; root <= g.vertex_count; ++root) {
        if (color[static_cast<size_t>(root)] != -1)
            continue;
        color[static_cast<size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[static_cast<size_t>(v)]) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    q.push(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return std::nullopt; // odd cycle
                }
            }
        }
    }
    Bipartition bp;
    bp.side_of.resize(static_cast<size_t>(g.vertex_count));
    for (int v = 1; v <= g.vertex_count; ++v)
        bp.side_of[static_cast<size_t>(v) - 1] = color[static_cast<size_t>(v)] == 0 ? Side::A : Side::B;
    return bp;
}

std::vector<std::vector<int>> incidence_matrix(const Graph& g) {
    std::vector<std::vector<int>> b(static_cast<size_t>(g.vertex_count),
                                    std::vector<int>(g.edges.size(), 0));
    for (size_t j = 0; j < g.edges.size(); ++j) {
        b[static_cast<size_t>(g.edges[j].first) - 1][j] = 1;
        b[static_cast<size_t>(g.edges[j].second) - 1][j] = 1;
    }
    return b;
}

Hypergraph Hypergraph::from_edges(int vertex_count, int uniformity,
                                  std::vector<std::vector<int>> edges) {
    if (vertex_count < 1)
        throw std::invalid_argument("hypergraph needs at least one vertex");
    if (uniformity < 2)
        throw std::invalid_argument("uniformity must be at least 2");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("repeated vertex in hyperedge");
        if (static_cast<int>(e.size()) != uniformity)
            throw std::invalid_argument("hyperedge size differs from uniformity " +
                                        std::to_string(uniformity));
        if (e.front() < 1 || e.back() > vertex_count)
            throw std::invalid_argument("hyperedge vertex outside range 1.." +
                                        std::to_string(vertex_count));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Hypergraph h;
    h.vertex_count = vertex_count;
    h.uniformity = uniformity;
    h.edges = std::move(edges);
    return h;
}

std::vector<int> Hypergraph::isolated_vertices() const {
    std::vector<bool> seen(static_cast<size_t>(vertex_count) + 1, false);
    for (const auto& e : edges)
        for (int v : e)
            seen[static_cast<size_t>(v)] = true;
    std::vector<int> iso;
    for (int v = 1; v <= vertex_count; ++v)
        if (!seen[static_cast<size_t>(v)])
            iso.push_back(v);
    return iso;
}

std::vector<std::vector<int>> incidence_matrix(const Hypergraph& h) {
    std::vector<std::vector<int>> b(static_cast<size_t>(h.vertex_count),
                                    std::vector<int>(h.edges.size(), 0));
    for (size_t j = 0; j < h.edges.size(); ++j)
        for (int v : h.edges[j])
            b[static_cast<size_t>(v) - 1][j] = 1;
    return b;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

// Reads the next line that is neither empty nor a '#' comment.
bool next_data_line(std::istream& in, std::string& out, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#')
            continue;
        out = line;
        return true;
    }
    return false;
}

} // namespace

Graph parse_graph(std::istream& in) {
    int line_no = 0;
    std::string line;
    if (!next_data_line(in, line, line_no))
        throw std::runtime_error("empty graph file");
    int d = 0;
    {
        std::istringstream ss(line);
        if (!(ss >> d) || d < 1)
            parse_fail(line_no, "expected positive vertex count");
        std::string extra;
        if (ss >> extra)
            parse_fail(line_no, "unexpected token '" + extra + "' after vertex count");
    }
    std::vector<std::pair<int, int>> edges;
    while (next_data_line(in, line, line_no)) {
        std::istringstream ss(line);
        int a = 0, b = 0;
        if (!(ss >> a >> b))
            parse_fail(line_no, "expected 'i j' edge");
        std::string extra;
        if (ss >> extra)
            parse_fail(line_no, "unexpected token '" + extra + "'");
        if (a < 1 || a > d || b < 1 || b > d)
            parse_fail(line_no, "vertex out of range 1.." + std::to_string(d));
        if (a == b)
            parse_fail(line_no, "loop at vertex " + std::to_string(a));
        edges.emplace_back(a, b);
    }
    return Graph::from_edges(d, std::move(edges));
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

Hypergraph parse_hypergraph(std::istream& in) {
    int line_no = 0;
    std::string line;
    if (!next_data_line(in, line, line_no))
        throw std::runtime_error("empty hypergraph file");
    int d = 0, r = 0;
    {
        std::istringstream ss(line);
        if (!(ss >> d >> r) || d < 1 || r < 2)
            parse_fail(line_no, "expected 'd r' with d >= 1, r >= 2");
    }
    std::vector<std::vector<int>> edges;
    while (next_data_line(in, line, line_no)) {
        std::istringstream ss(line);
        std::vector<int> e;
        int v = 0;
        while (ss >> v) {
            if (v < 1 || v > d)
                parse_fail(line_no, "vertex out of range 1.." + std::to_string(d));
            e.push_back(v);
        }
        if (static_cast<int>(e.size()) != r)
            parse_fail(line_no, "expected " + std::to_string(r) + " vertices per edge");
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(d, r, std::move(edges));
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parse_hypergraph(in);
}

} // namespace ehrgraph
