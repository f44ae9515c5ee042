#include "ehrgraph/polytope.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ehrgraph {

ConstraintPolytope ConstraintPolytope::from_matrix(IntMatrix m, std::string name) {
    if (m.empty() || m.front().empty())
        throw std::invalid_argument("constraint matrix must have at least one row and column");
    const size_t d = m.front().size();
    for (const auto& row : m) {
        if (row.size() != d)
            throw std::invalid_argument("ragged constraint matrix");
        for (int a : row)
            if (a < 0)
                throw std::invalid_argument("constraint matrix entries must be nonnegative");
    }
    for (size_t j = 0; j < d; ++j) {
        bool bounded = false;
        for (const auto& row : m)
            if (row[j] > 0)
                bounded = true;
        if (!bounded)
            throw std::invalid_argument("column " + std::to_string(j + 1) +
                                        " is all-zero; coordinate unbounded");
    }
    ConstraintPolytope p;
    p.matrix = std::move(m);
    p.dimension = static_cast<int>(d);
    p.name = std::move(name);
    return p;
}

std::optional<RegularityCertificate> regularity(const ConstraintPolytope& p) {
    long s = 0;
    for (int a : p.matrix.front())
        s += a;
    for (const auto& row : p.matrix) {
        long rs = 0;
        for (int a : row)
            rs += a;
        if (rs != s)
            return std::nullopt;
    }
    return RegularityCertificate{s, s + 1};
}

ConstraintPolytope from_graph(const Graph& g) {
    auto iso = g.isolated_vertices();
    if (!iso.empty())
        throw std::invalid_argument("vertex " + std::to_string(iso.front()) +
                                    " is isolated; its coordinate is unbounded in matrix form"
                                    " (count it with the (t+1) product rule instead)");
    IntMatrix m(g.edges.size(), std::vector<int>(static_cast<size_t>(g.vertex_count), 0));
    for (size_t e = 0; e < g.edges.size(); ++e) {
        m[e][static_cast<size_t>(g.edges[e].first) - 1] = 1;
        m[e][static_cast<size_t>(g.edges[e].second) - 1] = 1;
    }
    return ConstraintPolytope::from_matrix(std::move(m), "graph(d=" + std::to_string(g.vertex_count) +
                                                             ",m=" + std::to_string(g.edge_count()) + ")");
}

ConstraintPolytope from_hypergraph(const Hypergraph& h) {
    auto iso = h.isolated_vertices();
    if (!iso.empty())
        throw std::invalid_argument("vertex " + std::to_string(iso.front()) +
                                    " is isolated; its coordinate is unbounded in matrix form");
    IntMatrix m(h.edges.size(), std::vector<int>(static_cast<size_t>(h.vertex_count), 0));
    for (size_t e = 0; e < h.edges.size(); ++e)
        for (int v : h.edges[e])
            m[e][static_cast<size_t>(v) - 1] = 1;
    return ConstraintPolytope::from_matrix(std::move(m),
                                           "hypergraph(d=" + std::to_string(h.vertex_count) +
                                               ",r=" + std::to_string(h.uniformity) +
                                               ",m=" + std::to_string(h.edge_count()) + ")");
}

DilatedReflexive dilate_reflexive(const ConstraintPolytope& p,
                                  const RegularityCertificate& cert) {
    auto check = regularity(p);
    if (!check || check->k != cert.k || check->row_sum != cert.row_sum)
        throw std::invalid_argument("regularity certificate does not match polytope");
    DilatedReflexive q;
    q.base = p;
    q.k = cert.k;
    q.rhs_rows.assign(p.matrix.size(), 1);
    q.rhs_low.assign(static_cast<size_t>(p.dimension), 1);
    return q;
}

bool membership(const ConstraintPolytope& p, const std::vector<Int>& x, long t, bool strict) {
    if (static_cast<int>(x.size()) != p.dimension)
        throw std::invalid_argument("point dimension mismatch");
    for (const Int& xi : x) {
        if (strict ? xi <= 0 : xi < 0)
            return false;
    }
    for (const auto& row : p.matrix) {
        Int s = 0;
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0)
                s += row[j] * x[j];
        if (strict ? s >= t : s > t)
            return false;
    }
    return true;
}

bool membership(const ConstraintPolytope& p, const std::vector<Rat>& x, const Rat& t, bool strict) {
    if (static_cast<int>(x.size()) != p.dimension)
        throw std::invalid_argument("point dimension mismatch");
    for (const Rat& xi : x) {
        if (strict ? xi <= 0 : xi < 0)
            return false;
    }
    for (const auto& row : p.matrix) {
        Rat s = 0;
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0)
                s += row[j] * x[j];
        if (strict ? s >= t : s > t)
            return false;
    }
    return true;
}

bool membership(const DilatedReflexive& q, const std::vector<Rat>& y, const Rat& t, bool strict) {
    if (static_cast<int>(y.size()) != q.base.dimension)
        throw std::invalid_argument("point dimension mismatch");
    for (size_t i = 0; i < y.size(); ++i) {
        Rat bound = t * q.rhs_low[i];
        if (strict ? -y[i] >= bound : -y[i] > bound)
            return false;
    }
    for (size_t r = 0; r < q.base.matrix.size(); ++r) {
        Rat s = 0;
        const auto& row = q.base.matrix[r];
        for (size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0)
                s += row[j] * y[j];
        Rat bound = t * q.rhs_rows[r];
        if (strict ? s >= bound : s > bound)
            return false;
    }
    return true;
}

ConstraintPolytope parse_matrix_csv(std::istream& in) {
    IntMatrix m;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#')
            continue;
        std::vector<int> row;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stoi(cell));
            } catch (const std::exception&) {
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": bad integer '" + cell + "'");
            }
        }
        if (row.empty())
            throw std::runtime_error("line " + std::to_string(line_no) + ": empty row");
        m.push_back(std::move(row));
    }
    return ConstraintPolytope::from_matrix(std::move(m), "matrix");
}

ConstraintPolytope load_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parse_matrix_csv(in);
}

ConstraintPolytope parse_matrix_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    IntMatrix m = j.at("data").get<IntMatrix>();
    if (static_cast<int>(m.size()) != rows)
        throw std::runtime_error("matrix JSON: 'rows' does not match data");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != cols)
            throw std::runtime_error("matrix JSON: 'cols' does not match data");
    return ConstraintPolytope::from_matrix(std::move(m), "matrix");
}

ConstraintPolytope load_matrix_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parse_matrix_json(in);
}

} // namespace ehrgraph
