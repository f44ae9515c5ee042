#include "ehrgraph/checks.hpp"
#include "ehrgraph/path_sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace ehrgraph;
using ordered_json = nlohmann::ordered_json;

namespace {

// Graph inputs may carry isolated vertices, which the matrix form cannot
// express; the polytope is built lazily so `--isolated product` can route
// around it.
struct LoadedInstance {
    std::optional<Graph> graph;
    std::optional<ConstraintPolytope> polytope;
    bool hypergraph_mode = false;
    std::string label;
};

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Graph graph_from_token(const std::string& input) {
    if (input.rfind("linear:", 0) == 0)
        return linear_graph(std::stoi(input.substr(7)));
    if (input.rfind("cycle:", 0) == 0)
        return cycle_graph(std::stoi(input.substr(6)));
    return load_graph(input);
}

LoadedInstance load_instance(const std::string& input, const std::string& kind) {
    LoadedInstance inst;
    inst.label = input;
    std::string k = kind;
    if (k == "infer") {
        if (has_suffix(input, ".json"))
            k = "matrix-json";
        else if (has_suffix(input, ".csv"))
            k = "matrix";
        else
            k = "graph";
    }
    if (k == "graph") {
        inst.graph = graph_from_token(input);
    } else if (k == "hypergraph") {
        const Hypergraph h = load_hypergraph(input);
        inst.polytope = from_hypergraph(h);
        inst.hypergraph_mode = true;
    } else if (k == "matrix") {
        inst.polytope = load_matrix_csv(input);
    } else if (k == "matrix-json") {
        inst.polytope = load_matrix_json(input);
    } else {
        throw std::invalid_argument("unknown input kind: " + k);
    }
    return inst;
}

// Forces the matrix form; the isolated-vertex rejection from from_graph
// propagates as an input error.
const ConstraintPolytope& require_polytope(LoadedInstance& inst) {
    if (!inst.polytope)
        inst.polytope = from_graph(*inst.graph);
    return *inst.polytope;
}

void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
    std::vector<size_t> width;
    for (const auto& row : cells)
        for (size_t j = 0; j < row.size(); ++j) {
            if (width.size() <= j)
                width.resize(j + 1, 0);
            width[j] = std::max(width[j], row[j].size());
        }
    for (const auto& row : cells) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j)
                out << "  ";
            out << std::setw(static_cast<int>(width[j])) << row[j];
        }
        out << "\n";
    }
}

std::string volume_literal(const Int& h1, int d) {
    return h1.get_str() + "/" + factorial(d).get_str();
}

struct GlobalOptions {
    std::string format = "text";
    int threads = 0;
    bool timing = false;
};

int cmd_count(LoadedInstance& inst, long t_max, bool strict, const std::string& isolated,
              const GlobalOptions& global) {
    std::vector<Int> closed, interior;
    std::string name;
    if (inst.graph && isolated == "product" && !inst.graph->isolated_vertices().empty()) {
        if (strict)
            throw std::invalid_argument(
                "interior counts need the bounded matrix form; remove isolated vertices");
        const Graph& g = *inst.graph;
        name = "graph(d=" + std::to_string(g.vertex_count) +
               ",m=" + std::to_string(g.edge_count()) + ") with isolated-vertex factor";
        for (long t = 0; t <= t_max; ++t)
            closed.push_back(count_weighted_graphs(g, t));
    } else {
        const ConstraintPolytope& p = require_polytope(inst);
        name = p.name;
        for (long t = 0; t <= t_max; ++t) {
            closed.push_back(count_points(p, t));
            if (strict)
                interior.push_back(count_points(p, t, true));
        }
    }

    if (global.format == "json") {
        ordered_json obj;
        obj["polytope"] = name;
        obj["t_max"] = t_max;
        ordered_json cl = ordered_json::array();
        for (const Int& c : closed)
            cl.push_back(c.get_str());
        obj["closed"] = std::move(cl);
        if (strict) {
            ordered_json in = ordered_json::array();
            for (const Int& c : interior)
                in.push_back(c.get_str());
            obj["interior"] = std::move(in);
        }
        std::cout << obj.dump(2) << "\n";
    } else if (global.format == "csv") {
        std::cout << (strict ? "t,closed,interior\n" : "t,closed\n");
        for (long t = 0; t <= t_max; ++t) {
            std::cout << t << "," << closed[static_cast<size_t>(t)].get_str();
            if (strict)
                std::cout << "," << interior[static_cast<size_t>(t)].get_str();
            std::cout << "\n";
        }
    } else {
        std::cout << "# lattice-point counts, " << name << "\n";
        std::vector<std::vector<std::string>> cells;
        cells.push_back(strict ? std::vector<std::string>{"t", "L(t)", "Linterior(t)"}
                               : std::vector<std::string>{"t", "L(t)"});
        for (long t = 0; t <= t_max; ++t) {
            std::vector<std::string> row{std::to_string(t), closed[static_cast<size_t>(t)].get_str()};
            if (strict)
                row.push_back(interior[static_cast<size_t>(t)].get_str());
            cells.push_back(std::move(row));
        }
        print_aligned(std::cout, cells);
    }
    return 0;
}

int cmd_hstar(LoadedInstance& inst, const std::string& isolated, const GlobalOptions& global) {
    std::string name;
    int d = 0;
    std::optional<long> k;
    bool degree_claim_applies = true; // false when isolated vertices break the degree claim
    std::vector<Int> counts;

    if (inst.graph && isolated == "product" && !inst.graph->isolated_vertices().empty()) {
        const Graph& g = *inst.graph;
        d = g.vertex_count;
        name = "graph(d=" + std::to_string(d) + ",m=" + std::to_string(g.edge_count()) +
               ") with isolated-vertex factor";
        degree_claim_applies = false;
        for (long t = 0; t <= d + 2; ++t)
            counts.push_back(count_weighted_graphs(g, t));
    } else {
        const ConstraintPolytope& p = require_polytope(inst);
        d = p.dimension;
        name = p.name;
        if (auto cert = regularity(p))
            k = cert->k;
        for (long t = 0; t <= d + 2; ++t)
            counts.push_back(count_points(p, t));
    }

    const HStarVector hs = hstar_from_counts(counts, d);
    for (long t = d + 1; t <= d + 2; ++t) {
        const Int predicted = count_from_hstar(hs, t);
        if (predicted != counts[static_cast<size_t>(t)]) {
            std::cerr << "quasi-polynomial detected: the counting function is not a polynomial"
                      << " (predicted L(" << t << ") = " << predicted.get_str() << ", counted "
                      << counts[static_cast<size_t>(t)].get_str()
                      << "); no h*-vector certified\n";
            return 1;
        }
    }

    const PalindromeReport rep = palindrome_check(hs, k ? *k : d + 1);

    if (global.format == "json") {
        ordered_json obj;
        ordered_json hv = ordered_json::array();
        for (const Int& h : hs.h)
            hv.push_back(h.get_str());
        obj["hstar"] = std::move(hv);
        obj["d"] = d;
        if (k)
            obj["k"] = *k;
        else
            obj["k"] = nullptr;
        obj["palindromic"] = rep.palindromic;
        obj["degree"] = rep.effective_degree;
        if (degree_claim_applies && k)
            obj["expected_degree"] = rep.expected_degree;
        else
            obj["expected_degree"] = nullptr;
        obj["h1"] = hs.sum().get_str();
        obj["volume"] = volume_literal(hs.sum(), d);
        if (inst.hypergraph_mode)
            obj["conjectural"] = true;
        std::cout << obj.dump(2) << "\n";
    } else if (global.format == "csv") {
        std::cout << "j,h_j\n";
        for (size_t j = 0; j < hs.h.size(); ++j)
            std::cout << j << "," << hs.h[j].get_str() << "\n";
    } else {
        std::cout << "# h*-vector, " << name << "\n";
        std::cout << "h* = (";
        for (size_t j = 0; j < hs.h.size(); ++j)
            std::cout << (j ? ", " : "") << hs.h[j].get_str();
        std::cout << ")\n";
        std::cout << "palindromic: " << (rep.palindromic ? "yes" : "no") << "\n";
        std::cout << "degree: " << rep.effective_degree;
        if (degree_claim_applies && k)
            std::cout << " (expected d - k + 1 = " << rep.expected_degree << " for k = " << *k
                      << ")";
        std::cout << "\n";
        std::cout << "h(1) = " << hs.sum().get_str() << "\n";
        std::cout << "volume = " << volume_literal(hs.sum(), d) << "\n";
        if (inst.hypergraph_mode)
            std::cout << "note: conjecture (hypergraph mode); the degree claim is only proven"
                         " for graphs\n";
        if (!degree_claim_applies)
            std::cout << "note: isolated vertices present; no degree expectation applies\n";
    }
    return 0;
}

int cmd_tables(const std::string& which, int rows, int cols, std::optional<int> antidiagonal,
               const GlobalOptions& global) {
    if (antidiagonal) {
        if (which != "a205497")
            throw std::invalid_argument("anti-diagonals are defined for a205497 only");
        const std::vector<Int> diag = a205497_antidiagonal(*antidiagonal);
        if (global.format == "json") {
            ordered_json obj;
            obj["table"] = which;
            obj["n"] = *antidiagonal;
            ordered_json arr = ordered_json::array();
            for (const Int& x : diag)
                arr.push_back(x.get_str());
            obj["antidiagonal"] = std::move(arr);
            std::cout << obj.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < diag.size(); ++i)
                std::cout << (i ? ", " : "") << diag[i].get_str();
            std::cout << "\n";
        }
        return 0;
    }

    const SquareMatrix table = which == "a050446" ? a050446_array(rows, cols)
                                                  : a205497_array(rows, cols);
    if (global.format == "json") {
        ordered_json obj;
        obj["table"] = which;
        obj["rows"] = rows;
        obj["cols"] = cols;
        ordered_json data = ordered_json::array();
        for (const auto& row : table) {
            ordered_json r = ordered_json::array();
            for (const Int& x : row)
                r.push_back(x.get_str());
            data.push_back(std::move(r));
        }
        obj["data"] = std::move(data);
        std::cout << obj.dump(2) << "\n";
    } else if (global.format == "csv") {
        for (const auto& row : table) {
            for (size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? "," : "") << row[j].get_str();
            std::cout << "\n";
        }
    } else {
        std::vector<std::vector<std::string>> cells;
        for (const auto& row : table) {
            std::vector<std::string> r;
            r.reserve(row.size());
            for (const Int& x : row)
                r.push_back(x.get_str());
            cells.push_back(std::move(r));
        }
        print_aligned(std::cout, cells);
    }
    return 0;
}

int cmd_check(const std::string& which, const std::string& input, const std::string& kind,
              const SuiteOptions& opt, const GlobalOptions& global) {
    std::vector<CheckReport> reports;
    if (input.empty()) {
        reports = run_random_suite(which, opt);
    } else {
        LoadedInstance inst = load_instance(input, kind);
        const ConstraintPolytope& p = require_polytope(inst);
        reports = run_instance_checks(which, p, inst.label + " " + p.name, inst.hypergraph_mode);
    }
    if (global.format == "json")
        render_json(std::cout, reports, global.timing);
    else if (global.format == "csv")
        render_csv(std::cout, reports, global.timing);
    else
        render_text(std::cout, reports, global.timing);
    for (const CheckReport& r : reports)
        if (!r.pass)
            return 1;
    return 0;
}

int cmd_euler(int n_max, const GlobalOptions& global) {
    const std::vector<Int> e = euler_numbers(n_max);
    std::vector<std::optional<Int>> h1(e.size());
    for (int n = 2; n <= n_max; ++n)
        h1[static_cast<size_t>(n)] = path_hstar(n).sum();

    if (global.format == "json") {
        ordered_json arr = ordered_json::array();
        for (int n = 0; n <= n_max; ++n) {
            ordered_json obj;
            obj["n"] = n;
            obj["euler"] = e[static_cast<size_t>(n)].get_str();
            if (h1[static_cast<size_t>(n)])
                obj["h1"] = h1[static_cast<size_t>(n)]->get_str();
            else
                obj["h1"] = nullptr;
            arr.push_back(std::move(obj));
        }
        std::cout << arr.dump(2) << "\n";
    } else if (global.format == "csv") {
        std::cout << "n,euler,h1\n";
        for (int n = 0; n <= n_max; ++n) {
            std::cout << n << "," << e[static_cast<size_t>(n)].get_str() << ",";
            if (h1[static_cast<size_t>(n)])
                std::cout << h1[static_cast<size_t>(n)]->get_str();
            std::cout << "\n";
        }
    } else {
        std::vector<std::vector<std::string>> cells{{"n", "E_n", "h_n(1)"}};
        for (int n = 0; n <= n_max; ++n)
            cells.push_back({std::to_string(n), e[static_cast<size_t>(n)].get_str(),
                             h1[static_cast<size_t>(n)] ? h1[static_cast<size_t>(n)]->get_str()
                                                        : "-"});
        print_aligned(std::cout, cells);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Ehrhart counts, h*-vectors, and reflexivity certificates"
                 " for graph and regular positive reflexive polytopes"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", global.threads, "OpenMP thread count (0: library default)");
    app.add_flag("--timing", global.timing, "include wall-clock timings in check reports");

    std::string input, kind = "infer", isolated = "reject";
    long t_max = 5;
    const auto kind_check = CLI::IsMember({"infer", "graph", "hypergraph", "matrix", "matrix-json"});

    auto* count = app.add_subcommand("count", "lattice-point count table t = 0..t_max");
    count->add_option("input", input, "edge list, matrix file, linear:N, or cycle:N")->required();
    count->add_option("--t-max", t_max, "largest dilation factor")->capture_default_str();
    bool strict = false;
    count->add_flag("--strict", strict, "also tabulate interior counts");
    count->add_option("--kind", kind, "input kind")->check(kind_check)->capture_default_str();
    count->add_option("--isolated", isolated, "isolated-vertex policy for graphs")
        ->check(CLI::IsMember({"reject", "product"}))
        ->capture_default_str();

    auto* hstar = app.add_subcommand("hstar", "h*-vector with palindromicity report");
    hstar->add_option("input", input, "edge list, matrix file, linear:N, or cycle:N")->required();
    hstar->add_option("--kind", kind, "input kind")->check(kind_check)->capture_default_str();
    hstar->add_option("--isolated", isolated, "isolated-vertex policy for graphs")
        ->check(CLI::IsMember({"reject", "product"}))
        ->capture_default_str();

    std::string table_name;
    int rows = 6, cols = 6;
    std::optional<int> antidiagonal;
    auto* tables = app.add_subcommand("tables", "OEIS array windows (A050446, A205497)");
    tables->add_option("which", table_name, "array name")
        ->required()
        ->check(CLI::IsMember({"a050446", "a205497"}));
    tables->add_option("--rows", rows, "window height")->capture_default_str();
    tables->add_option("--cols", cols, "window width")->capture_default_str();
    tables->add_option("--antidiagonal", antidiagonal,
                       "print the anti-diagonal for this n instead of the window");

    std::string which_check;
    SuiteOptions suite;
    auto* check = app.add_subcommand("check", "run verification suites");
    check->add_option("which", which_check, "check selection")
        ->required()
        ->check(CLI::IsMember({"theorem3", "reciprocity", "reflexive-shift", "palindrome", "all"}));
    check->add_option("input", input, "single instance (omit for the seeded random suite)");
    check->add_option("--kind", kind, "input kind")->check(kind_check)->capture_default_str();
    check->add_option("--seed", suite.seed, "suite seed")->capture_default_str();
    check->add_option("--trials", suite.trials, "number of random instances")
        ->capture_default_str();
    check->add_option("--max-d", suite.max_d, "largest dimension")->capture_default_str();
    check->add_option("--min-d", suite.min_d, "smallest dimension")->capture_default_str();

    int n_max = 8;
    auto* euler = app.add_subcommand("euler", "zigzag numbers with the h_n(1) cross-check");
    euler->add_option("--n-max", n_max, "largest index")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (global.threads > 0)
        omp_set_num_threads(global.threads);

    try {
        if (count->parsed()) {
            LoadedInstance inst = load_instance(input, kind);
            return cmd_count(inst, t_max, strict, isolated, global);
        }
        if (hstar->parsed()) {
            LoadedInstance inst = load_instance(input, kind);
            return cmd_hstar(inst, isolated, global);
        }
        if (tables->parsed())
            return cmd_tables(table_name, rows, cols, antidiagonal, global);
        if (check->parsed())
            return cmd_check(which_check, input, kind, suite, global);
        if (euler->parsed())
            return cmd_euler(n_max, global);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
