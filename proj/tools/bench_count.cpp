#include "ehrgraph/lattice_count.hpp"
#include "ehrgraph/random_graphs.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdio>
#include <string>
#include <vector>

using namespace ehrgraph;

namespace {

struct Case {
    std::string name;
    ConstraintPolytope polytope;
    long t;
};

double time_once(const ConstraintPolytope& p, long t, bool serial, Int& out) {
    const double start = omp_get_wtime();
    out = serial ? count_points_serial(p, t) : count_points(p, t);
    return (omp_get_wtime() - start) * 1e3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial reference vs parallel kernel, identical counts required"};
    int threads = 0;
    int repeats = 3;
    app.add_option("--threads", threads, "OpenMP thread count (0: library default)");
    app.add_option("--repeats", repeats, "timed repetitions per case (best is reported)");
    CLI11_PARSE(app, argc, argv);
    if (threads > 0)
        omp_set_num_threads(threads);

    SplitMix64 rng(7);
    std::vector<Case> cases;
    cases.push_back({"linear:9 t=10", from_graph(linear_graph(9)), 10});
    cases.push_back({"cycle:10 t=8", from_graph(cycle_graph(10)), 8});
    cases.push_back({"complete-bipartite 5x5 t=6", from_graph(complete_bipartite(5, 5)), 6});
    cases.push_back({"random bipartite d=9 seed=7 t=7",
                     from_graph(random_connected_bipartite(9, rng)), 7});

    std::printf("%-32s %14s %12s %12s %8s\n", "case", "count", "serial ms", "parallel ms",
                "speedup");
    for (const Case& c : cases) {
        Int serial_count = 0, parallel_count = 0;
        double best_serial = 0, best_parallel = 0;
        for (int r = 0; r < repeats; ++r) {
            const double ms_s = time_once(c.polytope, c.t, true, serial_count);
            const double ms_p = time_once(c.polytope, c.t, false, parallel_count);
            if (r == 0 || ms_s < best_serial)
                best_serial = ms_s;
            if (r == 0 || ms_p < best_parallel)
                best_parallel = ms_p;
        }
        if (serial_count != parallel_count) {
            std::fprintf(stderr, "MISMATCH on %s: serial %s, parallel %s\n", c.name.c_str(),
                         serial_count.get_str().c_str(), parallel_count.get_str().c_str());
            return 1;
        }
        std::printf("%-32s %14s %12.1f %12.1f %7.2fx\n", c.name.c_str(),
                    serial_count.get_str().c_str(), best_serial, best_parallel,
                    best_serial / best_parallel);
    }
    return 0;
}
