#include "ehrgraph/lattice_count.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace ehrgraph {

namespace {

// Count integer points x with lo_j <= x_j <= hi_j and, for every row r,
// sum_j m[r][j] x_j <= rhs[r]. All matrix entries are nonnegative; lo may
// be negative (dilated reflexive systems).
struct BoxSystem {
    IntMatrix m;
    std::vector<long> lo;
    std::vector<long> hi;
    std::vector<long> rhs;

    int dims() const { return static_cast<int>(lo.size()); }
    int rows() const { return static_cast<int>(m.size()); }
};

long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

// Upper bound for each coordinate: from any row containing it, with every
// other coordinate pushed to its lower bound. Empty ranges are legal and
// mean a zero count.
void tighten_upper_bounds(BoxSystem& s) {
    const int d = s.dims();
    for (int j = 0; j < d; ++j) {
        long best = LONG_MAX;
        for (int r = 0; r < s.rows(); ++r) {
            const int a = s.m[static_cast<size_t>(r)][static_cast<size_t>(j)];
            if (a == 0)
                continue;
            long others = 0;
            for (int i = 0; i < d; ++i)
                if (i != j)
                    others += static_cast<long>(s.m[static_cast<size_t>(r)][static_cast<size_t>(i)]) *
                              s.lo[static_cast<size_t>(i)];
            best = std::min(best, floor_div(s.rhs[static_cast<size_t>(r)] - others, a));
        }
        if (best == LONG_MAX)
            throw std::invalid_argument("coordinate " + std::to_string(j + 1) +
                                        " appears in no constraint row");
        s.hi[static_cast<size_t>(j)] = std::min(s.hi[static_cast<size_t>(j)], best);
    }
}

// Partial row sums stay well inside long: reject pathological inputs up
// front instead of overflowing silently.
void check_sum_bounds(const BoxSystem& s) {
    for (int r = 0; r < s.rows(); ++r) {
        __int128 worst = 0;
        for (int j = 0; j < s.dims(); ++j) {
            long mag = std::max(std::labs(s.lo[static_cast<size_t>(j)]),
                                std::labs(s.hi[static_cast<size_t>(j)]));
            worst += static_cast<__int128>(s.m[static_cast<size_t>(r)][static_cast<size_t>(j)]) * mag;
        }
        if (worst > LONG_MAX / 4)
            throw std::invalid_argument("constraint system too large for exact long partial sums");
    }
}

// suffix_min[r][level] = minimal possible contribution of coordinates
// level..d-1 to row r (each at its lower bound; entries are nonnegative).
std::vector<std::vector<long>> suffix_minima(const BoxSystem& s) {
    const int d = s.dims();
    std::vector<std::vector<long>> sm(static_cast<size_t>(s.rows()),
                                      std::vector<long>(static_cast<size_t>(d) + 1, 0));
    for (int r = 0; r < s.rows(); ++r)
        for (int j = d - 1; j >= 0; --j)
            sm[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                sm[static_cast<size_t>(r)][static_cast<size_t>(j) + 1] +
                static_cast<long>(s.m[static_cast<size_t>(r)][static_cast<size_t>(j)]) *
                    s.lo[static_cast<size_t>(j)];
    return sm;
}

std::vector<std::vector<int>> touching_rows(const BoxSystem& s) {
    std::vector<std::vector<int>> touch(static_cast<size_t>(s.dims()));
    for (int j = 0; j < s.dims(); ++j)
        for (int r = 0; r < s.rows(); ++r)
            if (s.m[static_cast<size_t>(r)][static_cast<size_t>(j)] > 0)
                touch[static_cast<size_t>(j)].push_back(r);
    return touch;
}

bool any_empty_range(const BoxSystem& s) {
    for (int j = 0; j < s.dims(); ++j)
        if (s.hi[static_cast<size_t>(j)] < s.lo[static_cast<size_t>(j)])
            return true;
    return false;
}

// Reference recursion: assign every coordinate, count one point per leaf.
// A branch dies the moment a row cannot be completed within its bound even
// with all remaining coordinates at their lower bounds.
struct SerialCounter {
    const BoxSystem& s;
    std::vector<std::vector<int>> touch;
    std::vector<std::vector<long>> sm;
    std::vector<long> partial;
    Int total = 0;

    explicit SerialCounter(const BoxSystem& sys)
        : s(sys), touch(touching_rows(sys)), sm(suffix_minima(sys)),
          partial(static_cast<size_t>(sys.rows()), 0) {}

    void run() {
        if (any_empty_range(s))
            return;
        descend(0);
    }

    void descend(int level) {
        if (level == s.dims()) {
            ++total;
            return;
        }
        const auto& rows = touch[static_cast<size_t>(level)];
        for (long v = s.lo[static_cast<size_t>(level)]; v <= s.hi[static_cast<size_t>(level)]; ++v) {
            bool feasible = true;
            for (int r : rows) {
                long contrib = static_cast<long>(
                                   s.m[static_cast<size_t>(r)][static_cast<size_t>(level)]) * v;
                if (partial[static_cast<size_t>(r)] + contrib +
                        sm[static_cast<size_t>(r)][static_cast<size_t>(level) + 1] >
                    s.rhs[static_cast<size_t>(r)]) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible)
                break; // larger v only increases every touched row
            for (int r : rows)
                partial[static_cast<size_t>(r)] +=
                    static_cast<long>(s.m[static_cast<size_t>(r)][static_cast<size_t>(level)]) * v;
            descend(level + 1);
            for (int r : rows)
                partial[static_cast<size_t>(r)] -=
                    static_cast<long>(s.m[static_cast<size_t>(r)][static_cast<size_t>(level)]) * v;
        }
    }
};

Int count_serial(const BoxSystem& s) {
    check_sum_bounds(s);
    SerialCounter c(s);
    c.run();
    return c.total;
}

// Production kernel: same pruning, but coordinates are reordered by how
// many rows they touch, the innermost coordinate is counted as a feasible
// range instead of value-by-value, and the leading coordinates fan out
// across OpenMP threads. Per-task subtotals are merged in task order.
struct FastCounter {
    const BoxSystem& s;
    std::vector<std::vector<int>> touch;
    std::vector<std::vector<long>> sm;

    explicit FastCounter(const BoxSystem& sys)
        : s(sys), touch(touching_rows(sys)), sm(suffix_minima(sys)) {}

    // Count the subtree below `level` given partial row sums.
    Int subtree(int level, std::vector<long>& partial) const {
        const int d = s.dims();
        if (level == d - 1) {
            long vmax = s.hi[static_cast<size_t>(level)];
            for (int r : touch[static_cast<size_t>(level)]) {
                const int a = s.m[static_cast<size_t>(r)][static_cast<size_t>(level)];
                vmax = std::min(vmax,
                                floor_div(s.rhs[static_cast<size_t>(r)] - partial[static_cast<size_t>(r)], a));
            }
            long vmin = s.lo[static_cast<size_t>(level)];
            return vmax >= vmin ? Int(vmax - vmin + 1) : Int(0);
        }
        Int total = 0;
        const auto& rows = touch[static_cast<size_t>(level)];
        for (long v = s.lo[static_cast<size_t>(level)]; v <= s.hi[static_cast<size_t>(level)]; ++v) {
            bool feasible = true;
            for (int r : rows) {
                long contrib = static_cast<long>(
                                   s.m[static_cast<size_t>(r)][static_cast<size_t>(level)]) * v;
                if (partial[static_cast<size_t>(r)] + contrib +
                        sm[static_cast<size_t>(r)][static_cast<size_t>(level) + 1] >
                    s.rhs[static_cast<size_t>(r)]) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible)
                break;
            for (int r : rows)
                partial[static_cast<size_t>(r)] +=
                    static_cast<long>(s.m[static_cast<size_t>(r)][static_cast<size_t>(level)]) * v;
            total += subtree(level + 1, partial);
            for (int r : rows)
                partial[static_cast<size_t>(r)] -=
                    static_cast<long>(s.m[static_cast<size_t>(r)][static_cast<size_t>(level)]) * v;
        }
        return total;
    }
};

// Permute coordinates so the most-constrained come first (ties by index).
BoxSystem reorder_by_participation(const BoxSystem& s) {
    const int d = s.dims();
    std::vector<int> order(static_cast<size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> count(static_cast<size_t>(d), 0);
    for (const auto& row : s.m)
        for (int j = 0; j < d; ++j)
            if (row[static_cast<size_t>(j)] > 0)
                ++count[static_cast<size_t>(j)];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return count[static_cast<size_t>(a)] > count[static_cast<size_t>(b)]; });
    BoxSystem out;
    out.m.assign(s.m.size(), std::vector<int>(static_cast<size_t>(d)));
    out.lo.resize(static_cast<size_t>(d));
    out.hi.resize(static_cast<size_t>(d));
    out.rhs = s.rhs;
    for (int j = 0; j < d; ++j) {
        const int src = order[static_cast<size_t>(j)];
        out.lo[static_cast<size_t>(j)] = s.lo[static_cast<size_t>(src)];
        out.hi[static_cast<size_t>(j)] = s.hi[static_cast<size_t>(src)];
        for (size_t r = 0; r < s.m.size(); ++r)
            out.m[r][static_cast<size_t>(j)] = s.m[r][static_cast<size_t>(src)];
    }
    return out;
}

Int count_fast(const BoxSystem& input) {
    check_sum_bounds(input);
    if (any_empty_range(input))
        return 0;
    BoxSystem s = reorder_by_participation(input);
    const int d = s.dims();
    FastCounter counter(s);

    if (d == 1) {
        std::vector<long> partial(static_cast<size_t>(s.rows()), 0);
        return counter.subtree(0, partial);
    }

    // Fan out over the first two coordinates (first only, when d == 2) so
    // there is enough work per thread even at small dilation factors.
    const long range0 = s.hi[0] - s.lo[0] + 1;
    const long range1 = d >= 3 ? s.hi[1] - s.lo[1] + 1 : 1;
    const long tasks = range0 * range1;
    std::vector<Int> subtotals(static_cast<size_t>(tasks));

#pragma omp parallel for schedule(dynamic)
    for (long task = 0; task < tasks; ++task) {
        const long v0 = s.lo[0] + task / range1;
        const long v1 = d >= 3 ? s.lo[1] + task % range1 : 0;
        std::vector<long> partial(static_cast<size_t>(s.rows()), 0);
        bool feasible = true;
        const int seed_levels = d >= 3 ? 2 : 1;
        for (int level = 0; level < seed_levels && feasible; ++level) {
            const long v = level == 0 ? v0 : v1;
            for (int r : counter.touch[static_cast<size_t>(level)]) {
                partial[static_cast<size_t>(r)] +=
                    static_cast<long>(s.m[static_cast<size_t>(r)][static_cast<size_t>(level)]) * v;
                if (partial[static_cast<size_t>(r)] +
                        counter.sm[static_cast<size_t>(r)][static_cast<size_t>(level) + 1] >
                    s.rhs[static_cast<size_t>(r)])
                    feasible = false;
            }
        }
        if (feasible)
            subtotals[static_cast<size_t>(task)] = counter.subtree(seed_levels, partial);
    }

    Int total = 0;
    for (const Int& part : subtotals)
        total += part;
    return total;
}

BoxSystem system_for_polytope(const ConstraintPolytope& p, long t, bool strict) {
    if (t < 0)
        throw std::invalid_argument("dilation factor must be nonnegative");
    BoxSystem s;
    s.m = p.matrix;
    s.lo.assign(static_cast<size_t>(p.dimension), strict ? 1 : 0);
    s.hi.assign(static_cast<size_t>(p.dimension), strict ? t - 1 : t);
    s.rhs.assign(p.matrix.size(), strict ? t - 1 : t);
    tighten_upper_bounds(s);
    return s;
}

BoxSystem system_for_dilated(const DilatedReflexive& q, long t, bool strict) {
    if (t < 0)
        throw std::invalid_argument("dilation factor must be nonnegative");
    BoxSystem s;
    s.m = q.base.matrix;
    const int d = q.base.dimension;
    s.lo.resize(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        const long bound = t * q.rhs_low[static_cast<size_t>(j)];
        s.lo[static_cast<size_t>(j)] = strict ? -bound + 1 : -bound;
    }
    s.hi.assign(static_cast<size_t>(d), LONG_MAX);
    s.rhs.resize(q.base.matrix.size());
    for (size_t r = 0; r < q.base.matrix.size(); ++r) {
        const long bound = t * q.rhs_rows[r];
        s.rhs[r] = strict ? bound - 1 : bound;
    }
    tighten_upper_bounds(s);
    return s;
}

} // namespace

const Int& CountTable::at(long t) const {
    for (const auto& [tt, c] : entries)
        if (tt == t)
            return c;
    throw std::out_of_range("no count for t = " + std::to_string(t));
}

Int count_points(const ConstraintPolytope& p, long t, bool strict) {
    return count_fast(system_for_polytope(p, t, strict));
}

Int count_points_serial(const ConstraintPolytope& p, long t, bool strict) {
    return count_serial(system_for_polytope(p, t, strict));
}

Int count_points_q(const DilatedReflexive& q, long t, bool strict) {
    return count_fast(system_for_dilated(q, t, strict));
}

Int count_points_q_serial(const DilatedReflexive& q, long t, bool strict) {
    return count_serial(system_for_dilated(q, t, strict));
}

Int count_weighted_graphs(const Graph& g, long n) {
    if (n < 0)
        throw std::invalid_argument("weight bound must be nonnegative");
    const auto iso = g.isolated_vertices();
    Int factor = int_pow(n + 1, iso.size());
    if (static_cast<int>(iso.size()) == g.vertex_count)
        return factor; // no edges: the whole box
    if (iso.empty())
        return count_points(from_graph(g), n);

    // Strip isolated vertices, relabel the rest in order.
    std::vector<int> relabel(static_cast<size_t>(g.vertex_count) + 1, 0);
    int next = 0;
    size_t iso_pos = 0;
    for (int v = 1; v <= g.vertex_count; ++v) {
        if (iso_pos < iso.size() && iso[iso_pos] == v) {
            ++iso_pos;
            continue;
        }
        relabel[static_cast<size_t>(v)] = ++next;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges)
        edges.emplace_back(relabel[static_cast<size_t>(a)], relabel[static_cast<size_t>(b)]);
    const Graph sub = Graph::from_edges(next, std::move(edges));
    return factor * count_points(from_graph(sub), n);
}

CountTable count_table(const ConstraintPolytope& p, long t_max, bool strict) {
    if (t_max < 0)
        throw std::invalid_argument("t_max must be nonnegative");
    CountTable table;
    table.polytope = p.name;
    table.kind = strict ? CountKind::interior : CountKind::closed;
    table.entries.reserve(static_cast<size_t>(t_max) + 1);
    for (long t = 0; t <= t_max; ++t)
        table.entries.emplace_back(t, count_points(p, t, strict));
    return table;
}

CountTable count_table_q(const DilatedReflexive& q, long t_max, bool strict) {
    if (t_max < 0)
        throw std::invalid_argument("t_max must be nonnegative");
    CountTable table;
    table.polytope = q.base.name + " dilated";
    table.kind = strict ? CountKind::interior : CountKind::closed;
    table.entries.reserve(static_cast<size_t>(t_max) + 1);
    for (long t = 0; t <= t_max; ++t)
        table.entries.emplace_back(t, count_points_q(q, t, strict));
    return table;
}

} // namespace ehrgraph
