#pragma once

#include "ehrgraph/polytope.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ehrgraph {

enum class CountKind { closed, interior };

struct CountTable {
    std::string polytope;
    CountKind kind = CountKind::closed;
    std::vector<std::pair<long, Int>> entries; // (t, count), ascending t

    const Int& at(long t) const;
};

// |tP ∩ Z^d| (strict: |tP° ∩ Z^d|). Depth-first search over the integer
// box with exact row-sum pruning; coordinates reordered by constraint
// participation and fanned out across OpenMP threads. Ordering and thread
// count never change the result.
Int count_points(const ConstraintPolytope& p, long t, bool strict = false);

// Single-threaded reference: plain depth-first assignment in natural
// coordinate order, one lattice point per leaf. Kept for testing the
// parallel kernel against; use count_points() everywhere else.
Int count_points_serial(const ConstraintPolytope& p, long t, bool strict = false);

// |tQ ∩ Z^d| for the dilated reflexive polytope (strict: interior),
// evaluated against Q's stored right-hand sides.
Int count_points_q(const DilatedReflexive& q, long t, bool strict = false);
Int count_points_q_serial(const DilatedReflexive& q, long t, bool strict = false);

// W(n;G): weighted-graph count. Equals count_points(from_graph(g), n) for
// graphs without isolated vertices; each isolated vertex contributes a
// free factor (n+1).
Int count_weighted_graphs(const Graph& g, long n);

CountTable count_table(const ConstraintPolytope& p, long t_max, bool strict = false);
CountTable count_table_q(const DilatedReflexive& q, long t_max, bool strict = false);

} // namespace ehrgraph
