#pragma once

#include "ehrgraph/graph.hpp"
#include "ehrgraph/numbers.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ehrgraph {

using IntMatrix = std::vector<std::vector<int>>;

// Positive reflexive polytope {x >= 0, Mx <= u} with M a nonnegative
// integer matrix and u the all-ones vector. Bounded because no column of
// M is all-zero.
struct ConstraintPolytope {
    IntMatrix matrix; // m x d
    int dimension = 0;
    std::string name;

    int rows() const { return static_cast<int>(matrix.size()); }

    // Validates nonnegativity, rectangular shape, m,d >= 1, no zero column.
    static ConstraintPolytope from_matrix(IntMatrix m, std::string name = "");
};

// Present when every row of M has the same sum s; then k = s + 1 >= 2.
struct RegularityCertificate {
    long row_sum = 0;
    long k = 0;
};

std::optional<RegularityCertificate> regularity(const ConstraintPolytope& p);

// M = B(g)^t: one constraint x_i + x_j <= 1 per edge. Rejects graphs with
// isolated vertices (their coordinates would be unbounded in matrix form).
ConstraintPolytope from_graph(const Graph& g);
ConstraintPolytope from_hypergraph(const Hypergraph& h);

// Q = kP - u = {y : My <= rhs_rows, -y_i <= rhs_low_i}. Both right-hand
// sides are all-ones by construction; they are stored explicitly so a test
// can corrupt one entry and watch the reflexivity certificate fail.
struct DilatedReflexive {
    ConstraintPolytope base;
    long k = 0;
    std::vector<long> rhs_rows;
    std::vector<long> rhs_low;
};

DilatedReflexive dilate_reflexive(const ConstraintPolytope& p,
                                  const RegularityCertificate& cert);

// x in tP (strict: x in tP°). t = 0 leaves only the origin.
bool membership(const ConstraintPolytope& p, const std::vector<Int>& x, long t,
                bool strict = false);
bool membership(const ConstraintPolytope& p, const std::vector<Rat>& x, const Rat& t,
                bool strict = false);

// y in tQ (strict: y in tQ°), against the stored right-hand sides.
bool membership(const DilatedReflexive& q, const std::vector<Rat>& y, const Rat& t,
                bool strict = false);

// CSV matrix input: one constraint row of nonnegative integers per line.
ConstraintPolytope parse_matrix_csv(std::istream& in);
ConstraintPolytope load_matrix_csv(const std::string& path);

// JSON alternative: {"rows": m, "cols": d, "data": [[...]]}.
ConstraintPolytope parse_matrix_json(std::istream& in);
ConstraintPolytope load_matrix_json(const std::string& path);

} // namespace ehrgraph
