#pragma once

#include "ehrgraph/lattice_count.hpp"
#include "ehrgraph/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ehrgraph {

// Numerator coefficients of the Ehrhart series:
// sum_{t>=0} L(t) z^t = (h_0 + h_1 z + ... + h_d z^d) / (1-z)^{d+1}.
struct HStarVector {
    std::vector<Int> h; // h_0..h_d
    int d = 0;

    Int sum() const;              // h(1) = d! * vol(P)
    int effective_degree() const; // largest j with h_j != 0
};

bool operator==(const HStarVector& a, const HStarVector& b);

// Signed binomial inversion of the counts L(0..d):
// h_j = sum_{i=0..j} (-1)^i C(d+1, i) L(j-i).
HStarVector hstar_from_counts(const std::vector<Int>& counts, int d);

// Inverse direction: L(t) = sum_j h_j C(t - j + d, d).
Int count_from_hstar(const HStarVector& hs, long t);
std::vector<Int> counts_from_hstar(const HStarVector& hs, long t_max);

// Ehrhart series as a rational function, numerator over (1-z)^{d+1}.
RationalSeries ehrhart_series(const HStarVector& hs);

struct PalindromeReport {
    bool palindromic = false;
    bool nonnegative = false;  // every h_j >= 0
    int effective_degree = 0;
    int expected_degree = 0;   // max(0, d - k + 1)
    bool expected_clamped = false; // d - k + 1 was negative (vacuous case)
    bool degree_matches = false;
    std::optional<int> witness_index; // first j with h_j != h_{deg-j}
};

// Palindromicity of the trimmed h*-vector against the degree d - k + 1
// predicted for a regular system with constant k.
PalindromeReport palindrome_check(const HStarVector& hs, long k);

// Exact rational polynomial through the d+1 counts at t = 0..d.
struct InterpolatedEhrhart {
    RatPoly poly;
    int d = 0;

    Rat eval(long t) const;
    Rat leading() const; // coefficient of t^d, the volume of P
};

InterpolatedEhrhart interpolate_counts(const std::vector<Int>& counts, int d);

// L is a polynomial iff the h*-prediction from L(0..d) extends to
// L(d+1) and L(d+2); odd-cycle graph polytopes fail here with a
// concrete witness.
struct PolynomialityReport {
    bool polynomial = false;
    long witness_t = 0;
    Int predicted = 0;
    Int actual = 0;
};

PolynomialityReport verify_polynomiality(const ConstraintPolytope& p);

struct ShiftReport {
    bool pass = true;
    long witness_t = 0;
    Int expected = 0;
    Int actual = 0;
};

// Interior counts of a regular system with constant k vanish below k and
// then replay the closed counts: L°(t) = 0 for t < k, L°(t) = L(t-k)
// for k <= t <= t_max.
ShiftReport interior_shift_check(const ConstraintPolytope& p, long k, long t_max);

// Reflexivity certificate for the dilated polytope:
// L_{Q°}(t) = L_Q(t-1) for 1 <= t <= t_max.
ShiftReport reflexive_shift_check(const DilatedReflexive& q, long t_max);

// Ehrhart-Macdonald reciprocity: (-1)^d L(-t) equals the interior count
// at t, with L interpolated exactly through t = 0..d.
ShiftReport reciprocity_check(const ConstraintPolytope& p, long t_max);

} // namespace ehrgraph
