#include "ehrgraph/ehrhart.hpp"

#include <doctest.h>

#include <vector>

using namespace ehrgraph;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

std::vector<Int> closed_counts(const ConstraintPolytope& p, long t_max) {
    std::vector<Int> out;
    for (long t = 0; t <= t_max; ++t)
        out.push_back(count_points(p, t));
    return out;
}

} // namespace

TEST_CASE("h* extraction and inversion round-trip") {
    const auto p = from_graph(linear_graph(5));
    const auto counts = closed_counts(p, 6);
    const HStarVector hs = hstar_from_counts(counts, 5);
    CHECK(hs.h == ints({1, 7, 7, 1, 0, 0}));
    CHECK(hs.sum() == 16);
    CHECK(hs.effective_degree() == 3);
    CHECK(counts_from_hstar(hs, 6) == counts);
    CHECK(count_from_hstar(hs, 6) == 3164);

    CHECK_THROWS_AS(hstar_from_counts(ints({1, 2}), 5), std::invalid_argument);
}

TEST_CASE("standard simplex h* is a delta") {
    // x1 + x2 + x3 <= t with x >= 0: L(t) = C(t+3, 3).
    const auto simplex = ConstraintPolytope::from_matrix({{1, 1, 1}});
    const HStarVector hs = hstar_from_counts(closed_counts(simplex, 3), 3);
    CHECK(hs.h == ints({1, 0, 0, 0}));
    for (long t = 0; t <= 8; ++t)
        CHECK(count_from_hstar(hs, t) == binomial(t + 3, 3));
}

TEST_CASE("Ehrhart series expands back to the counts") {
    const auto p = from_graph(linear_graph(4));
    const auto counts = closed_counts(p, 8);
    const HStarVector hs = hstar_from_counts(closed_counts(p, 4), 4);
    const RationalSeries series = ehrhart_series(hs);
    CHECK(series.num == IntPoly{{1, 3, 1}}); // trimmed numerator, sums to E_4 = 5
    CHECK(series.den == IntPoly{{1, -5, 10, -10, 5, -1}});
    CHECK(series_expand(series, 8) == counts);
}

TEST_CASE("palindrome verdicts") {
    HStarVector path5{ints({1, 7, 7, 1, 0, 0}), 5};
    const auto r1 = palindrome_check(path5, 3);
    CHECK(r1.palindromic);
    CHECK(r1.nonnegative);
    CHECK(r1.effective_degree == 3);
    CHECK(r1.expected_degree == 3); // d - k + 1 = 5 - 3 + 1
    CHECK(r1.degree_matches);
    CHECK_FALSE(r1.expected_clamped);
    CHECK_FALSE(r1.witness_index.has_value());

    // Formal inversion of the 5-cycle counts: not a genuine h*-vector.
    HStarVector c5{ints({1, 5, 6, 0, 1, -1}), 5};
    const auto r2 = palindrome_check(c5, 3);
    CHECK_FALSE(r2.palindromic);
    CHECK_FALSE(r2.nonnegative);
    REQUIRE(r2.witness_index.has_value());
    CHECK(*r2.witness_index == 0); // h_0 = 1 vs h_5 = -1

    // Degree shortfall: vacuously palindromic constant vector.
    HStarVector point{ints({1, 0, 0}), 2};
    const auto r3 = palindrome_check(point, 3);
    CHECK(r3.palindromic);
    CHECK(r3.effective_degree == 0);
    CHECK(r3.expected_degree == 0);
    CHECK(r3.degree_matches);

    const auto r4 = palindrome_check(point, 4); // d - k + 1 = -1 clamps to 0
    CHECK(r4.expected_degree == 0);
    CHECK(r4.expected_clamped);
}

TEST_CASE("6-cycle h* is palindromic of degree d - 2") {
    const auto p = from_graph(cycle_graph(6));
    const HStarVector hs = hstar_from_counts(closed_counts(p, 6), 6);
    CHECK(hs.h == ints({1, 11, 24, 11, 1, 0, 0}));
    const auto r = palindrome_check(hs, 3);
    CHECK(r.palindromic);
    CHECK(r.nonnegative);
    CHECK(r.effective_degree == 4);
    CHECK(r.degree_matches);
}

TEST_CASE("interpolation through the counts") {
    const auto p = from_graph(linear_graph(3));
    const InterpolatedEhrhart f = interpolate_counts(closed_counts(p, 3), 3);
    CHECK(f.leading() == Rat(1, 3)); // volume of the order-3 path polytope
    CHECK(f.eval(7) == Rat(204));    // (t+1)(t+2)(2t+3)/6 at t = 7
    CHECK(f.eval(-1) == Rat(0));
    CHECK(f.eval(-2) == Rat(0));
    CHECK(f.eval(-3) == Rat(-1));
    CHECK(f.eval(-4) == Rat(-5));
}

TEST_CASE("polynomiality verdicts") {
    const auto odd3 = verify_polynomiality(from_graph(cycle_graph(3)));
    CHECK_FALSE(odd3.polynomial);
    CHECK(odd3.witness_t == 4);
    CHECK(odd3.predicted == 41);
    CHECK(odd3.actual == 42);

    const auto odd5 = verify_polynomiality(from_graph(cycle_graph(5)));
    CHECK_FALSE(odd5.polynomial);
    CHECK(odd5.witness_t == 6);
    CHECK(odd5.predicted == 2493);
    CHECK(odd5.actual == 2494);

    CHECK(verify_polynomiality(from_graph(linear_graph(4))).polynomial);
    CHECK(verify_polynomiality(from_graph(cycle_graph(6))).polynomial);
}

TEST_CASE("interior counts replay the closed counts shifted by k") {
    const auto p = from_graph(linear_graph(4));
    CHECK(interior_shift_check(p, 3, 8).pass);

    const auto wrong = interior_shift_check(p, 2, 8);
    CHECK_FALSE(wrong.pass);
    CHECK(wrong.witness_t == 2); // L°(2) = 0 but L(0) = 1
    CHECK(wrong.expected == 1);
    CHECK(wrong.actual == 0);
}

TEST_CASE("reflexive shift certificate") {
    for (int n : {2, 3, 4}) {
        const auto p = from_graph(linear_graph(n));
        const DilatedReflexive q = dilate_reflexive(p, *regularity(p));
        CHECK(reflexive_shift_check(q, 4).pass);
    }
    const auto p = from_graph(linear_graph(2));
    DilatedReflexive bad = dilate_reflexive(p, *regularity(p));
    bad.rhs_rows[0] = 2;
    const auto r = reflexive_shift_check(bad, 3);
    CHECK_FALSE(r.pass);
    CHECK(r.witness_t == 1);
    CHECK(r.expected == 1); // L_Q(0)
    CHECK(r.actual == 3);   // corrupted interior count
}

TEST_CASE("reciprocity via exact interpolation") {
    for (int n : {2, 3, 4, 5})
        CHECK(reciprocity_check(from_graph(linear_graph(n)), 3).pass);
    CHECK(reciprocity_check(from_graph(cycle_graph(6)), 3).pass);
}
