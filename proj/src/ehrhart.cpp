#include "ehrgraph/ehrhart.hpp"

#include <stdexcept>

namespace ehrgraph {

Int HStarVector::sum() const {
    Int s = 0;
    for (const Int& x : h)
        s += x;
    return s;
}

int HStarVector::effective_degree() const {
    for (int j = static_cast<int>(h.size()) - 1; j >= 0; --j)
        if (h[static_cast<size_t>(j)] != 0)
            return j;
    return 0;
}

bool operator==(const HStarVector& a, const HStarVector& b) {
    return a.d == b.d && a.h == b.h;
}

HStarVector hstar_from_counts(const std::vector<Int>& counts, int d) {
    if (d < 0)
        throw std::invalid_argument("dimension must be nonnegative");
    if (static_cast<int>(counts.size()) < d + 1)
        throw std::invalid_argument("need counts L(0..d) for the h* inversion");
    HStarVector hs;
    hs.d = d;
    hs.h.resize(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        Int acc = 0;
        for (int i = 0; i <= j; ++i) {
            const Int term = binomial(d + 1, i) * counts[static_cast<size_t>(j - i)];
            if (i % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        hs.h[static_cast<size_t>(j)] = acc;
    }
    return hs;
}

Int count_from_hstar(const HStarVector& hs, long t) {
    Int acc = 0;
    for (int j = 0; j <= hs.d; ++j)
        acc += hs.h[static_cast<size_t>(j)] * binomial(t - j + hs.d, hs.d);
    return acc;
}

std::vector<Int> counts_from_hstar(const HStarVector& hs, long t_max) {
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(t_max) + 1);
    for (long t = 0; t <= t_max; ++t)
        out.push_back(count_from_hstar(hs, t));
    return out;
}

RationalSeries ehrhart_series(const HStarVector& hs) {
    IntPoly num;
    num.coeff = hs.h;
    num.trim();
    // (1-z)^{d+1}
    IntPoly den;
    den.coeff.resize(static_cast<size_t>(hs.d) + 2);
    for (int i = 0; i <= hs.d + 1; ++i) {
        Int c = binomial(hs.d + 1, i);
        den.coeff[static_cast<size_t>(i)] = (i % 2 == 0) ? c : -c;
    }
    return RationalSeries{std::move(num), std::move(den)};
}

PalindromeReport palindrome_check(const HStarVector& hs, long k) {
    PalindromeReport r;
    r.effective_degree = hs.effective_degree();
    const long raw = static_cast<long>(hs.d) - k + 1;
    r.expected_clamped = raw < 0;
    r.expected_degree = static_cast<int>(raw < 0 ? 0 : raw);
    r.degree_matches = r.effective_degree == r.expected_degree;
    r.nonnegative = true;
    for (const Int& x : hs.h)
        if (x < 0)
            r.nonnegative = false;
    r.palindromic = true;
    const int e = r.effective_degree;
    for (int j = 0; 2 * j <= e; ++j)
        if (hs.h[static_cast<size_t>(j)] != hs.h[static_cast<size_t>(e - j)]) {
            r.palindromic = false;
            r.witness_index = j;
            break;
        }
    return r;
}

Rat InterpolatedEhrhart::eval(long t) const { return poly.eval(Rat(t)); }

Rat InterpolatedEhrhart::leading() const { return poly.at(d); }

InterpolatedEhrhart interpolate_counts(const std::vector<Int>& counts, int d) {
    if (static_cast<int>(counts.size()) < d + 1)
        throw std::invalid_argument("need counts L(0..d) to interpolate");
    std::vector<std::pair<Rat, Rat>> points;
    points.reserve(static_cast<size_t>(d) + 1);
    for (int t = 0; t <= d; ++t)
        points.emplace_back(Rat(t), Rat(counts[static_cast<size_t>(t)]));
    InterpolatedEhrhart ie;
    ie.poly = interpolate(points);
    ie.d = d;
    return ie;
}

PolynomialityReport verify_polynomiality(const ConstraintPolytope& p) {
    const int d = p.dimension;
    std::vector<Int> counts;
    counts.reserve(static_cast<size_t>(d) + 3);
    for (long t = 0; t <= d + 2; ++t)
        counts.push_back(count_points(p, t));
    const HStarVector hs = hstar_from_counts(counts, d);
    PolynomialityReport r;
    r.polynomial = true;
    for (long t = d + 1; t <= d + 2; ++t) {
        Int predicted = count_from_hstar(hs, t);
        if (predicted != counts[static_cast<size_t>(t)]) {
            r.polynomial = false;
            r.witness_t = t;
            r.predicted = predicted;
            r.actual = counts[static_cast<size_t>(t)];
            break;
        }
    }
    return r;
}

ShiftReport interior_shift_check(const ConstraintPolytope& p, long k, long t_max) {
    ShiftReport r;
    for (long t = 0; t <= t_max; ++t) {
        const Int interior = count_points(p, t, true);
        const Int expected = t < k ? Int(0) : count_points(p, t - k);
        if (interior != expected) {
            r.pass = false;
            r.witness_t = t;
            r.expected = expected;
            r.actual = interior;
            return r;
        }
    }
    return r;
}

ShiftReport reflexive_shift_check(const DilatedReflexive& q, long t_max) {
    ShiftReport r;
    for (long t = 1; t <= t_max; ++t) {
        const Int interior = count_points_q(q, t, true);
        const Int expected = count_points_q(q, t - 1);
        if (interior != expected) {
            r.pass = false;
            r.witness_t = t;
            r.expected = expected;
            r.actual = interior;
            return r;
        }
    }
    return r;
}

ShiftReport reciprocity_check(const ConstraintPolytope& p, long t_max) {
    const int d = p.dimension;
    std::vector<Int> counts;
    counts.reserve(static_cast<size_t>(d) + 1);
    for (long t = 0; t <= d; ++t)
        counts.push_back(count_points(p, t));
    const InterpolatedEhrhart ie = interpolate_counts(counts, d);
    ShiftReport r;
    for (long t = 1; t <= t_max; ++t) {
        Rat value = ie.eval(-t);
        if (d % 2 != 0)
            value = -value;
        const Int interior = count_points(p, t, true);
        if (value.get_den() != 1 || value.get_num() != interior) {
            r.pass = false;
            r.witness_t = t;
            r.expected = interior;
            r.actual = value.get_den() == 1 ? Int(value.get_num()) : Int(0);
            return r;
        }
    }
    return r;
}

} // namespace ehrgraph
