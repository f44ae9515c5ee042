#pragma once

#include "ehrgraph/numbers.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ehrgraph {

// Integer-coefficient polynomial, coefficients ascending by degree.
// Trailing zeros are trimmed; the zero polynomial is the empty list.
struct IntPoly {
    std::vector<Int> coeff;

    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, int degree);

    bool is_zero() const { return coeff.empty(); }
    int degree() const { return static_cast<int>(coeff.size()) - 1; } // -1 for zero
    Int at(int i) const; // 0 outside the stored range
    Int eval(const Int& x) const;
    void trim();
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
bool operator==(const IntPoly& a, const IntPoly& b);

// "1 - y - y^2" style rendering, ascending terms.
std::string to_string(const IntPoly& p, const std::string& var = "z");

// num/den as a formal power series; den must have nonzero constant term
// for the expansion to exist.
struct RationalSeries {
    IntPoly num;
    IntPoly den;
};

// [a_0, ..., a_r] = 1/(a_0 + 1/(a_1 + ... + 1/a_r)), evaluated bottom-up
// with exact polynomial arithmetic. The result is reduced (common
// polynomial factor removed, content 1, positive denominator constant
// term). Throws std::domain_error if a tail vanishes or the final
// denominator has zero constant term.
RationalSeries continued_fraction(const std::vector<IntPoly>& terms);

// First order+1 power-series coefficients of num/den, exact rationals.
std::vector<Rat> series_coefficients(const RationalSeries& r, int order);

// Same, as integers; throws std::domain_error naming the first
// non-integer coefficient.
std::vector<Int> series_expand(const RationalSeries& r, int order);

// Rational-coefficient polynomial, ascending; canonicalized on demand.
struct RatPoly {
    std::vector<Rat> coeff;

    bool is_zero() const { return coeff.empty(); }
    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    Rat at(int i) const;
    Rat eval(const Rat& x) const;
    void trim();
};

bool operator==(const RatPoly& a, const RatPoly& b);

// Unique polynomial of degree < points.size() through the given points
// (Newton divided differences, exact). Abscissae must be distinct.
RatPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

} // namespace ehrgraph
