#include "ehrgraph/polynomial.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace ehrgraph;

namespace {

IntPoly poly(std::initializer_list<long> coeffs) {
    IntPoly p;
    p.coeff.assign(coeffs.begin(), coeffs.end());
    p.trim();
    return p;
}

std::vector<Int> ints(std::initializer_list<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

} // namespace

TEST_CASE("integer polynomial arithmetic") {
    const IntPoly a = poly({1, 2});     // 1 + 2z
    const IntPoly b = poly({0, 1, 3});  // z + 3z^2
    CHECK(a + b == poly({1, 3, 3}));
    CHECK(a - a == poly({}));
    CHECK(a * b == poly({0, 1, 5, 6}));
    CHECK((a * IntPoly{}).is_zero());
    CHECK(a.eval(Int(10)) == 21);
    CHECK(poly({}).eval(Int(5)) == 0);
    CHECK(a.at(0) == 1);
    CHECK(a.at(7) == 0);
    CHECK(IntPoly::monomial(Int(0), 3).is_zero());
    CHECK(IntPoly::monomial(Int(2), 3) == poly({0, 0, 0, 2}));
    CHECK(IntPoly::constant(Int(4)).degree() == 0);
    CHECK(poly({}).degree() == -1);
}

TEST_CASE("polynomial rendering") {
    CHECK(to_string(poly({1, -1, -1}), "y") == "1 - y - y^2");
    CHECK(to_string(poly({})) == "0");
    CHECK(to_string(poly({0, 0, 0, 2})) == "2*z^3");
    CHECK(to_string(poly({1, -1})) == "1 - z");
    CHECK(to_string(poly({-1, 0, 1})) == "-1 + z^2");
}

TEST_CASE("continued fractions over polynomial terms") {
    const IntPoly minus_y = IntPoly::monomial(Int(-1), 1);
    const IntPoly plus_y = IntPoly::monomial(Int(1), 1);
    const IntPoly one = IntPoly::constant(Int(1));

    // [-y, 1] = 1/(-y + 1/1) = 1/(1 - y)
    const RationalSeries k0 = continued_fraction({minus_y, one});
    CHECK(k0.num == poly({1}));
    CHECK(k0.den == poly({1, -1}));

    // [-y, y, 1] = (1 + y)/(1 - y - y^2)
    const RationalSeries k1 = continued_fraction({minus_y, plus_y, one});
    CHECK(k1.num == poly({1, 1}));
    CHECK(k1.den == poly({1, -1, -1}));

    // [-y, y, -y, 1] = (1 + y - y^2)/(1 - 2y - y^2 + y^3)
    const RationalSeries k2 = continued_fraction({minus_y, plus_y, minus_y, one});
    CHECK(k2.num == poly({1, 1, -1}));
    CHECK(k2.den == poly({1, -2, -1, 1}));

    CHECK_THROWS_AS(continued_fraction({}), std::invalid_argument);
    CHECK_THROWS_AS(continued_fraction({plus_y}), std::domain_error);
    // [1, -1, 1]: the inner tail -1 + 1/1 vanishes, so 1/tail is undefined.
    CHECK_THROWS_AS(continued_fraction({IntPoly::constant(Int(1)), IntPoly::constant(Int(-1)),
                                        IntPoly::constant(Int(1))}),
                    std::domain_error);
}

TEST_CASE("power series expansion") {
    const RationalSeries geometric{poly({1}), poly({1, -1})};
    CHECK(series_expand(geometric, 5) == ints({1, 1, 1, 1, 1, 1}));

    const RationalSeries halves{poly({1}), poly({2, -2})};
    const auto q = series_coefficients(halves, 3);
    CHECK(q == std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
    CHECK_THROWS_AS(series_expand(halves, 3), std::domain_error);

    // Ehrhart series of the order-5 path polytope.
    const RationalSeries path5{poly({1, 7, 7, 1}), poly({1, -6, 15, -20, 15, -6, 1})};
    CHECK(series_expand(path5, 5) == ints({1, 13, 70, 246, 671, 1547}));

    // Fibonacci from [-y, y, 1].
    const RationalSeries fib{poly({1, 1}), poly({1, -1, -1})};
    CHECK(series_expand(fib, 5) == ints({1, 2, 3, 5, 8, 13}));
}

TEST_CASE("exact interpolation") {
    const std::vector<std::pair<Rat, Rat>> pts{{Rat(0), Rat(1)}, {Rat(1), Rat(3)}, {Rat(2), Rat(6)}};
    const RatPoly f = interpolate(pts); // 1 + (3/2)t + (1/2)t^2
    CHECK(f.coeff == std::vector<Rat>{Rat(1), Rat(3, 2), Rat(1, 2)});
    CHECK(f.eval(Rat(5)) == Rat(21));
    CHECK(f.eval(Rat(-1)) == Rat(0));

    CHECK_THROWS_AS(interpolate({{Rat(1), Rat(1)}, {Rat(1), Rat(2)}}), std::invalid_argument);
    CHECK_THROWS_AS(interpolate({}), std::invalid_argument);
    CHECK(interpolate({{Rat(3), Rat(7)}}).coeff == std::vector<Rat>{Rat(7)});
}
