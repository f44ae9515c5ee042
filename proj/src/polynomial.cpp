#include "ehrgraph/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace ehrgraph {

namespace {

// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
Int content(const IntPoly& p) {
    Int g = 0;
    for (const Int& c : p.coeff)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly divide_content(const IntPoly& p, const Int& g) {
    IntPoly out;
    out.coeff.reserve(p.coeff.size());
    for (const Int& c : p.coeff)
        out.coeff.push_back(c / g);
    return out;
}

RatPoly to_rat(const IntPoly& p) {
    RatPoly out;
    out.coeff.reserve(p.coeff.size());
    for (const Int& c : p.coeff)
        out.coeff.emplace_back(c);
    return out;
}

// Remainder of a by b over the rationals (b nonzero).
RatPoly rat_mod(RatPoly a, const RatPoly& b) {
    const int db = b.degree();
    const Rat& lead = b.coeff.back();
    while (a.degree() >= db) {
        const int shift = a.degree() - db;
        const Rat q = a.coeff.back() / lead;
        for (int i = 0; i <= db; ++i)
            a.coeff[static_cast<size_t>(i + shift)] -= q * b.coeff[static_cast<size_t>(i)];
        a.coeff.pop_back();
        a.trim();
        if (a.is_zero())
            break;
    }
    return a;
}

// Primitive integer gcd via the rational Euclidean algorithm.
IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    RatPoly x = to_rat(a), y = to_rat(b);
    while (!y.is_zero()) {
        RatPoly r = rat_mod(x, y);
        x = y;
        y = r;
    }
    // Clear denominators, then strip content.
    Int lcm = 1;
    for (const Rat& c : x.coeff)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    IntPoly g;
    g.coeff.reserve(x.coeff.size());
    for (const Rat& c : x.coeff) {
        Rat scaled = c * Rat(lcm);
        g.coeff.push_back(scaled.get_num());
    }
    Int cont = content(g);
    g = divide_content(g, cont);
    if (g.coeff.back() < 0)
        for (Int& c : g.coeff)
            c = -c;
    return g;
}

// Exact division; the divisor is known to divide evenly.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero())
        return a;
    IntPoly rem = a;
    IntPoly q;
    q.coeff.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        Int c = rem.coeff.back() / b.coeff.back();
        q.coeff[static_cast<size_t>(shift)] = c;
        for (int i = 0; i <= b.degree(); ++i)
            rem.coeff[static_cast<size_t>(i + shift)] -= c * b.coeff[static_cast<size_t>(i)];
        rem.trim();
    }
    if (!rem.is_zero())
        throw std::logic_error("polynomial division was not exact");
    q.trim();
    return q;
}

} // namespace

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0)
        p.coeff.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int c, int degree) {
    IntPoly p;
    if (c != 0) {
        p.coeff.assign(static_cast<size_t>(degree) + 1, 0);
        p.coeff.back() = std::move(c);
    }
    return p;
}

Int IntPoly::at(int i) const {
    if (i < 0 || i >= static_cast<int>(coeff.size()))
        return 0;
    return coeff[static_cast<size_t>(i)];
}

Int IntPoly::eval(const Int& x) const {
    Int v = 0;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
        v = v * x + *it;
    return v;
}

void IntPoly::trim() {
    while (!coeff.empty() && coeff.back() == 0)
        coeff.pop_back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    out.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), 0);
    for (size_t i = 0; i < a.coeff.size(); ++i)
        out.coeff[i] += a.coeff[i];
    for (size_t i = 0; i < b.coeff.size(); ++i)
        out.coeff[i] += b.coeff[i];
    out.trim();
    return out;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    out.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), 0);
    for (size_t i = 0; i < a.coeff.size(); ++i)
        out.coeff[i] += a.coeff[i];
    for (size_t i = 0; i < b.coeff.size(); ++i)
        out.coeff[i] -= b.coeff[i];
    out.trim();
    return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        return IntPoly{};
    IntPoly out;
    out.coeff.assign(a.coeff.size() + b.coeff.size() - 1, 0);
    for (size_t i = 0; i < a.coeff.size(); ++i)
        for (size_t j = 0; j < b.coeff.size(); ++j)
            out.coeff[i + j] += a.coeff[i] * b.coeff[j];
    return out;
}

bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeff == b.coeff; }

std::string to_string(const IntPoly& p, const std::string& var) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < p.coeff.size(); ++i) {
        const Int& c = p.coeff[i];
        if (c == 0)
            continue;
        const Int mag = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0)
            out << mag.get_str();
        else {
            if (mag != 1)
                out << mag.get_str() << "*";
            out << var;
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

RationalSeries continued_fraction(const std::vector<IntPoly>& terms) {
    if (terms.empty())
        throw std::invalid_argument("continued fraction needs at least one term");
    // tail = num/den, starting at the innermost term; a + 1/tail has
    // numerator a*num + den over num.
    IntPoly num = terms.back();
    IntPoly den = IntPoly::constant(1);
    for (auto it = std::next(terms.rbegin()); it != terms.rend(); ++it) {
        if (num.is_zero())
            throw std::domain_error("continued fraction tail vanishes");
        IntPoly next_num = *it * num + den;
        den = num;
        num = std::move(next_num);
    }
    // Whole value is 1/tail.
    RationalSeries r{std::move(den), std::move(num)};
    if (r.den.is_zero() || r.den.at(0) == 0)
        throw std::domain_error("continued fraction denominator has zero constant term");
    if (r.num.is_zero())
        return RationalSeries{IntPoly{}, IntPoly::constant(1)};
    IntPoly g = poly_gcd(r.num, r.den);
    if (g.degree() > 0) {
        r.num = divide_exact(r.num, g);
        r.den = divide_exact(r.den, g);
    }
    Int cnum = content(r.num), cden = content(r.den);
    Int c;
    mpz_gcd(c.get_mpz_t(), cnum.get_mpz_t(), cden.get_mpz_t());
    if (c > 1) {
        r.num = divide_content(r.num, c);
        r.den = divide_content(r.den, c);
    }
    if (r.den.at(0) < 0) {
        for (Int& x : r.num.coeff)
            x = -x;
        for (Int& x : r.den.coeff)
            x = -x;
    }
    return r;
}

std::vector<Rat> series_coefficients(const RationalSeries& r, int order) {
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    if (r.den.is_zero() || r.den.at(0) == 0)
        throw std::domain_error("series undefined: denominator constant term is zero");
    const Rat d0(r.den.at(0));
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) {
        Rat acc(r.num.at(j));
        const int top = std::min(j, r.den.degree());
        for (int i = 1; i <= top; ++i)
            acc -= Rat(r.den.at(i)) * c[static_cast<size_t>(j - i)];
        acc /= d0;
        c.push_back(std::move(acc));
    }
    return c;
}

std::vector<Int> series_expand(const RationalSeries& r, int order) {
    const auto rats = series_coefficients(r, order);
    std::vector<Int> out;
    out.reserve(rats.size());
    for (size_t j = 0; j < rats.size(); ++j) {
        if (rats[j].get_den() != 1)
            throw std::domain_error("series coefficient at order " + std::to_string(j) +
                                    " is not an integer: " + rats[j].get_str());
        out.push_back(rats[j].get_num());
    }
    return out;
}

Rat RatPoly::at(int i) const {
    if (i < 0 || i >= static_cast<int>(coeff.size()))
        return Rat(0);
    return coeff[static_cast<size_t>(i)];
}

Rat RatPoly::eval(const Rat& x) const {
    Rat v(0);
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
        v = v * x + *it;
    return v;
}

void RatPoly::trim() {
    while (!coeff.empty() && coeff.back() == 0)
        coeff.pop_back();
}

bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeff == b.coeff; }

RatPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    if (points.empty())
        throw std::invalid_argument("interpolation needs at least one point");
    const size_t n = points.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolation nodes must be distinct");

    // Newton divided differences: table[i] ends as f[x_0, ..., x_i].
    std::vector<Rat> table;
    table.reserve(n);
    for (const auto& [x, y] : points)
        table.push_back(y);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            table[i] = (table[i] - table[i - 1]) /
                       (points[i].first - points[i - level].first);

    // Expand sum_i table[i] * prod_{j<i} (x - x_j).
    RatPoly result;
    RatPoly basis;
    basis.coeff = {Rat(1)};
    for (size_t i = 0; i < n; ++i) {
        if (result.coeff.size() < basis.coeff.size())
            result.coeff.resize(basis.coeff.size(), Rat(0));
        for (size_t j = 0; j < basis.coeff.size(); ++j)
            result.coeff[j] += table[i] * basis.coeff[j];
        if (i + 1 < n) {
            // basis *= (x - x_i); after the shift, coeff[j + 1] still
            // holds the old coefficient j.
            basis.coeff.insert(basis.coeff.begin(), Rat(0));
            for (size_t j = 0; j + 1 < basis.coeff.size(); ++j)
                basis.coeff[j] -= points[i].first * basis.coeff[j + 1];
        }
    }
    result.trim();
    return result;
}

} // namespace ehrgraph
