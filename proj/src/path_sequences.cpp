#include "ehrgraph/path_sequences.hpp"

#include <stdexcept>

namespace ehrgraph {

SquareMatrix transfer_matrix(long t) {
    if (t < 0)
        throw std::invalid_argument("dilation factor must be nonnegative");
    const size_t n = static_cast<size_t>(t) + 1;
    SquareMatrix m(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; i + j < n; ++j)
            m[i][j] = 1;
    return m;
}

Int matrix_total(const SquareMatrix& m) {
    Int s = 0;
    for (const auto& row : m)
        for (const Int& x : row)
            s += x;
    return s;
}

SquareMatrix matrix_multiply(const SquareMatrix& a, const SquareMatrix& b) {
    const size_t n = a.size();
    if (n == 0 || b.size() != a.front().size())
        throw std::invalid_argument("matrix shape mismatch");
    const size_t cols = b.front().size();
    SquareMatrix out(n, std::vector<Int>(cols, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            const Int& aik = a[i][k];
            if (aik == 0)
                continue;
            for (size_t j = 0; j < cols; ++j)
                out[i][j] += aik * b[k][j];
        }
    return out;
}

SquareMatrix identity_matrix(size_t n) {
    SquareMatrix m(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

Int path_count(int n, long t) {
    if (n < 0)
        throw std::invalid_argument("path length must be nonnegative");
    if (t < 0)
        throw std::invalid_argument("dilation factor must be nonnegative");
    if (n == 0)
        return 1;
    const SquareMatrix transfer = transfer_matrix(t);
    SquareMatrix power = identity_matrix(transfer.size());
    for (int i = 1; i < n; ++i)
        power = matrix_multiply(power, transfer);
    return matrix_total(power);
}

std::vector<Int> euler_numbers(int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("n_max must be nonnegative");
    std::vector<Int> e;
    e.reserve(static_cast<size_t>(n_max) + 1);
    e.push_back(1);
    if (n_max >= 1)
        e.push_back(1);
    for (int n = 1; n < n_max; ++n) {
        Int acc = 0;
        for (int k = 0; k <= n; ++k)
            acc += binomial(n, k) * e[static_cast<size_t>(k)] * e[static_cast<size_t>(n - k)];
        if (acc % 2 != 0)
            throw std::logic_error("zigzag convolution is odd at n = " + std::to_string(n));
        e.push_back(acc / 2);
    }
    return e;
}

HStarVector path_hstar(int n) {
    std::vector<Int> counts;
    counts.reserve(static_cast<size_t>(n) + 1);
    for (long t = 0; t <= n; ++t)
        counts.push_back(path_count(n, t));
    return hstar_from_counts(counts, n);
}

Rat path_volume(int n) {
    Rat v(path_hstar(n).sum(), factorial(n));
    v.canonicalize();
    return v;
}

SquareMatrix a050446_array(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("array window must be at least 1x1");
    SquareMatrix m(static_cast<size_t>(rows), std::vector<Int>(static_cast<size_t>(cols)));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m[static_cast<size_t>(r)][static_cast<size_t>(c)] = path_count(r, c);
    return m;
}

SquareMatrix a205497_array(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("array window must be at least 1x1");
    // entry(i, j) draws coefficient i of h_{i+j+2}; precompute each h_n once.
    const int n_max = rows + cols;
    std::vector<HStarVector> hs;
    hs.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        hs.push_back(path_hstar(n));
    SquareMatrix m(static_cast<size_t>(rows), std::vector<Int>(static_cast<size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                hs[static_cast<size_t>(i + j + 2)].h[static_cast<size_t>(i)];
    return m;
}

std::vector<Int> a205497_antidiagonal(int n) {
    if (n < 2)
        throw std::invalid_argument("anti-diagonals start at n = 2");
    const HStarVector hs = path_hstar(n);
    return std::vector<Int>(hs.h.begin(), hs.h.begin() + (n - 1));
}

std::vector<IntPoly> column_cf_terms(int m) {
    if (m < 0)
        throw std::invalid_argument("column index must be nonnegative");
    std::vector<IntPoly> terms;
    terms.reserve(static_cast<size_t>(m) + 2);
    for (int i = 0; i <= m; ++i)
        terms.push_back(IntPoly::monomial(i % 2 == 0 ? -1 : 1, 1));
    terms.push_back(IntPoly::constant(1));
    return terms;
}

} // namespace ehrgraph
