#pragma once

#include "ehrgraph/ehrhart.hpp"
#include "ehrgraph/polynomial.hpp"

#include <vector>

namespace ehrgraph {

using SquareMatrix = std::vector<std::vector<Int>>;

// (t+1) x (t+1) 0/1 matrix with entry(i, j) = 1 iff i + j <= t
// (indices 0..t). Symmetric, (t+1)(t+2)/2 ones.
SquareMatrix transfer_matrix(long t);

// Sum of all entries.
Int matrix_total(const SquareMatrix& m);

SquareMatrix matrix_multiply(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix identity_matrix(size_t n);

// Ehrhart value of the n-vertex path polytope via the transfer matrix:
// L_{P_n}(t) = s(T_t^{n-1}), with T^0 = I. n = 0 gives 1 (empty product
// of coordinates), n = 1 gives t + 1. Agrees with count_points on
// linear_graph(n); that agreement is the contract pinning the matrix
// size, threshold, and exponent conventions.
Int path_count(int n, long t);

// Zigzag numbers E_0..E_{n_max} (OEIS A000111): 1, 1, 1, 2, 5, 16, 61,
// 272, ... from E_0 = E_1 = 1 and 2 E_{n+1} = sum_k C(n,k) E_k E_{n-k}.
std::vector<Int> euler_numbers(int n_max);

// h*-vector of the n-vertex path polytope, computed from transfer-matrix
// counts at t = 0..n. h(1) = E_n.
HStarVector path_hstar(int n);

// Volume of the n-vertex path polytope, h(1)/n! = E_n/n!.
Rat path_volume(int n);

// OEIS A050446 window: entry(r, c) = path_count(n = r, t = c) for
// r = 0..rows-1, c = 0..cols-1. Row r = 5 reads 1, 13, 70, 246, 671,
// 1547; column c = 1 is the Fibonacci sequence.
SquareMatrix a050446_array(int rows, int cols);

// OEIS A205497 window: entry(i, j) = h_{i+j+2}[i], so the anti-diagonal
// i + j = n - 2 spells out the h*-coefficients of the n-vertex path
// polytope. Symmetric.
SquareMatrix a205497_array(int rows, int cols);

// The anti-diagonal for a given n >= 2: coefficients h_n[0..n-2].
std::vector<Int> a205497_antidiagonal(int n);

// Continued-fraction terms for the column generating function
// k_m(y) = sum_{n>=0} L_{P_n}(m) y^n: m+1 alternating terms
// -y, +y, -y, ... followed by the constant 1.
std::vector<IntPoly> column_cf_terms(int m);

} // namespace ehrgraph
