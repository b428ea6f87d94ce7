#pragma once

#include <span>
#include <vector>

#include "starmerge/bigint.hpp"

namespace starmerge {

/// u * v = sum of u_i * v_(k-i+1); both vectors must share one length.
BigInt convolution(std::span<const BigInt> u, std::span<const BigInt> v);

/// Rectangular array with entries a_(i,j) = sum over k = 1..j of
/// (k * (i + j - k))^m, the convolution of h -> h^m against
/// h -> (i - 1 + h)^m. Indices are 1-based.
struct ConvolutionArray {
    int m = 0;
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<BigInt>> entries;

    const BigInt& at(int i, int j) const;  // 1-based
};

ConvolutionArray make_convolution_array(int m, int rows, int cols);

/// Sum of the n-th antidiagonal of the convolution array:
/// sum over k = 1..n of k^m * (n - k + 1)^(m + 1).
BigInt antidiagonal_sum(int m, int n);

/// Number of proper mergings of an m-star and an n-chain:
/// sum over k = 1..n+1 of k^m * (n - k + 2)^(m + 1). Equals
/// antidiagonal_sum(m, n + 1).
BigInt star_chain_count(int m, int n);

/// Monotone colorings of the first K_{m,m} layer whose maximum color is
/// exactly n + 2 - k1: (n + 2 - k1)^m - (n + 1 - k1)^m.
BigInt v1_colorings(int m, int n, int k1);

/// Monotone colorings of the second layer with colors spanning exactly
/// [n + 1 - k2, n + 1 - l]: 1 when k2 = l, otherwise
/// (k2 - l + 1)^m - 2 (k2 - l)^m + (k2 - l - 1)^m.
BigInt v2_colorings(int m, int k2, int l);

/// Elements of the eta fiber over a merging in class (k1, *, l):
/// k1 (l + 1) - (l + 1) l / 2.
BigInt fiber_size(int k1, int l);

/// Galois connections between the (n+1)-chain and the m-balloon:
/// sum over k = 1..n+1 of k^m.
BigInt galois_connection_count(int m, int n);

/// The fiber decomposition evaluated as written: sum over k1, k2, l of
/// v1_colorings * v2_colorings * fiber_size.
BigInt fiber_decomposition_total(int m, int n);

/// fiber_decomposition_total(m, n) == antidiagonal_sum(m, n + 1).
bool verify_fiber_decomposition(int m, int n);

}  // namespace starmerge
