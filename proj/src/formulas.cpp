#include "starmerge/formulas.hpp"

#include <stdexcept>

namespace starmerge {

namespace {

BigInt ipow(BigInt base, int exp) {
    BigInt out = 1;
    while (exp > 0) {
        if (exp & 1) {
            out *= base;
        }
        base *= base;
        exp >>= 1;
    }
    return out;
}

// Counts colorings into a range of `width` colors: a zero-width range
// admits none, including for zero vertices (0^0 == 0 here). The layer
// counting identities need this convention at their edge terms.
BigInt range_pow(int width, int m) {
    if (width <= 0) {
        return 0;
    }
    return ipow(width, m);
}

}  // namespace

BigInt convolution(std::span<const BigInt> u, std::span<const BigInt> v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("convolution: vectors must have equal length");
    }
    BigInt out = 0;
    std::size_t k = u.size();
    for (std::size_t i = 0; i < k; ++i) {
        out += u[i] * v[k - i - 1];
    }
    return out;
}

const BigInt& ConvolutionArray::at(int i, int j) const {
    if (i < 1 || i > rows || j < 1 || j > cols) {
        throw std::out_of_range("ConvolutionArray: index out of range");
    }
    return entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

ConvolutionArray make_convolution_array(int m, int rows, int cols) {
    if (m < 0 || rows < 0 || cols < 0) {
        throw std::invalid_argument("make_convolution_array: negative parameters");
    }
    ConvolutionArray arr;
    arr.m = m;
    arr.rows = rows;
    arr.cols = cols;
    arr.entries.resize(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i) {
        auto& row = arr.entries[static_cast<std::size_t>(i - 1)];
        row.reserve(static_cast<std::size_t>(cols));
        for (int j = 1; j <= cols; ++j) {
            std::vector<BigInt> u;
            std::vector<BigInt> v;
            u.reserve(static_cast<std::size_t>(j));
            v.reserve(static_cast<std::size_t>(j));
            for (int h = 1; h <= j; ++h) {
                u.push_back(ipow(h, m));
                v.push_back(ipow(i - 1 + h, m));
            }
            row.push_back(convolution(u, v));
        }
    }
    return arr;
}

BigInt antidiagonal_sum(int m, int n) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("antidiagonal_sum: negative parameters");
    }
    BigInt out = 0;
    for (int k = 1; k <= n; ++k) {
        out += ipow(k, m) * ipow(n - k + 1, m + 1);
    }
    return out;
}

BigInt star_chain_count(int m, int n) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("star_chain_count: negative parameters");
    }
    BigInt out = 0;
    for (int k = 1; k <= n + 1; ++k) {
        out += ipow(k, m) * ipow(n - k + 2, m + 1);
    }
    return out;
}

BigInt v1_colorings(int m, int n, int k1) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("v1_colorings: negative parameters");
    }
    if (k1 < 1 || k1 > n + 1) {
        throw std::invalid_argument("v1_colorings: k1 must lie in 1..n+1");
    }
    return range_pow(n + 2 - k1, m) - range_pow(n + 1 - k1, m);
}

BigInt v2_colorings(int m, int k2, int l) {
    if (m < 0) {
        throw std::invalid_argument("v2_colorings: negative m");
    }
    if (l < 0 || l > k2) {
        throw std::invalid_argument("v2_colorings: l must lie in 0..k2");
    }
    if (k2 == l) {
        return 1;
    }
    return range_pow(k2 - l + 1, m) - 2 * range_pow(k2 - l, m) + range_pow(k2 - l - 1, m);
}

BigInt fiber_size(int k1, int l) {
    if (k1 < 1 || l < 0 || l >= k1) {
        throw std::invalid_argument("fiber_size: requires k1 >= 1 and 0 <= l < k1");
    }
    return BigInt(k1) * (l + 1) - BigInt(l + 1) * l / 2;
}

BigInt galois_connection_count(int m, int n) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("galois_connection_count: negative parameters");
    }
    BigInt out = 0;
    for (int k = 1; k <= n + 1; ++k) {
        out += ipow(k, m);
    }
    return out;
}

BigInt fiber_decomposition_total(int m, int n) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("fiber_decomposition_total: negative parameters");
    }
    BigInt total = 0;
    for (int k1 = 1; k1 <= n + 1; ++k1) {
        BigInt inner = 0;
        for (int k2 = 0; k2 <= k1 - 1; ++k2) {
            for (int l = 0; l <= k2; ++l) {
                inner += v2_colorings(m, k2, l) * fiber_size(k1, l);
            }
        }
        total += v1_colorings(m, n, k1) * inner;
    }
    return total;
}

bool verify_fiber_decomposition(int m, int n) {
    return fiber_decomposition_total(m, n) == antidiagonal_sum(m, n + 1);
}

}  // namespace starmerge
