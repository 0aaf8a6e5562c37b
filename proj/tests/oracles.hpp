#ifndef PRETZEL_TESTS_ORACLES_HPP
#define PRETZEL_TESTS_ORACLES_HPP

// Independent reference computations for the test suite.  Everything here is
// deliberately naive: cofactor determinants, adjugate inverses, minor-gcd
// invariant factors, and a raw embedding enumeration without any symmetry
// breaking.  They share only the matrix containers with the library.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "pretzel/int_matrix.hpp"
#include "pretzel/lattice_embedding.hpp"
#include "pretzel/numeric.hpp"
#include "pretzel/rational_matrix.hpp"

namespace oracles {

using pretzel::Int;
using pretzel::IntMatrix;
using pretzel::Rat;
using pretzel::RationalMatrix;

// Cofactor-expansion determinant, O(n!).
inline Int det_cofactor(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Int term = m.at(0, j) * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// Adjugate-over-determinant inverse.
inline RationalMatrix inverse_adjugate(const IntMatrix& m) {
    const std::size_t n = m.rows();
    Int det = det_cofactor(m);
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            std::size_t rr = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue; // adjugate = transpose of cofactors
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc++) = m.at(r, c);
                }
                ++rr;
            }
            Int cof = det_cofactor(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(i, j) = pretzel::make_rat(cof, det);
        }
    return inv;
}

// Invariant factors via gcds of k x k minors: d_1...d_k = gcd of all k-minors.
inline std::vector<Int> invariant_factors_minor_gcd(const IntMatrix& m) {
    using boost::multiprecision::gcd;
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t k_max = std::min(rows, cols);
    std::vector<Int> products(k_max + 1, Int(0));
    products[0] = 1;

    std::vector<std::size_t> rsel, csel;
    for (std::size_t k = 1; k <= k_max; ++k) {
        Int g(0);
        std::vector<std::size_t> ridx(k), cidx(k);
        // enumerate k-subsets of rows and columns
        std::function<void(std::size_t, std::size_t)> rows_loop = [&](std::size_t start,
                                                                      std::size_t depth) {
            if (depth == k) {
                std::function<void(std::size_t, std::size_t)> cols_loop =
                    [&](std::size_t cstart, std::size_t cdepth) {
                        if (cdepth == k) {
                            IntMatrix sub(k, k);
                            for (std::size_t i = 0; i < k; ++i)
                                for (std::size_t j = 0; j < k; ++j)
                                    sub.at(i, j) = m.at(ridx[i], cidx[j]);
                            g = gcd(g, pretzel::abs_int(det_cofactor(sub)));
                            return;
                        }
                        for (std::size_t c = cstart; c < cols; ++c) {
                            cidx[cdepth] = c;
                            cols_loop(c + 1, cdepth + 1);
                        }
                    };
                cols_loop(0, 0);
                return;
            }
            for (std::size_t rr = start; rr < rows; ++rr) {
                ridx[depth] = rr;
                rows_loop(rr + 1, depth + 1);
            }
        };
        rows_loop(0, 0);
        products[k] = g;
    }

    std::vector<Int> factors(k_max);
    for (std::size_t k = 1; k <= k_max; ++k) {
        if (products[k] == 0)
            factors[k - 1] = 0;
        else
            factors[k - 1] = products[k] / products[k - 1];
    }
    return factors;
}

// Every embedding of (Z^n, G) into (Z^N, -Id), no symmetry breaking: DFS over
// rows in natural order, candidate vectors enumerated coordinate by
// coordinate with exact norm and inner-product pruning.
struct RawEmbeddingSearch {
    const IntMatrix* g;
    std::size_t n, N;
    std::vector<std::vector<long long>> rows;
    std::vector<long long> cand;
    std::size_t count = 0;
    std::set<std::vector<Int>> orbits; // canonical forms of found embeddings

    void row_dfs(std::size_t k, std::size_t c, long long pnorm) {
        long long target = -static_cast<long long>(Int(g->at(k, k)));
        if (c == N) {
            if (pnorm != target) return;
            for (std::size_t j = 0; j < k; ++j) {
                long long dot = 0;
                for (std::size_t t = 0; t < N; ++t) dot += cand[t] * rows[j][t];
                if (dot != -static_cast<long long>(Int(g->at(k, j)))) return;
            }
            rows.push_back(cand);
            std::vector<long long> saved = cand; // place() reuses the buffer
            place(k + 1);
            cand = saved;
            rows.pop_back();
            return;
        }
        long long bound = 0;
        while ((bound + 1) * (bound + 1) <= target) ++bound;
        for (long long x = -bound; x <= bound; ++x) {
            if (pnorm + x * x > target) continue;
            cand[c] = x;
            row_dfs(k, c + 1, pnorm + x * x);
        }
        cand[c] = 0;
    }

    void place(std::size_t k) {
        if (k == n) {
            ++count;
            IntMatrix phi(n, N);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t c = 0; c < N; ++c) phi.at(i, c) = rows[i][c];
            IntMatrix canon = pretzel::embedding_canonical_form(phi);
            std::vector<Int> key;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t c = 0; c < N; ++c) key.push_back(canon.at(i, c));
            orbits.insert(key);
            return;
        }
        cand.assign(N, 0);
        row_dfs(k, 0, 0);
    }
};

inline std::size_t count_embedding_orbits_raw(const IntMatrix& g, std::size_t target_rank) {
    RawEmbeddingSearch s;
    s.g = &g;
    s.n = g.rows();
    s.N = target_rank;
    s.place(0);
    return s.orbits.size();
}

} // namespace oracles

#endif
