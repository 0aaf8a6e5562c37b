#include "pretzel/d_oracle.hpp"

#include <vector>

#include "pretzel/errors.hpp"
#include "pretzel/rational_matrix.hpp"

namespace pretzel {

namespace {

// h(y) = y^T G y + v0 . y, exact integer for integer y.
Int eval_h(const IntMatrix& g, const std::vector<Int>& v0, const std::vector<Int>& y) {
    Int acc(0);
    std::vector<Int> gy = g.apply(y);
    for (std::size_t i = 0; i < y.size(); ++i) acc += y[i] * gy[i] + v0[i] * y[i];
    return acc;
}

struct OracleScan {
    const IntMatrix* g;
    std::size_t n;
    std::vector<Rat> c;                  // rational maximizer of h
    std::vector<Rat> inv_diag;           // diagonal of (-G)^-1
    std::vector<RationalMatrix> blockinv; // blockinv[k] = inv of top-left (k+1)x(k+1) of (-G)^-1
    const std::vector<Int>* v0;
    Rat h_c;
    Int best_h;
    std::vector<Int> y;
    std::vector<Int> best_y;
    long long nodes = 0;

    Rat gap() const { return h_c - Rat(best_h); }

    // Exact lower bound for Q over all completions of y[0..k]: the Schur
    // complement of -G onto the fixed prefix.
    Rat prefix_bound(std::size_t k) const {
        std::vector<Rat> z(k + 1);
        for (std::size_t i = 0; i <= k; ++i) z[i] = Rat(y[i]) - c[i];
        const RationalMatrix& b = blockinv[k];
        Rat acc(0);
        for (std::size_t i = 0; i <= k; ++i) {
            if (z[i] == 0) continue;
            Rat row(0);
            for (std::size_t j = 0; j <= k; ++j) row += b.at(i, j) * z[j];
            acc += z[i] * row;
        }
        return acc;
    }

    void scan(std::size_t k) {
        if (++nodes > 20000000) throw Error("oracle scan exceeded its node budget");
        // Candidate values for y_k from the single-coordinate certificate.
        Int mid = round_rat(c[k]);
        for (int dir = 0; dir < 2; ++dir) {
            Int val = dir == 0 ? mid : mid - 1;
            Int step = dir == 0 ? Int(1) : Int(-1);
            for (;; val += step) {
                Rat dev = Rat(val) - c[k];
                if (dev * dev >= gap() * inv_diag[k]) break;
                y[k] = val;
                if (prefix_bound(k) >= gap()) continue;
                if (k + 1 == n) {
                    Int h = eval_h(*g, *v0, y);
                    if (h > best_h) {
                        best_h = h;
                        best_y = y;
                    }
                } else {
                    scan(k + 1);
                }
            }
        }
    }
};

} // namespace

Rat d_invariant_oracle(const IntMatrix& g, const SpincClass& s) {
    SpincSpace space(g);
    const std::size_t n = g.rows();
    std::vector<Int> v0 = space.characteristic_rep(s);

    RationalMatrix g_inv = rational_inverse(g);
    RationalMatrix w(n, n); // (-G)^-1 = -G^-1
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = -g_inv.at(i, j);

    OracleScan sc;
    sc.g = &g;
    sc.n = n;
    sc.v0 = &v0;
    sc.c.resize(n);
    {
        std::vector<Rat> v0_rat(n);
        for (std::size_t i = 0; i < n; ++i) v0_rat[i] = Rat(v0[i]);
        std::vector<Rat> gc = g_inv.apply(v0_rat);
        for (std::size_t i = 0; i < n; ++i) sc.c[i] = -gc[i] / 2;
    }
    sc.inv_diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) sc.inv_diag[i] = w.at(i, i);
    sc.blockinv.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        RationalMatrix blk(k + 1, k + 1);
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= k; ++j) blk.at(i, j) = w.at(i, j);
        sc.blockinv.push_back(rational_inverse(blk));
    }

    // h at the rational maximizer: h(c) = -c^T G c.
    {
        Rat acc(0);
        std::vector<Rat> gc(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gc[i] += Rat(g.at(i, j)) * sc.c[j];
        for (std::size_t i = 0; i < n; ++i) acc += sc.c[i] * gc[i];
        sc.h_c = -acc;
    }

    // Incumbent: rounded center improved by integer coordinate ascent.
    std::vector<Int> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = round_rat(sc.c[i]);
    Int h_best = eval_h(g, v0, y);
    for (bool improved = true; improved;) {
        improved = false;
        for (std::size_t i = 0; i < n; ++i) {
            // 1-d slice of h in y_i is concave quadratic with leading G_ii.
            Int lin = v0[i];
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) lin += 2 * g.at(i, j) * y[j];
            Rat t = make_rat(-lin, 2 * g.at(i, i));
            for (Int cand : {floor_rat(t), floor_rat(t) + 1}) {
                Int old = y[i];
                y[i] = cand;
                Int h = eval_h(g, v0, y);
                if (h > h_best) {
                    h_best = h;
                    improved = true;
                } else {
                    y[i] = old;
                }
            }
        }
    }

    sc.best_h = h_best;
    sc.best_y = y;
    sc.y.assign(n, Int(0));
    if (n > 0 && sc.gap() > 0) sc.scan(0);

    // d = (v^T G^-1 v + n)/4 at v = v0 + 2 G y.
    std::vector<Int> gy = g.apply(sc.best_y);
    std::vector<Int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = v0[i] + 2 * gy[i];
    return (g_inv.bilinear(v, v) + Rat(Int(n))) / 4;
}

} // namespace pretzel
