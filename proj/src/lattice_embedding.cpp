#include "pretzel/lattice_embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pretzel/errors.hpp"

namespace pretzel {

namespace {

void check_lambda_domain(long long p, long long q, long long r) {
    if (p < 3 || r < 3 || q > -3) throw OutOfRangeError("need p,r >= 3 and q <= -3");
    if (!is_odd(p) || !is_odd(q) || !is_odd(r)) throw OutOfRangeError("parameters must be odd");
}

long long isqrt_ll(long long v) {
    if (v < 0) return -1;
    return static_cast<long long>(isqrt_floor(Int(v)));
}

// Refined column blocks after a row is placed: columns stay together when
// they were together before and the new row agrees on them.
std::vector<std::size_t> refine_classes(const std::vector<std::size_t>& old,
                                        const std::vector<long long>& vals) {
    std::vector<std::size_t> out(old.size());
    for (std::size_t c = 0; c < old.size(); ++c) {
        if (c > 0 && old[c] == old[c - 1] && vals[c] == vals[c - 1])
            out[c] = out[c - 1];
        else
            out[c] = c;
    }
    return out;
}

std::vector<std::size_t> refine_classes_int(const std::vector<std::size_t>& old,
                                            const IntMatrix& w, std::size_t r) {
    std::vector<std::size_t> out(old.size());
    for (std::size_t c = 0; c < old.size(); ++c) {
        if (c > 0 && old[c] == old[c - 1] && w.at(r, c) == w.at(r, c - 1))
            out[c] = out[c - 1];
        else
            out[c] = c;
    }
    return out;
}

} // namespace

std::vector<long long> lambda_solutions(long long p, long long q, long long r) {
    check_lambda_domain(p, q, r);
    const long long bound = 1 + isqrt_ll(-q / std::min(p, r));
    std::vector<long long> out;
    for (long long l = -bound; l <= bound; ++l)
        if (p * l * l + r * (l + 1) * (l + 1) == -q) out.push_back(l);
    return out;
}

IntMatrix build_A(long long p, long long r, long long lambda) {
    if (p < 3 || r < 3) throw OutOfRangeError("need p,r >= 3");
    const std::size_t n = static_cast<std::size_t>(p + r);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        a.at(i, i) = 1;
        a.at(i, i + 1) = -1;
    }
    for (std::size_t j = 0; j < n; ++j)
        a.at(n - 1, j) = (j < static_cast<std::size_t>(p)) ? Int(lambda) : Int(lambda + 1);
    return a;
}

bool verify_factorization(const IntMatrix& g, const IntMatrix& a) {
    if (!g.is_square() || !a.is_square() || g.rows() != a.rows())
        throw DimensionMismatchError("factorization check needs equal square matrices");
    return g == (a * a.transposed()).negated();
}

// ---------------------------------------------------------------------------
// Embedding search.
//
// Column symmetry is handled by orderly generation.  Two columns are in the
// same block while every placed row agrees on them; within a block the next
// row must be non-increasing, and on columns that are still all zero its
// entries must be non-negative.  A completed matrix then satisfies the
// canonicity constraint at every prefix, which picks out exactly one member
// of each signed-permutation orbit.
// ---------------------------------------------------------------------------

namespace {

struct EmbedSearcher {
    std::size_t n = 0, N = 0;
    std::vector<std::size_t> order;          // DFS row -> original row
    std::vector<long long> norms;            // target row norms, DFS order
    std::vector<std::vector<long long>> dot; // dot[i][j]: target dot of DFS rows i,j

    std::vector<std::vector<long long>> rows;   // placed rows
    std::vector<std::vector<long long>> suffix; // suffix[j][c] = sum_{t>=c} rows[j][t]^2
    std::vector<std::size_t> class_start;       // first column of each block
    std::vector<char> sign_free;                // all placed entries zero

    std::vector<long long> cand;
    std::vector<long long> pdots;
    std::vector<IntMatrix> found;

    void run() {
        class_start.assign(N, 0);
        sign_free.assign(N, 1);
        place_rows();
    }

    void place_rows() {
        if (rows.size() == n) {
            emit();
            return;
        }
        cand.assign(N, 0);
        pdots.assign(rows.size(), 0);
        descend_columns(rows.size(), 0, 0);
    }

    void descend_columns(std::size_t k, std::size_t c, long long pnorm) {
        const long long target = norms[k];
        if (c == N) {
            if (pnorm == target) commit_row();
            return;
        }
        const long long bound = isqrt_ll(target);
        long long hi = bound, lo = -bound;
        if (c > 0 && class_start[c] == class_start[c - 1]) hi = std::min(hi, cand[c - 1]);
        if (sign_free[c]) lo = 0;
        const long long tail_cap = static_cast<long long>(N - c - 1) * bound * bound;
        for (long long x = hi; x >= lo; --x) {
            const long long norm2 = pnorm + x * x;
            if (norm2 > target) continue;
            if (norm2 + tail_cap < target) continue;
            bool ok = true;
            for (std::size_t j = 0; j < rows.size(); ++j) {
                const long long nd = pdots[j] + x * rows[j][c];
                const long long rest = suffix[j][c + 1];
                const long long gap = dot[k][j] - nd;
                // Cauchy-Schwarz on the unfixed tail, exact in integers.
                if (static_cast<__int128>(gap) * gap >
                    static_cast<__int128>(target - norm2) * rest) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cand[c] = x;
            std::vector<long long> saved(rows.size());
            for (std::size_t j = 0; j < rows.size(); ++j) {
                saved[j] = pdots[j];
                pdots[j] += x * rows[j][c];
            }
            descend_columns(k, c + 1, norm2);
            for (std::size_t j = 0; j < rows.size(); ++j) pdots[j] = saved[j];
        }
    }

    void commit_row() {
        auto saved_class = class_start;
        auto saved_free = sign_free;
        auto saved_cand = cand;
        auto saved_pdots = pdots;

        rows.push_back(cand);
        std::vector<long long> suf(N + 1, 0);
        for (std::size_t c = N; c-- > 0;) suf[c] = suf[c + 1] + cand[c] * cand[c];
        suffix.push_back(std::move(suf));

        class_start = refine_classes(saved_class, cand);
        for (std::size_t c = 0; c < N; ++c)
            sign_free[c] = sign_free[c] && cand[c] == 0;

        place_rows();

        rows.pop_back();
        suffix.pop_back();
        class_start = std::move(saved_class);
        sign_free = std::move(saved_free);
        cand = std::move(saved_cand);
        pdots = std::move(saved_pdots);
    }

    void emit() {
        IntMatrix phi(n, N);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < N; ++c) phi.at(order[i], c) = rows[i][c];
        found.push_back(std::move(phi));
    }
};

} // namespace

IntMatrix embedding_canonical_form(const IntMatrix& phi) {
    const std::size_t n = phi.rows(), N = phi.cols();
    IntMatrix w = phi;
    std::vector<std::size_t> class_start(N, 0);
    std::vector<char> sign_free(N, 1);

    for (std::size_t r = 0; r < n; ++r) {
        // Normalize signs on still-untouched columns (rows above are zero
        // there, so flipping from row r flips the whole column).
        for (std::size_t c = 0; c < N; ++c)
            if (sign_free[c] && w.at(r, c) < 0)
                for (std::size_t i = r; i < n; ++i) w.at(i, c) = -w.at(i, c);

        // Sort each block by this row's value, descending and stable.
        std::size_t a = 0;
        while (a < N) {
            std::size_t b = a + 1;
            while (b < N && class_start[b] == class_start[a]) ++b;
            std::vector<std::size_t> perm(b - a);
            std::iota(perm.begin(), perm.end(), a);
            std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
                return w.at(r, x) > w.at(r, y);
            });
            IntMatrix cols(n, b - a);
            for (std::size_t t = 0; t < perm.size(); ++t)
                for (std::size_t i = 0; i < n; ++i) cols.at(i, t) = w.at(i, perm[t]);
            std::vector<char> free_perm(perm.size());
            for (std::size_t t = 0; t < perm.size(); ++t) free_perm[t] = sign_free[perm[t]];
            for (std::size_t t = 0; t < perm.size(); ++t) {
                for (std::size_t i = 0; i < n; ++i) w.at(i, a + t) = cols.at(i, t);
                sign_free[a + t] = free_perm[t];
            }
            a = b;
        }

        class_start = refine_classes_int(class_start, w, r);
        for (std::size_t c = 0; c < N; ++c)
            sign_free[c] = sign_free[c] && w.at(r, c) == 0;
    }
    return w;
}

std::vector<LatticeEmbedding> find_embeddings(const IntMatrix& g, std::size_t target_rank) {
    if (!is_negative_definite(g)) throw NotNegativeDefiniteError("form is not negative definite");
    const std::size_t n = g.rows();
    if (target_rank < n) throw OutOfRangeError("target rank below source rank");

    EmbedSearcher s;
    s.n = n;
    s.N = target_rank;
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), std::size_t{0});
    std::stable_sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) {
        return -g.at(a, a) < -g.at(b, b);
    });
    s.norms.resize(n);
    s.dot.assign(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        Int norm = -g.at(s.order[i], s.order[i]);
        if (norm > 1000000) throw OutOfRangeError("vertex weight too large for embedding search");
        s.norms[i] = static_cast<long long>(norm);
        for (std::size_t j = 0; j < n; ++j)
            s.dot[i][j] = static_cast<long long>(Int(-g.at(s.order[i], s.order[j])));
    }
    s.run();

    std::vector<LatticeEmbedding> out;
    for (auto& phi : s.found) out.push_back(LatticeEmbedding{embedding_canonical_form(phi)});
    std::sort(out.begin(), out.end(), [](const LatticeEmbedding& a, const LatticeEmbedding& b) {
        for (std::size_t i = 0; i < a.phi.rows(); ++i)
            for (std::size_t j = 0; j < a.phi.cols(); ++j)
                if (a.phi.at(i, j) != b.phi.at(i, j)) return a.phi.at(i, j) < b.phi.at(i, j);
        return false;
    });
    return out;
}

std::vector<LatticeEmbedding> find_embeddings(const IntMatrix& g) {
    return find_embeddings(g, g.rows());
}

// ---------------------------------------------------------------------------
// B-matrix search.
// ---------------------------------------------------------------------------

namespace {

// Lexicographically least among all simultaneous row/column permutations.
IntMatrix b_canonical(const IntMatrix& b) {
    const std::size_t n = b.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<Int> best;
    IntMatrix best_m = b;
    bool first = true;
    do {
        std::vector<Int> flat;
        flat.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat.push_back(b.at(perm[i], perm[j]));
        if (first || flat < best) {
            best = flat;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) best_m.at(i, j) = flat[i * n + j];
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best_m;
}

struct BSearcher {
    long long p, q, r, bound;
    std::size_t n;
    std::vector<std::vector<long long>> b;
    std::set<std::vector<Int>> seen;
    std::vector<IntMatrix> found;

    bool rows_orthogonal(std::size_t i, std::size_t k) const {
        long long acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            long long bi = b[i][j], bk = b[k][j];
            long long si = bi + (i == j ? 1 : 0), sk = bk + (k == j ? 1 : 0);
            acc += p * bi * bk + r * si * sk;
        }
        return acc == 0;
    }

    // rowacc carries the diagonal equation contribution of the cells of row i
    // filled so far; every contribution is nonnegative, which prunes rows as
    // soon as they overshoot -q.
    void fill(std::size_t i, std::size_t j, long long rowacc) {
        if (i == n) {
            IntMatrix m(n, n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t c = 0; c < n; ++c) m.at(a, c) = b[a][c];
            IntMatrix canon = b_canonical(m);
            std::vector<Int> key;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t c = 0; c < n; ++c) key.push_back(canon.at(a, c));
            if (seen.insert(key).second) found.push_back(canon);
            return;
        }
        if (j == n) {
            if (rowacc != -q) return;
            for (std::size_t k = 0; k < i; ++k)
                if (!rows_orthogonal(i, k)) return;
            fill(i + 1, 0, 0);
            return;
        }
        for (long long x = -bound; x <= bound; ++x) {
            long long shifted = x + (i == j ? 1 : 0);
            long long contrib = p * x * x + r * shifted * shifted;
            if (rowacc + contrib > -q) continue;
            b[i][j] = x;
            fill(i, j + 1, rowacc + contrib);
        }
        b[i][j] = 0;
    }
};

} // namespace

long long default_b_entry_bound(long long p, long long q, long long r) {
    return 1 + isqrt_ll(-q / std::min(p, r));
}

std::vector<BMatrix> search_B_matrices(long long p, long long q, long long r, std::size_t n,
                                       long long entry_bound) {
    check_lambda_domain(p, q, r);
    if (n < 1 || n > 6) throw OutOfRangeError("B-matrix search supports 1 <= n <= 6");
    if (entry_bound < 1) throw OutOfRangeError("entry bound must be at least 1");

    BSearcher s;
    s.p = p;
    s.q = q;
    s.r = r;
    s.bound = entry_bound;
    s.n = n;
    s.b.assign(n, std::vector<long long>(n, 0));
    s.fill(0, 0, 0);

    std::vector<BMatrix> out;
    for (auto& m : s.found) out.push_back(BMatrix{std::move(m)});
    std::sort(out.begin(), out.end(), [](const BMatrix& a, const BMatrix& c) {
        for (std::size_t i = 0; i < a.b.rows(); ++i)
            for (std::size_t j = 0; j < a.b.cols(); ++j)
                if (a.b.at(i, j) != c.b.at(i, j)) return a.b.at(i, j) < c.b.at(i, j);
        return false;
    });
    return out;
}

std::vector<BMatrix> search_B_matrices(long long p, long long q, long long r, std::size_t n) {
    return search_B_matrices(p, q, r, n, default_b_entry_bound(p, q, r));
}

} // namespace pretzel
