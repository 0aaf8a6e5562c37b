#include "pretzel/quadratic_min.hpp"

#include "pretzel/errors.hpp"

namespace pretzel {

namespace {

struct Enumerator {
    std::size_t n;
    std::vector<Rat> d;                 // positive square weights
    std::vector<std::vector<Rat>> l;    // l[i][j] for j > i
    const std::vector<Rat>* center;
    std::vector<Int> z;
    Rat best;
    std::vector<Int> best_z;

    // Q(z) = sum_i d[i] * (z_i - center_i + sum_{j>i} l[i][j] (z_j - center_j))^2
    Rat offset(std::size_t i) const {
        Rat u(0);
        for (std::size_t j = i + 1; j < n; ++j) u += l[i][j] * (Rat(z[j]) - (*center)[j]);
        return (*center)[i] - u; // conditional center for z_i
    }

    void descend(std::size_t level, const Rat& used) {
        const std::size_t i = level - 1;
        const Rat mid = offset(i);
        Int lo = floor_rat(mid), hi = lo + 1;
        bool lo_open = true, hi_open = true;
        while (lo_open || hi_open) {
            Rat dev_lo = lo_open ? (Rat(lo) - mid) * (Rat(lo) - mid) : Rat(0);
            Rat dev_hi = hi_open ? (Rat(hi) - mid) * (Rat(hi) - mid) : Rat(0);
            bool take_lo;
            if (lo_open && hi_open)
                take_lo = dev_lo <= dev_hi;
            else
                take_lo = lo_open;
            Int cand = take_lo ? lo : hi;
            Rat dev = take_lo ? dev_lo : dev_hi;
            Rat term = used + d[i] * dev;
            if (term > best) {
                if (take_lo)
                    lo_open = false;
                else
                    hi_open = false;
                continue;
            }
            z[i] = cand;
            if (i == 0) {
                if (term < best) {
                    best = term;
                    best_z = z;
                }
            } else {
                descend(i, term);
            }
            if (take_lo)
                --lo;
            else
                ++hi;
        }
    }
};

} // namespace

QuadraticMinimum minimize_shifted_form(const RationalMatrix& m, const std::vector<Rat>& center) {
    const std::size_t n = m.rows();
    if (m.cols() != n || center.size() != n)
        throw DimensionMismatchError("quadratic form shape mismatch");
    if (n == 0) return {Rat(0), {}};

    Enumerator e;
    e.n = n;
    e.center = &center;
    e.d.assign(n, Rat(0));
    e.l.assign(n, std::vector<Rat>(n, Rat(0)));

    // Rational LDL sweep.
    RationalMatrix w = m;
    for (std::size_t i = 0; i < n; ++i) {
        e.d[i] = w.at(i, i);
        if (e.d[i] <= 0) throw Error("quadratic form is not positive definite");
        for (std::size_t j = i + 1; j < n; ++j) e.l[i][j] = w.at(i, j) / e.d[i];
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k)
                w.at(j, k) -= e.d[i] * e.l[i][j] * e.l[i][k];
    }

    // Incumbent from the rounded center.
    e.z.assign(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) e.z[i] = round_rat(center[i]);
    Rat seed(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rat inner = Rat(e.z[i]) - center[i];
        for (std::size_t j = i + 1; j < n; ++j) inner += e.l[i][j] * (Rat(e.z[j]) - center[j]);
        seed += e.d[i] * inner * inner;
    }
    e.best = seed;
    e.best_z = e.z;

    e.descend(n, Rat(0));
    return {e.best, e.best_z};
}

} // namespace pretzel
