#include "pretzel/spinc.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "pretzel/errors.hpp"
#include "pretzel/forest.hpp"
#include "pretzel/lattice_embedding.hpp"
#include "pretzel/quadratic_min.hpp"

namespace pretzel {

namespace {

// Solve M z = rhs over GF(2); M must be invertible mod 2 (odd determinant).
std::vector<Int> gf2_solve(const IntMatrix& m, const std::vector<Int>& rhs) {
    const std::size_t n = m.rows();
    std::vector<std::vector<char>> w(n, std::vector<char>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = static_cast<char>(abs_int(m.at(i, j)) % 2);
        w[i][n] = static_cast<char>(abs_int(rhs[i]) % 2);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && !w[piv][k]) ++piv;
        if (piv == n) throw Error("matrix is singular mod 2");
        std::swap(w[k], w[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || !w[i][k]) continue;
            for (std::size_t j = k; j <= n; ++j) w[i][j] ^= w[k][j];
        }
    }
    std::vector<Int> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = Int(w[i][n]);
    return z;
}

WeightedForest forest_from_incidence(const IntMatrix& g) {
    if (!g.is_symmetric())
        throw UnsupportedGraphError("incidence matrix must be symmetric");
    std::vector<Int> weights = g.diagonal_entries();
    std::vector<WeightedForest::Edge> edges;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i + 1; j < g.cols(); ++j) {
            const Int& e = g.at(i, j);
            if (e == 0) continue;
            if (e != 1) throw UnsupportedGraphError("off-diagonal entries must be 0 or 1");
            edges.push_back({i, j});
        }
    try {
        return WeightedForest(std::move(weights), std::move(edges));
    } catch (const GraphError& e) {
        throw UnsupportedGraphError(e.what());
    }
}

void check_d_invariant_hypotheses(const IntMatrix& g) {
    WeightedForest f = forest_from_incidence(g);
    if (!is_negative_definite(g)) throw UnsupportedGraphError("not negative definite");
    auto over = overweight_vertices(f);
    for (const auto& comp : f.components()) {
        std::size_t bad = 0;
        for (std::size_t v : over)
            if (std::binary_search(comp.begin(), comp.end(), v)) ++bad;
        if (bad > 2)
            throw UnsupportedGraphError("a tree has more than two overweight vertices");
    }
    Int det = det_exact(g);
    if (!is_odd(det)) throw EvenDeterminantError("determinant is even (2-torsion)");
}

} // namespace

SpincSpace::SpincSpace(const IntMatrix& g) : g_(g) {
    if (!g.is_square()) throw DimensionMismatchError("spin^c space needs a square matrix");
    Int det = det_exact(g);
    if (det == 0) throw SingularMatrixError("form is singular");
    if (!is_odd(det)) throw EvenDeterminantError("determinant is even (2-torsion)");
    cok_ = std::make_shared<CokernelPresentation>(g);
}

SpincClass SpincSpace::class_of(const std::vector<Int>& v) const {
    return SpincClass{cok_->project(v)};
}

SpincClass SpincSpace::zero_class() const {
    return SpincClass{std::vector<Int>(cok_->nonunit_factors().size(), Int(0))};
}

SpincClass SpincSpace::add(const SpincClass& a, const SpincClass& b) const {
    return SpincClass{cok_->add_coords(a.coords, b.coords)};
}

SpincClass SpincSpace::negate(const SpincClass& a) const {
    return SpincClass{cok_->negate_coords(a.coords)};
}

std::vector<SpincClass> SpincSpace::all_classes() const {
    std::vector<SpincClass> out;
    for (auto& c : cok_->all_coordinates()) out.push_back(SpincClass{std::move(c)});
    return out;
}

std::vector<Int> SpincSpace::characteristic_rep(const SpincClass& s) const {
    const std::size_t n = dimension();
    std::vector<Int> v0 = cok_->coset_representative(s.coords);
    std::vector<Int> target(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = g_.at(i, i) - v0[i];
    std::vector<Int> z = gf2_solve(g_, target); // G z = diag - v0 (mod 2)
    std::vector<Int> gz = g_.apply(z);
    std::vector<Int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = v0[i] + gz[i];
    return v;
}

std::vector<SpincClass> spinc_classes(const IntMatrix& g) {
    return SpincSpace(g).all_classes();
}

namespace {
const IntMatrix& validated_for_d(const IntMatrix& g) {
    check_d_invariant_hypotheses(g);
    return g;
}
} // namespace

DInvariantCalculator::DInvariantCalculator(const IntMatrix& g)
    : g_(validated_for_d(g)), space_(g_), g_inv_(rational_inverse(g_)) {}

Rat DInvariantCalculator::d_invariant(const SpincClass& s) const {
    std::vector<Int> v = maximizer(s);
    Rat form = g_inv_.bilinear(v, v);
    return (form + Rat(Int(g_.rows()))) / 4;
}

std::vector<Int> DInvariantCalculator::maximizer(const SpincClass& s) const {
    const std::size_t n = g_.rows();
    std::vector<Int> v0 = space_.characteristic_rep(s);

    // v = v0 + 2Gy turns the coset maximization into maximizing the concave
    // integer quadratic y^T G y + v0 . y, i.e. minimizing the shifted form
    // (y - c)^T (-G) (y - c) around c = -G^-1 v0 / 2.
    std::vector<Rat> v0_rat(n);
    for (std::size_t i = 0; i < n; ++i) v0_rat[i] = Rat(v0[i]);
    std::vector<Rat> c = g_inv_.apply(v0_rat);
    for (auto& x : c) x = -x / 2;

    RationalMatrix neg_g(g_.negated());
    QuadraticMinimum qm = minimize_shifted_form(neg_g, c);

    std::vector<Int> gy = g_.apply(qm.argmin);
    std::vector<Int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = v0[i] + 2 * gy[i];
    return v;
}

Rat d_invariant(const IntMatrix& g, const SpincClass& s) {
    return DInvariantCalculator(g).d_invariant(s);
}

Rat d_invariants_forest(const std::vector<std::pair<IntMatrix, SpincClass>>& components) {
    Rat total(0);
    for (const auto& [g, s] : components) total += d_invariant(g, s);
    return total;
}

VSubgroup v_subgroup(const IntMatrix& g, const IntMatrix& a) {
    if (!verify_factorization(g, a))
        throw FactorizationInvalidError("G != -A A^T");
    SpincSpace space(g);
    const std::size_t n = a.rows();

    std::vector<SpincClass> gens;
    for (std::size_t j = 0; j < n; ++j) gens.push_back(space.class_of(a.column(j)));

    std::map<SpincClass, std::vector<Int>> seen;
    std::queue<SpincClass> todo;
    seen.emplace(space.zero_class(), std::vector<Int>(n, Int(0)));
    todo.push(space.zero_class());
    while (!todo.empty()) {
        SpincClass cur = todo.front();
        todo.pop();
        const std::vector<Int> x = seen.at(cur);
        for (std::size_t j = 0; j < n; ++j) {
            SpincClass nxt = space.add(cur, gens[j]);
            if (seen.count(nxt)) continue;
            std::vector<Int> xn = x;
            xn[j] += 1;
            seen.emplace(nxt, std::move(xn));
            todo.push(nxt);
        }
    }

    VSubgroup v;
    v.order = Int(seen.size());
    for (auto& [cls, x] : seen) {
        v.elements.push_back(cls);
        v.x_representatives.push_back(x);
    }
    Int det_a = abs_int(det_exact(a));
    if (v.order != det_a)
        throw FactorizationInvalidError("subgroup order does not match |det A|");
    return v;
}

VanishingClasses vanishing_on_V(const IntMatrix& g, const IntMatrix& a) {
    if (!verify_factorization(g, a))
        throw FactorizationInvalidError("G != -A A^T");
    SpincSpace space(g);
    const std::size_t n = a.rows();

    std::vector<SpincClass> found;
    std::vector<Int> x(n, Int(1));
    for (std::size_t k = 0; k <= n; ++k) {
        // k leading entries -1, the rest +1; one representative per level set
        // of the coordinate-sum functional.
        for (std::size_t i = 0; i < n; ++i) x[i] = (i < k) ? Int(-1) : Int(1);
        found.push_back(space.class_of(a.apply(x)));
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return VanishingClasses{std::move(found)};
}

Rat d_via_factorization(const IntMatrix& g, const IntMatrix& a, std::vector<Int> x) {
    if (!verify_factorization(g, a))
        throw FactorizationInvalidError("G != -A A^T");
    const std::size_t n = a.rows();
    IntMatrix at = a.transposed();

    // Shift x by A^T w to make every coordinate odd; solvable since det A is
    // odd.  The class [A x] is unchanged.
    std::vector<Int> parity_target(n);
    for (std::size_t i = 0; i < n; ++i) parity_target[i] = 1 - x[i];
    std::vector<Int> w = gf2_solve(at, parity_target);
    std::vector<Int> shift = at.apply(w);
    for (std::size_t i = 0; i < n; ++i) x[i] += shift[i];

    // min |x + 2 A^T u|^2 over integer u: positive definite form 4 A A^T
    // centered at u* = G^-1 A x / 2.
    RationalMatrix g_inv = rational_inverse(g);
    std::vector<Int> ax = a.apply(x);
    std::vector<Rat> ax_rat(n);
    for (std::size_t i = 0; i < n; ++i) ax_rat[i] = Rat(ax[i]);
    std::vector<Rat> center = g_inv.apply(ax_rat);
    for (auto& c : center) c = c / 2;

    IntMatrix m = g.negated();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) *= 4;
    QuadraticMinimum qm = minimize_shifted_form(RationalMatrix(m), center);

    std::vector<Int> best = at.apply(qm.argmin);
    Int norm(0);
    for (std::size_t i = 0; i < n; ++i) {
        Int xi = x[i] + 2 * best[i];
        norm += xi * xi;
    }
    return Rat(Int(n) - norm, 4);
}

Int required_vanishing(const Int& det_k) {
    auto s = exact_sqrt(det_k);
    if (!s) throw NotASquareError("determinant is not a perfect square");
    return *s;
}

} // namespace pretzel
