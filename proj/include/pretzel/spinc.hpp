#ifndef PRETZEL_SPINC_HPP
#define PRETZEL_SPINC_HPP

#include <memory>
#include <vector>

#include "pretzel/int_matrix.hpp"
#include "pretzel/numeric.hpp"
#include "pretzel/rational_matrix.hpp"
#include "pretzel/smith.hpp"

namespace pretzel {

// Element of coker G in canonical coordinates (one residue per nonunit
// invariant factor).  Arithmetic goes through the owning SpincSpace.
struct SpincClass {
    std::vector<Int> coords;

    friend bool operator==(const SpincClass& a, const SpincClass& b) {
        return a.coords == b.coords;
    }
    friend bool operator<(const SpincClass& a, const SpincClass& b) {
        return a.coords < b.coords;
    }
};

// Spin^c structures of the plumbed manifold with intersection form G,
// identified with coker G.  Requires det G odd (no 2-torsion), which makes G
// invertible mod 2 and gives every class a characteristic representative.
class SpincSpace {
public:
    explicit SpincSpace(const IntMatrix& g); // throws EvenDeterminant / Singular

    const IntMatrix& form() const { return g_; }
    const CokernelPresentation& presentation() const { return *cok_; }
    std::size_t dimension() const { return g_.rows(); }
    Int class_count() const { return cok_->order(); }

    SpincClass class_of(const std::vector<Int>& v) const;
    SpincClass zero_class() const;
    SpincClass add(const SpincClass& a, const SpincClass& b) const;
    SpincClass negate(const SpincClass& a) const;
    std::vector<SpincClass> all_classes() const; // canonical order

    // Integer covector congruent to diag(G) mod 2 whose class is s.
    std::vector<Int> characteristic_rep(const SpincClass& s) const;

private:
    IntMatrix g_;
    std::shared_ptr<const CokernelPresentation> cok_;
};

std::vector<SpincClass> spinc_classes(const IntMatrix& g);

// Correction terms of the plumbed manifold of a negative-definite forest
// with at most two overweight vertices per tree and odd determinant:
//   d(Y, s) = max over v in Char_s(G) of (v^T G^-1 v + n) / 4.
// The maximization substitutes v = v0 + 2Gy and runs the certified lattice
// enumeration over y.
class DInvariantCalculator {
public:
    explicit DInvariantCalculator(const IntMatrix& g); // throws UnsupportedGraph etc.

    const SpincSpace& space() const { return space_; }
    Rat d_invariant(const SpincClass& s) const;

    // The maximizing characteristic covector (certificate for the max).
    std::vector<Int> maximizer(const SpincClass& s) const;

private:
    IntMatrix g_;
    SpincSpace space_;
    RationalMatrix g_inv_;
};

Rat d_invariant(const IntMatrix& g, const SpincClass& s);

// Sum of per-component correction terms (connected sums are additive).
Rat d_invariants_forest(const std::vector<std::pair<IntMatrix, SpincClass>>& components);

// V = im A / im G inside coker G, for a factorization G = -A A^T.  Order
// equals |det A|; every element carries an integer x with [A x] = element.
struct VSubgroup {
    Int order;
    std::vector<SpincClass> elements;                 // sorted canonically
    std::vector<std::vector<Int>> x_representatives;  // aligned with elements
};
VSubgroup v_subgroup(const IntMatrix& g, const IntMatrix& a); // FactorizationInvalid

// Classes of V with vanishing correction term: exactly { [A x] : x in {+-1}^n },
// enumerated through the n+1 level sets of the coordinate-sum functional.
struct VanishingClasses {
    std::vector<SpincClass> classes; // sorted, distinct
    std::size_t count() const { return classes.size(); }
};
VanishingClasses vanishing_on_V(const IntMatrix& g, const IntMatrix& a);

// d of the class [A x] through the factorization:
//   d = (n - min{ |x'|^2 : x' odd, [A x'] = [A x] }) / 4.
Rat d_via_factorization(const IntMatrix& g, const IntMatrix& a, std::vector<Int> x);

// isqrt(det) when det is a perfect square; otherwise the NotASquare error
// (which by itself already obstructs sliceness).
Int required_vanishing(const Int& det_k);

} // namespace pretzel

#endif
