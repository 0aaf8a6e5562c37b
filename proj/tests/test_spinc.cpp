#include <doctest.h>

#include <set>

#include "pretzel/d_oracle.hpp"
#include "pretzel/errors.hpp"
#include "pretzel/forest.hpp"
#include "pretzel/lattice_embedding.hpp"
#include "pretzel/plumbing.hpp"
#include "pretzel/spinc.hpp"

using namespace pretzel;

namespace {
const IntMatrix kTwoByTwo{{Int(-2), Int(1)}, {Int(1), Int(-3)}};
}

TEST_CASE("spinc class enumeration") {
    CHECK(spinc_classes(kTwoByTwo).size() == 5);
    CHECK(spinc_classes(IntMatrix{{Int(-1)}}).size() == 1);
    IntMatrix g = incidence_matrix(reduced_pretzel_graph(3, -5, 3));
    CHECK(spinc_classes(g).size() == 21);

    CHECK_THROWS_AS(spinc_classes(IntMatrix{{Int(-2)}}), EvenDeterminantError);
    CHECK_THROWS_AS(spinc_classes(IntMatrix(1, 1)), SingularMatrixError);
}

TEST_CASE("characteristic representatives have the right parity and class") {
    SpincSpace space(kTwoByTwo);
    for (const auto& s : space.all_classes()) {
        std::vector<Int> v = space.characteristic_rep(s);
        CHECK((v[0] - kTwoByTwo.at(0, 0)) % 2 == 0);
        CHECK((v[1] - kTwoByTwo.at(1, 1)) % 2 == 0);
        CHECK(space.class_of(v) == s);
    }
    // the class of (0,1) can keep (0,1) itself: right parity already
    SpincClass s01 = space.class_of({Int(0), Int(1)});
    std::vector<Int> rep = space.characteristic_rep(s01);
    CHECK(space.class_of(rep) == s01);
}

TEST_CASE("d invariants of the 2x2 example") {
    DInvariantCalculator calc(kTwoByTwo);
    SpincClass s01 = calc.space().class_of({Int(0), Int(1)});
    CHECK(calc.d_invariant(s01) == Rat(2, 5));
    SpincClass zero = calc.space().zero_class();
    CHECK(calc.d_invariant(zero) == 0);

    DInvariantCalculator unit(IntMatrix{{Int(-1)}});
    CHECK(unit.d_invariant(unit.space().zero_class()) == 0);
}

TEST_CASE("d invariant rejects graphs outside the formula hypotheses") {
    CHECK_THROWS_AS(DInvariantCalculator(IntMatrix{{Int(2)}}), UnsupportedGraphError);
    IntMatrix multi{{Int(-2), Int(2)}, {Int(2), Int(-3)}};
    CHECK_THROWS_AS(DInvariantCalculator{multi}, UnsupportedGraphError);
    CHECK_THROWS_AS(DInvariantCalculator(IntMatrix{{Int(-2)}}), EvenDeterminantError);

    // negative definite tree with three overweight vertices is rejected
    WeightedForest f({Int(-5), Int(-1), Int(-5), Int(-1), Int(-5), Int(-1), Int(-5)},
                     {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    IntMatrix g = incidence_matrix(f);
    REQUIRE(is_negative_definite(g));
    REQUIRE(overweight_vertices(f).size() == 3);
    CHECK_THROWS_AS(DInvariantCalculator{g}, UnsupportedGraphError);
}

TEST_CASE("d conjugation symmetry and oracle agreement on the 2x2 example") {
    DInvariantCalculator calc(kTwoByTwo);
    for (const auto& s : calc.space().all_classes()) {
        Rat d = calc.d_invariant(s);
        CHECK(d == calc.d_invariant(calc.space().negate(s)));
        CHECK(d == d_invariant_oracle(kTwoByTwo, s));
        // 4 d det(G) is an integer
        Rat scaled = d * 4 * Rat(det_exact(kTwoByTwo));
        CHECK(denominator(scaled) == 1);
    }
}

TEST_CASE("additivity on forests") {
    SpincSpace space(kTwoByTwo);
    SpincClass s01 = space.class_of({Int(0), Int(1)});
    Rat two_copies = d_invariants_forest({{kTwoByTwo, s01}, {kTwoByTwo, s01}});
    CHECK(two_copies == Rat(4, 5));
    Rat with_unit = d_invariants_forest({{kTwoByTwo, s01}, {IntMatrix{{Int(-1)}},
                                          SpincSpace(IntMatrix{{Int(-1)}}).zero_class()}});
    CHECK(with_unit == Rat(2, 5));
}

TEST_CASE("V subgroup orders") {
    IntMatrix g33 = incidence_matrix(reduced_pretzel_graph(3, -3, 3));
    IntMatrix a33 = build_A(3, 3, 0);
    VSubgroup v = v_subgroup(g33, a33);
    CHECK(v.order == 3);
    CHECK(SpincSpace(g33).class_count() == 9);

    IntMatrix g55 = incidence_matrix(reduced_pretzel_graph(3, -5, 5));
    IntMatrix a55 = build_A(3, 5, 0);
    VSubgroup v2 = v_subgroup(g55, a55);
    CHECK(v2.order == 5);
    CHECK(SpincSpace(g55).class_count() == 25);

    CHECK_THROWS_AS(v_subgroup(g33, IntMatrix::identity(6)), FactorizationInvalidError);

    // x representatives really hit their classes
    SpincSpace space(g33);
    for (std::size_t i = 0; i < v.elements.size(); ++i)
        CHECK(space.class_of(a33.apply(v.x_representatives[i])) == v.elements[i]);
}

TEST_CASE("vanishing classes on V") {
    IntMatrix g = incidence_matrix(reduced_pretzel_graph(3, -3, 3));
    IntMatrix a = build_A(3, 3, 0);
    VanishingClasses vc = vanishing_on_V(g, a);
    CHECK(vc.count() == 3); // ribbon case: all of V vanishes

    IntMatrix g235 = incidence_matrix(reduced_pretzel_graph(3, -23, 5));
    IntMatrix a235 = build_A(3, 5, 1);
    VanishingClasses vc235 = vanishing_on_V(g235, a235);
    CHECK(vc235.count() <= 9); // p+r+1
    CHECK(v_subgroup(g235, a235).order == 13);
    CHECK(Int(vc235.count()) < 13); // the counting obstruction fires
}

TEST_CASE("fast path equals the general engine on V") {
    for (auto [p, q, r, l] : {std::tuple{3LL, -3LL, 3LL, 0LL},
                              {3, -3, 3, -1},
                              {3, -15, 3, 1},
                              {3, -23, 5, 1},
                              {3, -5, 5, 0}}) {
        IntMatrix g = incidence_matrix(reduced_pretzel_graph(p, q, r));
        IntMatrix a = build_A(p, r, l);
        DInvariantCalculator calc(g);
        VSubgroup v = v_subgroup(g, a);
        VanishingClasses vc = vanishing_on_V(g, a);
        for (std::size_t i = 0; i < v.elements.size(); ++i) {
            Rat fast = d_via_factorization(g, a, v.x_representatives[i]);
            Rat full = calc.d_invariant(v.elements[i]);
            CHECK(fast == full);
            CHECK(fast <= 0);
            bool vanishes =
                std::binary_search(vc.classes.begin(), vc.classes.end(), v.elements[i]);
            CHECK((fast == 0) == vanishes);
        }
    }
}

TEST_CASE("stevedore twist form: d vanishes on all of V") {
    IntMatrix g{{Int(-2), Int(1)}, {Int(1), Int(-5)}};
    IntMatrix a{{Int(1), Int(-1)}, {Int(1), Int(2)}}; // lambda = 1
    REQUIRE(verify_factorization(g, a));
    VSubgroup v = v_subgroup(g, a);
    CHECK(v.order == 3);
    DInvariantCalculator calc(g);
    for (const auto& s : v.elements) CHECK(calc.d_invariant(s) == 0);
    CHECK(vanishing_on_V(g, a).count() == 3);
}

TEST_CASE("required vanishing") {
    CHECK(required_vanishing(Int(25)) == 5);
    CHECK(required_vanishing(Int(1)) == 1);
    CHECK_THROWS_AS(required_vanishing(Int(21)), NotASquareError);
}
