#include <doctest.h>

#include "pretzel/errors.hpp"
#include "pretzel/forest.hpp"
#include "pretzel/graph_io.hpp"
#include "pretzel/plumbing.hpp"
#include "pretzel/pretzel_knot.hpp"

using namespace pretzel;

TEST_CASE("forest construction validates") {
    CHECK_THROWS_AS(WeightedForest({Int(-2)}, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(WeightedForest({Int(-2), Int(-2)}, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(WeightedForest({Int(-2), Int(-2), Int(-2)}, {{0, 1}, {1, 2}, {0, 2}}),
                    GraphError);
    CHECK_THROWS_AS(WeightedForest({Int(-2)}, {{0, 1}}), GraphError);
}

TEST_CASE("pretzel graph for (3,-3,3)") {
    WeightedForest g = pretzel_graph(3, -3, 3);
    REQUIRE(g.size() == 7);
    CHECK(g.weight(0) == -3);
    // p-arm (-2,-2), q-arm (-1,-4), r-arm (-2,-2)
    CHECK(g.weight(1) == -2);
    CHECK(g.weight(2) == -2);
    CHECK(g.weight(3) == -1);
    CHECK(g.weight(4) == -4);
    CHECK(g.weight(5) == -2);
    CHECK(g.weight(6) == -2);
    CHECK(g.valence(0) == 3);
    CHECK_THROWS_AS(pretzel_graph(2, 3, 5), EvenParameterError);
    CHECK_THROWS_AS(pretzel_graph(3, 0, 5), ZeroParameterError);
}

TEST_CASE("pretzel graph q-arm carries (-1, q-1)") {
    WeightedForest g = pretzel_graph(3, -5, 3);
    CHECK(g.weight(3) == -1);
    CHECK(g.weight(4) == -6);
}

TEST_CASE("pretzel graph p-arm has p-1 vertices of weight -2") {
    WeightedForest g = pretzel_graph(5, -3, 3);
    for (std::size_t v = 1; v <= 4; ++v) CHECK(g.weight(v) == -2);
    CHECK(g.weight(5) == -1);
}

TEST_CASE("reduced pretzel graph shape and determinant") {
    WeightedForest g = reduced_pretzel_graph(3, -3, 3);
    REQUIRE(g.size() == 6);
    for (std::size_t v = 0; v < 5; ++v) CHECK(g.weight(v) == -2);
    CHECK(g.weight(5) == -3);
    CHECK(g.adjacent(2, 5)); // q-vertex at path position p
    CHECK(det_exact(incidence_matrix(g)) == 9);

    WeightedForest h = reduced_pretzel_graph(3, -5, 5);
    CHECK(h.size() == 8);
    CHECK(h.adjacent(2, 7));
    CHECK_THROWS_AS(reduced_pretzel_graph(3, 5, 3), OutOfRangeError);
    CHECK_THROWS_AS(reduced_pretzel_graph(1, -5, 3), OutOfRangeError);
}

TEST_CASE("vertex count of the reduced graph is p+r") {
    for (long long p = 3; p <= 9; p += 2)
        for (long long r = p; r <= 9; r += 2)
            CHECK(reduced_pretzel_graph(p, -5, r).size() == static_cast<std::size_t>(p + r));
}

TEST_CASE("incidence matrix basics") {
    WeightedForest single({Int(-7)}, {});
    CHECK(incidence_matrix(single) == IntMatrix{{Int(-7)}});
    WeightedForest pair({Int(-2), Int(-2)}, {{0, 1}});
    CHECK(incidence_matrix(pair) == IntMatrix{{Int(-2), Int(1)}, {Int(1), Int(-2)}});
}

TEST_CASE("blow down") {
    // isolated -1 vertex disappears
    WeightedForest iso({Int(-1), Int(-5)}, {});
    WeightedForest after = blow_down(iso, 0);
    CHECK(after.size() == 1);
    CHECK(after.weight(0) == -5);

    // valence-1 neighbor gets bumped
    WeightedForest leaf({Int(-1), Int(-2)}, {{0, 1}});
    WeightedForest bumped = blow_down(leaf, 0);
    CHECK(bumped.size() == 1);
    CHECK(bumped.weight(0) == -1);

    // blowing down the q-arm -1 vertex of the pretzel graph gives the
    // reduced graph up to isomorphism
    for (long long p = 3; p <= 7; p += 2)
        for (long long q = -7; q <= -3; q += 2)
            for (long long r = p; r <= 7; r += 2) {
                WeightedForest g = pretzel_graph(p, q, r);
                std::size_t minus_one = 0;
                for (std::size_t v = 0; v < g.size(); ++v)
                    if (g.weight(v) == -1) minus_one = v;
                WeightedForest reduced = blow_down(g, minus_one);
                CHECK(forest_canonical_form(reduced) ==
                      forest_canonical_form(reduced_pretzel_graph(p, q, r)));
            }

    CHECK_THROWS_AS(blow_down(WeightedForest({Int(-2)}, {}), 0), NotBlowDownableError);
}

TEST_CASE("overweight vertices follow -d(v) < w(v)") {
    // the trivalent -2 vertex of the reduced graph is the only overweight one
    WeightedForest g = reduced_pretzel_graph(3, -5, 3);
    CHECK(overweight_vertices(g) == std::vector<std::size_t>{2});

    WeightedForest lone_minus_one({Int(-1)}, {});
    CHECK(overweight_vertices(lone_minus_one).empty());

    WeightedForest mid({Int(-2), Int(-1), Int(-2)}, {{0, 1}, {1, 2}});
    CHECK(overweight_vertices(mid) == std::vector<std::size_t>{1});
}

TEST_CASE("disjoint union") {
    WeightedForest g = reduced_pretzel_graph(3, -9, 3);
    WeightedForest u = disjoint_union({g, g});
    CHECK(u.size() == 12);
    IntMatrix big = incidence_matrix(u);
    CHECK(big == block_diagonal({incidence_matrix(g), incidence_matrix(g)}));
    CHECK(det_exact(big) == det_exact(incidence_matrix(g)) * det_exact(incidence_matrix(g)));

    WeightedForest empty;
    CHECK(forest_canonical_form(disjoint_union({g, empty})) == forest_canonical_form(g));
}

TEST_CASE("graph json round trip and validation") {
    WeightedForest g = reduced_pretzel_graph(3, -5, 3);
    nlohmann::json j = forest_to_json(g);
    WeightedForest back = forest_from_json(j);
    CHECK(incidence_matrix(back) == incidence_matrix(g));

    nlohmann::json cyclic = {{"vertices", {-2, -2, -2}}, {"edges", {{0, 1}, {1, 2}, {2, 0}}}};
    CHECK_THROWS_AS(forest_from_json(cyclic), GraphError);
    nlohmann::json bad = {{"vertices", {-2}}, {"edges", {{0, 5}}}};
    CHECK_THROWS_AS(forest_from_json(bad), GraphError);
}
