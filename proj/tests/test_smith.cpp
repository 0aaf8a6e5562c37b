#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pretzel/errors.hpp"
#include "pretzel/smith.hpp"

using namespace pretzel;

namespace {

void check_decomposition(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    CHECK(snf.u * m * snf.v == snf.d);
    CHECK(abs_int(det_exact(snf.u)) == 1);
    CHECK(abs_int(det_exact(snf.v)) == 1);
    for (std::size_t i = 0; i < snf.invariant_factors.size(); ++i) {
        CHECK(snf.invariant_factors[i] >= 0);
        if (i + 1 < snf.invariant_factors.size() && snf.invariant_factors[i] != 0)
            CHECK(snf.invariant_factors[i + 1] % snf.invariant_factors[i] == 0);
    }
    CHECK(snf.invariant_factors == oracles::invariant_factors_minor_gcd(m));
}

} // namespace

TEST_CASE("smith normal form on the named small cases") {
    SmithDecomposition a = smith_normal_form(IntMatrix{{Int(-2), Int(1)}, {Int(1), Int(-3)}});
    CHECK(a.invariant_factors == std::vector<Int>{Int(1), Int(5)});

    SmithDecomposition z = smith_normal_form(IntMatrix(2, 2));
    CHECK(z.invariant_factors == std::vector<Int>{Int(0), Int(0)});

    SmithDecomposition d = smith_normal_form(IntMatrix::diagonal({Int(3), Int(3)}));
    CHECK(d.invariant_factors == std::vector<Int>{Int(3), Int(3)});
}

TEST_CASE("smith normal form is a valid decomposition on random matrices") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 3) % 4;
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
        check_decomposition(m);
    }
}

TEST_CASE("cokernel presentation") {
    IntMatrix m{{Int(-2), Int(1)}, {Int(1), Int(-3)}};
    CokernelPresentation cok(m);
    CHECK(cok.order() == 5);
    CHECK(cok.nonunit_factors() == std::vector<Int>{Int(5)});

    // projection is a homomorphism vanishing exactly on im M
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> entry(-20, 20);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> x{Int(entry(rng)), Int(entry(rng))};
        CHECK(cok.project(m.apply(x)) == std::vector<Int>{Int(0)});
        std::vector<Int> y{Int(entry(rng)), Int(entry(rng))};
        std::vector<Int> sum{x[0] + y[0], x[1] + y[1]};
        CHECK(cok.project(sum) == cok.add_coords(cok.project(x), cok.project(y)));
    }

    // representatives project back to their coordinates
    for (const auto& coords : cok.all_coordinates())
        CHECK(cok.project(cok.coset_representative(coords)) == coords);

    CHECK(cokernel(IntMatrix::identity(3)).order() == 1);
    CHECK(cokernel(IntMatrix::identity(3)).all_coordinates().size() == 1);
    CHECK_THROWS_AS(cokernel(IntMatrix(2, 2)), SingularMatrixError);
}

TEST_CASE("cokernel order equals |det|") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> entry(-6, 6);
    int checked = 0;
    while (checked < 80) {
        std::size_t n = 1 + checked % 4;
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
        Int det = det_exact(m);
        if (det == 0) continue;
        ++checked;
        CHECK(cokernel(m).order() == abs_int(det));
    }
}
