#include <doctest.h>

#include "pretzel/classify.hpp"
#include "pretzel/errors.hpp"

using namespace pretzel;

namespace {

const CertificateEntry* find_entry(const ObstructionReport& r, const std::string& name) {
    for (const auto& e : r.certificate)
        if (e.test == name) return &e;
    return nullptr;
}

} // namespace

TEST_CASE("classify named cases") {
    CHECK(classify(3, -3, 5).verdict == Verdict::Ribbon);
    CHECK(classify(3, 3, 3).verdict == Verdict::InfiniteOrder);
    CHECK(classify(3, 3, 3).branch == "signature");

    ObstructionReport r = classify(3, -23, 5);
    CHECK(r.verdict == Verdict::InfiniteOrder);
    CHECK(r.branch == "order_bound");
    CHECK(r.lambda_set == std::vector<long long>{1});
    const CertificateEntry* ob = find_entry(r, "order_bound");
    REQUIRE(ob);
    CHECK(ob->data.at("lhs") == 169);
    CHECK(ob->data.at("rhs") == 81);

    CHECK_THROWS_AS(classify(2, 4, 6), EvenParameterError);
    CHECK_THROWS_AS(classify(3, 0, 5), ZeroParameterError);
}

TEST_CASE("classify is permutation invariant; mirror flips only the flag") {
    ObstructionReport base = classify(3, -23, 5);
    for (auto [p, q, r] : {std::tuple{5, 3, -23}, {-23, 5, 3}, {5, -23, 3}}) {
        ObstructionReport perm = classify(p, q, r);
        CHECK(perm == base);
        CHECK(perm.knot.mirrored == base.knot.mirrored);
    }
    ObstructionReport mirror = classify(-3, 23, -5);
    CHECK(mirror.verdict == base.verdict);
    CHECK(mirror.branch == base.branch);
    CHECK(mirror.knot.p == base.knot.p);
    CHECK(mirror.knot.mirrored != base.knot.mirrored);
}

TEST_CASE("ribbon verdicts carry full slice evidence") {
    for (auto [p, q, r] : {std::tuple{3, -3, 5}, {7, -5, 5}, {9, -9, 11}}) {
        ObstructionReport rep = classify(p, q, r);
        REQUIRE(rep.verdict == Verdict::Ribbon);
        CHECK(rep.signature == 0);
        REQUIRE(rep.required.has_value());
        CHECK((*rep.required) * (*rep.required) == rep.determinant);
        CHECK_FALSE(rep.lambda_set.empty());
        REQUIRE(rep.vanishing.has_value());
        CHECK(*rep.vanishing == *rep.required);
    }
}

TEST_CASE("out-of-scope knots") {
    ObstructionReport twist = classify(1, -5, 1);
    CHECK(twist.verdict == Verdict::OutOfScope);
    REQUIRE(find_entry(twist, "twist_report"));
    CHECK(find_entry(twist, "twist_report")->data.at("verdict") == "SliceCandidate");

    ObstructionReport bridge = classify(7, -3, 1);
    CHECK(bridge.verdict == Verdict::OutOfScope);
    const CertificateEntry* lens = find_entry(bridge, "two_bridge_lens");
    REQUIRE(lens);
    CHECK(lens->data.at("order") == 17);

    // P(p, -(p+2), 1) amphicheiral family is flagged
    ObstructionReport amphi = classify(5, -7, 1);
    CHECK(find_entry(amphi, "amphichiral_candidate"));
    CHECK_FALSE(find_entry(classify(7, -3, 1), "amphichiral_candidate"));
}

TEST_CASE("order bound test") {
    OrderBoundResult a = order_bound_test(3, -23, 5, 2);
    CHECK(a.lhs == 169);
    CHECK(a.rhs == 81);
    CHECK(a.fires);
    OrderBoundResult b = order_bound_test(3, -3, 3, 2);
    CHECK(b.lhs == 9);
    CHECK_FALSE(b.fires);
    OrderBoundResult c = order_bound_test(3, -9, 3, 4);
    CHECK(c.lhs == 45);
    CHECK(c.rhs == 49);
    CHECK_FALSE(c.fires);
    CHECK_THROWS_AS(order_bound_test(3, 5, 3, 2), OutOfRangeError);
}

TEST_CASE("surviving order-bound cases obey -q < p+r+2+min{p,r}") {
    for (long long p = 3; p <= 15; p += 2)
        for (long long r = p; r <= 15; r += 2)
            for (long long q = -41; q <= -3; q += 2) {
                if (ribbon_condition(p, q, r)) continue;
                if (-q == p || -q == r) continue;
                if (order_bound_test(p, q, r, 2).fires) continue;
                CHECK(-q < p + r + 2 + std::min(p, r));
            }
}

TEST_CASE("refined count test") {
    RefinedCountResult a = refined_count_test(3, -9, 3);
    CHECK(a.max_vanishing == 41);
    CHECK(a.required == 45);
    CHECK(a.fires);

    RefinedCountResult b = refined_count_test(3, -11, 5);
    CHECK(b.max_vanishing == 69);
    CHECK(b.required == 73);
    CHECK(b.fires);

    CHECK_THROWS_AS(refined_count_test(3, -5, 3), WrongCaseError);

    // fires on the whole valid domain: required - max = (min{p,r}-1)^2 > 0
    for (long long p = 3; p <= 15; p += 2)
        for (long long r = p; r <= 15; r += 2) {
            long long q = -(p + r + std::min(p, r));
            RefinedCountResult rc = refined_count_test(p, q, r);
            CHECK(rc.fires);
            Int m(std::min(p, r));
            CHECK(rc.required - rc.max_vanishing == (m - 1) * (m - 1));
        }
}

TEST_CASE("twist knot reports") {
    ObstructionReport s = twist_knot_report(-5);
    CHECK(s.verdict == Verdict::SliceCandidate);
    CHECK(s.required == Int(3)); // ell
    CHECK(s.vanishing == Int(3));

    ObstructionReport f8 = twist_knot_report(-3);
    CHECK(f8.verdict == Verdict::OutOfScope);
    CHECK(f8.finite_order_candidate);
    CHECK(f8.determinant == 5);

    ObstructionReport i7 = twist_knot_report(-7);
    CHECK(i7.verdict == Verdict::InfiniteOrder);
    CHECK(i7.determinant == 13);

    ObstructionReport i13 = twist_knot_report(-13);
    CHECK(i13.verdict == Verdict::InfiniteOrder); // det 25 square but ell = 5 > 3
    CHECK(i13.required == Int(5));

    ObstructionReport unknot = twist_knot_report(-1);
    CHECK(unknot.verdict == Verdict::SliceCandidate);

    ObstructionReport pos = twist_knot_report(3);
    CHECK(pos.verdict == Verdict::InfiniteOrder);
    CHECK(pos.branch == "signature");

    CHECK_THROWS_AS(twist_knot_report(2), EvenParameterError);
}

TEST_CASE("fintushel-stern scan") {
    auto at15 = fintushel_stern_scan(15);
    for (const auto& r : at15) {
        CHECK(r.verdict == Verdict::InfiniteOrder);
        CHECK(pqr_sum(r.knot) == -1);
    }
    // P(5,-3,7) has pq+qr+pr = -15-21+35 = -1 and normalizes to itself
    bool found_537 = false;
    for (const auto& r : at15)
        if (r.knot.p == 5 && r.knot.q == -3 && r.knot.r == 7) found_537 = true;
    CHECK(found_537);

    CHECK(fintushel_stern_scan(3).empty());
}

TEST_CASE("report json round trip") {
    for (auto [p, q, r] : {std::tuple{3, -3, 5}, {3, -23, 5}, {3, 3, 3}, {1, -5, 1}, {7, -3, 1}}) {
        ObstructionReport rep = classify(p, q, r);
        nlohmann::json j = report_to_json(rep);
        ObstructionReport back = report_from_json(j);
        CHECK(back == rep);
        CHECK(report_to_json(back) == j);
    }
}
