#ifndef PRETZEL_CLASSIFY_HPP
#define PRETZEL_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pretzel/numeric.hpp"
#include "pretzel/pretzel_knot.hpp"

namespace pretzel {

enum class Verdict { Ribbon, InfiniteOrder, SliceCandidate, OutOfScope };

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

struct CertificateEntry {
    std::string test;
    nlohmann::json data;

    friend bool operator==(const CertificateEntry& a, const CertificateEntry& b) {
        return a.test == b.test && a.data == b.data;
    }
};

// Verdict plus the ordered list of applied tests with their numeric payloads.
// Equality and the JSON schema cover the knot, verdict and certificate; the
// summary fields below feed the CSV writer and the timing is diagnostic.
struct ObstructionReport {
    PretzelKnot knot;
    Verdict verdict = Verdict::OutOfScope;
    std::vector<CertificateEntry> certificate;
    std::string branch; // name of the decisive test

    Int determinant = 0;
    int signature = 0;
    std::vector<long long> lambda_set;
    std::optional<Int> vanishing; // largest distinct-class count over lambdas
    std::optional<Int> required;  // sqrt(det) when det is a perfect square
    bool finite_order_candidate = false;

    std::int64_t elapsed_us = 0;

    friend bool operator==(const ObstructionReport& a, const ObstructionReport& b) {
        return a.knot == b.knot && a.verdict == b.verdict && a.certificate == b.certificate;
    }
};

// The full decision pipeline on the normalized knot.  For min |parameter|
// >= 3 the verdict is always Ribbon or InfiniteOrder.
ObstructionReport classify(long long p, long long q, long long r);

// Connected-sum counting bound: fires iff |pq+qr+pr|^(n/2) > (p+r+1)^n,
// decided by the squared comparison lhs = |pq+qr+pr| vs rhs = (p+r+1)^2
// (independent of n).
struct OrderBoundResult {
    Int lhs;
    Int rhs;
    bool fires;
};
OrderBoundResult order_bound_test(long long p, long long q, long long r, int n);

// The surviving case -q = p+r+min{p,r}: compares the vanishing classes a
// block factorization can carry, (p+r+1)^2 - 2(max{p,r}+1), against the
// required -q(p+r)-pr.  The difference is (min{p,r}-1)^2, so this fires on
// the whole valid domain.
struct RefinedCountResult {
    Int max_vanishing;
    Int required;
    bool fires;
};
RefinedCountResult refined_count_test(long long p, long long q, long long r);

// P(1,q,1) through the 2x2 plumbing [[-2,1],[1,q]].
ObstructionReport twist_knot_report(long long q);

// All odd triples with |p|,|q|,|r| <= bound, min >= 3 and trivial Alexander
// polynomial (pq+qr+pr = -1), classified; sorted by normalized triple.
std::vector<ObstructionReport> fintushel_stern_scan(long long bound);

nlohmann::json report_to_json(const ObstructionReport& r);
ObstructionReport report_from_json(const nlohmann::json& j);

} // namespace pretzel

#endif
