#include "pretzel/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "pretzel/errors.hpp"

namespace pretzel {

unsigned thread_budget(unsigned requested) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("OBSTRUCT_THREADS")) {
        long cap = std::atol(env);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return std::max(1u, n);
}

std::vector<ObstructionReport> run_scan(const ScanSpec& spec, unsigned threads) {
    for (long long e : {spec.p_lo, spec.p_hi, spec.q_lo, spec.q_hi, spec.r_lo, spec.r_hi})
        if (!is_odd(e)) throw OutOfRangeError("scan range endpoints must be odd");

    std::set<std::tuple<long long, long long, long long>> seen;
    for (long long p = spec.p_lo; p <= spec.p_hi; p += 2)
        for (long long q = spec.q_lo; q <= spec.q_hi; q += 2)
            for (long long r = spec.r_lo; r <= spec.r_hi; r += 2) {
                PretzelKnot k = normalize(p, q, r);
                seen.insert({k.p, k.q, k.r});
            }
    std::vector<std::tuple<long long, long long, long long>> triples(seen.begin(), seen.end());

    std::vector<ObstructionReport> reports(triples.size());
    const unsigned workers = std::min<unsigned>(thread_budget(threads),
                                                std::max<std::size_t>(triples.size(), 1));
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= triples.size()) break;
            auto [p, q, r] = triples[i];
            reports[i] = classify(p, q, r);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return reports;
}

std::vector<ObstructionReport> apply_filter(std::vector<ObstructionReport> reports,
                                            ScanFilter filter) {
    auto keep = [&](const ObstructionReport& r) {
        switch (filter) {
            case ScanFilter::All: return true;
            case ScanFilter::Slice:
                return r.verdict == Verdict::Ribbon || r.verdict == Verdict::SliceCandidate;
            case ScanFilter::Infinite: return r.verdict == Verdict::InfiniteOrder;
            case ScanFilter::TrivialAlexander: return pqr_sum(r.knot) == -1;
        }
        return true;
    };
    reports.erase(std::remove_if(reports.begin(), reports.end(),
                                 [&](const ObstructionReport& r) { return !keep(r); }),
                  reports.end());
    return reports;
}

namespace {

std::string lambda_set_field(const std::vector<long long>& lambdas) {
    std::string s = "{";
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (i) s += ";";
        s += std::to_string(lambdas[i]);
    }
    return s + "}";
}

} // namespace

std::string scan_to_csv(const std::vector<ObstructionReport>& reports) {
    std::ostringstream out;
    out << "p,q,r,mirrored,verdict,determinant,signature,lambda_set,vanishing,required,"
           "certificate_branch\n";
    for (const auto& r : reports) {
        out << r.knot.p << ',' << r.knot.q << ',' << r.knot.r << ','
            << (r.knot.mirrored ? "true" : "false") << ',' << verdict_name(r.verdict) << ','
            << r.determinant.str() << ',' << r.signature << ',' << lambda_set_field(r.lambda_set)
            << ',' << (r.vanishing ? r.vanishing->str() : "-") << ','
            << (r.required ? r.required->str() : "-") << ',' << r.branch << '\n';
    }
    return out.str();
}

nlohmann::json scan_to_json(const std::vector<ObstructionReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr;
}

} // namespace pretzel
