#ifndef PRETZEL_SCAN_HPP
#define PRETZEL_SCAN_HPP

#include <string>
#include <vector>

#include "pretzel/classify.hpp"

namespace pretzel {

// Inclusive odd-stepped parameter box.  Endpoints must be odd; an empty
// range yields an empty scan.
struct ScanSpec {
    long long p_lo = 3, p_hi = 3;
    long long q_lo = -3, q_hi = -3;
    long long r_lo = 3, r_hi = 3;
};

enum class ScanFilter { All, Slice, Infinite, TrivialAlexander };

// Number of workers: `requested` (0 = hardware), capped by the
// OBSTRUCT_THREADS environment variable when set.
unsigned thread_budget(unsigned requested);

// One report per normalized triple in the box, in lexicographic order of the
// normalized parameters.  Workers classify independently; the merge order is
// fixed, so output does not depend on the parallelism degree.
std::vector<ObstructionReport> run_scan(const ScanSpec& spec, unsigned threads);

std::vector<ObstructionReport> apply_filter(std::vector<ObstructionReport> reports,
                                            ScanFilter filter);

// Fixed columns:
// p,q,r,mirrored,verdict,determinant,signature,lambda_set,vanishing,required,certificate_branch
std::string scan_to_csv(const std::vector<ObstructionReport>& reports);
nlohmann::json scan_to_json(const std::vector<ObstructionReport>& reports);

} // namespace pretzel

#endif
