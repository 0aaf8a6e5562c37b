#include "pretzel/classify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "pretzel/errors.hpp"
#include "pretzel/forest.hpp"
#include "pretzel/lattice_embedding.hpp"
#include "pretzel/plumbing.hpp"
#include "pretzel/spinc.hpp"

namespace pretzel {

namespace {

using nlohmann::json;

std::int64_t to_i64(const Int& x) {
    if (x > Int(INT64_MAX) || x < Int(INT64_MIN)) throw OutOfRangeError("value too large for report");
    return static_cast<std::int64_t>(x);
}

json lambda_entry(const std::vector<long long>& lambdas) {
    json arr = json::array();
    for (long long l : lambdas) arr.push_back(l);
    return json{{"solutions", arr}};
}

// Slice evidence on the negative definite branch: lambda equation, square
// determinant requirement, and the vanishing-class counts on V for every
// lambda factorization.
void attach_slice_evidence(ObstructionReport& rep) {
    const PretzelKnot& k = rep.knot;
    rep.lambda_set = lambda_solutions(k.p, k.q, k.r);
    rep.certificate.push_back({"lambda_solutions", lambda_entry(rep.lambda_set)});

    json req{{"determinant", to_i64(rep.determinant)}};
    try {
        Int root = required_vanishing(rep.determinant);
        rep.required = root;
        req["square"] = true;
        req["required"] = to_i64(root);
    } catch (const NotASquareError&) {
        req["square"] = false;
    }
    rep.certificate.push_back({"required_vanishing", req});

    if (rep.lambda_set.empty()) return;
    IntMatrix g = incidence_matrix(reduced_pretzel_graph(k.p, k.q, k.r));
    for (long long l : rep.lambda_set) {
        IntMatrix a = build_A(k.p, k.r, l);
        VanishingClasses vc = vanishing_on_V(g, a);
        Int order_v = abs_int(det_exact(a));
        Int count(vc.count());
        if (!rep.vanishing || count > *rep.vanishing) rep.vanishing = count;
        rep.certificate.push_back({"vanishing_on_V",
                                   json{{"lambda", l},
                                        {"subgroup_order", to_i64(order_v)},
                                        {"count", to_i64(count)},
                                        {"ell_bound", k.p + k.r + 1}}});
    }
}

} // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Ribbon: return "Ribbon";
        case Verdict::InfiniteOrder: return "InfiniteOrder";
        case Verdict::SliceCandidate: return "SliceCandidate";
        case Verdict::OutOfScope: return "OutOfScope";
    }
    throw Error("unreachable verdict");
}

Verdict verdict_from_name(const std::string& name) {
    if (name == "Ribbon") return Verdict::Ribbon;
    if (name == "InfiniteOrder") return Verdict::InfiniteOrder;
    if (name == "SliceCandidate") return Verdict::SliceCandidate;
    if (name == "OutOfScope") return Verdict::OutOfScope;
    throw Error("unknown verdict name: " + name);
}

ObstructionReport classify(long long p, long long q, long long r) {
    const auto start = std::chrono::steady_clock::now();
    ObstructionReport rep;
    rep.knot = normalize(p, q, r);
    const PretzelKnot& k = rep.knot;
    const Int x = pqr_sum(k);
    rep.determinant = abs_int(x);
    rep.signature = signature(k);

    const bool rib = ribbon_condition(k);
    rep.certificate.push_back({"ribbon_condition",
                               json{{"p_plus_q", k.p + k.q},
                                    {"q_plus_r", k.q + k.r},
                                    {"p_plus_r", k.p + k.r},
                                    {"holds", rib}}});

    const long long min_abs = std::min({std::abs(k.p), std::abs(k.q), std::abs(k.r)});
    if (min_abs == 1) {
        // 2-bridge territory; report reference data instead of a verdict.
        rep.verdict = Verdict::OutOfScope;
        rep.branch = "out_of_scope";
        // Twist shapes: (1,q,1) directly, and the all-positive (1,1,x) which
        // is P(1,x,1) after a cyclic shift.
        if ((k.p == 1 && k.r == 1) || (k.p == 1 && k.q == 1)) {
            ObstructionReport tw = twist_knot_report(k.r == 1 ? k.q : k.r);
            rep.finite_order_candidate = tw.finite_order_candidate;
            rep.certificate.push_back({"twist_report", report_to_json(tw)});
        } else {
            // Rotate a unit strand into the last slot; mirror first when that
            // strand is -1.  The remaining pair feeds the lens parameters.
            long long unit, b, c;
            if (std::abs(k.p) == 1) {
                unit = k.p;
                b = k.q;
                c = k.r;
            } else if (std::abs(k.q) == 1) {
                unit = k.q;
                b = k.p;
                c = k.r;
            } else {
                unit = k.r;
                b = k.p;
                c = k.q;
            }
            if (unit == -1) {
                b = -b;
                c = -c;
            }
            if (b > c) std::swap(b, c);
            auto lens = two_bridge_lens(b, c);
            rep.certificate.push_back({"two_bridge_lens",
                                       json{{"strands", json::array({b, c})},
                                            {"order", to_i64(lens.first)},
                                            {"twist", to_i64(lens.second)}}});
        }
        // P(t, -(t+2), 1) knots are amphicheiral of order two; flag them.
        {
            long long s[3] = {k.p, k.q, k.r};
            bool amphi = false;
            for (int i = 0; i < 3; ++i) {
                long long u = s[(i + 1) % 3], v = s[(i + 2) % 3];
                if ((s[i] == 1 && u + v == -2) || (s[i] == -1 && u + v == 2)) amphi = true;
            }
            if (amphi)
                rep.certificate.push_back({"amphichiral_candidate", json{{"holds", true}}});
        }
        rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        return rep;
    }

    rep.certificate.push_back(
        {"signature", json{{"value", rep.signature}, {"pq_qr_pr", to_i64(x)}}});

    if (!rib && x >= 0) {
        // Nonzero signature: no power of the knot is slice.
        rep.verdict = Verdict::InfiniteOrder;
        rep.branch = "signature";
    } else {
        // Normalized to p,r >= 3, q <= -3 with pq+qr+pr < 0, so the reduced
        // plumbing is negative definite and the lattice arguments apply.
        rep.certificate.push_back(
            {"negative_definite", json{{"holds", true}, {"det", to_i64(-x)}}});
        attach_slice_evidence(rep);

        if (rib) {
            rep.verdict = Verdict::Ribbon;
            rep.branch = "ribbon";
        } else {
            OrderBoundResult ob = order_bound_test(k.p, k.q, k.r, 2);
            rep.certificate.push_back({"order_bound",
                                       json{{"lhs", to_i64(ob.lhs)},
                                            {"rhs", to_i64(ob.rhs)},
                                            {"fires", ob.fires}}});
            if (ob.fires) {
                rep.branch = "order_bound";
            } else {
                const long long minus_q = -k.q;
                const long long special = k.p + k.r + std::min(k.p, k.r);
                if (minus_q != special) {
                    // Diagonal entries of any B factorization force
                    // -q into {p, r, p+r+min}; p and r are the ribbon case.
                    rep.certificate.push_back(
                        {"b_matrix_constraint",
                         json{{"minus_q", minus_q},
                              {"allowed", json::array({k.p, k.r, special})},
                              {"fires", true}}});
                    rep.branch = "b_matrix_constraint";
                } else {
                    RefinedCountResult rc = refined_count_test(k.p, k.q, k.r);
                    rep.certificate.push_back({"refined_count",
                                               json{{"max_vanishing", to_i64(rc.max_vanishing)},
                                                    {"required", to_i64(rc.required)},
                                                    {"fires", rc.fires}}});
                    rep.branch = "refined_count";
                }
            }
            rep.verdict = Verdict::InfiniteOrder;
        }
    }

    rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

OrderBoundResult order_bound_test(long long p, long long q, long long r, int n) {
    if (p < 3 || r < 3 || q > -3 || !is_odd(p) || !is_odd(q) || !is_odd(r))
        throw OutOfRangeError("need odd p,r >= 3 and q <= -3");
    if (n < 1) throw OutOfRangeError("n must be positive");
    Int lhs = abs_int(pqr_sum(p, q, r));
    Int sum = Int(p) + Int(r) + 1;
    Int rhs = sum * sum;
    return {lhs, rhs, lhs > rhs};
}

RefinedCountResult refined_count_test(long long p, long long q, long long r) {
    if (p < 3 || r < 3 || q > -3 || !is_odd(p) || !is_odd(q) || !is_odd(r))
        throw OutOfRangeError("need odd p,r >= 3 and q <= -3");
    if (-q != p + r + std::min(p, r))
        throw WrongCaseError("refined count applies only when -q = p+r+min{p,r}");
    Int sum = Int(p) + Int(r) + 1;
    Int max_vanishing = sum * sum - 2 * (Int(std::max(p, r)) + 1);
    Int required = Int(-q) * (Int(p) + Int(r)) - Int(p) * Int(r);
    return {max_vanishing, required, required > max_vanishing};
}

ObstructionReport twist_knot_report(long long q) {
    if (!is_odd(q)) throw EvenParameterError("twist parameter must be odd");
    if (q == 0) throw ZeroParameterError("twist parameter is zero");

    ObstructionReport rep;
    rep.knot = PretzelKnot{1, q, 1, false};
    const Int x = pqr_sum(rep.knot); // 2q + 1
    rep.determinant = abs_int(x);
    rep.signature = signature(rep.knot);

    if (q > 0) {
        rep.certificate.push_back(
            {"signature", json{{"value", rep.signature}, {"pq_qr_pr", to_i64(x)}}});
        rep.verdict = Verdict::InfiniteOrder;
        rep.branch = "signature";
        return rep;
    }

    const Int det = rep.determinant; // -2q - 1
    json det_entry{{"determinant", to_i64(det)}};
    auto root = exact_sqrt(det);
    if (root) {
        rep.required = *root;
        det_entry["square"] = true;
        det_entry["ell"] = to_i64(*root);
    } else {
        det_entry["square"] = false;
    }
    rep.certificate.push_back({"twist_determinant", det_entry});

    // lambda^2 + (lambda+1)^2 = -q gives the factorization of the 2x2 form.
    const long long bound = 1 + static_cast<long long>(isqrt_floor(Int(-q)));
    for (long long l = -bound; l <= bound; ++l)
        if (l * l + (l + 1) * (l + 1) == -q) rep.lambda_set.push_back(l);
    rep.certificate.push_back({"lambda_solutions", lambda_entry(rep.lambda_set)});

    if (!rep.lambda_set.empty()) {
        IntMatrix g{{Int(-2), Int(1)}, {Int(1), Int(q)}};
        long long l = rep.lambda_set.front();
        IntMatrix a{{Int(1), Int(-1)}, {Int(l), Int(l + 1)}};
        VanishingClasses vc = vanishing_on_V(g, a);
        rep.vanishing = Int(vc.count());
        rep.certificate.push_back({"vanishing_on_V",
                                   json{{"lambda", l},
                                        {"subgroup_order", to_i64(abs_int(det_exact(a)))},
                                        {"count", to_i64(*rep.vanishing)},
                                        {"ell_bound", 3}}});
    }

    rep.certificate.push_back({"order_bound",
                               json{{"lhs", to_i64(det)}, {"rhs", 9}, {"fires", det > 9}}});
    if (det == 1 || det == 9) {
        rep.verdict = Verdict::SliceCandidate;
        rep.branch = "twist_slice_candidate";
    } else if (det > 9) {
        rep.verdict = Verdict::InfiniteOrder;
        rep.branch = "order_bound";
    } else {
        // det = 5: not slice (not a square) but below the counting bound, so
        // finite order is not obstructed here.
        rep.verdict = Verdict::OutOfScope;
        rep.branch = "twist_finite_order_candidate";
        rep.finite_order_candidate = true;
        rep.certificate.push_back(
            {"finite_order_candidate", json{{"determinant", to_i64(det)}, {"bound", 9}}});
    }
    return rep;
}

std::vector<ObstructionReport> fintushel_stern_scan(long long bound) {
    if (bound > 100000) throw OutOfRangeError("scan bound too large");
    std::vector<ObstructionReport> out;
    std::set<std::tuple<long long, long long, long long>> seen;
    for (long long p = -bound; p <= bound; p += 2) {
        if (std::abs(p) < 3) continue;
        for (long long q = -bound; q <= bound; q += 2) {
            if (std::abs(q) < 3) continue;
            if (p + q == 0) continue; // pq+qr+pr = pq = -1 impossible here
            long long num = -(1 + p * q);
            if (num % (p + q) != 0) continue;
            long long r = num / (p + q);
            if (std::abs(r) < 3 || std::abs(r) > bound || !is_odd(r)) continue;
            PretzelKnot k = normalize(p, q, r);
            if (!seen.insert({k.p, k.q, k.r}).second) continue;
            out.push_back(classify(k.p, k.q, k.r));
        }
    }
    std::sort(out.begin(), out.end(), [](const ObstructionReport& a, const ObstructionReport& b) {
        return std::tie(a.knot.p, a.knot.q, a.knot.r) < std::tie(b.knot.p, b.knot.q, b.knot.r);
    });
    return out;
}

nlohmann::json report_to_json(const ObstructionReport& r) {
    json cert = json::array();
    for (const auto& e : r.certificate) cert.push_back(json{{"test", e.test}, {"data", e.data}});
    return json{{"schema", 1},
                {"knot",
                 json{{"p", r.knot.p}, {"q", r.knot.q}, {"r", r.knot.r},
                      {"mirrored", r.knot.mirrored}}},
                {"verdict", verdict_name(r.verdict)},
                {"certificate", cert}};
}

ObstructionReport report_from_json(const nlohmann::json& j) {
    if (j.at("schema").get<int>() != 1) throw Error("unsupported report schema");
    ObstructionReport r;
    const auto& k = j.at("knot");
    r.knot.p = k.at("p").get<long long>();
    r.knot.q = k.at("q").get<long long>();
    r.knot.r = k.at("r").get<long long>();
    r.knot.mirrored = k.at("mirrored").get<bool>();
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    for (const auto& e : j.at("certificate"))
        r.certificate.push_back({e.at("test").get<std::string>(), e.at("data")});
    return r;
}

} // namespace pretzel
