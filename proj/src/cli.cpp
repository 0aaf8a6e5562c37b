#include "pretzel/cli.hpp"

#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pretzel/classify.hpp"
#include "pretzel/d_oracle.hpp"
#include "pretzel/errors.hpp"
#include "pretzel/forest.hpp"
#include "pretzel/graph_io.hpp"
#include "pretzel/lattice_embedding.hpp"
#include "pretzel/scan.hpp"
#include "pretzel/spinc.hpp"

namespace pretzel {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnsupported = 3;

std::string rat_str(const Rat& v) {
    Int num = numerator(v), den = denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string coords_str(const SpincClass& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.coords.size(); ++i) {
        if (i) out += ",";
        out += s.coords[i].str();
    }
    return out + ")";
}

void print_report_human(const ObstructionReport& rep, std::ostream& out) {
    switch (rep.verdict) {
        case Verdict::Ribbon: out << "Ribbon (slice)"; break;
        case Verdict::InfiniteOrder: out << "InfiniteOrder"; break;
        case Verdict::SliceCandidate: out << "SliceCandidate"; break;
        case Verdict::OutOfScope: out << "OutOfScope"; break;
    }
    out << "  P(" << rep.knot.p << "," << rep.knot.q << "," << rep.knot.r << ")"
        << (rep.knot.mirrored ? " [mirrored]" : "") << "\n";
    out << "  determinant " << rep.determinant.str() << ", signature " << rep.signature;
    if (!rep.lambda_set.empty()) {
        out << ", lambda {";
        for (std::size_t i = 0; i < rep.lambda_set.size(); ++i)
            out << (i ? ";" : "") << rep.lambda_set[i];
        out << "}";
    }
    if (rep.vanishing) out << ", vanishing " << rep.vanishing->str();
    if (rep.required) out << ", required " << rep.required->str();
    if (rep.finite_order_candidate) out << ", finite-order candidate";
    out << "\n  decided by: " << rep.branch << "\n";
}

bool parse_range(const std::string& text, long long& lo, long long& hi) {
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            lo = hi = std::stoll(text);
        } else {
            lo = std::stoll(text.substr(0, colon));
            hi = std::stoll(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

int cmd_classify(long long p, long long q, long long r, bool as_json, std::ostream& out) {
    ObstructionReport rep = classify(p, q, r);
    if (as_json)
        out << report_to_json(rep).dump(2) << "\n";
    else
        print_report_human(rep, out);
    return kExitOk;
}

int cmd_twist(long long q, bool as_json, std::ostream& out) {
    ObstructionReport rep = twist_knot_report(q);
    if (as_json) {
        out << report_to_json(rep).dump(2) << "\n";
        return kExitOk;
    }
    print_report_human(rep, out);
    if (rep.required) out << "  ell = " << rep.required->str() << " (bound 3)\n";
    return kExitOk;
}

int cmd_scan(const std::string& p_range, const std::string& q_range, const std::string& r_range,
             const std::string& filter_name, long long bound, bool as_json, unsigned threads,
             std::ostream& out, std::ostream& err) {
    ScanFilter filter = ScanFilter::All;
    if (filter_name == "slice")
        filter = ScanFilter::Slice;
    else if (filter_name == "infinite")
        filter = ScanFilter::Infinite;
    else if (filter_name == "trivial-alexander")
        filter = ScanFilter::TrivialAlexander;
    else if (!filter_name.empty()) {
        err << "unknown filter: " << filter_name << "\n";
        return kExitUsage;
    }

    std::vector<ObstructionReport> reports;
    if (filter == ScanFilter::TrivialAlexander && p_range.empty() && q_range.empty() &&
        r_range.empty()) {
        reports = fintushel_stern_scan(bound);
    } else {
        ScanSpec spec;
        if (!parse_range(p_range.empty() ? "3:15" : p_range, spec.p_lo, spec.p_hi) ||
            !parse_range(q_range.empty() ? "-15:-3" : q_range, spec.q_lo, spec.q_hi) ||
            !parse_range(r_range.empty() ? "3:15" : r_range, spec.r_lo, spec.r_hi)) {
            err << "malformed range\n";
            return kExitInvalid;
        }
        reports = run_scan(spec, threads);
    }
    reports = apply_filter(std::move(reports), filter);

    if (as_json)
        out << scan_to_json(reports).dump(2) << "\n";
    else
        out << scan_to_csv(reports);
    return kExitOk;
}

int cmd_dinv(const std::string& path, bool oracle, long long class_index, std::ostream& out,
             std::ostream& err) {
    WeightedForest f = load_forest_file(path);
    IntMatrix g = incidence_matrix(f);
    DInvariantCalculator calc(g);
    std::vector<SpincClass> classes = calc.space().all_classes();
    if (class_index >= 0) {
        if (static_cast<std::size_t>(class_index) >= classes.size()) {
            err << "class index out of range (have " << classes.size() << ")\n";
            return kExitInvalid;
        }
        classes = {classes[static_cast<std::size_t>(class_index)]};
    }
    bool all_match = true;
    for (const auto& s : classes) {
        Rat d = calc.d_invariant(s);
        out << coords_str(s) << "  " << rat_str(d);
        if (oracle) {
            Rat ref = d_invariant_oracle(g, s);
            if (ref != d) {
                all_match = false;
                out << "  ORACLE " << rat_str(ref);
            }
        }
        out << "\n";
    }
    if (oracle) {
        out << (all_match ? "MATCH" : "MISMATCH") << "\n";
        if (!all_match) return kExitUsage;
    }
    return kExitOk;
}

int cmd_embed(const std::string& path, long long rank, std::ostream& out) {
    WeightedForest f = load_forest_file(path);
    IntMatrix g = incidence_matrix(f);
    std::size_t target = rank < 0 ? g.rows() : static_cast<std::size_t>(rank);
    auto embeddings = find_embeddings(g, target);
    for (const auto& e : embeddings) {
        for (std::size_t i = 0; i < e.phi.rows(); ++i) {
            for (std::size_t j = 0; j < e.phi.cols(); ++j)
                out << (j ? " " : "") << e.phi.at(i, j).str();
            out << "\n";
        }
        out << "\n";
    }
    out << "count " << embeddings.size() << "\n";
    return kExitOk;
}

int cmd_order(long long p, long long q, long long r, int n, long long search_n,
              long long bound, std::ostream& out) {
    OrderBoundResult ob = order_bound_test(p, q, r, n);
    out << "order_bound: lhs " << ob.lhs.str() << " rhs " << ob.rhs.str() << " fires "
        << (ob.fires ? "true" : "false") << "\n";
    if (-q == p + r + std::min(p, r)) {
        RefinedCountResult rc = refined_count_test(p, q, r);
        out << "refined_count: max_vanishing " << rc.max_vanishing.str() << " required "
            << rc.required.str() << " fires " << (rc.fires ? "true" : "false") << "\n";
    } else {
        out << "refined_count: n/a (-q != p+r+min{p,r})\n";
    }
    if (search_n > 0) {
        auto bs = bound > 0 ? search_B_matrices(p, q, r, static_cast<std::size_t>(search_n), bound)
                            : search_B_matrices(p, q, r, static_cast<std::size_t>(search_n));
        for (const auto& bm : bs) {
            for (std::size_t i = 0; i < bm.b.rows(); ++i) {
                for (std::size_t j = 0; j < bm.b.cols(); ++j)
                    out << (j ? " " : "") << bm.b.at(i, j).str();
                out << "\n";
            }
            out << "\n";
        }
        out << "solutions " << bs.size() << "\n";
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact sliceness and concordance-order obstructions for odd 3-strand "
                 "pretzel knots"};
    app.require_subcommand(1);

    // classify
    long long cp = 0, cq = 0, cr = 0;
    bool classify_json = false;
    auto* classify_cmd = app.add_subcommand("classify", "Classify P(p,q,r)");
    classify_cmd->add_option("p", cp)->required();
    classify_cmd->add_option("q", cq)->required();
    classify_cmd->add_option("r", cr)->required();
    classify_cmd->add_flag("--json", classify_json);

    // scan
    std::string sp, sq, sr, sfilter;
    long long sbound = 99;
    bool scan_json = false;
    unsigned sthreads = 0;
    auto* scan_cmd = app.add_subcommand("scan", "Classify a parameter box");
    scan_cmd->add_option("--p", sp, "range lo:hi (odd)");
    scan_cmd->add_option("--q", sq, "range lo:hi (odd)");
    scan_cmd->add_option("--r", sr, "range lo:hi (odd)");
    scan_cmd->add_option("--filter", sfilter, "slice | infinite | trivial-alexander");
    scan_cmd->add_option("--bound", sbound, "bound for --filter trivial-alexander");
    scan_cmd->add_option("--threads", sthreads);
    scan_cmd->add_flag("--json", scan_json);

    // dinv
    std::string dfile;
    bool doracle = false;
    long long dclass = -1;
    auto* dinv_cmd = app.add_subcommand("dinv", "Correction terms of a plumbing graph");
    dinv_cmd->add_option("file", dfile)->required();
    dinv_cmd->add_flag("--oracle", doracle, "cross-check with brute-force enumeration");
    dinv_cmd->add_option("--class", dclass, "restrict to one class index");

    // embed
    std::string efile;
    long long erank = -1;
    auto* embed_cmd = app.add_subcommand("embed", "Diagonal-lattice embeddings of a graph form");
    embed_cmd->add_option("file", efile)->required();
    embed_cmd->add_option("--rank", erank, "target rank (default: graph size)");

    // twist
    long long tq = 0;
    bool twist_json = false;
    auto* twist_cmd = app.add_subcommand("twist", "Twist knot P(1,q,1) report");
    twist_cmd->add_option("q", tq)->required();
    twist_cmd->add_flag("--json", twist_json);

    // order
    long long op = 0, oq = 0, orr = 0, osearch = 0, obound = 0;
    int on = 2;
    auto* order_cmd = app.add_subcommand("order", "Connected-sum order bounds");
    order_cmd->add_option("p", op)->required();
    order_cmd->add_option("q", oq)->required();
    order_cmd->add_option("r", orr)->required();
    order_cmd->add_option("--n", on, "connected-sum order for the bound");
    order_cmd->add_option("--search-b", osearch, "enumerate B matrices of this size");
    order_cmd->add_option("--bound", obound, "entry bound for the B search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(cp, cq, cr, classify_json, out);
        if (scan_cmd->parsed())
            return cmd_scan(sp, sq, sr, sfilter, sbound, scan_json, sthreads, out, err);
        if (dinv_cmd->parsed()) return cmd_dinv(dfile, doracle, dclass, out, err);
        if (embed_cmd->parsed()) return cmd_embed(efile, erank, out);
        if (twist_cmd->parsed()) return cmd_twist(tq, twist_json, out);
        if (order_cmd->parsed()) return cmd_order(op, oq, orr, on, osearch, obound, out);
    } catch (const UnsupportedGraphError& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const NotNegativeDefiniteError& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const EvenDeterminantError& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const Error& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitUsage;
}

} // namespace pretzel
