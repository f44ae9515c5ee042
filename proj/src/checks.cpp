#include "ehrgraph/checks.hpp"

#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ehrgraph {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string shift_witness(const ShiftReport& r) {
    std::ostringstream out;
    out << "t = " << r.witness_t << ": expected " << r.expected.get_str() << ", got "
        << r.actual.get_str();
    return out.str();
}

std::string hstar_string(const HStarVector& hs) {
    std::ostringstream out;
    out << "(";
    for (size_t j = 0; j < hs.h.size(); ++j) {
        if (j)
            out << ", ";
        out << hs.h[j].get_str();
    }
    out << ")";
    return out.str();
}

std::string quasi_witness(const PolynomialityReport& r) {
    std::ostringstream out;
    out << "quasi-polynomial detected: predicted L(" << r.witness_t << ") = "
        << r.predicted.get_str() << ", counted " << r.actual.get_str();
    return out.str();
}

} // namespace

bool operator==(const CheckReport& a, const CheckReport& b) {
    return a.check == b.check && a.instance == b.instance && a.pass == b.pass &&
           a.conjectural == b.conjectural && a.witness == b.witness;
}

bool valid_check_name(const std::string& which) {
    if (which == "all")
        return true;
    for (const char* name : kCheckNames)
        if (which == name)
            return true;
    return false;
}

CheckReport run_theorem3_check(const ConstraintPolytope& p, const std::string& instance,
                               long t_max) {
    const auto start = Clock::now();
    CheckReport report{"theorem3", instance, false, false, "", 0.0};
    const auto cert = regularity(p);
    if (!cert) {
        report.witness = "rows have no constant sum; the interior-shift identity needs one";
        report.time_ms = ms_since(start);
        return report;
    }
    if (t_max <= 0)
        t_max = p.dimension + 5;
    const ShiftReport r = interior_shift_check(p, cert->k, t_max);
    report.pass = r.pass;
    if (!r.pass)
        report.witness = shift_witness(r);
    report.time_ms = ms_since(start);
    return report;
}

CheckReport run_reciprocity_check(const ConstraintPolytope& p, const std::string& instance,
                                  long t_max) {
    const auto start = Clock::now();
    CheckReport report{"reciprocity", instance, false, false, "", 0.0};
    const ShiftReport r = reciprocity_check(p, t_max);
    report.pass = r.pass;
    if (!r.pass)
        report.witness = shift_witness(r);
    report.time_ms = ms_since(start);
    return report;
}

CheckReport run_reflexive_shift_check(const ConstraintPolytope& p, const std::string& instance,
                                      long t_max) {
    const auto start = Clock::now();
    CheckReport report{"reflexive-shift", instance, false, false, "", 0.0};
    const auto cert = regularity(p);
    if (!cert) {
        report.witness = "rows have no constant sum; the dilated polytope is undefined";
        report.time_ms = ms_since(start);
        return report;
    }
    const DilatedReflexive q = dilate_reflexive(p, *cert);
    const ShiftReport r = reflexive_shift_check(q, t_max);
    report.pass = r.pass;
    if (!r.pass)
        report.witness = shift_witness(r);
    report.time_ms = ms_since(start);
    return report;
}

CheckReport run_palindrome_check(const ConstraintPolytope& p, const std::string& instance,
                                 bool conjectural) {
    const auto start = Clock::now();
    CheckReport report{"palindrome", instance, false, conjectural, "", 0.0};
    const PolynomialityReport poly = verify_polynomiality(p);
    if (!poly.polynomial) {
        report.witness = quasi_witness(poly);
        report.time_ms = ms_since(start);
        return report;
    }
    const int d = p.dimension;
    std::vector<Int> counts;
    counts.reserve(static_cast<size_t>(d) + 1);
    for (long t = 0; t <= d; ++t)
        counts.push_back(count_points(p, t));
    const HStarVector hs = hstar_from_counts(counts, d);
    const auto cert = regularity(p);
    const PalindromeReport r = palindrome_check(hs, cert ? cert->k : d + 1);
    std::ostringstream witness;
    if (!r.palindromic)
        witness << "h* = " << hstar_string(hs) << " is not palindromic (first mismatch at index "
                << (r.witness_index ? *r.witness_index : 0) << ")";
    else if (!r.nonnegative)
        witness << "h* = " << hstar_string(hs) << " has a negative coefficient";
    else if (cert && !r.expected_clamped && !r.degree_matches)
        witness << "h* = " << hstar_string(hs) << " has degree " << r.effective_degree
                << ", expected " << r.expected_degree;
    const bool degree_ok = !cert || r.expected_clamped || r.degree_matches;
    report.pass = r.palindromic && r.nonnegative && degree_ok;
    if (!report.pass)
        report.witness = witness.str();
    report.time_ms = ms_since(start);
    return report;
}

std::vector<CheckReport> run_instance_checks(const std::string& which,
                                             const ConstraintPolytope& p,
                                             const std::string& instance, bool conjectural) {
    if (!valid_check_name(which))
        throw std::invalid_argument("unknown check: " + which);
    std::vector<CheckReport> reports;
    const bool all = which == "all";
    if (all || which == "theorem3")
        reports.push_back(run_theorem3_check(p, instance));
    if (all || which == "reciprocity")
        reports.push_back(run_reciprocity_check(p, instance));
    if (all || which == "reflexive-shift")
        reports.push_back(run_reflexive_shift_check(p, instance));
    if (all || which == "palindrome")
        reports.push_back(run_palindrome_check(p, instance, conjectural));
    if (conjectural)
        for (CheckReport& r : reports) {
            r.conjectural = true;
            // A failing conjectural check is evidence against the
            // conjecture, not a bug in the implementation.
            if (!r.pass && !r.witness.empty())
                r.witness = "counterexample candidate: " + r.witness;
        }
    return reports;
}

std::vector<CheckReport> run_random_suite(const std::string& which, const SuiteOptions& opt) {
    if (!valid_check_name(which))
        throw std::invalid_argument("unknown check: " + which);
    if (opt.trials < 1 || opt.min_d < 2 || opt.max_d < opt.min_d)
        throw std::invalid_argument("bad suite options");
    SplitMix64 rng(opt.seed);
    std::vector<CheckReport> reports;
    for (int trial = 0; trial < opt.trials; ++trial) {
        const int d = opt.min_d +
                      static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_d - opt.min_d) + 1));
        const Graph g = random_connected_bipartite(d, rng);
        const ConstraintPolytope p = from_graph(g);
        std::ostringstream instance;
        instance << "trial " << trial << ": " << p.name;
        auto batch = run_instance_checks(which, p, instance.str(), false);
        reports.insert(reports.end(), batch.begin(), batch.end());
    }
    return reports;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_ms(double ms) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << ms;
    return out.str();
}

} // namespace

void render_text(std::ostream& out, const std::vector<CheckReport>& reports, bool timing) {
    size_t passed = 0;
    for (const CheckReport& r : reports) {
        out << (r.pass ? "PASS" : "FAIL") << " " << r.check;
        if (r.conjectural)
            out << " [conjecture (hypergraph mode)]";
        out << " " << r.instance;
        if (!r.witness.empty())
            out << " -- " << r.witness;
        if (timing)
            out << " [" << format_ms(r.time_ms) << " ms]";
        out << "\n";
        if (r.pass)
            ++passed;
    }
    out << passed << "/" << reports.size() << " checks passed\n";
}

void render_csv(std::ostream& out, const std::vector<CheckReport>& reports, bool timing) {
    out << "check,instance,pass,conjectural,witness";
    if (timing)
        out << ",time_ms";
    out << "\n";
    for (const CheckReport& r : reports) {
        out << csv_escape(r.check) << "," << csv_escape(r.instance) << ","
            << (r.pass ? "true" : "false") << "," << (r.conjectural ? "true" : "false") << ","
            << csv_escape(r.witness);
        if (timing)
            out << "," << format_ms(r.time_ms);
        out << "\n";
    }
}

void render_json(std::ostream& out, const std::vector<CheckReport>& reports, bool timing) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckReport& r : reports) {
        nlohmann::ordered_json obj;
        obj["check"] = r.check;
        obj["instance"] = r.instance;
        obj["pass"] = r.pass;
        obj["conjectural"] = r.conjectural;
        obj["witness"] = r.witness;
        if (timing)
            obj["time_ms"] = r.time_ms;
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << "\n";
}

std::vector<CheckReport> parse_reports_json(std::istream& in) {
    nlohmann::json arr = nlohmann::json::parse(in);
    if (!arr.is_array())
        throw std::runtime_error("report JSON must be an array");
    std::vector<CheckReport> reports;
    reports.reserve(arr.size());
    for (const auto& obj : arr) {
        CheckReport r;
        r.check = obj.at("check").get<std::string>();
        r.instance = obj.at("instance").get<std::string>();
        r.pass = obj.at("pass").get<bool>();
        r.conjectural = obj.at("conjectural").get<bool>();
        r.witness = obj.at("witness").get<std::string>();
        if (obj.contains("time_ms"))
            r.time_ms = obj["time_ms"].get<double>();
        reports.push_back(std::move(r));
    }
    return reports;
}

} // namespace ehrgraph
