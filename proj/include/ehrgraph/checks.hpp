#pragma once

#include "ehrgraph/ehrhart.hpp"
#include "ehrgraph/random_graphs.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ehrgraph {

// One named check on one instance. Failing reports always carry a
// witness; conjectural marks hypergraph-mode checks, whose failures are
// counterexample candidates rather than bugs.
struct CheckReport {
    std::string check;
    std::string instance;
    bool pass = false;
    bool conjectural = false;
    std::string witness;
    double time_ms = 0.0;
};

// Equality ignores timing (excluded from golden comparisons).
bool operator==(const CheckReport& a, const CheckReport& b);

struct SuiteOptions {
    std::uint64_t seed = 1;
    int trials = 20;
    int min_d = 3;
    int max_d = 8;
};

inline constexpr const char* kCheckNames[] = {"theorem3", "reciprocity",
                                              "reflexive-shift", "palindrome"};

bool valid_check_name(const std::string& which); // one of the four, or "all"

// Interior counts vanish below k, then replay the closed counts up to
// t_max (default d + 5).
CheckReport run_theorem3_check(const ConstraintPolytope& p, const std::string& instance,
                               long t_max = 0);

// Interpolated (-1)^d L(-t) against interior counts, t = 1..t_max.
CheckReport run_reciprocity_check(const ConstraintPolytope& p, const std::string& instance,
                                  long t_max = 3);

// Dilated polytope satisfies the reflexivity count identity, t = 1..t_max.
CheckReport run_reflexive_shift_check(const ConstraintPolytope& p,
                                      const std::string& instance, long t_max = 4);

// Polynomiality guard, then palindromicity/nonnegativity/degree of h*.
CheckReport run_palindrome_check(const ConstraintPolytope& p, const std::string& instance,
                                 bool conjectural = false);

// Selected checks (one of kCheckNames or "all") on a single instance,
// reports in the fixed name order above.
std::vector<CheckReport> run_instance_checks(const std::string& which,
                                             const ConstraintPolytope& p,
                                             const std::string& instance,
                                             bool conjectural = false);

// Seeded suite over random connected bipartite graphs; the seed fully
// determines every instance and hence every report.
std::vector<CheckReport> run_random_suite(const std::string& which, const SuiteOptions& opt);

void render_text(std::ostream& out, const std::vector<CheckReport>& reports, bool timing);
void render_csv(std::ostream& out, const std::vector<CheckReport>& reports, bool timing);
void render_json(std::ostream& out, const std::vector<CheckReport>& reports, bool timing);

std::vector<CheckReport> parse_reports_json(std::istream& in);

} // namespace ehrgraph
