#pragma once

#include <string>
#include <vector>

namespace tableaux {

// One verified fact. When a check fails, detail carries the expected and
// actual values or a concrete counterexample; passing checks leave it
// empty so that repeated runs stay byte-identical.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    int min_n = 0;
    int max_n = 0;  // upper bound actually used, after clamping
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// The available suites, in a fixed order.
const std::vector<std::string>& suite_ids();
bool is_suite_id(const std::string& id);

// Largest n a suite runs at when nothing is passed on the command line;
// chosen so every suite finishes in desk-scale time.
int suite_default_max_n(const std::string& id);

// Hard ceiling for a suite, set by the enumeration limits of the families
// it touches. max_n may exceed the default (slow but allowed) yet is
// always clamped here.
int suite_hard_max_n(const std::string& id);

// Runs one suite with its range clamped to min(max_n, hard maximum).
// Unknown ids throw std::invalid_argument.
SuiteReport run_suite(const std::string& id, int max_n);

// Named single-n checks for the harness: the three tableau maps (alpha,
// gamma, zeta), the corner-run correspondence, the rectangle-word matching
// (n is rows + cols there) and the two label contracts.
const std::vector<std::string>& bijection_names();
bool is_bijection_name(const std::string& name);
int bijection_min_n(const std::string& name);
int bijection_default_max_n(const std::string& name);
int bijection_hard_max_n(const std::string& name);

// Runs one named check at a single n, clamped into its valid range.
SuiteReport run_bijection_check(const std::string& name, int n);

}  // namespace tableaux
