#include "tableaux/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "tableaux/bijection.hpp"
#include "tableaux/corner_run.hpp"
#include "tableaux/diagram.hpp"
#include "tableaux/formulas.hpp"
#include "tableaux/permutation.hpp"
#include "tableaux/polynomial.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

bool SuiteReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

namespace {

const std::array<std::string, 2> kAB{"a", "b"};
const std::array<std::string, 1> kX{"x"};
const std::array<std::string, 3> kXYZ{"x", "y", "z"};

std::string nstr(int n) { return "n=" + std::to_string(n); }

void push_int_check(SuiteReport& rep, std::string name, const Int& got, const Int& want) {
    CheckResult c{std::move(name), got == want, {}};
    if (!c.pass) c.detail = "expected " + want.str() + ", got " + got.str();
    rep.checks.push_back(std::move(c));
}

template <int N>
void push_poly_check(SuiteReport& rep, std::string name, const Poly<N>& got,
                     const Poly<N>& want,
                     const std::type_identity_t<std::array<std::string, N>>& vars) {
    CheckResult c{std::move(name), got == want, {}};
    if (!c.pass) c.detail = "expected " + want.text(vars) + ", got " + got.text(vars);
    rep.checks.push_back(std::move(c));
}

void push_flag_check(SuiteReport& rep, std::string name, bool pass, std::string detail) {
    CheckResult c{std::move(name), pass, {}};
    if (!pass) c.detail = std::move(detail);
    rep.checks.push_back(std::move(c));
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string brace_set(const std::vector<int>& v) { return "{" + join_ints(v) + "}"; }

std::string tab_text(const Tableau& t) {
    std::string s = "shape [" + join_ints(t.base_shape().row_lengths(), " ") + "]";
    if (!t.flat().empty()) s += " filling " + t.flat();
    return s;
}

// Compares two multisets of integer vectors; empty result means equal.
std::string multiset_diff(const std::map<std::vector<int>, long long>& lhs,
                          const std::map<std::vector<int>, long long>& rhs,
                          const char* lname, const char* rname) {
    for (const auto& [key, cnt] : lhs) {
        auto it = rhs.find(key);
        long long other = it == rhs.end() ? 0 : it->second;
        if (cnt != other)
            return "set " + brace_set(key) + ": " + std::to_string(cnt) + " " + lname + " vs " +
                   std::to_string(other) + " " + rname;
    }
    for (const auto& [key, cnt] : rhs)
        if (!lhs.count(key))
            return "set " + brace_set(key) + ": 0 " + std::string(lname) + " vs " +
                   std::to_string(cnt) + " " + rname;
    return {};
}

// Border-path column labels versus descent values, one n; empty on match.
std::string phi_diff(int n) {
    std::map<std::vector<int>, long long> tableaux_side, perm_side;
    for_each_tableau(Family::pt, n, [&](const Tableau& t) {
        std::vector<int> labels = border_path(t.base_shape()).col_labels;
        std::sort(labels.begin(), labels.end());
        ++tableaux_side[labels];
    });
    for_each_perm(n, [&](const Perm& p) { ++perm_side[descent_values(p)]; });
    return multiset_diff(tableaux_side, perm_side, "tableaux", "permutations");
}

// Same for the shifted family against signed permutations.
std::string xi_diff(int n) {
    std::map<std::vector<int>, long long> tableaux_side, perm_side;
    for_each_tableau(Family::ptb, n, [&](const Tableau& t) {
        std::vector<int> labels = border_path(t.base_shape()).col_labels;
        std::sort(labels.begin(), labels.end());
        ++tableaux_side[labels];
    });
    for_each_signed_perm(n, [&](const SignedPerm& s) {
        std::vector<int> entries = signed_descent_entries(s);
        for (int& e : entries) e = std::abs(e);
        ++perm_side[entries];
    });
    return multiset_diff(tableaux_side, perm_side, "tableaux", "signed permutations");
}

// Corner-to-run correspondence at one n; empty on pass.
std::string corners_runs_fail(int n) {
    std::map<RunRef, char> images;
    std::string fail;
    for_each_tableau(Family::tlt, n, [&](const Tableau& t) {
        if (!fail.empty()) return;
        for (Cell corner : corner_cells(t)) {
            RunRef ref = corner_to_run(t, corner);
            if (!images.emplace(ref, 1).second) {
                fail = "two corners map to " + join_ints(ref.perm, " ") + " position " +
                       std::to_string(ref.position);
                return;
            }
            auto [back, cell] = run_to_corner(ref);
            if (back != t || cell != corner) {
                fail = "corner (" + std::to_string(corner.row) + "," +
                       std::to_string(corner.col) + ") of " + tab_text(t) +
                       " does not return from " + join_ints(ref.perm, " ");
                return;
            }
        }
    });
    if (fail.empty()) {
        Int expected = run_count_total(n, 1);
        if (Int(images.size()) != expected)
            fail = "reached " + std::to_string(images.size()) + " runs, expected " +
                   expected.str();
    }
    return fail;
}

// Rectangle fillings against letter words for one rectangle; empty on pass.
std::string nat_word_fail(int rows, int cols) {
    Word letters;
    for (int v = -(cols - 1); v <= rows - 1; ++v) letters.push_back(v);
    long long words = 0;
    do {
        if (word_valid(letters, rows, cols)) ++words;
    } while (std::next_permutation(letters.begin(), letters.end()));

    std::string fail;
    long long nats = 0;
    std::map<Word, char> seen;
    Shape rect(rows + cols, std::vector<int>(static_cast<size_t>(rows), cols));
    for_each_filling(Family::tlt, rect, [&](const Tableau& t) {
        if (!fail.empty()) return;
        ++nats;
        Word w = nat_to_word(t);
        if (!seen.emplace(w, 1).second) {
            fail = "word " + join_ints(w, " ") + " reached twice";
            return;
        }
        if (word_to_nat(w, rows, cols) != t)
            fail = "word " + join_ints(w, " ") + " does not return to its tableau";
    });
    if (fail.empty() && nats != words)
        fail = std::to_string(nats) + " tableaux vs " + std::to_string(words) + " words";
    return fail;
}

SuiteReport suite_thmA(int max_n) {
    SuiteReport rep{"thmA", 1, max_n, {}};
    for (int n = 1; n <= max_n; ++n) {
        push_int_check(rep, nstr(n) + " permutation corners",
                       corner_count_enumerated(Family::pt, n),
                       *corner_count_closed(Family::pt, n));
        push_int_check(rep, nstr(n) + " alternative corners",
                       corner_count_enumerated(Family::at, n - 1),
                       *corner_count_closed(Family::at, n - 1));
        push_int_check(rep, nstr(n) + " tree-like corners",
                       corner_count_enumerated(Family::tlt, n),
                       *corner_count_closed(Family::tlt, n));
        Int split = 0;
        for (int i = 1; i < n; ++i) split += count_Ai(n, i);
        push_int_check(rep, nstr(n) + " ascent-descent split", split,
                       *corner_count_closed(Family::pt, n));
    }
    return rep;
}

SuiteReport suite_thmB(int max_n) {
    SuiteReport rep{"thmB", 1, max_n, {}};
    for (int n = 1; n <= max_n; ++n) {
        push_int_check(rep, nstr(n) + " type B permutation corners",
                       corner_count_enumerated(Family::ptb, n),
                       *corner_count_closed(Family::ptb, n));
        push_int_check(rep, nstr(n) + " symmetric alternative corners",
                       corner_count_enumerated(Family::atsym, n),
                       *corner_count_closed(Family::atsym, n));
        push_int_check(rep, nstr(n) + " symmetric tree-like corners",
                       corner_count_enumerated(Family::tltsym, n),
                       *corner_count_closed(Family::tltsym, n));
        Int split = 0;
        for (int i = 1; i < n; ++i) split += count_Bi(n, i);
        push_int_check(rep, nstr(n) + " signed ascent-descent split", split,
                       *corner_count_closed(Family::ptb, n));
    }
    return rep;
}

SuiteReport suite_prop_occupied(int max_n) {
    SuiteReport rep{"prop-occupied", 0, max_n, {}};
    for (int n = 0; n <= max_n; ++n)
        push_int_check(rep, nstr(n) + " occupied corners",
                       occupied_count_enumerated(Family::tlt, n),
                       *occupied_count_closed(Family::tlt, n));
    for (int n = 0; n <= std::min(max_n, 5); ++n)
        push_int_check(rep, nstr(n) + " symmetric occupied corners",
                       occupied_count_enumerated(Family::tltsym, n),
                       *occupied_count_closed(Family::tltsym, n));
    for (int n = 1; n <= std::min(max_n, 7); ++n) {
        push_poly_check(rep, nstr(n) + " weight sum", tlt_weight_sum(n), tab_poly(n), kAB);
        push_poly_check(rep, nstr(n) + " occupied weight sum", occupied_weight_sum(n),
                        tab_poly(n), kAB);
    }
    return rep;
}

SuiteReport suite_cor_noc(int max_n) {
    SuiteReport rep{"cor-noc", 0, max_n, {}};
    for (int n = 0; n <= max_n; ++n)
        push_int_check(rep, nstr(n) + " empty corners",
                       nonoccupied_count_enumerated(Family::tlt, n),
                       *nonoccupied_count_closed(Family::tlt, n));
    for (int n = 0; n <= std::min(max_n, 5); ++n)
        push_int_check(rep, nstr(n) + " symmetric empty corners",
                       nonoccupied_count_enumerated(Family::tltsym, n),
                       *nonoccupied_count_closed(Family::tltsym, n));
    return rep;
}

SuiteReport suite_cor32(int max_n) {
    SuiteReport rep{"cor32", 2, max_n, {}};
    for (int n = 2; n <= max_n; ++n)
        push_int_check(rep, nstr(n), corner_count_enumerated(Family::tlt, n),
                       corner_count_enumerated(Family::at, n - 1) + 2 * factorial(n - 1));
    return rep;
}

SuiteReport suite_cor34(int max_n) {
    SuiteReport rep{"cor34", 1, max_n, {}};
    for (int n = 1; n <= max_n; ++n)
        push_int_check(rep, nstr(n), corner_count_enumerated(Family::tltsym, n),
                       corner_count_enumerated(Family::atsym, n) + pow2(n) * factorial(n - 1));
    return rep;
}

SuiteReport suite_cor36(int max_n) {
    SuiteReport rep{"cor36", 2, max_n, {}};
    for (int n = 2; n <= max_n; ++n)
        push_int_check(rep, nstr(n), corner_count_enumerated(Family::at, n - 1),
                       corner_count_enumerated(Family::pt, n) - factorial(n - 1));
    return rep;
}

SuiteReport suite_cor39(int max_n) {
    SuiteReport rep{"cor39", 1, max_n, {}};
    for (int n = 1; n <= max_n; ++n)
        push_int_check(rep, nstr(n), corner_count_enumerated(Family::atsym, n),
                       2 * corner_count_enumerated(Family::ptb, n) + pow2(n - 1) * factorial(n));
    return rep;
}

SuiteReport suite_phi_contract(int max_n) {
    SuiteReport rep{"phi-contract", 1, max_n, {}};
    for (int n = 1; n <= max_n; ++n) {
        std::string diff = phi_diff(n);
        push_flag_check(rep, nstr(n), diff.empty(), diff);
    }
    return rep;
}

SuiteReport suite_xi_contract(int max_n) {
    SuiteReport rep{"xi-contract", 1, max_n, {}};
    for (int n = 1; n <= max_n; ++n) {
        std::string diff = xi_diff(n);
        push_flag_check(rep, nstr(n), diff.empty(), diff);
    }
    return rep;
}

SuiteReport suite_runs_eq1(int max_n) {
    SuiteReport rep{"runs-eq1", 2, max_n, {}};
    for (int n = 2; n <= max_n; ++n) {
        std::vector<Int> totals(static_cast<size_t>(n) + 1, 0);
        for_each_perm(n, [&](const Perm& p) {
            for (const Run& run : ascending_runs(p))
                ++totals[static_cast<size_t>(run.last - run.first) + 1];
        });
        for (int r = 1; r < n; ++r)
            push_int_check(rep, nstr(n) + " r=" + std::to_string(r),
                           totals[static_cast<size_t>(r)], runs_of_size_closed(n, r));
        push_int_check(rep, nstr(n) + " singleton runs count corners",
                       runs_of_size_closed(n, 1), *corner_count_closed(Family::tlt, n));
    }
    return rep;
}

SuiteReport suite_corners_runs(int max_n) {
    SuiteReport rep{"corners-runs", 1, max_n, {}};
    for (int n = 1; n <= max_n; ++n) {
        std::string fail = corners_runs_fail(n);
        push_flag_check(rep, nstr(n), fail.empty(), fail);
    }
    return rep;
}

SuiteReport suite_nat_words(int max_n) {
    SuiteReport rep{"nat-words", 2, max_n, {}};
    for (int total = 2; total <= max_n; ++total) {
        for (int r = 1; r < total; ++r) {
            int c = total - r;
            std::string fail = nat_word_fail(r, c);
            push_flag_check(rep, "rows=" + std::to_string(r) + " cols=" + std::to_string(c),
                            fail.empty(), fail);
        }
    }
    return rep;
}

SuiteReport suite_lemma_euler(int max_n) {
    SuiteReport rep{"lemma-euler", 1, max_n, {}};
    Poly2 a = Poly2::var(0), b = Poly2::var(1);
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Poly2> row = eulerian_row(n);
        bool rec_ok = true;
        std::string detail;
        for (int k = 1; k <= n; ++k) {
            Poly2 enumd = eulerian_enumerated(n, k);
            if (enumd != row[static_cast<size_t>(k) - 1]) {
                rec_ok = false;
                detail = "k=" + std::to_string(k) + ": recurrence " +
                         row[static_cast<size_t>(k) - 1].text(kAB) + ", enumeration " +
                         enumd.text(kAB);
                break;
            }
        }
        push_flag_check(rep, nstr(n) + " recurrence matches enumeration", rec_ok, detail);

        Poly2 total, moment;
        for (int k = 1; k <= n; ++k) {
            total += row[static_cast<size_t>(k) - 1];
            moment += Int(k) * row[static_cast<size_t>(k) - 1];
        }
        push_poly_check(rep, nstr(n) + " row sum", total, tab_poly(n), kAB);
        if (n >= 2) {
            Poly2 want = (a + Int(n) * b + Poly2::constant(binomial(n, 2) - 1)) * tab_poly(n - 1);
            push_poly_check(rep, nstr(n) + " first moment", moment, want, kAB);
        }
    }
    return rep;
}

SuiteReport suite_prop_noc_ab(int max_n) {
    SuiteReport rep{"prop-noc-ab", 2, max_n, {}};
    for (int n = 2; n <= max_n; ++n) {
        push_poly_check(rep, nstr(n) + " both clear", noc_class_sum(n, NocClass::ab),
                        *noc_class_closed(n, NocClass::ab), kAB);
        push_poly_check(rep, nstr(n) + " column clear", noc_class_sum(n, NocClass::a1),
                        *noc_class_closed(n, NocClass::a1), kAB);
        push_poly_check(rep, nstr(n) + " row clear", noc_class_sum(n, NocClass::one_b),
                        *noc_class_closed(n, NocClass::one_b), kAB);
        Poly2 total = noc_class_sum(n, NocClass::ab) + noc_class_sum(n, NocClass::a1) +
                      noc_class_sum(n, NocClass::one_b) + noc_class_sum(n, NocClass::one_one);
        push_poly_check(rep, nstr(n) + " classes partition", total, nonoccupied_weight_sum(n),
                        kAB);
    }
    return rep;
}

SuiteReport suite_conj_ab(int max_n) {
    SuiteReport rep{"conj-ab", 2, max_n, {}};
    for (int n = 3; n <= max_n; ++n) {
        push_poly_check(rep, nstr(n) + " empty corners", nonoccupied_weight_sum(n),
                        nonoccupied_poly_conjecture(n), kAB);
        push_poly_check(rep, nstr(n) + " all corners", corner_weight_sum(n),
                        corner_poly_conjecture(n), kAB);
        push_poly_check(rep, nstr(n) + " expanded form", corner_poly_display(n),
                        corner_poly_conjecture(n), kAB);
    }
    for (int n = 2; n <= std::min(max_n, 6); ++n)
        push_flag_check(rep, nstr(n) + " expected jump", expected_jump_identity_holds(n),
                        "closed expectation differs from the enumerated one");
    return rep;
}

SuiteReport suite_conj_x(int max_n) {
    SuiteReport rep{"conj-x", 2, max_n, {}};
    for (int n = 1; n <= std::min(max_n, 5); ++n)
        push_poly_check(rep, nstr(n) + " weight sum", tsym_weight_sum(n), tsym_poly_x(n), kX);
    for (int n = 2; n <= max_n; ++n)
        push_poly_check(rep, nstr(n) + " empty corners", sym_noc_x_sum(n), sym_noc_x_table(n),
                        kX);
    for (int n = 3; n <= max_n; ++n)
        push_poly_check(rep, nstr(n) + " product form", sym_noc_x_closed(n), sym_noc_x_table(n),
                        kX);
    for (int n = 1; n <= std::min(max_n, 4); ++n)
        push_poly_check(rep, nstr(n) + " three variables", tsym_xyz_sum(n), tsym_xyz_closed(n),
                        kXYZ);
    return rep;
}

SuiteReport suite_sec5_stats(int max_n) {
    SuiteReport rep{"sec5-stats", 3, max_n, {}};
    for (int m = 3; m <= max_n; ++m) {
        Int displacement = 0;
        for_each_perm(m - 1, [&](const Perm& p) { displacement += positive_displacement(p); });
        push_int_check(rep, "m=" + std::to_string(m) + " displacement", displacement,
                       *nonoccupied_count_closed(Family::tlt, m));
        Int double_descents = 0;
        for_each_perm(m, [&](const Perm& p) { double_descents += double_descent_count(p); });
        push_int_check(rep, "m=" + std::to_string(m) + " double descents", double_descents,
                       *nonoccupied_count_closed(Family::tlt, m));
    }
    return rep;
}

struct SuiteInfo {
    const char* id;
    int default_max;  // range used when the caller does not override
    int hard_max;     // ceiling imposed by the touched families' limits
    SuiteReport (*run)(int);
};

const SuiteInfo kSuites[] = {
    {"thmA", 8, 8, suite_thmA},
    {"thmB", 5, 6, suite_thmB},
    {"prop-occupied", 8, 8, suite_prop_occupied},
    {"cor-noc", 8, 8, suite_cor_noc},
    {"cor32", 8, 8, suite_cor32},
    {"cor34", 5, 6, suite_cor34},
    {"cor36", 8, 9, suite_cor36},
    {"cor39", 5, 6, suite_cor39},
    {"phi-contract", 6, 9, suite_phi_contract},
    {"xi-contract", 4, 7, suite_xi_contract},
    {"runs-eq1", 9, 11, suite_runs_eq1},
    {"corners-runs", 6, 8, suite_corners_runs},
    {"nat-words", 5, 7, suite_nat_words},
    {"lemma-euler", 7, 8, suite_lemma_euler},
    {"prop-noc-ab", 7, 8, suite_prop_noc_ab},
    {"conj-ab", 8, 8, suite_conj_ab},
    {"conj-x", 7, 7, suite_conj_x},
    {"sec5-stats", 8, 10, suite_sec5_stats},
};

const SuiteInfo* find_suite(const std::string& id) {
    for (const SuiteInfo& s : kSuites)
        if (id == s.id) return &s;
    return nullptr;
}

// Full round trip of one map over its enumerated domain: every image must
// validate, all images must be distinct, the pullback must return the
// original, and the image count must exhaust the target family.
SuiteReport round_trip_report(const char* name, Family domain, Family image_family,
                              int image_param,
                              const std::function<Tableau(const Tableau&)>& forward,
                              const std::function<Tableau(const Tableau&)>& backward, int n) {
    SuiteReport rep{name, n, n, {}};
    std::string trip_fail, valid_fail, distinct_fail;
    std::set<Tableau> images;
    for_each_tableau(domain, n, [&](const Tableau& t) {
        Tableau image = forward(t);
        Validation v = validate(image);
        if (!v.ok && valid_fail.empty())
            valid_fail = tab_text(t) + " maps to invalid " + tab_text(image) + " (" + v.message +
                         ")";
        if (!images.insert(image).second && distinct_fail.empty())
            distinct_fail = "second preimage of " + tab_text(image) + " is " + tab_text(t);
        Tableau back = backward(image);
        if (back != t && trip_fail.empty())
            trip_fail = tab_text(t) + " maps to " + tab_text(image) + " which returns " +
                        tab_text(back);
    });
    push_flag_check(rep, nstr(n) + " round trip", trip_fail.empty(), trip_fail);
    push_flag_check(rep, nstr(n) + " images valid", valid_fail.empty(), valid_fail);
    push_flag_check(rep, nstr(n) + " images distinct", distinct_fail.empty(), distinct_fail);
    push_int_check(rep, nstr(n) + " image count", Int(images.size()),
                   count_tableaux(image_family, image_param));
    return rep;
}

struct BijectionInfo {
    const char* name;
    int min_n;
    int default_max;
    int hard_max;
};

const BijectionInfo kBijections[] = {
    {"alpha", 1, 7, 8},       {"gamma", 1, 7, 9},       {"zeta", 1, 5, 6},
    {"corners-runs", 1, 6, 8}, {"nat-word", 2, 5, 7},    {"phi-contract", 1, 6, 9},
    {"xi-contract", 1, 4, 7},
};

const BijectionInfo* find_bijection(const std::string& name) {
    for (const BijectionInfo& b : kBijections)
        if (name == b.name) return &b;
    return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const SuiteInfo& s : kSuites) v.emplace_back(s.id);
        return v;
    }();
    return ids;
}

bool is_suite_id(const std::string& id) { return find_suite(id) != nullptr; }

int suite_default_max_n(const std::string& id) {
    const SuiteInfo* s = find_suite(id);
    if (!s) throw std::invalid_argument("unknown suite: " + id);
    return s->default_max;
}

int suite_hard_max_n(const std::string& id) {
    const SuiteInfo* s = find_suite(id);
    if (!s) throw std::invalid_argument("unknown suite: " + id);
    return s->hard_max;
}

SuiteReport run_suite(const std::string& id, int max_n) {
    const SuiteInfo* s = find_suite(id);
    if (!s) throw std::invalid_argument("unknown suite: " + id);
    return s->run(std::min(max_n, s->hard_max));
}

const std::vector<std::string>& bijection_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const BijectionInfo& b : kBijections) v.emplace_back(b.name);
        return v;
    }();
    return names;
}

bool is_bijection_name(const std::string& name) { return find_bijection(name) != nullptr; }

int bijection_min_n(const std::string& name) {
    const BijectionInfo* b = find_bijection(name);
    if (!b) throw std::invalid_argument("unknown bijection: " + name);
    return b->min_n;
}

int bijection_default_max_n(const std::string& name) {
    const BijectionInfo* b = find_bijection(name);
    if (!b) throw std::invalid_argument("unknown bijection: " + name);
    return b->default_max;
}

int bijection_hard_max_n(const std::string& name) {
    const BijectionInfo* b = find_bijection(name);
    if (!b) throw std::invalid_argument("unknown bijection: " + name);
    return b->hard_max;
}

SuiteReport run_bijection_check(const std::string& name, int n) {
    const BijectionInfo* b = find_bijection(name);
    if (!b) throw std::invalid_argument("unknown bijection: " + name);
    n = std::max(b->min_n, std::min(n, b->hard_max));

    if (name == "alpha")
        return round_trip_report("alpha", Family::tlt, Family::at, n - 1, tlt_to_at, at_to_tlt,
                                 n);
    if (name == "gamma")
        return round_trip_report("gamma", Family::pt, Family::at, n - 1, pt_to_at, at_to_pt, n);
    if (name == "zeta")
        return round_trip_report("zeta", Family::ptb, Family::atsym, n, ptb_to_atsym,
                                 atsym_to_ptb, n);

    SuiteReport rep{name, n, n, {}};
    if (name == "corners-runs") {
        std::string fail = corners_runs_fail(n);
        push_flag_check(rep, nstr(n), fail.empty(), fail);
    } else if (name == "nat-word") {
        for (int r = 1; r < n; ++r) {
            std::string fail = nat_word_fail(r, n - r);
            push_flag_check(rep, "rows=" + std::to_string(r) + " cols=" + std::to_string(n - r),
                            fail.empty(), fail);
        }
    } else if (name == "phi-contract") {
        std::string diff = phi_diff(n);
        push_flag_check(rep, nstr(n), diff.empty(), diff);
    } else {
        std::string diff = xi_diff(n);
        push_flag_check(rep, nstr(n), diff.empty(), diff);
    }
    return rep;
}

}  // namespace tableaux
