// Command line front end: enumeration, counting, verification suites,
// bijection checks, polynomial reports and machine readable exports.
//
// Exit codes: 0 pass, 1 verified failure or I/O trouble, 2 usage error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tableaux/bigint.hpp"
#include "tableaux/formulas.hpp"
#include "tableaux/parallel.hpp"
#include "tableaux/polynomial.hpp"
#include "tableaux/serialize.hpp"
#include "tableaux/tableau.hpp"
#include "tableaux/verify.hpp"

namespace {

using namespace tableaux;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Desk-scale bounds: what runs comfortably without being asked twice.
// --max-n or TABLEAUX_MAX_N raises them, never past the library limits.
int desk_max(Family f) {
    switch (f) {
        case Family::pt:
        case Family::at:
        case Family::tlt:
            return 8;
        default:
            return 5;
    }
}

bool check_family_bounds(Family f, int n, const std::optional<int>& override_max) {
    if (n < 0) {
        std::cerr << "n must be nonnegative\n";
        return false;
    }
    if (n <= desk_max(f)) return true;
    int cap = std::max(desk_max(f), override_max.value_or(desk_max(f)));
    cap = std::min(cap, family_max_parameter(f));
    if (n > cap) {
        std::cerr << "n=" << n << " exceeds the bound for family " << family_name(f) << " (desk "
                  << desk_max(f) << ", hard " << family_max_parameter(f)
                  << "); raise with --max-n or TABLEAUX_MAX_N\n";
        return false;
    }
    std::cerr << "warning: n=" << n << " is above the desk-scale bound " << desk_max(f)
              << " for family " << family_name(f) << "; this may take a while\n";
    return true;
}

int flush_stdout() {
    std::cout.flush();
    if (!std::cout) {
        std::cerr << "error writing to stdout\n";
        return kExitFail;
    }
    return kExitPass;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_generate(Family f, int n, ExportFormat fmt) {
    std::vector<std::string> records = render_records(f, n, fmt);
    if (fmt == ExportFormat::csv) std::cout << "family,n,index,shape,filling\n";
    for (const std::string& r : records) std::cout << r << "\n";
    return flush_stdout();
}

int cmd_count(Family f, int n, const std::string& stat) {
    Int enumerated;
    std::optional<Int> closed;
    if (stat == "corners") {
        enumerated = corner_count_enumerated(f, n);
        closed = corner_count_closed(f, n);
    } else if (stat == "occupied") {
        enumerated = occupied_count_enumerated(f, n);
        closed = occupied_count_closed(f, n);
    } else if (stat == "nonoccupied") {
        enumerated = nonoccupied_count_enumerated(f, n);
        closed = nonoccupied_count_closed(f, n);
    } else {  // "tableaux", validated by the caller
        enumerated = count_tableaux(f, n);
        closed = cardinality_closed(f, n);
    }
    std::cout << "enumerated " << enumerated.str();
    int code = kExitPass;
    if (closed) {
        bool match = enumerated == *closed;
        std::cout << ", closed " << closed->str() << (match ? ", match" : ", MISMATCH");
        if (!match) code = kExitFail;
    } else {
        std::cout << ", closed n/a";
    }
    std::cout << "\n";
    int flush = flush_stdout();
    return code != kExitPass ? code : flush;
}

int cmd_verify(const std::vector<std::string>& requested, const std::optional<int>& override_max,
               const std::string& report, bool timings) {
    std::vector<std::string> ids = requested.empty() ? suite_ids() : requested;
    for (const std::string& id : ids) {
        if (!is_suite_id(id)) {
            std::cerr << "unknown suite: " << id << "\nvalid suites:";
            for (const std::string& s : suite_ids()) std::cerr << " " << s;
            std::cerr << "\n";
            return kExitUsage;
        }
    }
    std::vector<SuiteReport> reps;
    std::vector<double> secs;
    for (const std::string& id : ids) {
        int max_n = override_max.value_or(suite_default_max_n(id));
        if (max_n > suite_default_max_n(id))
            std::cerr << "warning: running suite " << id << " past its desk-scale default "
                      << suite_default_max_n(id) << "; this may take a while\n";
        auto start = std::chrono::steady_clock::now();
        reps.push_back(run_suite(id, max_n));
        secs.push_back(seconds_since(start));
    }
    if (report == "json") {
        std::cout << suite_reports_json(reps, timings ? secs : std::vector<double>{});
    } else {
        for (size_t i = 0; i < reps.size(); ++i)
            std::cout << suite_report_text(reps[i], timings ? secs[i] : -1.0);
    }
    bool pass = std::all_of(reps.begin(), reps.end(),
                            [](const SuiteReport& r) { return r.all_pass(); });
    int flush = flush_stdout();
    return pass ? flush : kExitFail;
}

int cmd_bijection(const std::string& name, int n, const std::optional<int>& override_max,
                  const std::string& report, bool timings) {
    if (!is_bijection_name(name)) {
        std::cerr << "unknown bijection: " << name << "\nvalid names:";
        for (const std::string& b : bijection_names()) std::cerr << " " << b;
        std::cerr << "\n";
        return kExitUsage;
    }
    int desk = bijection_default_max_n(name);
    int hard = bijection_hard_max_n(name);
    if (n < bijection_min_n(name)) {
        std::cerr << "n must be at least " << bijection_min_n(name) << " for " << name << "\n";
        return kExitUsage;
    }
    int cap = std::min(std::max(desk, override_max.value_or(desk)), hard);
    if (n > cap) {
        std::cerr << "n=" << n << " exceeds the bound for " << name << " (desk " << desk
                  << ", hard " << hard << "); raise with --max-n or TABLEAUX_MAX_N\n";
        return kExitUsage;
    }
    if (n > desk)
        std::cerr << "warning: n=" << n << " is above the desk-scale bound " << desk << " for "
                  << name << "; this may take a while\n";
    auto start = std::chrono::steady_clock::now();
    SuiteReport rep = run_bijection_check(name, n);
    double secs = seconds_since(start);
    std::cout << (report == "json" ? suite_report_json(rep, timings ? secs : -1.0)
                                   : suite_report_text(rep, timings ? secs : -1.0));
    int flush = flush_stdout();
    return rep.all_pass() ? flush : kExitFail;
}

struct PolyStatInfo {
    const char* name;
    int min_n;
    int desk;
    int hard;
};

constexpr PolyStatInfo kPolyStats[] = {
    {"weight", 1, 8, 8},
    {"corners", 1, 8, 8},
    {"occupied", 1, 8, 8},
    {"nonoccupied", 1, 8, 8},
    {"product", 0, 30, 30},
    {"eulerian", 1, 16, 16},
    {"sym-x", 0, 5, 7},
    {"sym-nonoccupied-x", 1, 5, 7},
    {"xyz", 1, 5, 7},
};

const PolyStatInfo* find_poly_stat(const std::string& stat) {
    for (const PolyStatInfo& s : kPolyStats)
        if (stat == s.name) return &s;
    return nullptr;
}

int cmd_poly(const std::string& stat, int n, const std::optional<int>& override_max,
             const std::string& report) {
    const PolyStatInfo* info = find_poly_stat(stat);
    if (!info) {
        std::cerr << "unknown stat: " << stat << "\nvalid stats:";
        for (const PolyStatInfo& s : kPolyStats) std::cerr << " " << s.name;
        std::cerr << "\n";
        return kExitUsage;
    }
    if (n < info->min_n) {
        std::cerr << "n must be at least " << info->min_n << " for " << stat << "\n";
        return kExitUsage;
    }
    int cap = std::min(std::max(info->desk, override_max.value_or(info->desk)), info->hard);
    if (n > cap) {
        std::cerr << "n=" << n << " exceeds the bound for " << stat << " (desk " << info->desk
                  << ", hard " << info->hard << "); raise with --max-n or TABLEAUX_MAX_N\n";
        return kExitUsage;
    }
    if (n > info->desk)
        std::cerr << "warning: n=" << n << " is above the desk-scale bound " << info->desk
                  << " for " << stat << "; this may take a while\n";

    if (stat == "eulerian") {
        std::vector<Poly2> row = eulerian_row(n);
        if (report == "json") {
            nlohmann::ordered_json doc;
            doc["schema"] = kReportSchemaVersion;
            doc["stat"] = stat;
            doc["n"] = n;
            doc["var"] = {"a", "b"};
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const Poly2& p : row) {
                nlohmann::ordered_json terms = nlohmann::ordered_json::array();
                for (const auto& [exps, coeff] : p.term_list()) {
                    nlohmann::ordered_json term = nlohmann::ordered_json::array();
                    for (int e : exps) term.push_back(e);
                    term.push_back(coeff.str());
                    terms.push_back(std::move(term));
                }
                rows.push_back(std::move(terms));
            }
            doc["rows"] = std::move(rows);
            std::cout << doc.dump() << "\n";
        } else {
            for (size_t k = 1; k <= row.size(); ++k)
                std::cout << "k=" << k << ": " << row[k - 1].text({"a", "b"}) << "\n";
        }
        return flush_stdout();
    }

    auto emit2 = [&](const Poly2& p) {
        if (report == "json")
            std::cout << poly_json(stat, n, {"a", "b"}, p.term_list());
        else
            std::cout << p.text({"a", "b"}) << "\n";
    };
    auto emit1 = [&](const Poly1& p) {
        if (report == "json")
            std::cout << poly_json(stat, n, {"x"}, p.term_list());
        else
            std::cout << p.text({"x"}) << "\n";
    };
    if (stat == "weight") emit2(tlt_weight_sum(n));
    else if (stat == "corners") emit2(corner_weight_sum(n));
    else if (stat == "occupied") emit2(occupied_weight_sum(n));
    else if (stat == "nonoccupied") emit2(nonoccupied_weight_sum(n));
    else if (stat == "product") emit2(tab_poly(n));
    else if (stat == "sym-x") emit1(tsym_weight_sum(n));
    else if (stat == "sym-nonoccupied-x") emit1(sym_noc_x_sum(n));
    else {  // xyz
        const Poly3 p = tsym_xyz_sum(n);
        if (report == "json")
            std::cout << poly_json(stat, n, {"x", "y", "z"}, p.term_list());
        else
            std::cout << p.text({"x", "y", "z"}) << "\n";
    }
    return flush_stdout();
}

int cmd_export(Family f, int n, ExportFormat fmt) {
    std::cout << export_tableaux(f, n, fmt);
    return flush_stdout();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration and verification for permutation, alternative and "
                 "tree-like tableaux"};
    app.require_subcommand(1);

    int parallel = 1;
    int max_n_flag = -1;
    int seed = 0;
    bool timings = false;
    app.add_option("--parallel", parallel, "Worker threads for enumeration sums")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-n", max_n_flag,
                   "Override the desk-scale bounds (library hard limits still apply)");
    app.add_option("--seed", seed, "Reserved, accepted and ignored");
    app.add_flag("--timings", timings,
                 "Append wall-clock timings to reports (off keeps output byte-identical)");

    std::string g_family, g_format = "ascii";
    int g_n = 0;
    CLI::App* gen = app.add_subcommand("generate", "Enumerate tableaux in canonical order");
    gen->fallthrough();
    gen->add_option("--family", g_family, "pt|ptb|at|atsym|tlt|tltsym")->required();
    gen->add_option("--n", g_n, "Family parameter")->required();
    gen->add_option("--format", g_format, "json|csv|ascii (default ascii)");

    std::string c_family, c_stat = "corners";
    int c_n = 0;
    CLI::App* cnt = app.add_subcommand("count", "Count a statistic and compare closed forms");
    cnt->fallthrough();
    cnt->add_option("--family", c_family, "pt|ptb|at|atsym|tlt|tltsym")->required();
    cnt->add_option("--n", c_n, "Family parameter")->required();
    cnt->add_option("--stat", c_stat, "corners|occupied|nonoccupied|tableaux (default corners)");

    std::vector<std::string> v_suites;
    std::string v_report = "text";
    CLI::App* ver = app.add_subcommand("verify", "Run verification suites");
    ver->fallthrough();
    ver->add_option("suites", v_suites, "Suite ids (default: all)");
    ver->add_option("--report", v_report, "text|json (default text)");

    std::string b_name, b_report = "text";
    int b_n = 0;
    CLI::App* bij = app.add_subcommand("bijection-check", "Check one correspondence at one n");
    bij->fallthrough();
    bij->add_option("--name", b_name,
                    "alpha|gamma|zeta|corners-runs|nat-word|phi-contract|xi-contract")
        ->required();
    bij->add_option("--n", b_n, "Parameter (rows + cols for nat-word)")->required();
    bij->add_option("--report", b_report, "text|json (default text)");

    std::string p_stat, p_report = "text";
    int p_n = 0;
    CLI::App* pol = app.add_subcommand("poly", "Print a polynomial statistic");
    pol->fallthrough();
    pol->add_option("--stat", p_stat,
                    "weight|corners|occupied|nonoccupied|product|eulerian|sym-x|"
                    "sym-nonoccupied-x|xyz")
        ->required();
    pol->add_option("--n", p_n, "Family parameter")->required();
    pol->add_option("--report", p_report, "text|json (default text)");

    std::string e_family, e_format = "json";
    int e_n = 0;
    CLI::App* exp = app.add_subcommand("export", "Export every tableau as a document");
    exp->fallthrough();
    exp->add_option("--family", e_family, "pt|ptb|at|atsym|tlt|tltsym")->required();
    exp->add_option("--n", e_n, "Family parameter")->required();
    exp->add_option("--format", e_format, "json|csv|ascii (default json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    set_worker_count(parallel);

    std::optional<int> override_max;
    if (const char* env = std::getenv("TABLEAUX_MAX_N")) {
        try {
            override_max = std::stoi(env);
        } catch (...) {
            std::cerr << "warning: ignoring non-numeric TABLEAUX_MAX_N\n";
        }
    }
    if (max_n_flag >= 0) override_max = max_n_flag;

    try {
        if (ver->parsed()) {
            if (v_report != "text" && v_report != "json") {
                std::cerr << "unknown report format: " << v_report << " (text, json)\n";
                return kExitUsage;
            }
            return cmd_verify(v_suites, override_max, v_report, timings);
        }
        if (bij->parsed()) {
            if (b_report != "text" && b_report != "json") {
                std::cerr << "unknown report format: " << b_report << " (text, json)\n";
                return kExitUsage;
            }
            return cmd_bijection(b_name, b_n, override_max, b_report, timings);
        }
        if (pol->parsed()) {
            if (p_report != "text" && p_report != "json") {
                std::cerr << "unknown report format: " << p_report << " (text, json)\n";
                return kExitUsage;
            }
            return cmd_poly(p_stat, p_n, override_max, p_report);
        }
        if (cnt->parsed()) {
            if (c_stat != "corners" && c_stat != "occupied" && c_stat != "nonoccupied" &&
                c_stat != "tableaux") {
                std::cerr << "unknown stat: " << c_stat
                          << " (corners, occupied, nonoccupied, tableaux)\n";
                return kExitUsage;
            }
            Family f = family_from_name(c_family);
            if (!check_family_bounds(f, c_n, override_max)) return kExitUsage;
            return cmd_count(f, c_n, c_stat);
        }
        if (gen->parsed()) {
            Family f = family_from_name(g_family);
            ExportFormat fmt = export_format_from_name(g_format);
            if (!check_family_bounds(f, g_n, override_max)) return kExitUsage;
            return cmd_generate(f, g_n, fmt);
        }
        // export
        Family f = family_from_name(e_family);
        ExportFormat fmt = export_format_from_name(e_format);
        if (!check_family_bounds(f, e_n, override_max)) return kExitUsage;
        return cmd_export(f, e_n, fmt);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
