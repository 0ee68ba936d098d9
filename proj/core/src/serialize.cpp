#include "tableaux/serialize.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace tableaux {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = kReportSchemaVersion;

ordered_json tableau_object(const Tableau& t) {
    ordered_json shape;
    shape["length"] = t.length();
    shape["rows"] = t.base_shape().row_lengths();
    shape["shifted"] = t.shifted();
    ordered_json obj;
    obj["family"] = family_name(t.family());
    obj["shape"] = std::move(shape);
    obj["filling"] = t.grid();
    return obj;
}

char ascii_symbol(char cell) {
    switch (cell) {
        case 'D': return '*';
        case 'L': return '<';
        case 'U': return '^';
        default: return cell;
    }
}

std::string shape_text(const Tableau& t) {
    const auto& rows = t.base_shape().row_lengths();
    if (rows.empty()) return "-";
    return int_list_text(rows);
}

ordered_json check_object(const CheckResult& c) {
    ordered_json obj;
    obj["name"] = c.name;
    obj["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) obj["counterexample"] = c.detail;
    return obj;
}

ordered_json report_object(const SuiteReport& rep, double seconds) {
    ordered_json obj;
    obj["suite_id"] = rep.suite;
    obj["n_range"] = {rep.min_n, rep.max_n};
    obj["all_pass"] = rep.all_pass();
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : rep.checks) checks.push_back(check_object(c));
    obj["checks"] = std::move(checks);
    if (seconds >= 0.0) obj["seconds"] = seconds;
    return obj;
}

}  // namespace

std::string int_list_text(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

ExportFormat export_format_from_name(const std::string& name) {
    if (name == "json") return ExportFormat::json;
    if (name == "csv") return ExportFormat::csv;
    if (name == "ascii") return ExportFormat::ascii;
    throw std::invalid_argument("unknown format: " + name);
}

std::string tableau_json(const Tableau& t) { return tableau_object(t).dump(); }

std::string tableau_ascii(const Tableau& t) {
    if (t.grid().empty()) return "(empty)\n";
    std::string out;
    for (const std::string& row : t.grid()) {
        for (char cell : row) out += ascii_symbol(cell);
        out += '\n';
    }
    return out;
}

std::vector<std::string> render_records(Family f, int n, ExportFormat fmt) {
    std::vector<std::string> records;
    std::string prefix = family_name(f) + "," + std::to_string(n) + ",";
    for_each_tableau(f, n, [&](const Tableau& t) {
        switch (fmt) {
            case ExportFormat::json:
                records.push_back(tableau_json(t));
                break;
            case ExportFormat::csv: {
                std::string shape = int_list_text(t.base_shape().row_lengths());
                std::string filling;
                for (size_t i = 0; i < t.grid().size(); ++i) {
                    if (i) filling += '/';
                    filling += t.grid()[i];
                }
                records.push_back(prefix + std::to_string(records.size()) + "," + shape + "," +
                                  filling);
                break;
            }
            case ExportFormat::ascii:
                records.push_back("tableau " + std::to_string(records.size()) +
                                  "  shape: " + shape_text(t) + "\n" + tableau_ascii(t));
                break;
        }
    });
    return records;
}

std::string export_tableaux(Family f, int n, ExportFormat fmt) {
    std::vector<std::string> records = render_records(f, n, fmt);
    switch (fmt) {
        case ExportFormat::json: {
            std::string out = "{\"schema\":" + std::to_string(kSchemaVersion) +
                              ",\"family\":\"" + family_name(f) +
                              "\",\"n\":" + std::to_string(n) +
                              ",\"count\":" + std::to_string(records.size()) +
                              ",\"tableaux\":[";
            for (size_t i = 0; i < records.size(); ++i) {
                if (i) out += ',';
                out += records[i];
            }
            out += "]}\n";
            return out;
        }
        case ExportFormat::csv: {
            std::string out = "family,n,index,shape,filling\n";
            for (const std::string& r : records) {
                out += r;
                out += '\n';
            }
            return out;
        }
        case ExportFormat::ascii: {
            std::string out;
            for (const std::string& r : records) {
                out += r;
                out += '\n';
            }
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::string poly_json(const std::string& stat, int n, const std::vector<std::string>& vars,
                      const std::vector<std::pair<std::vector<int>, Int>>& terms) {
    ordered_json obj;
    obj["schema"] = kSchemaVersion;
    obj["stat"] = stat;
    obj["n"] = n;
    obj["var"] = vars;
    ordered_json jterms = ordered_json::array();
    for (const auto& [exps, coeff] : terms) {
        ordered_json term = ordered_json::array();
        for (int e : exps) term.push_back(e);
        term.push_back(coeff.str());
        jterms.push_back(std::move(term));
    }
    obj["terms"] = std::move(jterms);
    return obj.dump() + "\n";
}

std::string suite_report_text(const SuiteReport& rep, double seconds) {
    std::string out;
    int passed = 0;
    for (const CheckResult& c : rep.checks) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += rep.suite + " " + c.name;
        if (!c.pass && !c.detail.empty()) out += ": " + c.detail;
        out += '\n';
        if (c.pass) ++passed;
    }
    out += "suite " + rep.suite + ": " + std::to_string(passed) + "/" +
           std::to_string(rep.checks.size()) + " checks passed";
    if (seconds >= 0.0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2fs)", seconds);
        out += buf;
    }
    out += '\n';
    return out;
}

std::string suite_report_json(const SuiteReport& rep, double seconds) {
    ordered_json obj = report_object(rep, seconds);
    ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["suites"] = ordered_json::array({std::move(obj)});
    return doc.dump(2) + "\n";
}

std::string suite_reports_json(const std::vector<SuiteReport>& reps,
                               const std::vector<double>& seconds) {
    ordered_json doc;
    doc["schema"] = kSchemaVersion;
    ordered_json suites = ordered_json::array();
    for (size_t i = 0; i < reps.size(); ++i)
        suites.push_back(report_object(reps[i], i < seconds.size() ? seconds[i] : -1.0));
    doc["suites"] = std::move(suites);
    return doc.dump(2) + "\n";
}

}  // namespace tableaux
