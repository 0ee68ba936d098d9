#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tableaux/bigint.hpp"
#include "tableaux/tableau.hpp"
#include "tableaux/verify.hpp"

namespace tableaux {

// Version stamp carried by every JSON document this library emits.
inline constexpr int kReportSchemaVersion = 1;

// One-line notation with single spaces, "4 2 6 11"; also used for letter
// words, whose pointed letters print as non-positive values. Empty input
// gives the empty string.
std::string int_list_text(const std::vector<int>& values);

enum class ExportFormat { json, csv, ascii };

// Accepts "json", "csv", "ascii"; anything else throws std::invalid_argument.
ExportFormat export_format_from_name(const std::string& name);

// One tableau as a JSON object: family, shape (length, base row lengths,
// shifted flag) and the raw grid rows.
std::string tableau_json(const Tableau& t);

// Human-readable picture. Dots print as '*', left and up arrows as '<' and
// '^', digits as themselves, empty cells as '.'.
std::string tableau_ascii(const Tableau& t);

// Every tableau of the family at parameter n, one string per record, in
// canonical enumeration order. csv records carry no header; json records
// are single-line objects.
std::vector<std::string> render_records(Family f, int n, ExportFormat fmt);

// Full export document: json wraps the records in an envelope with the
// count, csv prepends the header, ascii numbers the renderings. Output is
// byte-identical across runs.
std::string export_tableaux(Family f, int n, ExportFormat fmt);

// {"var": [...], "terms": [[exponents..., "coeff"] ...]} with the terms in
// ascending exponent order and coefficients as decimal strings.
std::string poly_json(const std::string& stat, int n, const std::vector<std::string>& vars,
                      const std::vector<std::pair<std::vector<int>, Int>>& terms);

// Suite reports. A negative seconds value omits the timing block, which
// keeps default output byte-identical across runs; timings are opt-in.
std::string suite_report_text(const SuiteReport& rep, double seconds = -1.0);
std::string suite_report_json(const SuiteReport& rep, double seconds = -1.0);

// Several reports in one document, {"schema": 1, "suites": [...]}. Pass an
// empty seconds vector to omit timings, else one entry per report.
std::string suite_reports_json(const std::vector<SuiteReport>& reps,
                               const std::vector<double>& seconds = {});

}  // namespace tableaux
