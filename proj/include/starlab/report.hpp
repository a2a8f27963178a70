#ifndef STARLAB_REPORT_HPP
#define STARLAB_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "starlab/search.hpp"

namespace starlab {

enum class ReportFormat { json, csv, text };

ReportFormat parse_format(std::string_view name);

// One checked fact inside a suite run. Scalar fields print as decimal
// strings; -1 marks an inapplicable parameter column.
struct SuiteRow {
    std::string check;
    int n = -1, r = -1, k = -1;
    std::string expected;
    std::string computed;
    bool pass = true;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::map<std::string, std::string> params; // ordered, deterministic
    std::vector<SuiteRow> rows;
    bool pass = true;
    std::string falsification; // minimal witness text for the first failure

    void add(SuiteRow row);
};

// All renderings are deterministic byte-for-byte for a fixed report: no
// floats, fixed key order, fixed column order.
std::string render_suite(const SuiteReport& report, ReportFormat format);

// Verdict JSON per the documented schema; witness families embed the
// family text format line by line.
std::string render_verdict(const SearchVerdict& verdict, ReportFormat format);

std::string render_case2(const Case2Report& report, ReportFormat format);

// Family listing for the enumerate command.
std::string render_family(const Family& family, const std::string& target, int n, int r, int k,
                          ReportFormat format);

} // namespace starlab

#endif
