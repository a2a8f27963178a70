#include "starlab/report.hpp"

#include <json.hpp>

#include "starlab/claw.hpp"
#include "starlab/labeled.hpp"

namespace starlab {

using ordered_json = nlohmann::ordered_json;

ReportFormat parse_format(std::string_view name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    throw DomainError("unknown format '" + std::string(name) + "' (expected json, csv or text)");
}

void SuiteReport::add(SuiteRow row) {
    pass = pass && row.pass;
    rows.push_back(std::move(row));
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> family_lines(const Family& f) {
    std::vector<std::string> lines;
    lines.push_back("n=" + std::to_string(f.ground_size()));
    for (std::size_t i = 0; i < f.size(); ++i) lines.push_back(f.member(i).to_text());
    return lines;
}

ordered_json rational_value(const Rational& v) {
    if (v.is_integer()) return ordered_json(v.numerator());
    return ordered_json(v.to_string());
}

} // namespace

std::string render_suite(const SuiteReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::json: {
        ordered_json j;
        j["suite"] = report.suite;
        ordered_json p;
        for (const auto& [k, v] : report.params) p[k] = v;
        j["params"] = p;
        ordered_json rows = ordered_json::array();
        for (const SuiteRow& r : report.rows) {
            ordered_json row;
            row["check"] = r.check;
            if (r.n >= 0) row["n"] = r.n;
            if (r.r >= 0) row["r"] = r.r;
            if (r.k >= 0) row["k"] = r.k;
            row["expected"] = r.expected;
            row["computed"] = r.computed;
            row["pass"] = r.pass;
            if (!r.note.empty()) row["note"] = r.note;
            rows.push_back(row);
        }
        j["rows"] = rows;
        j["pass"] = report.pass;
        if (report.falsification.empty())
            j["falsification"] = nullptr;
        else
            j["falsification"] = report.falsification;
        return j.dump(2) + "\n";
    }
    case ReportFormat::csv: {
        std::string out = "suite,check,n,r,k,expected,computed,pass,note\n";
        for (const SuiteRow& r : report.rows) {
            out += report.suite + "," + csv_quote(r.check) + ",";
            out += (r.n >= 0 ? std::to_string(r.n) : "") + ",";
            out += (r.r >= 0 ? std::to_string(r.r) : "") + ",";
            out += (r.k >= 0 ? std::to_string(r.k) : "") + ",";
            out += csv_quote(r.expected) + "," + csv_quote(r.computed) + ",";
            out += (r.pass ? "true" : "false");
            out += "," + csv_quote(r.note) + "\n";
        }
        return out;
    }
    case ReportFormat::text: {
        std::string out = "suite " + report.suite;
        for (const auto& [k, v] : report.params) out += " " + k + "=" + v;
        out += "\n";
        for (const SuiteRow& r : report.rows) {
            out += std::string(r.pass ? "  ok   " : "  FAIL ") + r.check;
            if (r.n >= 0) out += " n=" + std::to_string(r.n);
            if (r.r >= 0) out += " r=" + std::to_string(r.r);
            if (r.k >= 0) out += " k=" + std::to_string(r.k);
            out += "  expected=" + r.expected + " computed=" + r.computed;
            if (!r.note.empty()) out += "  (" + r.note + ")";
            out += "\n";
        }
        out += report.pass ? "PASS\n" : "FAIL\n";
        if (!report.falsification.empty()) out += "falsification:\n" + report.falsification + "\n";
        return out;
    }
    }
    throw DomainError("render_suite: bad format");
}

std::string render_verdict(const SearchVerdict& verdict, ReportFormat format) {
    switch (format) {
    case ReportFormat::json: {
        ordered_json j;
        j["optimum"] = rational_value(verdict.optimum);
        if (verdict.witness_pair) {
            j["witness"] = family_lines(verdict.witness_pair->first);
            j["witness_b"] = family_lines(verdict.witness_pair->second);
        } else {
            j["witness"] = family_lines(verdict.witness);
        }
        ordered_json star;
        star["element"] = verdict.star_element;
        star["size"] = rational_value(verdict.largest_star_value);
        j["largest_star"] = star;
        j["star_property"] = verdict.star_property ? "holds" : "fails";
        j["nodes"] = verdict.nodes_explored;
        if (verdict.seed)
            j["seed"] = *verdict.seed;
        else
            j["seed"] = nullptr;
        if (verdict.optima_count) j["optima_count"] = *verdict.optima_count;
        return j.dump(2) + "\n";
    }
    case ReportFormat::csv: {
        std::string out = "optimum,star_element,star_size,star_property,nodes,seed\n";
        out += verdict.optimum.to_string() + ",";
        out += std::to_string(verdict.star_element) + ",";
        out += verdict.largest_star_value.to_string() + ",";
        out += std::string(verdict.star_property ? "holds" : "fails") + ",";
        out += std::to_string(verdict.nodes_explored) + ",";
        out += (verdict.seed ? std::to_string(*verdict.seed) : "") + "\n";
        return out;
    }
    case ReportFormat::text: {
        std::string out;
        out += "optimum:       " + verdict.optimum.to_string() + "\n";
        out += "largest star:  element " + std::to_string(verdict.star_element) + ", value " +
               verdict.largest_star_value.to_string() + "\n";
        out += "star property: " + std::string(verdict.star_property ? "holds" : "fails") + "\n";
        out += "nodes:         " + std::to_string(verdict.nodes_explored) + "\n";
        if (verdict.seed) out += "seed:          " + std::to_string(*verdict.seed) + "\n";
        if (verdict.optima_count) out += "optima:        " + std::to_string(*verdict.optima_count) + "\n";
        if (verdict.witness_pair) {
            out += "witness A:\n";
            for (const auto& l : family_lines(verdict.witness_pair->first)) out += "  " + l + "\n";
            out += "witness B:\n";
            for (const auto& l : family_lines(verdict.witness_pair->second)) out += "  " + l + "\n";
        } else {
            out += "witness:\n";
            for (const auto& l : family_lines(verdict.witness)) out += "  " + l + "\n";
        }
        return out;
    }
    }
    throw DomainError("render_verdict: bad format");
}

std::string render_case2(const Case2Report& r, ReportFormat format) {
    ordered_json j;
    j["n"] = r.n;
    j["r"] = r.r;
    j["conjecture_scope"] = r.conjecture_scope;
    j["sizes"] = {{"E", r.e_size}, {"E0", r.e0_size}, {"E1", r.e1_size}, {"E0_compressed", r.e0c_size}};
    j["proof1"] = r.proof1_ok;
    j["proof2"] = r.proof2_ok;
    j["trace_intersecting"] = r.trace_intersecting;
    j["cross_intersecting"] = r.cross_ok;
    j["weight_chain_strict"] = r.chain_ok;
    j["conditions"] = r.conditions_ok;
    ordered_json fibres = ordered_json::array();
    for (const Case2Fibre& f : r.fibres) {
        fibres.push_back({{"i", f.i},
                          {"traces", f.trace_count},
                          {"members", f.member_count},
                          {"cap", f.cap},
                          {"within_cap", f.fibres_ok}});
    }
    j["fibres"] = fibres;
    j["fibre_sum_matches"] = r.fibre_sum_ok;
    j["sum_a"] = rational_value(r.sum_a);
    j["sum_b"] = rational_value(r.sum_b);
    j["star_rhs"] = rational_value(r.rhs);
    j["e0_bound"] = r.e0_bound_ok;
    j["e1_exact"] = r.e1_exact_ok;
    j["weighted_bound"] = r.thm2_bound_ok;
    j["proof_trace_pass"] = r.trace ? ordered_json(r.trace->pass) : ordered_json(nullptr);
    j["x1_star_size"] = r.star_size;
    j["rhs_equals_star"] = r.rhs_is_star_ok;
    j["final_bound"] = r.final_bound_ok;
    j["pass"] = r.pass;
    if (format == ReportFormat::json) return j.dump(2) + "\n";
    if (format == ReportFormat::text) {
        std::string out;
        for (const auto& [k, v] : j.items())
            out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
        return out;
    }
    // CSV: one flat row.
    std::string header, row;
    for (const auto& [k, v] : j.items()) {
        if (v.is_array() || v.is_object()) continue;
        header += (header.empty() ? "" : ",") + k;
        row += (row.empty() ? "" : ",") + csv_quote(v.is_string() ? v.get<std::string>() : v.dump());
    }
    return header + "\n" + row + "\n";
}

std::string render_family(const Family& family, const std::string& target, int n, int r, int k,
                          ReportFormat format) {
    switch (format) {
    case ReportFormat::text: {
        if (target == "itn") return claw_family_to_text(ClawLayout{n}, family);
        if (target == "lnk") return labeled_to_text(LabeledUniverse(n, k), family);
        return family.to_text();
    }
    case ReportFormat::json: {
        ordered_json j;
        j["target"] = target;
        if (n >= 0) j["n"] = n;
        if (r >= 0) j["r"] = r;
        if (k >= 0) j["k"] = k;
        j["ground_size"] = family.ground_size();
        j["size"] = family.size();
        ordered_json members = ordered_json::array();
        for (std::size_t i = 0; i < family.size(); ++i) members.push_back(family.member(i).to_text());
        j["members"] = members;
        return j.dump(2) + "\n";
    }
    case ReportFormat::csv: {
        std::string out = "index,size,set\n";
        for (std::size_t i = 0; i < family.size(); ++i) {
            SetMask m = family.member(i);
            out += std::to_string(i) + "," + std::to_string(m.size()) + "," +
                   csv_quote(m.to_text()) + "\n";
        }
        return out;
    }
    }
    throw DomainError("render_family: bad format");
}

} // namespace starlab
