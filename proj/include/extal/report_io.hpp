#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "extal/case_study.hpp"
#include "extal/stats.hpp"
#include "extal/theory.hpp"

namespace extal {

namespace detail {

inline std::string fmt6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

inline std::string fmt3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

inline std::string padded(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace detail

inline std::string report_text(const HomologyReport& r) {
    std::string out;
    auto row = [&](const std::string& key, const std::string& value) {
        out += detail::padded(key, 18) + value + "\n";
    };
    row("pair", r.id_x + " vs " + r.id_y);
    row("n, m", std::to_string(r.n) + ", " + std::to_string(r.m));
    row("lcs", std::to_string(r.lcs));
    row("vertical", std::to_string(r.vertical));
    row("horizontal", std::to_string(r.horizontal));
    row("sum", std::to_string(r.sum));
    row("nonuniq_stretch", std::to_string(r.nonuniq_stretch));
    row("uniq_points", std::to_string(r.uniq_points));
    row("co_optimal_cells", std::to_string(r.co_optimal_cells));
    return out;
}

inline nlohmann::json report_json(const HomologyReport& r) {
    nlohmann::json doc;
    doc["id_x"] = r.id_x;
    doc["id_y"] = r.id_y;
    doc["lcs"] = r.lcs;
    doc["vertical"] = r.vertical;
    doc["horizontal"] = r.horizontal;
    doc["sum"] = r.sum;
    doc["nonuniq_stretch"] = r.nonuniq_stretch;
    doc["uniq_points"] = r.uniq_points;
    doc["n"] = r.n;
    doc["m"] = r.m;
    doc["co_optimal_cells"] = r.co_optimal_cells;
    doc["nonuniq_stretch_y"] = r.nonuniq_stretch_y;
    return doc;
}

/// Four row blocks of eight lines each, mirroring the reference table layout
/// (BLAST block on top, alignment statistics below).
inline std::string case_study_text(const CaseStudyTable& table) {
    constexpr std::size_t label_w = 14;
    constexpr std::size_t cell_w = 14;
    std::string out;

    auto line = [&](const std::string& label, const std::vector<std::string>& cells) {
        out += detail::padded(label, label_w);
        for (const auto& c : cells) out += "| " + detail::padded(c, cell_w);
        out += "\n";
    };

    line("genes", {"1", "2", "3", "4"});
    out += std::string(label_w + 4 * (cell_w + 2), '-') + "\n";
    for (int i = 1; i <= 4; ++i) {
        std::vector<std::string> max_total, query, evalue, ident, lcs, vhs, stretch, uniq;
        for (int j = 1; j <= 4; ++j) {
            const auto& ref = reference_cell(i, j).blast;
            const HomologyReport& c = table.at(i, j);
            max_total.push_back(std::to_string(ref.max_score) + "; " + std::to_string(ref.total_score));
            query.push_back(std::to_string(ref.query_cover));
            evalue.push_back(ref.e_value);
            ident.push_back(std::to_string(ref.max_ident));
            lcs.push_back(std::to_string(c.lcs));
            vhs.push_back(std::to_string(c.vertical) + "+" + std::to_string(c.horizontal) + "=" +
                          std::to_string(c.sum));
            stretch.push_back(std::to_string(c.nonuniq_stretch));
            uniq.push_back(std::to_string(c.uniq_points));
        }
        out += "gene" + std::to_string(i) + "\n";
        line("Max; total", max_total);
        line("Query", query);
        line("E-value", evalue);
        line("MaxIdent", ident);
        line("LCS", lcs);
        line("Vert+Hor=Sum", vhs);
        line("non-uniq st.", stretch);
        line("uniq points", uniq);
        out += std::string(label_w + 4 * (cell_w + 2), '-') + "\n";
    }
    return out;
}

inline std::string case_study_csv(const CaseStudyTable& table) {
    std::string out =
        "gene_x,gene_y,n,m,lcs,vertical,horizontal,sum,nonuniq_stretch,uniq_points,"
        "ref_lcs,ref_vertical,ref_horizontal,ref_sum,ref_stretch,ref_uniq,"
        "blast_max,blast_total,blast_query_cover,blast_e_value,blast_max_ident\n";
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            const HomologyReport& c = table.at(i, j);
            const auto& ref = reference_cell(i, j);
            out += c.id_x + "," + c.id_y + "," + std::to_string(c.n) + "," + std::to_string(c.m) +
                   "," + std::to_string(c.lcs) + "," + std::to_string(c.vertical) + "," +
                   std::to_string(c.horizontal) + "," + std::to_string(c.sum) + "," +
                   std::to_string(c.nonuniq_stretch) + "," + std::to_string(c.uniq_points) + "," +
                   std::to_string(ref.lcs) + "," + std::to_string(ref.vertical) + "," +
                   std::to_string(ref.horizontal) + "," + std::to_string(ref.sum) + "," +
                   std::to_string(ref.stretch) + "," + std::to_string(ref.uniq) + "," +
                   std::to_string(ref.blast.max_score) + "," + std::to_string(ref.blast.total_score) +
                   "," + std::to_string(ref.blast.query_cover) + "," + ref.blast.e_value + "," +
                   std::to_string(ref.blast.max_ident) + "\n";
        }
    }
    return out;
}

inline std::string check_result_text(const CheckResult& result) {
    std::string out;
    int pass = 0, fail = 0, flagged = 0;
    for (const auto& e : result.entries) {
        std::string status;
        switch (e.status) {
            case CheckStatus::pass:
                status = "PASS";
                ++pass;
                break;
            case CheckStatus::fail:
                status = "FAIL";
                ++fail;
                break;
            case CheckStatus::flagged:
                status = "FLAGGED";
                ++flagged;
                break;
        }
        out += "gene" + std::to_string(e.i) + "-gene" + std::to_string(e.j) + " " +
               detail::padded(e.statistic, 11) + "computed=" + std::to_string(e.computed) +
               " reference=" + std::to_string(e.reference) + " " + status;
        if (!e.exact_set && e.status == CheckStatus::pass && e.computed != e.reference) {
            out += " (within tolerance " + std::to_string(convention_tolerance) + ")";
        }
        out += "\n";
    }
    out += "check: " + std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " +
           std::to_string(flagged) + " flagged\n";
    return out;
}

inline std::string condition_text(const ConditionReport& r, const std::string& gamma_origin) {
    std::string out;
    auto row = [&](const std::string& key, const std::string& value) {
        out += detail::padded(key, 14) + value + "\n";
    };
    std::string marginals;
    for (std::size_t a = 0; a < r.summary.marginal.size(); ++a) {
        if (!marginals.empty()) marginals += ' ';
        marginals += detail::fmt6(r.summary.marginal[a]);
    }
    row("p(a)", marginals);
    row("p_bar", detail::fmt6(r.summary.p_bar));
    row("q", detail::fmt6(r.summary.q));
    row("p0", detail::fmt6(r.summary.p0));
    row("q_bar", detail::fmt6(r.summary.q_bar));
    row("rho", detail::fmt6(r.summary.rho));
    row("gamma_R", detail::fmt6(r.gamma_r) + (gamma_origin.empty() ? "" : " (" + gamma_origin + ")"));
    row("term_pbar", detail::fmt6(r.terms[0]));
    row("term_qqbar", detail::fmt6(r.terms[1]));
    row("term_rho", detail::fmt6(r.terms[2]));
    row("term_entropy", detail::fmt6(r.terms[3]));
    row("lhs", detail::fmt6(r.lhs));
    row("verdict", r.satisfied ? "SATISFIED" : "NOT SATISFIED");
    return out;
}

inline std::string simulate_csv_header() { return "model,rep,seed,n,L,V,H,stretch,uniq\n"; }

inline std::string simulate_csv_row(const ScalingRow& r) {
    return r.model + "," + std::to_string(r.rep) + "," + std::to_string(r.seed) + "," +
           std::to_string(r.n) + "," + std::to_string(r.lcs) + "," + std::to_string(r.vertical) +
           "," + std::to_string(r.horizontal) + "," + std::to_string(r.stretch) + "," +
           std::to_string(r.uniq) + "\n";
}

inline std::string scan_csv_header() { return "model,n,rep,seed,L,V,H\n"; }

inline std::string scan_csv(const ScalingResult& result) {
    std::string out = scan_csv_header();
    for (const auto& r : result.rows) {
        out += r.model + "," + std::to_string(r.n) + "," + std::to_string(r.rep) + "," +
               std::to_string(r.seed) + "," + std::to_string(r.lcs) + "," +
               std::to_string(r.vertical) + "," + std::to_string(r.horizontal) + "\n";
    }
    return out;
}

inline std::string scan_summary_text(const ScalingResult& result) {
    std::string out = "model,n,count,median_L,median_V,q1_V,q3_V,median_H\n";
    for (const auto& a : result.aggregates) {
        out += a.model + "," + std::to_string(a.n) + "," + std::to_string(a.count) + "," +
               detail::fmt3(a.median_l) + "," + detail::fmt3(a.median_v) + "," +
               detail::fmt3(a.q1_v) + "," + detail::fmt3(a.q3_v) + "," + detail::fmt3(a.median_h) +
               "\n";
    }
    return out;
}

}  // namespace extal
