#include "lelat/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace lelat {

using nlohmann::json;

void ensure_finite(double v) {
    if (!std::isfinite(v)) throw io_error("refusing to serialize a non-finite value");
}

std::string format_sig(double v, int sig) {
    ensure_finite(v);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
    return buf;
}

double round_sig(double v, int sig) { return std::stod(format_sig(v, sig)); }

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) throw io_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw io_error("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

namespace {

const char* source_name(SpectrumSource s) {
    return s == SpectrumSource::closed_form ? "closed_form" : "numeric";
}

json comparison_json(const SpectrumComparison& c) {
    return json{{"max_abs_dev", round_sig(c.max_abs_dev)},
                {"index", c.index},
                {"tol", round_sig(c.tol)},
                {"pass", c.pass}};
}

json quadrature_body(const QuadratureResult& r) {
    json levels = json::array();
    for (double v : r.level_values) levels.push_back(round_sig(v));
    return json{{"constant", round_sig(r.constant_h)},
                {"error_estimate", round_sig(r.error_estimate)},
                {"points_per_axis", r.points_per_axis},
                {"rule", r.rule == QuadRule::midpoint ? "midpoint" : "gauss"},
                {"levels", r.levels},
                {"level_values", levels}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string spectrum_csv(const Spectrum& s) {
    std::ostringstream out;
    out << "index,eigenvalue\n";
    for (int i = 0; i < s.size(); ++i) out << i << "," << format_sig(s.values[i]) << "\n";
    return out.str();
}

std::string spectrum_json(const Spectrum& s, const SpectrumComparison* comparison) {
    json values = json::array();
    for (double v : s.values) values.push_back(round_sig(v));
    json j{{"subject", s.subject},
           {"source", source_name(s.source)},
           {"count", s.size()},
           {"eigenvalues", values}};
    if (comparison) j["comparison"] = comparison_json(*comparison);
    return dump(j);
}

std::string lel_csv(const LelValue& v) {
    const auto [lo, hi] = lel_bounds(v.n_edges);
    std::ostringstream out;
    out << "value,per_vertex,n_vertices,n_edges,lower_bound,upper_bound\n";
    out << format_sig(v.value) << "," << format_sig(v.per_vertex) << "," << v.n_vertices << ","
        << v.n_edges << "," << format_sig(lo) << "," << format_sig(hi) << "\n";
    return out.str();
}

std::string lel_json(const LelValue& v) {
    const auto [lo, hi] = lel_bounds(v.n_edges);
    return dump(json{{"value", round_sig(v.value)},
                     {"per_vertex", round_sig(v.per_vertex)},
                     {"n_vertices", v.n_vertices},
                     {"n_edges", v.n_edges},
                     {"lower_bound", round_sig(lo)},
                     {"upper_bound", round_sig(hi)}});
}

std::string quadrature_csv(const QuadratureResult& r, const std::string& label) {
    std::ostringstream out;
    out << "label,rule,points_per_axis,levels,constant,error_estimate\n";
    out << label << "," << (r.rule == QuadRule::midpoint ? "midpoint" : "gauss") << ","
        << r.points_per_axis << "," << r.levels << "," << format_sig(r.constant_h) << ","
        << format_sig(r.error_estimate) << "\n";
    return out.str();
}

std::string quadrature_json(const QuadratureResult& r, const std::string& label) {
    json j = quadrature_body(r);
    j["label"] = label;
    return dump(j);
}

std::string constant_json(const QuadratureResult& primary, const std::string& label,
                          const QuadratureResult* reference_weighted) {
    json j = quadrature_body(primary);
    j["label"] = label;
    if (reference_weighted) j["tabulated_weighting"] = quadrature_body(*reference_weighted);
    return dump(j);
}

std::string convergence_csv(const ConvergenceReport& r) {
    std::ostringstream out;
    out << "m,n,boundary,per_vertex,deviation\n";
    for (const auto& row : r.rows)
        out << row.m << "," << row.n << "," << boundary_name(row.boundary) << ","
            << format_sig(row.per_vertex) << "," << format_sig(row.deviation) << "\n";
    return out.str();
}

std::string convergence_json(const ConvergenceReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"m", row.m},
                            {"n", row.n},
                            {"boundary", boundary_name(row.boundary)},
                            {"n_vertices", row.n_vertices},
                            {"per_vertex", round_sig(row.per_vertex)},
                            {"deviation", round_sig(row.deviation)}});
    return dump(json{{"family", family_name(r.family)},
                     {"constant", round_sig(r.constant_h)},
                     {"rows", rows},
                     {"trend_ok", r.trend_ok()}});
}

std::string convergence_plot_data(const ConvergenceReport& r) {
    std::ostringstream out;
    bool first = true;
    Boundary current = Boundary::torus;
    for (const auto& row : r.rows) {
        if (first || row.boundary != current) {
            if (!first) out << "\n";
            out << "# " << boundary_name(row.boundary) << "\n";
            current = row.boundary;
            first = false;
        }
        out << row.n_vertices << " " << format_sig(row.deviation) << "\n";
    }
    return out.str();
}

std::string audit_json(const AuditReport& r) {
    json j{{"family", family_name(r.spec.family)},
           {"instance",
            json{{"m", r.spec.m}, {"n", r.spec.n}, {"boundary", boundary_name(r.spec.boundary)}}},
           {"oracle", json{{"deviation", round_sig(r.oracle_deviation)},
                           {"tol", round_sig(r.oracle_tol)},
                           {"pass", r.oracle_pass}}},
           {"instance_per_vertex", round_sig(r.instance_per_vertex)},
           {"constant", round_sig(r.constant_h)},
           {"reference", json{{"per_vertex", round_sig(r.reference_per_vertex)},
                              {"total_coefficient", round_sig(r.reference_total_coefficient)}}},
           {"self_total_coefficient", round_sig(r.self_total_coefficient)},
           {"consistent", json{{"per_vertex", r.reference_per_vertex_consistent},
                               {"total", r.reference_total_consistent}}},
           {"findings", r.findings}};
    if (r.branches) {
        j["branches"] = json{
            {"dev_half", round_sig(r.branches->dev_half)},
            {"dev_quarter", round_sig(r.branches->dev_quarter)},
            {"selected", r.branches->selected == BranchScale::half ? "half" : "quarter"},
            {"constant_spectrum_weighted", round_sig(r.branches->constant_spectrum_weighted)},
            {"constant_reference_weighted", round_sig(r.branches->constant_reference_weighted)}};
    }
    if (r.orientation) {
        j["orientation"] = json{{"dev_primary", round_sig(r.orientation->dev_primary)},
                                {"dev_mirrored", round_sig(r.orientation->dev_mirrored)},
                                {"primary_selected", r.orientation->primary_selected}};
    }
    return dump(j);
}

std::string perturbation_json(const PerturbationTrials& t, std::uint64_t seed, int n_vertices,
                              double edge_prob) {
    return dump(json{{"seed", seed},
                     {"trials", t.trials},
                     {"n_vertices", n_vertices},
                     {"edge_prob", round_sig(edge_prob)},
                     {"violations", t.violations},
                     {"min_lower_margin", round_sig(t.min_lower_margin)},
                     {"min_upper_margin", round_sig(t.min_upper_margin)}});
}

}  // namespace lelat
