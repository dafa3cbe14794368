#include "lelat/run.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <tuple>
#include <vector>

#include "lelat/audit.hpp"
#include "lelat/io.hpp"
#include "lelat/lel.hpp"

namespace lelat {

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "edgelist") return OutputFormat::edgelist;
    throw invalid_size_error("unknown format \"" + s + "\" (expected csv|json|edgelist)");
}

namespace {

std::pair<int, int> default_size(Family family) {
    switch (family) {
        case Family::square: return {4, 4};
        case Family::hexagonal: return {3, 3};
        case Family::j312: return {3, 3};
        case Family::tkl: return {2, 2};
        case Family::m3342: return {3, 4};
    }
    throw shape_error("default_size: unknown family");
}

std::vector<std::pair<int, int>> default_ladder(Family family) {
    switch (family) {
        case Family::square: return {{8, 8}, {16, 16}, {32, 32}, {64, 64}};
        case Family::hexagonal: return {{3, 3}, {7, 7}, {15, 15}};
        case Family::j312: return {{2, 2}, {3, 3}, {4, 4}};
        case Family::tkl: return {{2, 2}, {3, 3}};
        case Family::m3342: return {{2, 4}, {3, 6}, {5, 10}};
    }
    throw shape_error("default_ladder: unknown family");
}

Family require_family(const RunConfig& config) {
    if (!config.family) throw invalid_size_error("this command requires --family");
    return *config.family;
}

LatticeSpec spec_of(const RunConfig& config) {
    LatticeSpec spec;
    spec.family = require_family(config);
    spec.boundary = config.boundary;
    std::tie(spec.m, spec.n) = default_size(spec.family);
    if (config.m > 0) spec.m = config.m;
    if (config.n > 0) spec.n = config.n;
    return spec;
}

OutputFormat format_or(const RunConfig& config, OutputFormat fallback) {
    return config.format.value_or(fallback);
}

void require_format(OutputFormat got, std::initializer_list<OutputFormat> allowed,
                    const std::string& command) {
    for (OutputFormat f : allowed)
        if (got == f) return;
    throw invalid_size_error(command + ": unsupported output format");
}

void emit(const RunConfig& config, const std::string& content, std::ostream& console,
          bool echo_without_out = true) {
    if (config.out) {
        write_file_atomic(*config.out, content);
        console << "wrote " << *config.out << "\n";
    } else if (echo_without_out) {
        console << content;
    }
}

QuadratureOptions quad_options(const RunConfig& config) {
    QuadratureOptions q;
    q.points_per_axis = config.grid;
    q.rule = config.rule;
    q.levels = config.levels;
    return q;
}

// Chooses the spectrum a command works with: closed form when one exists,
// the eigensolver otherwise; when both are in reach the numeric spectrum is
// used as a cross-check.
struct SpectrumChoice {
    Spectrum preferred;
    std::optional<SpectrumComparison> comparison;
    std::string note;
};

SpectrumChoice choose_spectrum(const LatticeSpec& spec, const RunConfig& config) {
    SpectrumChoice choice;
    if (has_closed_form(spec)) {
        validate_spec(spec);
        choice.preferred = closed_form_spectrum(spec);
        const Graph g = build_lattice(spec);
        if (static_cast<std::size_t>(g.n_vertices()) <= config.cap) {
            choice.comparison = spectrum_compare(choice.preferred, numeric_spectrum(g, config.cap),
                                                 config.tolerance);
            std::ostringstream note;
            note << "numeric cross-check max dev " << format_sig(choice.comparison->max_abs_dev, 3)
                 << " (tol " << format_sig(config.tolerance, 3) << ", "
                 << (choice.comparison->pass ? "pass" : "FAIL") << ")";
            choice.note = note.str();
        } else {
            choice.note = "numeric cross-check skipped (vertex count exceeds --cap)";
        }
    } else {
        choice.preferred = numeric_spectrum(build_lattice(spec), config.cap);
        choice.note = "no closed form for this boundary; eigensolver used";
    }
    return choice;
}

int run_build(const RunConfig& config, std::ostream& console) {
    const LatticeSpec spec = spec_of(config);
    const Graph g = build_lattice(spec);
    const OutputFormat format = format_or(config, OutputFormat::edgelist);
    require_format(format, {OutputFormat::edgelist, OutputFormat::csv, OutputFormat::json},
                   "build");
    std::string content;
    if (format == OutputFormat::edgelist) {
        content = to_edge_list(g);
    } else if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "u,v\n";
        for (const auto& [u, v] : g.edges()) out << u << "," << v << "\n";
        content = out.str();
    } else {
        std::ostringstream out;
        out << "{\n  \"spec\": \"" << to_string(spec) << "\",\n  \"n_vertices\": "
            << g.n_vertices() << ",\n  \"n_edges\": " << g.n_edges() << ",\n  \"edges\": [";
        for (int i = 0; i < g.n_edges(); ++i) {
            const auto& [u, v] = g.edges()[i];
            out << (i ? ", " : "") << "[" << u << ", " << v << "]";
        }
        out << "]\n}\n";
        content = out.str();
    }
    if (config.out) {
        write_file_atomic(*config.out, content);
        console << "built " << to_string(spec) << ": " << g.n_vertices() << " vertices, "
                << g.n_edges() << " edges -> " << *config.out << "\n";
    } else {
        console << content;
    }
    return 0;
}

int run_spectrum(const RunConfig& config, std::ostream& console) {
    const LatticeSpec spec = spec_of(config);
    const SpectrumChoice choice = choose_spectrum(spec, config);
    const OutputFormat format = format_or(config, OutputFormat::csv);
    require_format(format, {OutputFormat::csv, OutputFormat::json}, "spectrum");
    const std::string content =
        format == OutputFormat::csv
            ? spectrum_csv(choice.preferred)
            : spectrum_json(choice.preferred,
                            choice.comparison ? &*choice.comparison : nullptr);
    console << "spectrum of " << to_string(spec) << ": " << choice.preferred.size()
            << " eigenvalues ("
            << (choice.preferred.source == SpectrumSource::closed_form ? "closed form" : "numeric")
            << "); " << choice.note << "\n";
    emit(config, content, console);
    if (choice.comparison && !choice.comparison->pass) return 1;
    return 0;
}

int run_lel(const RunConfig& config, std::ostream& console) {
    const LatticeSpec spec = spec_of(config);
    const SpectrumChoice choice = choose_spectrum(spec, config);
    const LelValue v = lel(choice.preferred);
    const auto [lo, hi] = lel_bounds(v.n_edges);
    const OutputFormat format = format_or(config, OutputFormat::csv);
    require_format(format, {OutputFormat::csv, OutputFormat::json}, "lel");
    console << "LEL(" << to_string(spec) << ") = " << format_sig(v.value, 10) << ", per vertex "
            << format_sig(v.per_vertex, 10) << ", bounds [" << format_sig(lo, 10) << ", "
            << format_sig(hi, 10) << "]; " << choice.note << "\n";
    emit(config, format == OutputFormat::csv ? lel_csv(v) : lel_json(v), console, false);
    return 0;
}

int run_constant(const RunConfig& config, std::ostream& console) {
    const Family family = require_family(config);
    QuadratureOptions q = quad_options(config);
    const QuadratureResult primary = quad_constant(family, q);
    console << "h(" << family_name(family) << ") = " << format_sig(primary.constant_h, 10)
            << " +/- " << format_sig(primary.error_estimate, 3) << " ("
            << (q.rule == QuadRule::midpoint ? "midpoint" : "gauss") << " "
            << primary.points_per_axis << "^2, " << primary.levels << " doublings)\n";
    std::optional<QuadratureResult> reference;
    if (family == Family::j312 || family == Family::tkl) {
        q.weighting = BranchWeighting::reference_printed;
        reference = quad_constant(family, q);
        console << "h(" << family_name(family) << ", tabulated branch weighting) = "
                << format_sig(reference->constant_h, 10) << "\n";
    }
    const OutputFormat format = format_or(config, OutputFormat::csv);
    require_format(format, {OutputFormat::csv, OutputFormat::json}, "constant");
    std::string content;
    if (format == OutputFormat::csv) {
        content = quadrature_csv(primary, family_name(family));
        if (reference) {
            const std::string extra =
                quadrature_csv(*reference, family_name(family) + "-tabulated-weighting");
            content += extra.substr(extra.find('\n') + 1);  // drop the repeated header
        }
    } else {
        content = constant_json(primary, family_name(family), reference ? &*reference : nullptr);
    }
    emit(config, content, console, false);
    return 0;
}

int run_kdim(const RunConfig& config, std::ostream& console) {
    const QuadratureResult r = kdim_constant(config.k, config.grid);
    const std::string label = "dim=" + std::to_string(config.k);
    console << "h_" << config.k << " = " << format_sig(r.constant_h, 10) << " +/- "
            << format_sig(r.error_estimate, 3) << " (midpoint " << r.points_per_axis << "^"
            << config.k << ", " << r.levels << " doublings)\n";
    const OutputFormat format = format_or(config, OutputFormat::csv);
    require_format(format, {OutputFormat::csv, OutputFormat::json}, "kdim");
    emit(config,
         format == OutputFormat::csv ? quadrature_csv(r, label) : quadrature_json(r, label),
         console, false);
    return 0;
}

int run_converge(const RunConfig& config, std::ostream& console, bool boundary_given) {
    const Family family = require_family(config);
    SweepOptions options;
    options.numeric_cap = config.cap;
    options.quad = quad_options(config);
    if (boundary_given) options.boundaries = {config.boundary};
    std::vector<std::pair<int, int>> sizes;
    if (config.m > 0 && config.n > 0) {
        // halving ladder ending at the requested size; stops where any swept
        // boundary would reject the size
        int m = config.m, n = config.n;
        for (int step = 0; step < 3; ++step) {
            bool valid = true;
            for (Boundary b : options.boundaries) {
                try {
                    validate_spec({family, b, m, n});
                } catch (const invalid_size_error&) {
                    valid = false;
                }
            }
            if (!valid) break;
            sizes.emplace_back(m, n);
            m /= 2;
            n /= 2;
        }
        if (sizes.empty()) sizes.emplace_back(config.m, config.n);
    } else {
        sizes = default_ladder(family);
    }
    const ConvergenceReport report = converge_sweep(family, sizes, options);
    console << "convergence of " << family_name(family) << " toward h = "
            << format_sig(report.constant_h, 10) << " (trend "
            << (report.trend_ok() ? "ok" : "NOT MONOTONE within slack") << ")\n";
    for (const auto& row : report.rows)
        console << "  " << row.m << "x" << row.n << " " << boundary_name(row.boundary) << ": "
                << format_sig(row.per_vertex, 10) << " (dev " << format_sig(row.deviation, 3)
                << ", " << row.n_vertices << " vertices)\n";
    const OutputFormat format = format_or(config, OutputFormat::csv);
    require_format(format, {OutputFormat::csv, OutputFormat::json}, "converge");
    emit(config, format == OutputFormat::csv ? convergence_csv(report) : convergence_json(report),
         console, false);
    if (config.out) {
        std::filesystem::path plot(*config.out);
        plot.replace_extension(".dat");
        write_file_atomic(plot, convergence_plot_data(report));
        console << "wrote " << plot.string() << "\n";
    }
    return 0;
}

int run_audit(const RunConfig& config, std::ostream& console) {
    const Family family = require_family(config);
    const AuditReport report = audit_family(family, config.m, config.n, quad_options(config));
    console << "audit of " << family_name(family) << " (instance " << to_string(report.spec)
            << "):\n";
    for (const auto& line : report.findings) console << "  - " << line << "\n";
    const OutputFormat format = format_or(config, OutputFormat::json);
    require_format(format, {OutputFormat::json}, "audit");
    emit(config, audit_json(report), console, false);
    return report.oracle_pass ? 0 : 1;
}

int run_perturb(const RunConfig& config, std::ostream& console) {
    const int n_vertices = config.m > 0 ? config.m : 10;
    const double edge_prob = 0.4;
    const PerturbationTrials trials =
        run_perturbation_trials(config.seed, config.trials, n_vertices, edge_prob);
    console << "perturbation trials: " << trials.trials << " on G(" << n_vertices << ", "
            << format_sig(edge_prob, 3) << "), seed " << config.seed << ": " << trials.violations
            << " violations; min margins " << format_sig(trials.min_lower_margin, 3) << " / "
            << format_sig(trials.min_upper_margin, 3) << "\n";
    const OutputFormat format = format_or(config, OutputFormat::json);
    require_format(format, {OutputFormat::json}, "perturb");
    emit(config, perturbation_json(trials, config.seed, n_vertices, edge_prob), console, false);
    return trials.violations == 0 ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& console) {
    try {
        switch (config.command) {
            case Command::build: return run_build(config, console);
            case Command::spectrum: return run_spectrum(config, console);
            case Command::lel: return run_lel(config, console);
            case Command::constant: return run_constant(config, console);
            case Command::kdim: return run_kdim(config, console);
            case Command::converge:
                return run_converge(config, console, config.boundary_given);
            case Command::audit: return run_audit(config, console);
            case Command::perturb: return run_perturb(config, console);
        }
        console << "error: unknown command\n";
        return 1;
    } catch (const io_error& e) {
        console << "i/o error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_size_error& e) {
        console << "error: " << e.what() << "\n";
        return 1;
    } catch (const missing_edge_error& e) {
        console << "error: " << e.what() << "\n";
        return 1;
    } catch (const containment_error& e) {
        console << "error: " << e.what() << "\n";
        return 1;
    } catch (const shape_error& e) {
        console << "error: " << e.what() << "\n";
        return 1;
    } catch (const invalid_spectrum_error& e) {
        console << "error: " << e.what() << "\n";
        return 1;
    } catch (const division_error& e) {
        console << "error: " << e.what() << "\n";
        return 1;
    } catch (const no_closed_form_error& e) {
        console << "error: " << e.what() << "\n";
        return 1;
    } catch (const capacity_error& e) {
        console << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        console << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace lelat
