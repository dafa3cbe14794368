#include "lelat/lel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lelat {

LelValue lel(const Spectrum& spectrum) {
    LelValue v;
    v.n_vertices = spectrum.size();
    double sum = 0.0;
    for (double x : spectrum.values) sum += std::sqrt(x);
    v.value = sum;
    v.per_vertex = v.n_vertices > 0 ? sum / v.n_vertices : 0.0;
    v.n_edges = static_cast<int>(std::llround(spectrum.sum() / 2.0));
    return v;
}

std::pair<double, double> lel_bounds(int n_edges) {
    if (n_edges < 0) throw invalid_size_error("lel_bounds: negative edge count");
    const double m = n_edges;
    return {std::sqrt(2.0 * m), std::sqrt(2.0) * m};
}

PerturbationReport check_perturbation(const Graph& g, const Graph& h, std::size_t cap) {
    if (g.n_vertices() != h.n_vertices())
        throw shape_error("check_perturbation: vertex counts differ");
    if (!std::includes(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end()))
        throw containment_error("check_perturbation: E(h) is not contained in E(g)");
    const Graph diff = delete_edges(g, h.edges());
    PerturbationReport rep;
    rep.g = lel(numeric_spectrum(g, cap));
    rep.h = lel(numeric_spectrum(h, cap));
    rep.difference = lel(numeric_spectrum(diff, cap));
    rep.lower_margin = rep.difference.value - std::abs(rep.g.value - rep.h.value);
    rep.upper_margin = rep.g.value + rep.h.value - rep.difference.value;
    return rep;
}

std::vector<RatioRow> ratio_convergence(const std::vector<std::pair<Graph, Graph>>& pairs,
                                        std::size_t cap) {
    std::vector<RatioRow> rows;
    rows.reserve(pairs.size());
    int index = 0;
    for (const auto& [g, h] : pairs) {
        if (g.n_vertices() != h.n_vertices())
            throw shape_error("ratio_convergence: vertex counts differ at pair " +
                              std::to_string(index));
        const double lel_g = lel(numeric_spectrum(g, cap)).value;
        if (lel_g == 0.0)
            throw division_error("ratio_convergence: LEL(g) = 0 at pair " + std::to_string(index));
        const double lel_h = lel(numeric_spectrum(h, cap)).value;
        RatioRow row;
        row.index = index++;
        row.delta = edge_delta(g, h);
        row.delta_over_lel = row.delta / lel_g;
        row.ratio = lel_h / lel_g;
        row.bound_margin = 2.0 * row.delta_over_lel + 1e-8 - std::abs(row.ratio - 1.0);
        if (row.bound_margin < 0.0)
            throw std::logic_error("ratio_convergence: stability bound violated at pair " +
                                   std::to_string(row.index));
        rows.push_back(row);
    }
    return rows;
}

PerturbationTrials run_perturbation_trials(std::uint64_t seed, int trials, int n_vertices,
                                           double edge_prob) {
    if (trials < 1) throw invalid_size_error("perturbation trials: need at least 1 trial");
    std::mt19937_64 rng(seed);
    PerturbationTrials out;
    out.trials = trials;
    out.min_lower_margin = std::numeric_limits<double>::infinity();
    out.min_upper_margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        const Graph g = random_graph(rng, n_vertices, edge_prob);
        const Graph h = random_spanning_subgraph(rng, g, 0.5);
        const PerturbationReport rep = check_perturbation(g, h);
        out.min_lower_margin = std::min(out.min_lower_margin, rep.lower_margin);
        out.min_upper_margin = std::min(out.min_upper_margin, rep.upper_margin);
        if (rep.lower_margin < -1e-8 || rep.upper_margin < -1e-8) ++out.violations;
    }
    return out;
}

}  // namespace lelat
