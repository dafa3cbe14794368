#pragma once

#include <cstdint>
#include <utility>

#include "lelat/graph.hpp"
#include "lelat/spectral.hpp"

namespace lelat {

/// Laplacian-energy-like invariant: sum of square roots of the Laplacian
/// eigenvalues.
struct LelValue {
    double value = 0.0;
    double per_vertex = 0.0;
    int n_vertices = 0;
    int n_edges = 0;  // recovered from the spectrum sum (= 2|E|)
};

LelValue lel(const Spectrum& spectrum);

/// (sqrt(2 m), sqrt(2) * m) for a graph with m edges; LEL always lies inside,
/// with equality iff the edges form a single matching edge (lower) or a
/// perfect matching union isolated vertices (upper).
std::pair<double, double> lel_bounds(int n_edges);

/// Edge-perturbation inequality check for h a spanning subgraph of g:
///   |LEL(g) - LEL(h)|  <=  LEL(g - E(h))  <=  LEL(g) + LEL(h).
/// Margins are the slack of each inequality (>= 0 up to eigensolver noise).
struct PerturbationReport {
    LelValue g;
    LelValue h;
    LelValue difference;  // graph on V(g) with edge set E(g) \ E(h)
    double lower_margin = 0.0;
    double upper_margin = 0.0;
};

PerturbationReport check_perturbation(const Graph& g, const Graph& h, std::size_t cap = 4096);

/// One row of the relative-stability table: for a pair (g, h) on one vertex
/// set, |LEL(h)/LEL(g) - 1| <= 2 * edge_delta(g, h) / LEL(g).
struct RatioRow {
    int index = 0;
    int delta = 0;
    double delta_over_lel = 0.0;
    double ratio = 0.0;
    double bound_margin = 0.0;  // bound + 1e-8 - |ratio - 1|
};

std::vector<RatioRow> ratio_convergence(const std::vector<std::pair<Graph, Graph>>& pairs,
                                        std::size_t cap = 4096);

struct PerturbationTrials {
    int trials = 0;
    int violations = 0;
    double min_lower_margin = 0.0;
    double min_upper_margin = 0.0;
};

/// Seeded sweep: each trial draws g ~ G(n_vertices, edge_prob) and a random
/// spanning subgraph h, then checks the perturbation inequalities. A margin
/// below -1e-8 counts as a violation.
PerturbationTrials run_perturbation_trials(std::uint64_t seed, int trials,
                                           int n_vertices = 10, double edge_prob = 0.4);

}  // namespace lelat
