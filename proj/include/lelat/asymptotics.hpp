#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lelat/lattice.hpp"

namespace lelat {

/// Weighting of the four non-flat branches inside the j312 / tkl integrands:
/// spectrum_derived uses 1/(6*sqrt(2)) resp. 1/(9*sqrt(2)), the coefficients
/// consistent with the half-scaled closed-form spectra; reference_printed
/// uses the tabulated 1/12 resp. 1/18. The audit reports constants under
/// both. Families without branch terms ignore the choice.
enum class BranchWeighting { spectrum_derived, reference_printed };

enum class QuadRule { midpoint, gauss };

/// Per-vertex LEL integrand over the unit square, flat-band contribution
/// included, so the per-vertex constant is the plain double integral.
struct Integrand {
    Family family = Family::square;
    BranchWeighting weighting = BranchWeighting::spectrum_derived;

    double operator()(double x, double y) const;
    double flat_term() const;
};

struct QuadratureOptions {
    int points_per_axis = 1024;  // power of two, >= 8 after halving `levels` times
    QuadRule rule = QuadRule::midpoint;
    int levels = 3;  // grid doublings used for Richardson extrapolation
    BranchWeighting weighting = BranchWeighting::spectrum_derived;
};

struct QuadratureResult {
    double constant_h = 0.0;      // Richardson-extrapolated value
    double error_estimate = 0.0;  // |difference between the two finest grids|
    int points_per_axis = 0;
    QuadRule rule = QuadRule::midpoint;
    int levels = 0;
    std::vector<double> level_values;  // raw rule values, coarsest first
};

/// Per-vertex asymptotic LEL constant of a family by 2-d quadrature.
QuadratureResult quad_constant(Family family, const QuadratureOptions& options = {});

/// Per-vertex constant of the k-dimensional square lattice (k in 1..4):
/// (2*pi)^-k integral of sqrt(sum_i (2 - 2 cos x_i)). The grid is halved
/// until total points N^k stay within 1e8.
QuadratureResult kdim_constant(int k, int points_per_axis = 1024);

struct ConvergenceRow {
    int m = 0;
    int n = 0;
    Boundary boundary = Boundary::torus;
    int n_vertices = 0;
    double per_vertex = 0.0;
    double deviation = 0.0;  // |per_vertex - constant_h|
};

struct ConvergenceReport {
    Family family = Family::square;
    double constant_h = 0.0;
    std::vector<ConvergenceRow> rows;  // grouped by boundary, sizes ascending

    /// Within each boundary, deviations must not grow by more than `slack`
    /// from one size to the next.
    bool trend_ok(double slack = 1.5) const;
};

struct SweepOptions {
    std::vector<Boundary> boundaries = {Boundary::torus, Boundary::cylinder, Boundary::free};
    std::size_t numeric_cap = 4096;
    QuadratureOptions quad;
};

/// Finite-size per-vertex LEL against the quadrature constant, closed forms
/// where available and the eigensolver elsewhere.
ConvergenceReport converge_sweep(Family family, const std::vector<std::pair<int, int>>& sizes,
                                 const SweepOptions& options = {});

/// Per-vertex LEL of one instance (closed form if available, else numeric).
double per_vertex_lel(const LatticeSpec& spec, std::size_t numeric_cap = 4096);

}  // namespace lelat
