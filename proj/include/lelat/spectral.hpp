#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lelat/lattice.hpp"

namespace lelat {

/// Eigenvalues in [-tol, tol] are flushed to exact zeros (no simple graph we
/// handle has a true nonzero eigenvalue that small, and sqrt-based
/// functionals amplify noise at zero modes); below -tol the spectrum is
/// rejected as corrupt.
inline constexpr double kEigenvalueClampTol = 1e-9;

enum class SpectrumSource { closed_form, numeric };

/// Laplacian spectrum, sorted descending, nonnegative after clamping.
struct Spectrum {
    std::vector<double> values;
    SpectrumSource source = SpectrumSource::numeric;
    std::string subject;

    int size() const { return static_cast<int>(values.size()); }
    double sum() const;

    static Spectrum of(std::vector<double> values, SpectrumSource source, std::string subject);
};

/// Momentum angles 2*pi*i/(m+1), 2*pi*j/(n+1) shared by the hexagonal-family
/// closed forms, plus the radicand 3 + 2cos(a) + 2cos(b) + 2cos(a+b)
/// clamped to [0, 9].
struct GridAngles {
    int m = 0;
    int n = 0;
    double alpha(int i) const;
    double beta(int j) const;
    double radicand(int i, int j) const;
};

/// Scale of the four non-flat branches in the j312 / tkl closed forms:
/// half means (5 +- sqrt(13 +- 4 s(a, b))) / 2, quarter divides by 4 instead.
/// Both candidates circulate; the audit adjudicates them against the
/// eigensolver (half wins).
enum class BranchScale { half, quarter };

bool has_closed_form(const LatticeSpec& spec);

/// Closed-form Laplacian spectrum. Square supports every boundary; the other
/// families are torus-only and throw no_closed_form_error otherwise. Closed
/// forms stay evaluable below the build_lattice size minimums.
Spectrum closed_form_spectrum(const LatticeSpec& spec, BranchScale scale = BranchScale::half);

/// Dense Laplacian L = D - A, row-major n x n.
std::vector<double> laplacian_matrix(const Graph& g);

/// Eigenvalues of a dense symmetric matrix (row-major, size n * n) by cyclic
/// Jacobi rotations; iterates until the off-diagonal Frobenius norm falls
/// below 1e-12 times the matrix Frobenius norm. Ascending order.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

struct EigenSystem {
    int n = 0;
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // row-major; column k is the eigenvector of values[k]
};

EigenSystem jacobi_eigensystem(std::vector<double> a, int n);

/// Laplacian spectrum of g via the Jacobi solver; refuses graphs larger than
/// cap vertices with capacity_error.
Spectrum numeric_spectrum(const Graph& g, std::size_t cap = 4096);

struct SpectrumComparison {
    double max_abs_dev = 0.0;
    int index = -1;  // position (in descending order) attaining the max
    double tol = 0.0;
    bool pass = false;
};

/// Elementwise comparison of two equal-length sorted spectra.
SpectrumComparison spectrum_compare(const Spectrum& a, const Spectrum& b, double tol);

/// For an r-regular graph with adjacency eigenvalues lam, the Laplacian
/// spectrum is r - lam; input is the adjacency eigenvalue list.
std::vector<double> regular_adjacency_to_laplacian(const std::vector<double>& adjacency_eigenvalues, int r);

}  // namespace lelat
