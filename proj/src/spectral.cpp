#include "lelat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace lelat {

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

Spectrum Spectrum::of(std::vector<double> values, SpectrumSource source, std::string subject) {
    for (double& v : values) {
        if (std::isnan(v) || v < -kEigenvalueClampTol)
            throw invalid_spectrum_error("spectrum \"" + subject +
                                         "\": eigenvalue below -1e-9 or NaN");
        // flush |v| <= tol to an exact zero: eigensolver noise at a zero mode
        // would otherwise leak into sqrt-based functionals as sqrt(noise)
        if (v <= kEigenvalueClampTol) v = 0.0;
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return Spectrum{std::move(values), source, std::move(subject)};
}

double GridAngles::alpha(int i) const { return 2.0 * std::numbers::pi * i / (m + 1); }
double GridAngles::beta(int j) const { return 2.0 * std::numbers::pi * j / (n + 1); }

double GridAngles::radicand(int i, int j) const {
    const double a = alpha(i), b = beta(j);
    const double r = 3.0 + 2.0 * std::cos(a) + 2.0 * std::cos(b) + 2.0 * std::cos(a + b);
    return std::clamp(r, 0.0, 9.0);
}

bool has_closed_form(const LatticeSpec& spec) {
    return spec.family == Family::square || spec.boundary == Boundary::torus;
}

namespace {

constexpr double kPi = std::numbers::pi;

// Eigenvalues 2 - 2cos(i pi / m), i = 0..m-1 (path) or 2 - 2cos(2 pi i / m)
// (cycle); summands of the product-graph spectra.
std::vector<double> path_terms(int m) {
    std::vector<double> t(m);
    for (int i = 0; i < m; ++i) t[i] = 2.0 - 2.0 * std::cos(i * kPi / m);
    return t;
}

std::vector<double> cycle_terms(int m) {
    std::vector<double> t(m);
    for (int i = 0; i < m; ++i) t[i] = 2.0 - 2.0 * std::cos(2.0 * kPi * i / m);
    return t;
}

std::vector<double> square_values(const LatticeSpec& spec) {
    const bool wrap_m = spec.boundary == Boundary::torus;
    const bool wrap_n = spec.boundary != Boundary::free;
    auto rows = wrap_m ? cycle_terms(spec.m) : path_terms(spec.m);
    auto cols = wrap_n ? cycle_terms(spec.n) : path_terms(spec.n);
    std::vector<double> values;
    values.reserve(rows.size() * cols.size());
    for (double r : rows)
        for (double c : cols) values.push_back(r + c);
    return values;
}

std::vector<double> hexagonal_values(int m, int n) {
    GridAngles grid{m, n};
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(2) * (m + 1) * (n + 1));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) {
            const double s = std::sqrt(grid.radicand(i, j));
            values.push_back(3.0 + s);
            values.push_back(3.0 - s);
        }
    return values;
}

// Shared non-flat branches of the j312 / tkl spectra:
// (5 +- sqrt(13 +- 4 s)) / divisor for each grid point.
void append_branches(std::vector<double>& values, const GridAngles& grid, double divisor) {
    for (int i = 0; i <= grid.m; ++i)
        for (int j = 0; j <= grid.n; ++j) {
            const double s = std::sqrt(grid.radicand(i, j));
            for (double e1 : {1.0, -1.0})
                for (double e2 : {1.0, -1.0})
                    values.push_back((5.0 + e1 * std::sqrt(13.0 + e2 * 4.0 * s)) / divisor);
        }
}

std::vector<double> j312_values(int m, int n, BranchScale scale) {
    GridAngles grid{m, n};
    const int q = (m + 1) * (n + 1);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(6) * q);
    values.insert(values.end(), q, 5.0);
    values.insert(values.end(), q, 3.0);
    append_branches(values, grid, scale == BranchScale::half ? 2.0 : 4.0);
    return values;
}

std::vector<double> tkl_values(int m, int n, BranchScale scale) {
    GridAngles grid{m, n};
    const int q = (m + 1) * (n + 1);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(9) * q);
    values.insert(values.end(), static_cast<std::size_t>(3) * q, 6.0);
    values.insert(values.end(), q, 5.0);
    values.insert(values.end(), q, 3.0);
    append_branches(values, grid, scale == BranchScale::half ? 2.0 : 4.0);
    return values;
}

std::vector<double> m3342_values(int m, int n) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(2) * m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const double a = 2.0 * kPi * i / m, b = 2.0 * kPi * j / n;
            const double rad =
                3.0 + 2.0 * std::cos(a) + 2.0 * std::cos(b) + 2.0 * std::cos(a + b);
            const double s = std::sqrt(std::clamp(rad, 0.0, 9.0));
            values.push_back(5.0 - 2.0 * std::cos(b) + s);
            values.push_back(5.0 - 2.0 * std::cos(b) - s);
        }
    return values;
}

}  // namespace

Spectrum closed_form_spectrum(const LatticeSpec& spec, BranchScale scale) {
    if (spec.m < 1 || spec.n < 1)
        throw invalid_size_error("closed_form_spectrum: need m, n >= 1");
    if (!has_closed_form(spec))
        throw no_closed_form_error("no closed-form spectrum for " + to_string(spec) +
                                   "; use the numeric path");
    std::vector<double> values;
    switch (spec.family) {
        case Family::square: values = square_values(spec); break;
        case Family::hexagonal: values = hexagonal_values(spec.m, spec.n); break;
        case Family::j312: values = j312_values(spec.m, spec.n, scale); break;
        case Family::tkl: values = tkl_values(spec.m, spec.n, scale); break;
        case Family::m3342: values = m3342_values(spec.m, spec.n); break;
    }
    return Spectrum::of(std::move(values), SpectrumSource::closed_form, to_string(spec));
}

std::vector<double> laplacian_matrix(const Graph& g) {
    const int n = g.n_vertices();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int v = 0; v < n; ++v) a[static_cast<std::size_t>(v) * n + v] = g.degrees()[v];
    for (const auto& [u, v] : g.edges()) {
        a[static_cast<std::size_t>(u) * n + v] = -1.0;
        a[static_cast<std::size_t>(v) * n + u] = -1.0;
    }
    return a;
}

namespace {

double frobenius(const std::vector<double>& a) {
    double s = 0.0;
    for (double x : a) s += x * x;
    return std::sqrt(s);
}

double off_frobenius(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const double x = a[static_cast<std::size_t>(p) * n + q];
            s += 2.0 * x * x;
        }
    return std::sqrt(s);
}

// Cyclic Jacobi on the full symmetric matrix; V (when given) accumulates the
// rotations so its columns end up as eigenvectors.
void jacobi_iterate(std::vector<double>& a, int n, std::vector<double>* V) {
    if (n < 0 || a.size() != static_cast<std::size_t>(n) * n)
        throw shape_error("jacobi: matrix size is not n * n");
    auto at = [&a, n](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * n + c]; };
    const double fro = frobenius(a);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (std::abs(at(p, q) - at(q, p)) > 1e-12 * (1.0 + fro))
                throw std::logic_error("jacobi: matrix not symmetric");
    if (V) {
        V->assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) (*V)[static_cast<std::size_t>(i) * n + i] = 1.0;
    }
    if (fro == 0.0) return;
    const double target = 1e-12 * fro;
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_frobenius(a, n) <= target) return;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double g = 100.0 * std::abs(apq);
                if (std::abs(at(p, p)) + g == std::abs(at(p, p)) &&
                    std::abs(at(q, q)) + g == std::abs(at(q, q))) {
                    at(p, q) = at(q, p) = 0.0;
                    continue;
                }
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;
                at(p, p) -= h;
                at(q, q) += h;
                at(p, q) = at(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(r, p), arq = at(r, q);
                    at(r, p) = arp - s * (arq + tau * arp);
                    at(r, q) = arq + s * (arp - tau * arq);
                    at(p, r) = at(r, p);
                    at(q, r) = at(r, q);
                }
                if (V) {
                    for (int r = 0; r < n; ++r) {
                        double& vrp = (*V)[static_cast<std::size_t>(r) * n + p];
                        double& vrq = (*V)[static_cast<std::size_t>(r) * n + q];
                        const double xp = vrp, xq = vrq;
                        vrp = xp - s * (xq + tau * xp);
                        vrq = xq + s * (xp - tau * xq);
                    }
                }
            }
    }
    if (off_frobenius(a, n) > target)
        throw std::logic_error("jacobi: no convergence within sweep limit");
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    jacobi_iterate(a, n, nullptr);
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = a[static_cast<std::size_t>(i) * n + i];
    std::sort(values.begin(), values.end());
    return values;
}

EigenSystem jacobi_eigensystem(std::vector<double> a, int n) {
    std::vector<double> V;
    jacobi_iterate(a, n, &V);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return a[static_cast<std::size_t>(i) * n + i] < a[static_cast<std::size_t>(j) * n + j];
    });
    EigenSystem sys;
    sys.n = n;
    sys.values.resize(n);
    sys.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k) {
        const int src = order[k];
        sys.values[k] = a[static_cast<std::size_t>(src) * n + src];
        for (int r = 0; r < n; ++r)
            sys.vectors[static_cast<std::size_t>(r) * n + k] =
                V[static_cast<std::size_t>(r) * n + src];
    }
    return sys;
}

Spectrum numeric_spectrum(const Graph& g, std::size_t cap) {
    const int n = g.n_vertices();
    if (n < 1) throw invalid_size_error("numeric_spectrum: empty graph");
    if (static_cast<std::size_t>(n) > cap)
        throw capacity_error("numeric_spectrum: " + std::to_string(n) +
                             " vertices exceed the eigensolver cap " + std::to_string(cap));
    auto values = jacobi_eigenvalues(laplacian_matrix(g), n);
    return Spectrum::of(std::move(values), SpectrumSource::numeric,
                        "graph on " + std::to_string(n) + " vertices");
}

SpectrumComparison spectrum_compare(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.size() != b.size())
        throw shape_error("spectrum_compare: sizes differ (" + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
    SpectrumComparison cmp;
    cmp.tol = tol;
    for (int i = 0; i < a.size(); ++i) {
        const double d = std::abs(a.values[i] - b.values[i]);
        if (d > cmp.max_abs_dev) {
            cmp.max_abs_dev = d;
            cmp.index = i;
        }
    }
    cmp.pass = cmp.max_abs_dev <= tol;
    return cmp;
}

std::vector<double> regular_adjacency_to_laplacian(const std::vector<double>& adjacency_eigenvalues,
                                                   int r) {
    if (r < 0) throw invalid_size_error("regular_adjacency_to_laplacian: negative degree");
    std::vector<double> values;
    values.reserve(adjacency_eigenvalues.size());
    for (double lam : adjacency_eigenvalues) values.push_back(r - lam);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

}  // namespace lelat
