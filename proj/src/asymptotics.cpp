#include "lelat/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lelat/lel.hpp"
#include "lelat/spectral.hpp"

namespace lelat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 3 + 2cos(2 pi x) + 2cos(2 pi y) + 2cos(2 pi (x+y)), clamped to [0, 9].
double shared_radicand(double x, double y) {
    const double r = 3.0 + 2.0 * std::cos(kTwoPi * x) + 2.0 * std::cos(kTwoPi * y) +
                     2.0 * std::cos(kTwoPi * (x + y));
    return std::clamp(r, 0.0, 9.0);
}

double branch_sum(double s) {
    double total = 0.0;
    for (double e1 : {1.0, -1.0})
        for (double e2 : {1.0, -1.0})
            total += std::sqrt(std::max(0.0, 5.0 + e1 * std::sqrt(13.0 + e2 * 4.0 * s)));
    return total;
}

const double kFlatJ = (std::sqrt(3.0) + std::sqrt(5.0)) / 6.0;
const double kFlatTkl = (std::sqrt(3.0) + std::sqrt(5.0)) / 9.0 + std::sqrt(6.0) / 3.0;
const double kSpectrumWeightJ = 1.0 / (6.0 * std::sqrt(2.0));
const double kSpectrumWeightTkl = 1.0 / (9.0 * std::sqrt(2.0));

}  // namespace

double Integrand::flat_term() const {
    switch (family) {
        case Family::j312: return kFlatJ;
        case Family::tkl: return kFlatTkl;
        default: return 0.0;
    }
}

double Integrand::operator()(double x, double y) const {
    switch (family) {
        case Family::square:
            return std::sqrt(
                std::max(0.0, 4.0 - 2.0 * std::cos(kTwoPi * x) - 2.0 * std::cos(kTwoPi * y)));
        case Family::hexagonal: {
            const double s = std::sqrt(shared_radicand(x, y));
            return 0.5 * (std::sqrt(3.0 + s) + std::sqrt(std::max(0.0, 3.0 - s)));
        }
        case Family::j312: {
            const double w =
                weighting == BranchWeighting::spectrum_derived ? kSpectrumWeightJ : 1.0 / 12.0;
            return kFlatJ + w * branch_sum(std::sqrt(shared_radicand(x, y)));
        }
        case Family::tkl: {
            const double w =
                weighting == BranchWeighting::spectrum_derived ? kSpectrumWeightTkl : 1.0 / 18.0;
            return kFlatTkl + w * branch_sum(std::sqrt(shared_radicand(x, y)));
        }
        case Family::m3342: {
            const double s = std::sqrt(shared_radicand(x, y));
            const double base = 5.0 - 2.0 * std::cos(kTwoPi * y);
            return 0.5 * (std::sqrt(std::max(0.0, base - s)) + std::sqrt(base + s));
        }
    }
    throw shape_error("integrand: unknown family");
}

namespace {

double midpoint_value(const Integrand& f, int N) {
    double sum = 0.0;
    for (int i = 0; i < N; ++i) {
        const double x = (i + 0.5) / N;
        double row = 0.0;
        for (int j = 0; j < N; ++j) row += f(x, (j + 0.5) / N);
        sum += row;
    }
    return sum / (static_cast<double>(N) * N);
}

// Legendre nodes and weights mapped to [0, 1] (Newton iteration on P_n).
void gauss_legendre_01(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double z_prev, pp;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z_prev = z;
            z = z_prev - p1 / pp;
        } while (std::abs(z - z_prev) > 1e-15);
        x[i] = 0.5 * (1.0 - z);
        x[n - 1 - i] = 0.5 * (1.0 + z);
        w[i] = w[n - 1 - i] = 1.0 / ((1.0 - z * z) * pp * pp);
    }
}

double gauss_value(const Integrand& f, int N) {
    std::vector<double> x, w;
    gauss_legendre_01(N, x, w);
    double sum = 0.0;
    for (int i = 0; i < N; ++i) {
        double row = 0.0;
        for (int j = 0; j < N; ++j) row += w[j] * f(x[i], x[j]);
        sum += w[i] * row;
    }
    return sum;
}

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

// Fits the extrapolated limit from successive grid doublings. The observed
// order is estimated from the last two differences; with fewer than three
// levels (or non-contracting differences) second order is assumed.
QuadratureResult richardson(std::vector<double> level_values, int points, QuadRule rule,
                            int levels) {
    QuadratureResult r;
    r.points_per_axis = points;
    r.rule = rule;
    r.levels = levels;
    r.level_values = std::move(level_values);
    const std::size_t L = r.level_values.size() - 1;
    const double d_last = r.level_values[L] - r.level_values[L - 1];
    r.error_estimate = std::abs(d_last);
    if (d_last == 0.0) {
        r.constant_h = r.level_values[L];
        return r;
    }
    double order = 2.0;
    if (L >= 2) {
        const double d_prev = r.level_values[L - 1] - r.level_values[L - 2];
        const double ratio = d_prev / d_last;
        if (ratio > 1.0) order = std::clamp(std::log2(ratio), 0.5, 10.0);
    }
    r.constant_h = r.level_values[L] + d_last / (std::pow(2.0, order) - 1.0);
    return r;
}

void validate_grid(int points, int levels) {
    if (!is_power_of_two(points))
        throw invalid_size_error("quadrature: points_per_axis must be a power of two, got " +
                                 std::to_string(points));
    if (levels < 1) throw invalid_size_error("quadrature: need at least 1 doubling level");
    if ((points >> levels) < 8)
        throw invalid_size_error("quadrature: coarsest grid (points_per_axis / 2^levels) "
                                 "must keep at least 8 points per axis");
}

}  // namespace

QuadratureResult quad_constant(Family family, const QuadratureOptions& options) {
    validate_grid(options.points_per_axis, options.levels);
    const Integrand f{family, options.weighting};
    std::vector<double> values;
    values.reserve(options.levels + 1);
    for (int l = options.levels; l >= 0; --l) {
        const int N = options.points_per_axis >> l;
        values.push_back(options.rule == QuadRule::midpoint ? midpoint_value(f, N)
                                                            : gauss_value(f, N));
    }
    return richardson(std::move(values), options.points_per_axis, options.rule, options.levels);
}

namespace {

double kdim_midpoint(int k, int N) {
    std::vector<double> c(N);
    for (int i = 0; i < N; ++i) c[i] = 2.0 - 2.0 * std::cos(kTwoPi * (i + 0.5) / N);
    double sum = 0.0;
    switch (k) {
        case 1:
            for (int i = 0; i < N; ++i) sum += std::sqrt(c[i]);
            break;
        case 2:
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) sum += std::sqrt(c[i] + c[j]);
            break;
        case 3:
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    const double cij = c[i] + c[j];
                    for (int l = 0; l < N; ++l) sum += std::sqrt(cij + c[l]);
                }
            break;
        case 4:
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    const double cij = c[i] + c[j];
                    for (int l = 0; l < N; ++l) {
                        const double cijl = cij + c[l];
                        for (int p = 0; p < N; ++p) sum += std::sqrt(cijl + c[p]);
                    }
                }
            break;
        default: throw invalid_size_error("kdim: dimension must be 1..4");
    }
    return sum / std::pow(static_cast<double>(N), k);
}

}  // namespace

QuadratureResult kdim_constant(int k, int points_per_axis) {
    if (k < 1 || k > 4) throw invalid_size_error("kdim: dimension must be 1..4");
    int points = points_per_axis;
    if (!is_power_of_two(points))
        throw invalid_size_error("quadrature: points_per_axis must be a power of two, got " +
                                 std::to_string(points));
    // keep the total evaluation count N^k within 1e8
    while (points > 8 && std::pow(static_cast<double>(points), k) > 1e8) points >>= 1;
    int levels = 3;
    while (levels > 1 && (points >> levels) < 8) --levels;
    validate_grid(points, levels);
    std::vector<double> values;
    values.reserve(levels + 1);
    for (int l = levels; l >= 0; --l) values.push_back(kdim_midpoint(k, points >> l));
    return richardson(std::move(values), points, QuadRule::midpoint, levels);
}

double per_vertex_lel(const LatticeSpec& spec, std::size_t numeric_cap) {
    if (has_closed_form(spec)) return lel(closed_form_spectrum(spec)).per_vertex;
    return lel(numeric_spectrum(build_lattice(spec), numeric_cap)).per_vertex;
}

bool ConvergenceReport::trend_ok(double slack) const {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].boundary != rows[i - 1].boundary) continue;
        if (rows[i].deviation > slack * rows[i - 1].deviation + 1e-12) return false;
    }
    return true;
}

ConvergenceReport converge_sweep(Family family, const std::vector<std::pair<int, int>>& sizes,
                                 const SweepOptions& options) {
    if (sizes.empty()) throw invalid_size_error("converge: need at least one size");
    QuadratureOptions quad = options.quad;
    quad.weighting = BranchWeighting::spectrum_derived;
    ConvergenceReport report;
    report.family = family;
    report.constant_h = quad_constant(family, quad).constant_h;
    std::vector<std::pair<int, int>> ordered = sizes;
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return static_cast<long long>(a.first) * a.second <
               static_cast<long long>(b.first) * b.second;
    });
    for (Boundary boundary : options.boundaries)
        for (const auto& [m, n] : ordered) {
            const LatticeSpec spec{family, boundary, m, n};
            validate_spec(spec);
            LelValue v;
            if (has_closed_form(spec)) {
                v = lel(closed_form_spectrum(spec));
            } else {
                v = lel(numeric_spectrum(build_lattice(spec), options.numeric_cap));
            }
            report.rows.push_back({m, n, boundary, v.n_vertices, v.per_vertex,
                                   std::abs(v.per_vertex - report.constant_h)});
        }
    return report;
}

}  // namespace lelat
