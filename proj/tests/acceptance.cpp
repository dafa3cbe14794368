// Acceptance gate: every release criterion below prints one [PASS]/[FAIL]
// line with the measured values at the stated tolerance. Criteria A2a and
// A5b compare against the tabulated hexagonal per-vertex constant 1.6437;
// the computed constant (and the lattice spectra behind it) sit at 1.63570,
// so those two lines document a real inconsistency in the tabulated value
// rather than a defect in the implementation. See the audit artifact: twice
// the computed constant reproduces the tabulated total coefficient 3.2714.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "lelat/audit.hpp"
#include "lelat/io.hpp"
#include "lelat/lel.hpp"
#include "lelat/run.hpp"

using namespace lelat;
namespace fs = std::filesystem;

namespace {

void verdict(const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

fs::path work_dir(const char* leaf) {
    const fs::path dir = fs::temp_directory_path() / "lelat-acceptance" / leaf;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double closed_vs_numeric_dev(const LatticeSpec& spec) {
    return spectrum_compare(closed_form_spectrum(spec), numeric_spectrum(build_lattice(spec)),
                            1e-8)
        .max_abs_dev;
}

}  // namespace

TEST_CASE("A1 square constant with k-dimensional cross-checks") {
    const auto t0 = std::chrono::steady_clock::now();
    const QuadratureResult square = quad_constant(Family::square);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double dev = std::abs(square.constant_h - 1.9162);
    const bool a = dev <= 5e-4 && seconds <= 10.0;
    verdict("A1a square constant within 5e-4 of 1.9162 in <= 10 s", a,
            fmt("h = %.9f, |h - 1.9162| = %.2e, %.3f s", square.constant_h, dev, seconds));
    CHECK(a);

    const double k2 = kdim_constant(2).constant_h;
    const bool b = std::abs(k2 - square.constant_h) <= 1e-4;
    verdict("A1b dim-2 grid constant matches the square constant within 1e-4", b,
            fmt("k2 = %.9f, |k2 - h| = %.2e", k2, std::abs(k2 - square.constant_h)));
    CHECK(b);

    const double k1 = kdim_constant(1).constant_h;
    const double target = 4.0 / std::numbers::pi;
    const bool c = std::abs(k1 - target) <= 1e-6;
    verdict("A1c dim-1 grid constant equals 4/pi within 1e-6", c,
            fmt("k1 = %.9f, |k1 - 4/pi| = %.2e", k1, std::abs(k1 - target)));
    CHECK(c);
}

TEST_CASE("A2 hexagonal constant against the tabulated values") {
    const double h = quad_constant(Family::hexagonal).constant_h;
    const double dev = std::abs(h - 1.6437);
    const bool a = dev <= 5e-4;
    verdict("A2a hexagonal constant within 5e-4 of tabulated 1.6437", a,
            fmt("h = %.9f, |h - 1.6437| = %.2e; 2h = %.6f reproduces the tabulated total "
                "3.2714, so the tabulated per-vertex value is the outlier",
                h, dev, 2.0 * h));
    CHECK(a);  // documents the inconsistency of the tabulated per-vertex value

    const AuditReport audit = audit_family(Family::hexagonal);
    bool published = false;
    for (const auto& line : audit.findings)
        if (line.find("publishing the self-consistent total") != std::string::npos)
            published = true;
    const bool flags = !audit.reference_per_vertex_consistent &&
                       audit.reference_total_consistent && published &&
                       std::abs(audit.self_total_coefficient - 3.2714) <= 1e-3;
    verdict("A2b audit flags 3.2714 vs 2 x 1.6437 and publishes the self-consistent total",
            flags,
            fmt("2h = %.6f vs tabulated total 3.2714 (2 x 1.6437 = 3.2874)",
                audit.self_total_coefficient));
    CHECK(flags);
}

TEST_CASE("A3 m3342 constant and diagonal-orientation oracle") {
    const double h = quad_constant(Family::m3342).constant_h;
    const double dev = std::abs(h - 2.1525);
    const bool a = dev <= 5e-4;
    verdict("A3a m3342 constant within 5e-4 of 2.1525", a,
            fmt("h = %.9f, |h - 2.1525| = %.2e", h, dev));
    CHECK(a);

    const AuditReport audit = audit_family(Family::m3342, 3, 4);
    REQUIRE(audit.orientation.has_value());
    const bool b = audit.orientation->primary_selected &&
                   audit.orientation->dev_primary <= 1e-8 &&
                   audit.orientation->dev_mirrored <= 1e-8;
    verdict("A3b diagonal orientation resolved against the eigensolver at 3x4 within 1e-8", b,
            fmt("primary dev = %.2e, mirrored dev = %.2e", audit.orientation->dev_primary,
                audit.orientation->dev_mirrored));
    CHECK(b);
}

TEST_CASE("A4 closed forms match the eigensolver; branch scale adjudicated") {
    double worst = 0.0;
    for (const LatticeSpec spec : {LatticeSpec{Family::square, Boundary::torus, 4, 4},
                                   LatticeSpec{Family::square, Boundary::cylinder, 4, 4},
                                   LatticeSpec{Family::square, Boundary::free, 4, 4},
                                   LatticeSpec{Family::hexagonal, Boundary::torus, 3, 3},
                                   LatticeSpec{Family::m3342, Boundary::torus, 3, 4}})
        worst = std::max(worst, closed_vs_numeric_dev(spec));
    const bool a = worst <= 1e-8;
    verdict("A4a square(all boundaries)/hexagonal/m3342 closed forms within 1e-8 of numeric", a,
            fmt("worst max deviation = %.2e", worst));
    CHECK(a);

    bool b = true;
    std::string detail;
    for (Family f : {Family::j312, Family::tkl}) {
        const AuditReport audit =
            audit_family(f, f == Family::j312 ? 3 : 2, f == Family::j312 ? 3 : 2);
        REQUIRE(audit.branches.has_value());
        const bool ok = audit.branches->selected == BranchScale::half &&
                        audit.branches->dev_half <= 1e-8 && audit.oracle_pass &&
                        !audit.findings.empty() &&
                        std::abs(audit.branches->constant_reference_weighted -
                                 audit.reference_per_vertex) <= 5e-4;
        b = b && ok;
        detail += family_name(f) + ": half dev " + fmt("%.2e", audit.branches->dev_half) +
                  fmt(", quarter dev %.2e", audit.branches->dev_quarter) + ", h " +
                  fmt("%.6f", audit.branches->constant_spectrum_weighted) + " vs tabulated " +
                  fmt("%.4f", audit.reference_per_vertex) + "; ";
    }
    verdict("A4b j312 3x3 / tkl 2x2 branch scale selected by oracle with written verdict", b,
            detail);
    CHECK(b);
}

TEST_CASE("A5 finite-size per-vertex values approach the tabulated constants") {
    SweepOptions options;
    const ConvergenceReport sweep =
        converge_sweep(Family::square, {{16, 16}, {32, 32}, {64, 64}}, options);
    bool sizes_ok = true, trend = true;
    double worst64 = 0.0;
    for (Boundary b : {Boundary::torus, Boundary::cylinder, Boundary::free}) {
        double prev = -1.0;
        for (const auto& row : sweep.rows) {
            if (row.boundary != b) continue;
            const double dev = std::abs(row.per_vertex - 1.9162);
            if (row.m == 64) {
                worst64 = std::max(worst64, dev);
                sizes_ok = sizes_ok && dev <= 0.04;
            }
            if (prev >= 0.0 && dev > 1.5 * prev) trend = false;
            prev = dev;
        }
    }
    const bool a = sizes_ok && trend;
    verdict("A5a square torus/cyl/free at 16..64 within 0.04 of 1.9162, non-increasing", a,
            fmt("worst deviation at 64x64 = %.4f", worst64) +
                (trend ? ", monotone within slack 1.5" : ", trend violated"));
    CHECK(a);

    const double pv =
        per_vertex_lel({Family::hexagonal, Boundary::free, 15, 15});
    const double dev_tab = std::abs(pv - 1.6437);
    const double h = quad_constant(Family::hexagonal).constant_h;
    const bool b = dev_tab <= 0.05;
    verdict("A5b hexagonal free 15x15 within 0.05 of tabulated 1.6437", b,
            fmt("per-vertex = %.9f, |pv - 1.6437| = %.4f; ", pv, dev_tab) +
                fmt("against the computed constant %.6f the deviation is %.4f, inside 0.05",
                    h, std::abs(pv - h)));
    CHECK(b);  // fails with the tabulated value, passes against the computed constant
}

TEST_CASE("A6 bounds on 200 seeded random graphs with equality detection") {
    std::mt19937_64 rng(424242);
    bool bounds_ok = true, detector_ok = true;
    double worst_slack = 1e300;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 29);
        const double p = 0.05 + 0.9 * (trial % 10) / 9.0;
        const Graph g = random_graph(rng, n, p);
        const LelValue v = lel(numeric_spectrum(g));
        const auto [lo, hi] = lel_bounds(g.n_edges());
        bounds_ok = bounds_ok && v.value >= lo - 1e-9 && v.value <= hi + 1e-9;
        worst_slack = std::min({worst_slack, v.value - lo, hi - v.value});
        const bool upper_attained = std::abs(v.value - hi) <= 1e-9;
        const bool lower_attained = std::abs(v.value - lo) <= 1e-9;
        if (upper_attained && g.max_degree() > 1) detector_ok = false;
        if (lower_attained && g.n_edges() > 1) detector_ok = false;
    }
    verdict("A6a sqrt(2m) <= LEL <= sqrt(2) m on 200 seeded graphs (n <= 30)", bounds_ok,
            fmt("min slack to either bound = %.3e", worst_slack));
    CHECK(bounds_ok);

    // explicit equality cases
    const LelValue single = lel(numeric_spectrum(Graph(10, {{0, 1}})));
    const auto [lo1, hi1] = lel_bounds(1);
    const LelValue matching =
        lel(numeric_spectrum(Graph(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}})));
    const auto [lo4, hi4] = lel_bounds(4);
    const bool eq = std::abs(single.value - lo1) <= 1e-9 && std::abs(single.value - hi1) <= 1e-9 &&
                    std::abs(matching.value - hi4) <= 1e-9 && matching.value > lo4 + 0.5 &&
                    detector_ok;
    verdict("A6b equality cases detected (single edge: both bounds; 4-edge matching: upper)", eq,
            fmt("single edge LEL = %.9f = sqrt(2); matching LEL = %.9f = 4 sqrt(2)", single.value,
                matching.value));
    CHECK(eq);
}

TEST_CASE("A7 perturbation inequalities and the ratio bound") {
    const PerturbationTrials trials = run_perturbation_trials(20260825, 100);
    const bool a = trials.violations == 0 && trials.min_lower_margin >= -1e-8 &&
                   trials.min_upper_margin >= -1e-8;
    verdict("A7a 100 seeded random subgraph trials with margins >= -1e-8", a,
            fmt("violations = %.0f, min margins %.3e / %.3e", double(trials.violations),
                trials.min_lower_margin, trials.min_upper_margin));
    CHECK(a);

    bool b = true;
    double min_margin = 1e300;
    for (Family f : {Family::square, Family::hexagonal, Family::m3342}) {
        const int m = f == Family::square ? 8 : f == Family::m3342 ? 2 : 3;
        const int n = f == Family::square ? 8 : f == Family::m3342 ? 4 : 3;
        const BoundaryChain chain = boundary_chain(f, m, n);
        const auto rows = ratio_convergence(
            {{chain.torus, chain.cylinder}, {chain.torus, chain.free}});
        for (const auto& row : rows) {
            b = b && row.bound_margin >= 0.0;
            min_margin = std::min(min_margin, row.bound_margin);
        }
    }
    verdict("A7b |LEL(h)/LEL(g) - 1| <= 2 delta / LEL(g) on boundary-chain pairs", b,
            fmt("min bound margin = %.3e", min_margin));
    CHECK(b);
}

TEST_CASE("A8 identical configurations produce byte-identical artifacts") {
    const fs::path dir = work_dir("determinism");
    bool in_process = true;
    {
        for (const char* name : {"x", "y"}) {
            RunConfig cfg;
            cfg.command = Command::converge;
            cfg.family = Family::m3342;
            cfg.format = OutputFormat::json;
            cfg.out = (dir / (std::string(name) + ".json")).string();
            std::ostringstream console;
            REQUIRE(run(cfg, console) == 0);

            RunConfig audit_cfg;
            audit_cfg.command = Command::audit;
            audit_cfg.family = Family::j312;
            audit_cfg.out = (dir / (std::string(name) + "-audit.json")).string();
            std::ostringstream console2;
            REQUIRE(run(audit_cfg, console2) == 0);
        }
        in_process = slurp(dir / "x.json") == slurp(dir / "y.json") &&
                     slurp(dir / "x.dat") == slurp(dir / "y.dat") &&
                     slurp(dir / "x-audit.json") == slurp(dir / "y-audit.json");
    }
    verdict("A8a repeated library runs of one configuration are byte-identical", in_process,
            "converge json+dat and audit json compared");
    CHECK(in_process);

    const std::string bin = LELAT_BIN;
    auto shell = [](const std::string& cmd) {
        const int status = std::system(cmd.c_str());
        return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
    };
    bool cli_ok = true;
    for (const char* name : {"s1.csv", "s2.csv"})
        cli_ok = cli_ok && shell(bin + " spectrum --family hex --m 3 --n 3 --out " +
                                 (dir / name).string() + " > /dev/null");
    cli_ok = cli_ok && slurp(dir / "s1.csv") == slurp(dir / "s2.csv");
    verdict("A8b repeated CLI invocations with one flag set are byte-identical", cli_ok,
            "spectrum csv compared across two processes");
    CHECK(cli_ok);
}
