#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lelat/run.hpp"

namespace {

struct RawOptions {
    std::string family;
    std::string boundary = "torus";
    std::string rule = "midpoint";
    std::string format;
    std::string out;
};

void add_lattice_options(CLI::App* sub, RawOptions& raw, lelat::RunConfig& cfg,
                         bool family_required = true) {
    auto* fam = sub->add_option("--family", raw.family, "lattice family (square|hex|j312|tkl|m3342)");
    if (family_required) fam->required();
    sub->add_option("--boundary", raw.boundary, "boundary condition (torus|cyl|free)");
    sub->add_option("--m", cfg.m, "rows parameter");
    sub->add_option("--n", cfg.n, "columns parameter");
}

void add_output_options(CLI::App* sub, RawOptions& raw) {
    sub->add_option("--out", raw.out, "write the artifact to this path (atomic)");
    sub->add_option("--format", raw.format, "output format (csv|json|edgelist)");
}

void add_quadrature_options(CLI::App* sub, lelat::RunConfig& cfg, RawOptions& raw) {
    sub->add_option("--grid", cfg.grid, "quadrature points per axis (power of two)");
    sub->add_option("--rule", raw.rule, "quadrature rule (midpoint|gauss)");
    sub->add_option("--levels", cfg.levels, "grid doublings for Richardson extrapolation");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice Laplacian spectra and the LEL invariant"};
    app.require_subcommand(1);

    lelat::RunConfig cfg;
    RawOptions raw;

    auto* build = app.add_subcommand("build", "construct a lattice graph and emit its edge list");
    add_lattice_options(build, raw, cfg);
    add_output_options(build, raw);

    auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum of a lattice");
    add_lattice_options(spectrum, raw, cfg);
    add_output_options(spectrum, raw);
    spectrum->add_option("--cap", cfg.cap, "eigensolver size cap");

    auto* lel_cmd = app.add_subcommand("lel", "LEL invariant of a lattice with bounds");
    add_lattice_options(lel_cmd, raw, cfg);
    add_output_options(lel_cmd, raw);
    lel_cmd->add_option("--cap", cfg.cap, "eigensolver size cap");

    auto* constant = app.add_subcommand("constant", "per-vertex asymptotic constant by quadrature");
    constant->add_option("--family", raw.family, "lattice family")->required();
    add_quadrature_options(constant, cfg, raw);
    add_output_options(constant, raw);

    auto* kdim = app.add_subcommand("kdim", "per-vertex constant of the k-dimensional grid");
    kdim->add_option("k", cfg.k, "dimension (1-4)")->required();
    kdim->add_option("--grid", cfg.grid, "quadrature points per axis (power of two)");
    add_output_options(kdim, raw);

    auto* converge = app.add_subcommand("converge",
                                        "finite-size per-vertex LEL against the constant");
    add_lattice_options(converge, raw, cfg);
    add_quadrature_options(converge, cfg, raw);
    add_output_options(converge, raw);
    converge->add_option("--cap", cfg.cap, "eigensolver size cap");

    auto* audit = app.add_subcommand("audit", "cross-check closed forms and tabulated constants");
    add_lattice_options(audit, raw, cfg);
    add_quadrature_options(audit, cfg, raw);
    add_output_options(audit, raw);

    auto* perturb = app.add_subcommand("perturb", "randomized edge-perturbation inequality trials");
    perturb->add_option("--seed", cfg.seed, "random seed");
    perturb->add_option("--trials", cfg.trials, "number of trials");
    perturb->add_option("--m", cfg.m, "vertices per trial graph (default 10)");
    add_output_options(perturb, raw);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) cfg.command = lelat::Command::build;
        if (spectrum->parsed()) cfg.command = lelat::Command::spectrum;
        if (lel_cmd->parsed()) cfg.command = lelat::Command::lel;
        if (constant->parsed()) cfg.command = lelat::Command::constant;
        if (kdim->parsed()) cfg.command = lelat::Command::kdim;
        if (converge->parsed()) {
            cfg.command = lelat::Command::converge;
            cfg.boundary_given = converge->count("--boundary") > 0;
        }
        if (audit->parsed()) cfg.command = lelat::Command::audit;
        if (perturb->parsed()) cfg.command = lelat::Command::perturb;

        if (!raw.family.empty()) cfg.family = lelat::parse_family(raw.family);
        cfg.boundary = lelat::parse_boundary(raw.boundary);
        cfg.rule = raw.rule == "gauss" ? lelat::QuadRule::gauss
                 : raw.rule == "midpoint"
                     ? lelat::QuadRule::midpoint
                     : throw lelat::invalid_size_error("unknown rule \"" + raw.rule +
                                                       "\" (expected midpoint|gauss)");
        if (!raw.format.empty()) cfg.format = lelat::parse_format(raw.format);
        if (!raw.out.empty()) cfg.out = raw.out;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    return lelat::run(cfg, std::cout);
}
