#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lelat/asymptotics.hpp"
#include "lelat/spectral.hpp"

namespace lelat {

/// Tabulated reference constants for a family: the per-vertex value, the
/// total-LEL coefficient (per fundamental cell), and how many vertices one
/// cell contributes.
struct ReferenceConstants {
    double per_vertex = 0.0;
    double total_coefficient = 0.0;
    int vertices_per_cell = 1;
};

ReferenceConstants reference_constants(Family family);

/// j312 / tkl branch-scale adjudication against the eigensolver.
struct BranchAudit {
    double dev_half = 0.0;
    double dev_quarter = 0.0;
    BranchScale selected = BranchScale::half;
    double constant_spectrum_weighted = 0.0;
    double constant_reference_weighted = 0.0;
};

/// m3342 diagonal-orientation adjudication.
struct OrientationAudit {
    double dev_primary = 0.0;   // diagonal (r, c) -- (r+1, c+1)
    double dev_mirrored = 0.0;  // mirrored diagonal; same spectrum expected
    bool primary_selected = true;
};

struct AuditReport {
    LatticeSpec spec;               // torus instance the oracle ran on
    double oracle_deviation = 0.0;  // selected closed form vs eigensolver
    double oracle_tol = 1e-8;
    bool oracle_pass = false;
    double instance_per_vertex = 0.0;

    double constant_h = 0.0;  // adjudicated per-vertex constant (quadrature)
    double reference_per_vertex = 0.0;
    double reference_total_coefficient = 0.0;
    double self_total_coefficient = 0.0;  // vertices_per_cell * constant_h
    bool reference_per_vertex_consistent = false;
    bool reference_total_consistent = false;

    std::optional<BranchAudit> branches;
    std::optional<OrientationAudit> orientation;
    std::vector<std::string> findings;  // human-readable verdict lines
};

/// Cross-checks one family: closed form vs eigensolver on a small torus,
/// quadrature constant vs the tabulated per-vertex and total coefficients,
/// branch-scale adjudication for j312 / tkl and diagonal orientation for
/// m3342. m = n = 0 picks the family default instance.
AuditReport audit_family(Family family, int m = 0, int n = 0,
                         const QuadratureOptions& quad = {});

}  // namespace lelat
