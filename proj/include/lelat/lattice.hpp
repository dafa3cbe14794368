#pragma once

#include <string>

#include "lelat/graph.hpp"

namespace lelat {

enum class Family { square, hexagonal, j312, tkl, m3342 };
enum class Boundary { torus, cylinder, free };

std::string family_name(Family f);
std::string boundary_name(Boundary b);
Family parse_family(const std::string& s);
Boundary parse_boundary(const std::string& s);

struct LatticeSpec {
    Family family = Family::square;
    Boundary boundary = Boundary::torus;
    int m = 0;
    int n = 0;
};

std::string to_string(const LatticeSpec& spec);

/// Throws invalid_size_error when (m, n) is below the family minimum:
/// square needs every wrapped dimension >= 3 (free dimensions >= 1),
/// hexagonal / j312 / tkl need m, n >= 2, m3342 needs m >= 2 and n >= 3.
void validate_spec(const LatticeSpec& spec);

/// Builds the lattice graph under the documented vertex indexing:
///  - square: grid point (r, c) -> r * n + c (product of paths/cycles);
///  - hexagonal: two sublattices on an (m+1) x (n+1) cell grid,
///    A(x, y) -> x * (n+1) + y and B(x, y) -> (m+1)*(n+1) + x * (n+1) + y,
///    with A(x, y) adjacent to B(x, y), B(x-1, y), B(x, y+1);
///  - j312: line graph of the subdivision of the hexagonal lattice;
///  - tkl: line graph of j312;
///  - m3342: grid point (r, c) -> r * n + c with row edges, column edges and
///    one diagonal (r, c) -- (r+1, c+1) out of every even row r.
/// Cylinder wraps the n direction only; torus wraps both.
Graph build_lattice(const LatticeSpec& spec);

/// m3342 with the mirrored diagonal (r, c+1) -- (r+1, c); used by the audit
/// to confirm both orientations carry the same spectrum.
Graph build_m3342(int m, int n, Boundary boundary, bool mirrored_diagonal);

struct BoundaryChain {
    Graph torus;
    Graph cylinder;
    Graph free;
};

/// Three graphs on one vertex indexing with E(free) <= E(cylinder) <= E(torus).
/// Available for square, hexagonal and m3342; the line-graph families change
/// vertex sets across boundaries, so no aligned chain exists for them.
BoundaryChain boundary_chain(Family family, int m, int n);

}  // namespace lelat
