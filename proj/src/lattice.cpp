#include "lelat/lattice.hpp"

#include <vector>

namespace lelat {

std::string family_name(Family f) {
    switch (f) {
        case Family::square: return "square";
        case Family::hexagonal: return "hex";
        case Family::j312: return "j312";
        case Family::tkl: return "tkl";
        case Family::m3342: return "m3342";
    }
    throw shape_error("family_name: unknown family");
}

std::string boundary_name(Boundary b) {
    switch (b) {
        case Boundary::torus: return "torus";
        case Boundary::cylinder: return "cyl";
        case Boundary::free: return "free";
    }
    throw shape_error("boundary_name: unknown boundary");
}

Family parse_family(const std::string& s) {
    if (s == "square") return Family::square;
    if (s == "hex") return Family::hexagonal;
    if (s == "j312") return Family::j312;
    if (s == "tkl") return Family::tkl;
    if (s == "m3342") return Family::m3342;
    throw invalid_size_error("unknown family \"" + s +
                             "\" (expected square|hex|j312|tkl|m3342)");
}

Boundary parse_boundary(const std::string& s) {
    if (s == "torus") return Boundary::torus;
    if (s == "cyl") return Boundary::cylinder;
    if (s == "free") return Boundary::free;
    throw invalid_size_error("unknown boundary \"" + s + "\" (expected torus|cyl|free)");
}

std::string to_string(const LatticeSpec& spec) {
    return family_name(spec.family) + "/" + boundary_name(spec.boundary) + " " +
           std::to_string(spec.m) + "x" + std::to_string(spec.n);
}

void validate_spec(const LatticeSpec& spec) {
    const int m = spec.m, n = spec.n;
    auto fail = [&](const std::string& need) {
        throw invalid_size_error(to_string(spec) + ": " + need);
    };
    switch (spec.family) {
        case Family::square:
            // A wrapped dimension is a cycle and needs >= 3 vertices.
            if (spec.boundary == Boundary::torus && (m < 3 || n < 3))
                fail("torus needs m, n >= 3");
            if (spec.boundary == Boundary::cylinder && (m < 1 || n < 3))
                fail("cylinder needs m >= 1 and n >= 3");
            if (spec.boundary == Boundary::free && (m < 1 || n < 1)) fail("needs m, n >= 1");
            break;
        case Family::hexagonal:
        case Family::j312:
        case Family::tkl:
            if (m < 2 || n < 2) fail("needs m, n >= 2");
            break;
        case Family::m3342:
            if (m < 2 || n < 3) fail("needs m >= 2 and n >= 3");
            break;
    }
}

namespace {

Graph build_square(int m, int n, Boundary boundary) {
    const bool wrap_m = boundary == Boundary::torus;
    const bool wrap_n = boundary != Boundary::free;
    Graph rows = wrap_m ? make_cycle(m) : make_path(m);
    Graph cols = wrap_n ? make_cycle(n) : make_path(n);
    return cartesian_product(rows, cols);
}

// Honeycomb on an (m+1) x (n+1) cell grid. Sublattice A occupies indices
// 0..M*N-1 and B the next M*N; A(x, y) connects to B(x, y), B(x-1, y) and
// B(x, y+1), where the x step wraps only on the torus and the y step wraps
// on torus and cylinder.
Graph build_hexagonal(int m, int n, Boundary boundary) {
    const int M = m + 1, N = n + 1;
    const bool wrap_m = boundary == Boundary::torus;
    const bool wrap_n = boundary != Boundary::free;
    auto A = [N](int x, int y) { return x * N + y; };
    auto B = [M, N](int x, int y) { return M * N + x * N + y; };
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(3) * M * N);
    for (int x = 0; x < M; ++x)
        for (int y = 0; y < N; ++y) {
            edges.emplace_back(A(x, y), B(x, y));
            if (x > 0)
                edges.emplace_back(A(x, y), B(x - 1, y));
            else if (wrap_m)
                edges.emplace_back(A(0, y), B(M - 1, y));
            if (y + 1 < N)
                edges.emplace_back(A(x, y), B(x, y + 1));
            else if (wrap_n)
                edges.emplace_back(A(x, N - 1), B(x, 0));
        }
    return Graph(2 * M * N, std::move(edges));
}

// 3^3.4^2 tiling on a (2m) x n grid of vertices: square rows alternate with
// triangle rows. Vertex (r, c) -> r * n + c; all rows carry horizontal and
// vertical edges, and every even row adds the diagonal (r, c) -- (r+1, c+1).
Graph build_m3342_impl(int m, int n, Boundary boundary, bool mirrored) {
    const int rows = 2 * m;
    const bool wrap_m = boundary == Boundary::torus;
    const bool wrap_n = boundary != Boundary::free;
    auto idx = [n](int r, int c) { return r * n + c; };
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(5) * m * n);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < n; ++c) {
            if (c + 1 < n)
                edges.emplace_back(idx(r, c), idx(r, c + 1));
            else if (wrap_n)
                edges.emplace_back(idx(r, n - 1), idx(r, 0));
            if (r + 1 < rows)
                edges.emplace_back(idx(r, c), idx(r + 1, c));
            else if (wrap_m)
                edges.emplace_back(idx(rows - 1, c), idx(0, c));
            if (r % 2 == 0) {
                const int cc = mirrored ? c - 1 : c + 1;
                if (cc >= 0 && cc < n)
                    edges.emplace_back(idx(r, c), idx(r + 1, cc));
                else if (wrap_n)
                    edges.emplace_back(idx(r, c), idx(r + 1, (cc + n) % n));
            }
        }
    return Graph(rows * n, std::move(edges));
}

}  // namespace

Graph build_m3342(int m, int n, Boundary boundary, bool mirrored_diagonal) {
    LatticeSpec spec{Family::m3342, boundary, m, n};
    validate_spec(spec);
    return build_m3342_impl(m, n, boundary, mirrored_diagonal);
}

Graph build_lattice(const LatticeSpec& spec) {
    validate_spec(spec);
    switch (spec.family) {
        case Family::square: return build_square(spec.m, spec.n, spec.boundary);
        case Family::hexagonal: return build_hexagonal(spec.m, spec.n, spec.boundary);
        case Family::j312:
            return line_graph(subdivision(build_hexagonal(spec.m, spec.n, spec.boundary)));
        case Family::tkl:
            return line_graph(
                line_graph(subdivision(build_hexagonal(spec.m, spec.n, spec.boundary))));
        case Family::m3342: return build_m3342_impl(spec.m, spec.n, spec.boundary, false);
    }
    throw shape_error("build_lattice: unknown family");
}

BoundaryChain boundary_chain(Family family, int m, int n) {
    if (family == Family::j312 || family == Family::tkl)
        throw containment_error(
            family_name(family) +
            ": no aligned boundary chain; the line-graph construction changes the vertex set "
            "with the boundary");
    BoundaryChain chain{
        build_lattice({family, Boundary::torus, m, n}),
        build_lattice({family, Boundary::cylinder, m, n}),
        build_lattice({family, Boundary::free, m, n}),
    };
    return chain;
}

}  // namespace lelat
