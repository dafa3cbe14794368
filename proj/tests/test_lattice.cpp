#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "lelat/lattice.hpp"

using namespace lelat;

namespace {

bool contains(const Graph& big, const Graph& small) {
    return std::includes(big.edges().begin(), big.edges().end(), small.edges().begin(),
                         small.edges().end());
}

}  // namespace

TEST_CASE("names parse and print") {
    CHECK(parse_family("square") == Family::square);
    CHECK(parse_family("hex") == Family::hexagonal);
    CHECK(parse_family("j312") == Family::j312);
    CHECK(parse_family("tkl") == Family::tkl);
    CHECK(parse_family("m3342") == Family::m3342);
    CHECK_THROWS_AS(parse_family("triangular"), invalid_size_error);
    CHECK(parse_boundary("torus") == Boundary::torus);
    CHECK(parse_boundary("cyl") == Boundary::cylinder);
    CHECK(parse_boundary("free") == Boundary::free);
    CHECK_THROWS_AS(parse_boundary("open"), invalid_size_error);
    CHECK(to_string({Family::square, Boundary::torus, 4, 4}) == "square/torus 4x4");
    for (Family f : {Family::square, Family::hexagonal, Family::j312, Family::tkl, Family::m3342})
        CHECK(parse_family(family_name(f)) == f);
}

TEST_CASE("square lattice counts and degrees") {
    const Graph torus = build_lattice({Family::square, Boundary::torus, 4, 4});
    CHECK(torus.n_vertices() == 16);
    CHECK(torus.n_edges() == 32);
    CHECK(torus.is_regular(4));

    const Graph cyl = build_lattice({Family::square, Boundary::cylinder, 4, 4});
    CHECK(cyl.n_vertices() == 16);
    CHECK(cyl.n_edges() == 28);

    const Graph free = build_lattice({Family::square, Boundary::free, 4, 4});
    CHECK(free.n_vertices() == 16);
    CHECK(free.n_edges() == 24);
    CHECK(free.component_count() == 1);
}

TEST_CASE("square size minimums") {
    CHECK_THROWS_AS(build_lattice({Family::square, Boundary::torus, 2, 4}), invalid_size_error);
    CHECK_THROWS_AS(build_lattice({Family::square, Boundary::cylinder, 4, 2}), invalid_size_error);
    CHECK(build_lattice({Family::square, Boundary::cylinder, 1, 3}).n_vertices() == 3);
    CHECK(build_lattice({Family::square, Boundary::free, 1, 1}).n_vertices() == 1);
    CHECK(build_lattice({Family::square, Boundary::free, 2, 2}).n_edges() == 4);
}

TEST_CASE("hexagonal lattice counts and degrees") {
    const Graph torus = build_lattice({Family::hexagonal, Boundary::torus, 3, 3});
    CHECK(torus.n_vertices() == 32);
    CHECK(torus.n_edges() == 48);
    CHECK(torus.is_regular(3));
    CHECK(torus.component_count() == 1);

    const Graph cyl = build_lattice({Family::hexagonal, Boundary::cylinder, 3, 3});
    CHECK(cyl.n_vertices() == 32);
    CHECK(cyl.n_edges() == 44);

    const Graph free = build_lattice({Family::hexagonal, Boundary::free, 3, 3});
    CHECK(free.n_vertices() == 32);
    CHECK(free.n_edges() == 40);
    CHECK(free.component_count() == 1);
    CHECK(free.max_degree() == 3);

    CHECK_THROWS_AS(build_lattice({Family::hexagonal, Boundary::torus, 1, 3}),
                    invalid_size_error);
}

TEST_CASE("j312 is the line graph of the subdivided honeycomb") {
    const Graph torus = build_lattice({Family::j312, Boundary::torus, 3, 3});
    CHECK(torus.n_vertices() == 96);  // 6 (m+1)(n+1)
    CHECK(torus.n_edges() == 144);
    CHECK(torus.is_regular(3));

    const Graph free = build_lattice({Family::j312, Boundary::free, 3, 3});
    CHECK(free.n_vertices() == 80);  // twice the open honeycomb's edge count
    CHECK(free.component_count() == 1);
    CHECK_THROWS_AS(build_lattice({Family::j312, Boundary::torus, 3, 1}), invalid_size_error);
}

TEST_CASE("tkl is the line graph of j312") {
    const Graph torus = build_lattice({Family::tkl, Boundary::torus, 2, 2});
    CHECK(torus.n_vertices() == 81);  // 9 (m+1)(n+1)
    CHECK(torus.n_edges() == 162);
    CHECK(torus.is_regular(4));
}

TEST_CASE("m3342 counts, degrees and the mirrored diagonal") {
    const Graph torus = build_lattice({Family::m3342, Boundary::torus, 3, 4});
    CHECK(torus.n_vertices() == 24);  // 2 m n
    CHECK(torus.n_edges() == 60);     // 5 m n
    CHECK(torus.is_regular(5));

    const Graph cyl = build_lattice({Family::m3342, Boundary::cylinder, 2, 3});
    CHECK(cyl.n_vertices() == 12);
    CHECK(cyl.n_edges() == 27);
    const Graph free = build_lattice({Family::m3342, Boundary::free, 2, 3});
    CHECK(free.n_edges() == 21);
    CHECK(free.component_count() == 1);

    const Graph mirrored = build_m3342(3, 4, Boundary::torus, true);
    CHECK(mirrored.n_vertices() == 24);
    CHECK(mirrored.n_edges() == 60);
    CHECK(mirrored.is_regular(5));
    CHECK(mirrored.edges() != torus.edges());

    CHECK_THROWS_AS(build_lattice({Family::m3342, Boundary::torus, 1, 4}), invalid_size_error);
    CHECK_THROWS_AS(build_lattice({Family::m3342, Boundary::torus, 2, 2}), invalid_size_error);
}

TEST_CASE("boundary chains nest edge sets on one indexing") {
    for (Family f : {Family::square, Family::hexagonal, Family::m3342}) {
        const int m = f == Family::m3342 ? 3 : f == Family::square ? 4 : 3;
        const int n = f == Family::m3342 ? 4 : f == Family::square ? 4 : 3;
        const BoundaryChain chain = boundary_chain(f, m, n);
        CHECK(chain.torus.n_vertices() == chain.cylinder.n_vertices());
        CHECK(chain.torus.n_vertices() == chain.free.n_vertices());
        CHECK(contains(chain.torus, chain.cylinder));
        CHECK(contains(chain.cylinder, chain.free));
    }
    CHECK_THROWS_AS(boundary_chain(Family::j312, 3, 3), containment_error);
    CHECK_THROWS_AS(boundary_chain(Family::tkl, 2, 2), containment_error);
}

TEST_CASE("free boundary degree agreement matches the interior fraction") {
    const BoundaryChain square = boundary_chain(Family::square, 4, 4);
    CHECK(degree_agreement_fraction(square.torus, square.free) == doctest::Approx(0.25));

    const BoundaryChain hex = boundary_chain(Family::hexagonal, 3, 3);
    CHECK(degree_agreement_fraction(hex.torus, hex.free) == doctest::Approx(0.5625));
}
