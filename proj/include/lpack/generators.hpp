#pragma once

#include <lpack/graph.hpp>
#include <lpack/rng.hpp>

#include <string>
#include <vector>

namespace lpack
{
    // Numbering is fixed so that examples and tests are reproducible:
    //   cycle, path: i ~ i+1 (cycle also n-1 ~ 0)
    //   complete_bipartite(a, b): parts [0, a) and [a, a+b)
    //   grid(r, c): vertex i*c + j at row i, column j
    //   cube(d): vertices are d-bit words, adjacent when they differ in one bit
    //   dodecahedron: Hamiltonian cycle 0..19 plus LCF chords [10,7,4,-4,-7,10,-4,7,-7,4]^2
    //   icosahedron: 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom;
    //                upper i ~ lower i and lower i+1
    auto make_cycle(int n) -> Graph;
    auto make_path(int n) -> Graph;
    auto make_complete(int n) -> Graph;
    auto make_complete_bipartite(int a, int b) -> Graph;
    auto make_grid(int rows, int cols) -> Graph;
    auto make_cube(int dim = 3) -> Graph;
    auto make_dodecahedron() -> Graph;
    auto make_icosahedron() -> Graph;

    // Dispatch by kind name; throws InputError on unknown kinds or bad parameters.
    auto generate(const std::string & kind, const std::vector<int> & params, std::uint64_t seed = 0) -> Graph;

    auto random_gnp(int n, double p, Rng &) -> Graph;

    // Random planar triangulation with minimum degree 5: the icosahedron with each face split into
    // four, followed by `splits` random vertex splits that keep every degree at least 5.
    auto random_min5_triangulation(Rng &, int splits) -> Graph;
}
