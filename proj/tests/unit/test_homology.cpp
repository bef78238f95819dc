#include <doctest.h>

#include "posetlie/block_engine.hpp"
#include "posetlie/homology.hpp"

using namespace posetlie;

TEST_CASE("group parsing and printing") {
    const HomologyGroup g = parse_group("Z^2 ⊕ Z_2^3 ⊕ Z_4");
    CHECK(g.free_rank == 2);
    CHECK(g.torsion.size() == 4);
    CHECK(parse_group(g.to_string()) == g);
    CHECK(parse_group("0").is_zero());
    CHECK(g.has_summand(4));
    CHECK_FALSE(g.has_summand(8));
}

TEST_CASE("Heisenberg algebra over Z") {
    // nil_3: H_1 = g/[g,g] = Z^2, H_2 = Z^2 by duality, no torsion.
    const auto t = block_homology(PosetLieAlgebra(chain(3), Mode::Strict));
    REQUIRE(t.groups.size() == 4);
    CHECK(t.groups[0] == parse_group("Z"));
    CHECK(t.groups[1] == parse_group("Z^2"));
    CHECK(t.groups[2] == parse_group("Z^2"));
    CHECK(t.groups[3] == parse_group("Z"));
}

TEST_CASE("reflexive homology over Q is an exterior algebra on the diagonals") {
    for (const char* spec : {"chain:3", "diamond:2", "fork:2"}) {
        const Poset p = family_poset(spec);
        EngineOptions o;
        o.coeff = Coefficients::rationals();
        const auto dims = block_homology(PosetLieAlgebra(p, Mode::Reflexive), o).dims();
        const int n = p.size();
        for (int k = 0; k <= n; ++k) {
            long b = 1;
            for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
            CHECK(dims[k] == b);
        }
        for (std::size_t k = n + 1; k < dims.size(); ++k) CHECK(dims[k] == 0);
    }
}

TEST_CASE("block engine equals the serial reference") {
    for (const char* spec : {"diamond:2", "complete-bipartite:2,2", "chain:4", "umbrella:2"})
        for (Mode mode : {Mode::Reflexive, Mode::Strict})
            for (const Coefficients& c : {Coefficients::integers(), Coefficients::mod(2), Coefficients::mod(3)}) {
                const PosetLieAlgebra g(family_poset(spec), mode);
                EngineOptions o;
                o.coeff = c;
                CHECK(block_homology(g, o) == reference_homology(g, c));
                o.prune = mode == Mode::Reflexive;
                o.jobs = 1;
                CHECK(block_homology(g, o) == reference_homology(g, c));
            }
}

TEST_CASE("universal coefficients and cohomology") {
    const auto z = block_homology(PosetLieAlgebra(family_poset("complete-bipartite:2,2"), Mode::Reflexive));
    EngineOptions o;
    o.coeff = Coefficients::mod(2);
    const auto f2 = block_homology(PosetLieAlgebra(family_poset("complete-bipartite:2,2"), Mode::Reflexive), o);
    CHECK(field_dims_from_Z(z, 2) == f2.dims());

    // H^k = free(H_k) + torsion(H_{k-1})
    const auto co = cohomology_from_homology(z);
    for (int k = 0; k <= z.top_degree(); ++k) {
        CHECK(co.groups[k].free_rank == z.groups[k].free_rank);
        CHECK(co.groups[k].torsion == (k ? z.groups[k - 1].torsion : std::vector<BigInt>{}));
    }
}

TEST_CASE("duality predicate") {
    CHECK(verify_poincare_duality(block_homology(PosetLieAlgebra(chain(4), Mode::Strict)), 6));
    CHECK_FALSE(verify_poincare_duality(block_homology(PosetLieAlgebra(chain(3), Mode::Reflexive)), 6));
}
