#include <doctest.h>

#include "posetlie/block_engine.hpp"
#include "posetlie/families.hpp"
#include "posetlie/subgraphs.hpp"

using namespace posetlie;

namespace {

// All 0/1 m x n matrices, bucketed by number of ones when every row and column sum is divisible by q.
std::vector<long> brute_even_matrices(int m, int n, int q) {
    std::vector<long> out(m * n + 1, 0);
    for (std::uint32_t bits = 0; bits < (1u << (m * n)); ++bits) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            int s = 0;
            for (int j = 0; j < n; ++j) s += bits >> (i * n + j) & 1;
            ok = s % q == 0;
        }
        for (int j = 0; j < n && ok; ++j) {
            int s = 0;
            for (int i = 0; i < m; ++i) s += bits >> (i * n + j) & 1;
            ok = s % q == 0;
        }
        if (ok) ++out[__builtin_popcount(bits)];
    }
    return out;
}

}  // namespace

TEST_CASE("even matrix counts by brute force") {
    for (int q : {2, 3})
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n) {
                const auto brute = brute_even_matrices(m, n, q);
                const Polynomial f = enumerate_even_matrices(m, n, q);
                for (int k = 0; k <= m * n; ++k) CHECK(f[k] == brute[k]);
            }
}

TEST_CASE("regular subgraphs of complete bipartite posets") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) CHECK(enumerate_p_plus_regular(complete_bipartite(m, n), 2) == enumerate_even_matrices(m, n, 2));
    CHECK(cycle_space_size(complete_bipartite(3, 3)) == 16);
    CHECK_THROWS_AS(enumerate_p_plus_regular(chain(3), 2), HeightError);
}

TEST_CASE("Stanley and Konvalinka agree") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) CHECK(hp_complete_bipartite_Z2_stanley(m, n) == hp_complete_bipartite_Z2_konvalinka(m, n));
}

TEST_CASE("K_{q,q} torsion witness") {
    const Poset p = complete_bipartite(2, 2);
    const std::vector<Element> bottoms{1, 2}, tops{3, 4};
    const auto w = full_nondiagonal_torsion_witness(p, bottoms, tops);
    CHECK(w.ok(2));
}

TEST_CASE("height-1 forests have the tree series over Z_2") {
    EngineOptions o;
    o.coeff = Coefficients::mod(2);
    for (const char* spec : {"complete-bipartite:1,3", "complete-bipartite:1,2"}) {
        const Poset p = family_poset(spec);
        std::vector<BigInt> c;
        for (auto d : block_homology(PosetLieAlgebra(p, Mode::Reflexive), o).dims()) c.emplace_back(long(d));
        CHECK(Polynomial(c) == hp_tree_height1(p.size()));
    }
}
