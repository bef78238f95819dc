#include <doctest.h>

#include "posetlie/homology.hpp"
#include "posetlie/morse.hpp"

using namespace posetlie;

TEST_CASE("nil_n matching yields n - 2") {
    for (int n = 3; n <= 7; ++n) {
        const MorseFixture f = nil_matching(n);
        REQUIRE(verify_matching(f.complex, f.matching));
        const ReducedComplex r = reduce(f.complex, f.matching);
        const auto c = r.coefficient(f.source, f.target);
        CHECK(f.expected == n - 2);
        CHECK((c == n - 2 || c == -(n - 2)));
    }
}

TEST_CASE("reduction preserves homology") {
    for (const char* spec : {"chain:4", "diamond:2"}) {
        const PosetLieAlgebra g(family_poset(spec), Mode::Strict);
        const GradedComplex c = build_complex(g);
        const HomologyTable before = homology(c, Coefficients::integers());
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const MorseMatching m = greedy_matching(c, seed);
            REQUIRE(verify_matching(c, m));
            CHECK(homology(reduce(c, m).as_complex(), Coefficients::integers()) == before);
        }
    }
}

TEST_CASE("invalid matchings are rejected") {
    const PosetLieAlgebra g(chain(3), Mode::Strict);
    const GradedComplex c = build_complex(g);
    MorseMatching m;
    // e13 is not a face of e12 with a unit coefficient in the right degree pair
    m.pairs.emplace_back(wedge_of(g, {{1, 2}}), wedge_of(g, {{1, 3}}));
    CHECK_FALSE(verify_matching(c, m));
}
