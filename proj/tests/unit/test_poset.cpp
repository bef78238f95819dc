#include <doctest.h>

#include <sstream>

#include "posetlie/poset.hpp"

using namespace posetlie;

TEST_CASE("transitive closure and Hasse reduction") {
    const Poset p = Poset::from_hasse(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    CHECK(p.less(1, 4));
    CHECK_FALSE(p.less(4, 1));
    CHECK(p.hasse_edges().size() == 3);
    CHECK(p.height() == 3);
    CHECK(p.is_bounded());
    CHECK_THROWS_AS(Poset::from_hasse(2, {{1, 2}, {2, 1}}), CycleError);
}

TEST_CASE("connected posets up to isomorphism") {
    const std::vector<std::size_t> expect{1, 1, 3, 10, 44, 238};
    for (int n = 1; n <= 6; ++n) CHECK(connected_posets(n).size() == expect[n - 1]);
}

TEST_CASE("text and json round trips") {
    std::istringstream in("# a diamond\n4\n1 2\n1 3\n\n2 4\n3 4\n");
    const Poset p = parse_poset_text(in);
    CHECK(p == diamond(2));
    std::istringstream again(poset_to_text(p));
    CHECK(parse_poset_text(again) == p);
    CHECK(parse_poset_json(poset_to_json(p)) == p);
    std::istringstream bad("3\n1 4\n");
    CHECK_THROWS_AS(parse_poset_text(bad), PosetFormatError);
}

TEST_CASE("families and derived posets") {
    CHECK(family_poset("complete-bipartite:3,2").size() == 5);
    CHECK(family_poset("cycle:3").hasse_edges().size() == 6);
    CHECK(umbrella(3).strict_pairs().size() == 1 + 3 + 3);
    CHECK(chain(3).opposite().less(3, 1));
    CHECK(chain(2).disjoint_union(chain(2)).size() == 4);
    CHECK_FALSE(chain(2).disjoint_union(chain(2)).is_connected());
    CHECK(diamond(3).interval(1, 5).size() == 5);
    CHECK_THROWS_AS(family_poset("nope:1"), PosetFormatError);
}
