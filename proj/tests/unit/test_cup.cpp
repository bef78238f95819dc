#include <doctest.h>

#include "posetlie/cup.hpp"

using namespace posetlie;

TEST_CASE("umbrella presentations") {
    for (int n = 1; n <= 3; ++n) {
        const Presentation pr = umbrella_presentation(n, 2);
        const CupModel model(pr.basis);
        CHECK(check_table(model, wedge_basis_cup(model)).ok);
        CHECK(verify_presentation(model, pr.relations).ok);
    }
}

TEST_CASE("diamond presentations") {
    for (int n = 1; n <= 3; ++n) {
        const Presentation pr = diamond_presentation(n, 2);
        const CupModel model(pr.basis);
        CHECK(check_table(model, wedge_basis_cup(model)).ok);
        CHECK(verify_presentation(model, pr.relations).ok);
    }
}

TEST_CASE("a false relation is rejected") {
    const Presentation pr = umbrella_presentation(2, 2);
    const CupModel model(pr.basis);
    // x_a x_b is a nonzero product of two diagonal classes.
    CHECK_FALSE(verify_presentation(model, {Relation{{"x_a", "x_b"}, {}}}).ok);
}

TEST_CASE("bases with missing classes are refused") {
    Presentation pr = height1_presentation(complete_bipartite(2, 2), 2);
    pr.basis.basis.pop_back();
    CHECK_THROWS_AS(CupModel(pr.basis), BasisError);
}

TEST_CASE("wedge of representatives") {
    const Presentation pr = height1_presentation(complete_bipartite(2, 2), 2);
    const CupModel model(pr.basis);
    const auto& g = model.basis().algebra;
    const Chain x{{wedge_of(g, {{1, 1}}), 1}}, y{{wedge_of(g, {{2, 2}}), 1}};
    const Chain xy = model.wedge(x, y);
    REQUIRE(xy.size() == 1);
    CHECK(xy[0].first == (x[0].first | y[0].first));
    CHECK(model.wedge(x, x).empty());
}
