#include <doctest.h>

#include "posetlie/families.hpp"
#include "posetlie/polynomial.hpp"

using namespace posetlie;

TEST_CASE("polynomial arithmetic") {
    const Polynomial a{1, 1};
    CHECK(a.pow(4) == Polynomial{1, 4, 6, 4, 1});
    CHECK((a * Polynomial{1, -1}) == Polynomial{1, 0, -1});
    CHECK((Polynomial{1, 0, -1}.divide_exact(Polynomial{1, 1})) == Polynomial{1, -1});
    CHECK_THROWS_AS((Polynomial{1, 0, 1}.divide_exact(Polynomial{1, 1})), DivisionError);
    CHECK(a.substitute_power(3) == Polynomial{1, 0, 0, 1});
    CHECK((a - a).is_zero());
    CHECK(Polynomial{1, 4, 6}.to_string() == "1 + 4t + 6t^2");
    CHECK(binom(10, 3) == 120);
}

TEST_CASE("every-p-th coefficient filters") {
    // (1+t)^6 keeps c_0, c_3, c_6 = 1, 20, 1
    const Polynomial f = Polynomial{1, 1}.pow(6);
    CHECK(filter_every_pth(f, 3, 1, 0) == Polynomial{1, 0, 0, 20, 0, 0, 1});
    CHECK(filter_every_pth(f, 3, 2, 1) == Polynomial::monomial(1, 1) + Polynomial::monomial(20, 7) + Polynomial::monomial(1, 13));
    for (int p : {2, 3, 5})
        for (int j = 1; j <= 2; ++j)
            for (int l = 0; l < 3; ++l) CHECK(filter_every_pth(f, p, j, l) == filter_every_pth_roots(f, p, j, l));
}

TEST_CASE("closed forms vanish at t = -1") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(hp_diamond_Z2(n).evaluate(-1) == 0);
        CHECK(hp_umbrella_Z2(n).evaluate(-1) == 0);
        CHECK(hp_fork_Z2(n).evaluate(-1) == 0);
        CHECK(hp_reflexive_char0(n).evaluate(-1) == 0);
    }
}

TEST_CASE("normalized export") {
    const std::string csv = normalized_csv(Polynomial{1, 2, 1});
    CHECK(csv.starts_with("degree,coefficient,normalized,normalized_decimal\n"));
    CHECK(csv.find("1,2,1,1") != std::string::npos);
}
