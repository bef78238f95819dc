#include <doctest.h>

#include "posetlie/liealg.hpp"

using namespace posetlie;

namespace {

using Dense = std::vector<std::vector<long>>;

Dense unit(int n, BasisMatrix u) {
    Dense m(n, std::vector<long>(n, 0));
    m[u.row - 1][u.col - 1] = 1;
    return m;
}

Dense commutator(const Dense& a, const Dense& b) {
    const std::size_t n = a.size();
    Dense c(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    return c;
}

Dense expand(const PosetLieAlgebra& g, const std::vector<std::pair<int, int>>& terms) {
    const int n = g.element_count();
    Dense m(n, std::vector<long>(n, 0));
    for (auto [idx, c] : terms) m[g[idx].row - 1][g[idx].col - 1] += c;
    return m;
}

}  // namespace

TEST_CASE("matrix unit brackets") {
    CHECK(bracket({1, 2}, {2, 3}) == std::vector<MatrixTerm>{{{1, 3}, 1}});
    CHECK(bracket({2, 3}, {1, 2}) == std::vector<MatrixTerm>{{{1, 3}, -1}});
    CHECK(bracket({1, 2}, {3, 4}).empty());
}

TEST_CASE("structure constants match matrix commutators") {
    for (const char* spec : {"diamond:2", "complete-bipartite:2,2", "chain:4", "umbrella:2"}) {
        for (Mode mode : {Mode::Reflexive, Mode::Strict}) {
            const PosetLieAlgebra g(family_poset(spec), mode);
            const int n = g.element_count();
            for (int a = 0; a < g.dim(); ++a)
                for (int b = 0; b < g.dim(); ++b)
                    CHECK(expand(g, g.bracket(a, b)) == commutator(unit(n, g[a]), unit(n, g[b])));
        }
    }
}

TEST_CASE("dimension and unimodularity") {
    const Poset p = family_poset("diamond:3");
    CHECK(PosetLieAlgebra(p, Mode::Reflexive).dim() == 12);
    CHECK(PosetLieAlgebra(p, Mode::Strict).dim() == 7);
    CHECK(PosetLieAlgebra(chain(4), Mode::Strict).check_unimodular());
    CHECK_FALSE(PosetLieAlgebra(chain(3), Mode::Reflexive).check_unimodular());
}
