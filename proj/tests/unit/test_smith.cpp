#include <doctest.h>

#include <random>

#include "posetlie/smith.hpp"

using namespace posetlie;

namespace {

// d_k = gcd of all k x k minors; invariant factors are d_k / d_{k-1}.
BigInt det(const std::vector<std::vector<BigInt>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    BigInt s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<BigInt>> m;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BigInt> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            m.push_back(row);
        }
        s += (j % 2 ? -1 : 1) * a[0][j] * det(m);
    }
    return s;
}

std::vector<BigInt> invariant_factors_by_minors(const std::vector<std::vector<std::int64_t>>& a) {
    const int r = int(a.size()), c = int(a[0].size());
    std::vector<BigInt> d{1};
    for (int k = 1; k <= std::min(r, c); ++k) {
        BigInt g = 0;
        for (std::uint32_t rs = 0; rs < (1u << r); ++rs) {
            if (__builtin_popcount(rs) != k) continue;
            for (std::uint32_t cs = 0; cs < (1u << c); ++cs) {
                if (__builtin_popcount(cs) != k) continue;
                std::vector<std::vector<BigInt>> m;
                for (int i = 0; i < r; ++i) {
                    if (!(rs >> i & 1)) continue;
                    std::vector<BigInt> row;
                    for (int j = 0; j < c; ++j)
                        if (cs >> j & 1) row.emplace_back(long(a[i][j]));
                    m.push_back(row);
                }
                BigInt v = abs(det(m));
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            }
        }
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<BigInt> f;
    for (std::size_t k = 1; k < d.size(); ++k) f.push_back(d[k] / d[k - 1]);
    return f;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
    auto s = smith_normal_form(SparseMatrix::from_dense({{2, 1}, {0, 2}}));
    CHECK(s.rank == 2);
    CHECK(s.factors() == std::vector<BigInt>{1, 4});

    s = smith_normal_form(SparseMatrix::from_dense({{2, 0}, {0, 3}}));
    CHECK(s.factors() == std::vector<BigInt>{1, 6});

    s = smith_normal_form(SparseMatrix::from_dense({{0, 0}, {0, 0}}));
    CHECK(s.rank == 0);
    CHECK(s.factors().empty());
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-6, 6), dim(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
        const int r = dim(rng), c = dim(rng);
        std::vector<std::vector<std::int64_t>> a(r, std::vector<std::int64_t>(c));
        for (auto& row : a)
            for (auto& x : row) x = trial % 3 == 0 ? 2 * val(rng) : val(rng);
        const auto expect = invariant_factors_by_minors(a);
        const auto m = SparseMatrix::from_dense(a);
        CHECK(smith_normal_form(m).factors() == expect);
        CHECK(smith_normal_form_dense(m).factors() == expect);
        CHECK(rank_over_Q(m) == std::int64_t(expect.size()));
        std::int64_t r2 = 0;
        for (const auto& f : expect) r2 += mpz_divisible_ui_p(f.get_mpz_t(), 2) ? 0 : 1;
        CHECK(rank_mod_p(m, 2) == r2);
    }
}

TEST_CASE("smith normal form survives int64 overflow") {
    const std::int64_t a = 3037000493LL, b = 3037000453LL;  // primes near sqrt(2^63)
    const std::vector<std::vector<std::int64_t>> dense{{a, b, 1}, {b, a, 0}, {a, a, a}};
    CHECK(smith_normal_form(SparseMatrix::from_dense(dense)).factors() == invariant_factors_by_minors(dense));
}
