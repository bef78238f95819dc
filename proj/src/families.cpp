#include "posetlie/families.hpp"

#include <algorithm>
#include <sstream>

namespace posetlie {

namespace {

Polynomial one_plus_t(int e) { return Polynomial::binomial(1, 1).pow(e); }

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Polynomial filter_every_pth(const Polynomial& f, int p, int j, int l) {
    require(p >= 1 && j >= 1 && l >= 0, "filter_every_pth needs p, j >= 1 and l >= 0");
    Polynomial out;
    for (int k = 0; k <= f.degree(); k += p) out += Polynomial::monomial(f[k], j * k + l);
    return out;
}

Polynomial filter_every_pth_roots(const Polynomial& f, int p, int j, int l) {
    require(p >= 1 && j >= 1 && l >= 0, "filter_every_pth_roots needs p, j >= 1 and l >= 0");
    CyclotomicPolynomial sum(p);
    for (int i = 0; i < p; ++i) sum += CyclotomicPolynomial::substitute(f, p, i, j);
    return sum.to_integer().divide_exact(BigInt(p)).shifted(l);
}

Polynomial hp_reflexive_char0(int n) { return one_plus_t(n); }

Polynomial hp_cycle_Z2(int n) { return one_plus_t(2 * n) * Polynomial::binomial(1, 1, 2 * n); }

Polynomial hp_cycle_Zp(int n, int p) {
    require(p > 2, "hp_cycle_Zp is for odd p");
    return one_plus_t(2 * n);
}

Polynomial hp_complete_bipartite_pnp(int p, int n) {
    Polynomial sum;
    for (int i = 0; i <= n; i += p) sum += Polynomial::monomial(binom(n, i), p * i);
    return one_plus_t(p + n) * sum;
}

Polynomial hp_complete_bipartite_Z2_stanley(int m, int n) {
    Polynomial sum;
    const Polynomial plus = Polynomial::binomial(1, 1), minus = Polynomial::binomial(1, -1);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
            sum += plus.pow((m - i) * (n - j) + i * j) * minus.pow((m - i) * j + (n - j) * i) *
                   (binom(m, i) * binom(n, j));
    BigInt scale = 1;
    scale <<= m + n;
    return (one_plus_t(m + n) * sum).divide_exact(scale);
}

Polynomial hp_complete_bipartite_Z2_konvalinka(int m, int n) {
    Polynomial sum;
    for (int k = 0; k <= n; ++k) {
        Polynomial inner;
        for (int i = 0; 2 * i <= n; ++i) {
            BigInt c = -binom(n, 2 * i);
            for (int j = 0; j <= i; ++j) c += 2 * binom(k, 2 * j) * binom(n - k, 2 * i - 2 * j);
            inner += Polynomial::monomial(c, 2 * i);
        }
        sum += inner.pow(m) * binom(n, k);
    }
    BigInt scale = 1;
    scale <<= n;
    return (one_plus_t(m + n) * sum).divide_exact(scale);
}

Polynomial hp_fork_Z2(int n) { return one_plus_t(2 * n + 1) * Polynomial::binomial(1, 1, 3).pow(n); }

Polynomial hp_fork_Zp(int n, int p) {
    require(p >= 3, "hp_fork_Zp is for p >= 3");
    return one_plus_t(2 * n + 1);
}

Polynomial hp_umbrella_Z2(int n) {
    Polynomial a = one_plus_t(n + 3) * Polynomial::binomial(1, 1, 2).pow(n);
    Polynomial b = one_plus_t(n + 1) * Polynomial::binomial(1, -1, 2).pow(n + 1);
    return (a + b).divide_exact(BigInt(2));
}

Polynomial hp_umbrella_Zp(int n, int p) {
    require(p >= 3, "hp_umbrella_Zp is for p >= 3");
    return one_plus_t(n + 2);
}

Polynomial hp_diamond_Z2(int n) {
    require(n >= 1, "diamond series need n >= 1");
    Polynomial avg = (Polynomial::binomial(1, 1, 2).pow(n - 1) + Polynomial::binomial(1, -1, 2).pow(n - 1))
                         .divide_exact(BigInt(2));
    return one_plus_t(n + 2) * Polynomial::binomial(1, 1, 3) * avg;
}

BigInt subset_incidence_rank_formula(int n, int k) {
    BigInt r = 0;
    for (int j = 0; n - 2 * j - 1 >= 0; ++j) r += binom(n - 2 * j - 1, k - j - 1);
    return r;
}

namespace {

// Σ_{k ∈ pN} [(C(n,k) - r_k) t^{2k} + (C(n,k-1) - r_k) t^{2k-1}] (1+t)^{n+2}.
template <class Rank>
Polynomial diamond_from_ranks(int n, int p, Rank rank) {
    Polynomial sum;
    for (int k = 0; k <= n + 1; k += p) {
        const BigInt r = rank(k);
        sum += Polynomial::monomial(binom(n, k) - r, 2 * k);
        if (k >= 1) sum += Polynomial::monomial(binom(n, k - 1) - r, 2 * k - 1);
    }
    return one_plus_t(n + 2) * sum;
}

}  // namespace

Polynomial hp_diamond_Z3(int n) {
    require(n >= 1, "diamond series need n >= 1");
    return diamond_from_ranks(n, 3, [n](int k) { return subset_incidence_rank_formula(n, k); });
}

Polynomial diamond_rank_series(int n) {
    Polynomial f;
    for (int j = 0; 2 * j <= n - 1; ++j) f += one_plus_t(n - 2 * j - 1).shifted(j + 1);
    return f;
}

bool diamond_rank_series_identity(int n) {
    const int c = (n + 1) / 2;
    const Polynomial lhs = Polynomial{1, 1, 1} * diamond_rank_series(n) * one_plus_t(2 * c);
    const Polynomial rhs = one_plus_t(n + 1).shifted(1) * (one_plus_t(2 * c) - Polynomial::monomial(1, c));
    return lhs == rhs;
}

Polynomial hp_diamond_Z3_roots(int n) {
    require(n >= 1, "diamond series need n >= 1");
    const int p = 3;
    // F(s) = s G(s), so (t+1)/t F(ε^i t^2) = (t+1) ε^i t G(ε^i t^2).
    Polynomial G;
    for (int j = 0; 2 * j <= n - 1; ++j) G += one_plus_t(n - 2 * j - 1).shifted(j);
    CyclotomicPolynomial sum(p);
    const auto t_plus_1 = CyclotomicPolynomial::lift(Polynomial{1, 1}, p);
    for (int i = 0; i < p; ++i) {
        auto lin = CyclotomicPolynomial::substitute(Polynomial{1, 1}, p, i, 1);    // 1 + ε^i t
        auto quad = CyclotomicPolynomial::substitute(Polynomial{1, 1}, p, i, 2);   // 1 + ε^i t^2
        auto eps_t = CyclotomicPolynomial::substitute(Polynomial{0, 1}, p, i, 1);  // ε^i t
        sum += lin * quad.pow(n);
        sum -= t_plus_1 * eps_t * CyclotomicPolynomial::substitute(G, p, i, 2);
    }
    return one_plus_t(n + 2) * sum.to_integer().divide_exact(BigInt(p));
}

std::int64_t subset_incidence_rank(int n, int k, std::uint32_t p) {
    if (k < 1 || k > n) return 0;
    // Subsets as bitmasks; row = (k-1)-subset, column = k-subset.
    std::vector<std::uint32_t> lower, upper;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        const int c = __builtin_popcount(s);
        if (c == k - 1) lower.push_back(s);
        if (c == k) upper.push_back(s);
    }
    SparseMatrix m(int(lower.size()), int(upper.size()));
    for (std::size_t j = 0; j < upper.size(); ++j) {
        for (std::uint32_t rest = upper[j]; rest; rest &= rest - 1) {
            const std::uint32_t sub = upper[j] & ~(rest & -rest);
            const int row = int(std::lower_bound(lower.begin(), lower.end(), sub) - lower.begin());
            m.columns[j].emplace_back(row, -1);
        }
        std::sort(m.columns[j].begin(), m.columns[j].end());
    }
    return rank_mod_p(m, p);
}

Polynomial hp_diamond_rank_route(int n, int p) {
    require(n >= 1 && n <= 20, "rank route supports 1 <= n <= 20");
    return diamond_from_ranks(n, p, [n, p](int k) { return BigInt(long(subset_incidence_rank(n, k, std::uint32_t(p)))); });
}

Polynomial hp_tree_height1(int n) { return one_plus_t(n); }

Polynomial closed_form(const std::string& family, const std::vector<int>& a, std::uint32_t p) {
    auto need = [&](std::size_t k) {
        if (a.size() != k) throw std::invalid_argument("family '" + family + "' takes " + std::to_string(k) + " parameter(s)");
    };
    const int ip = int(p);
    if (family == "antichain") return need(1), one_plus_t(a[0]);
    if (family == "cycle") {
        need(1);
        if (p == 0) return one_plus_t(2 * a[0]);
        return p == 2 ? hp_cycle_Z2(a[0]) : hp_cycle_Zp(a[0], ip);
    }
    if (family == "complete-bipartite") {
        need(2);
        const int m = a[0], n = a[1];
        if (p == 0 || ip > std::min(m, n)) return one_plus_t(m + n);
        if (p == 2) return hp_complete_bipartite_Z2_stanley(m, n);
        if (ip == m) return hp_complete_bipartite_pnp(ip, n);
        if (ip == n) return hp_complete_bipartite_pnp(ip, m);
        throw std::invalid_argument("no closed form for this complete bipartite poset and prime");
    }
    if (family == "fork") {
        need(1);
        if (p == 0) return one_plus_t(2 * a[0] + 1);
        return p == 2 ? hp_fork_Z2(a[0]) : hp_fork_Zp(a[0], ip);
    }
    if (family == "umbrella") {
        need(1);
        if (p == 0) return one_plus_t(a[0] + 2);
        return p == 2 ? hp_umbrella_Z2(a[0]) : hp_umbrella_Zp(a[0], ip);
    }
    if (family == "diamond") {
        need(1);
        if (p == 0 || ip > a[0] + 1) return one_plus_t(a[0] + 2);
        if (p == 2) return hp_diamond_Z2(a[0]);
        if (p == 3) return hp_diamond_Z3(a[0]);
        throw std::invalid_argument("no closed diamond series for p >= 5");
    }
    if (family == "chain") {
        need(1);
        if (p == 0 || ip >= a[0]) return one_plus_t(a[0]);
        throw std::invalid_argument("no closed form for chains in small characteristic");
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

std::string series_csv(const Polynomial& f) {
    std::ostringstream out;
    out << "degree,coefficient\n";
    for (int k = 0; k <= f.degree(); ++k) out << k << ',' << f[k].get_str() << '\n';
    return out.str();
}

std::string normalized_csv(const Polynomial& f) {
    std::ostringstream out;
    out << "degree,coefficient,normalized,normalized_decimal\n";
    BigInt top = 0;
    for (const BigInt& c : f.coefficients()) top = std::max(top, c);
    for (int k = 0; k <= f.degree(); ++k) {
        mpq_class q(f[k], top == 0 ? BigInt(1) : top);
        q.canonicalize();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
        out << k << ',' << f[k].get_str() << ',' << q.get_str() << ',' << buf << '\n';
    }
    return out.str();
}

}  // namespace posetlie
