#include "posetlie/subgraphs.hpp"

#include <map>
#include <numeric>

namespace posetlie {

namespace {

void require_height1(const Poset& p) {
    if (p.height() != 1) throw HeightError("poset must have height 1");
}

}  // namespace

Polynomial enumerate_p_plus_regular(const Poset& p, int q) {
    require_height1(p);
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    const auto& edges = p.hasse_edges();
    const int n = p.size();
    const int m = int(edges.size());
    // Vertices whose last incident edge is edge k must have degree 0 mod q after k.
    std::vector<std::vector<int>> closing(m);
    {
        std::vector<int> last(n + 1, -1);
        for (int k = 0; k < m; ++k) last[edges[k].first] = last[edges[k].second] = k;
        for (int v = 1; v <= n; ++v)
            if (last[v] >= 0) closing[last[v]].push_back(v);
    }
    std::vector<BigInt> counts(std::size_t(m) + 1, BigInt(0));
    std::vector<int> deg(n + 1, 0);
    auto rec = [&](auto&& self, int k, int size) -> void {
        if (k == m) {
            ++counts[size];
            return;
        }
        for (int take = 0; take < 2; ++take) {
            if (take) ++deg[edges[k].first], ++deg[edges[k].second];
            bool ok = true;
            for (int v : closing[k]) ok = ok && deg[v] % q == 0;
            if (ok) self(self, k + 1, size + take);
            if (take) --deg[edges[k].first], --deg[edges[k].second];
        }
    };
    rec(rec, 0, 0);
    return Polynomial(std::move(counts));
}

Polynomial count_eulerian_by_size(const Poset& p) { return enumerate_p_plus_regular(p, 2); }

BigInt cycle_space_size(const Poset& p) {
    const int n = p.size();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n;
    for (auto [a, b] : p.hasse_edges()) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    BigInt r = 1;
    r <<= int(p.hasse_edges().size()) - n + components;
    return r;
}

Polynomial enumerate_even_matrices(int m, int n, int q) {
    if (m < 0 || n < 0 || n > 12 || q < 2) throw std::invalid_argument("enumerate_even_matrices: bad size");
    // State: column sums mod q, packed base q.
    std::map<std::vector<int>, std::vector<BigInt>> states;
    states[std::vector<int>(n, 0)] = {BigInt(1)};
    for (int r = 0; r < m; ++r) {
        std::map<std::vector<int>, std::vector<BigInt>> next;
        for (const auto& [cols, poly] : states)
            for (std::uint32_t row = 0; row < (1u << n); ++row) {
                const int ones = __builtin_popcount(row);
                if (ones % q) continue;
                std::vector<int> c = cols;
                for (int j = 0; j < n; ++j)
                    if (row >> j & 1) c[j] = (c[j] + 1) % q;
                auto& dst = next[c];
                if (dst.size() < poly.size() + ones) dst.resize(poly.size() + ones, BigInt(0));
                for (std::size_t k = 0; k < poly.size(); ++k) dst[k + ones] += poly[k];
            }
        states = std::move(next);
    }
    auto it = states.find(std::vector<int>(n, 0));
    return it == states.end() ? Polynomial{} : Polynomial(it->second);
}

TorsionWitness full_nondiagonal_torsion_witness(const Poset& p, std::span<const Element> bottoms,
                                                std::span<const Element> tops) {
    if (bottoms.empty() || tops.empty()) throw std::invalid_argument("witness needs bottoms and tops");
    PosetLieAlgebra g(p, Mode::Reflexive);
    std::vector<int> idx;
    for (Element i : bottoms)
        for (Element j : tops) {
            const int k = g.index_of(i, j);
            if (k < 0 || i == j) throw std::invalid_argument("bottoms must lie strictly below tops");
            idx.push_back(k);
        }
    TorsionWitness w;
    w.cycle = wedge_from_indices(idx);
    w.is_cycle = boundary(g, w.cycle).empty();
    const int diag = g.index_of(bottoms[0], bottoms[0]);
    const WedgeMask up = w.cycle | (WedgeMask{1} << diag);
    for (auto [u, c] : boundary(g, up))
        if (u == w.cycle) w.coefficient = c;
    return w;
}

}  // namespace posetlie
