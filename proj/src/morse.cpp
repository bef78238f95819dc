#include "posetlie/morse.hpp"

#include <algorithm>
#include <random>

namespace posetlie {

namespace {

using SparseVec = std::vector<std::pair<int, std::int64_t>>;

std::int64_t entry(const SparseMatrix& m, int row, int col) { return m.at(row, col); }

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a, std::int64_t b) {
    std::int64_t p, r;
    if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &r))
        throw std::overflow_error("Morse reduction coefficient overflow");
    return r;
}

// up[k][i]: mate in degree k+1 of cell i of degree k; down[k][i]: mate in degree k-1.
struct Pairing {
    std::vector<std::vector<int>> up, down;

    explicit Pairing(const GradedComplex& c) {
        for (const auto& cells : c.cells) {
            up.emplace_back(cells.size(), -1);
            down.emplace_back(cells.size(), -1);
        }
    }
    bool matched(int k, int i) const { return up[k][i] >= 0 || down[k][i] >= 0; }
};

std::string pair_text(WedgeMask u, WedgeMask x) {
    return "(" + std::to_string(u) + " -> " + std::to_string(x) + ")";
}

// Fills `pairing`; returns an error message or empty.
std::string build_pairing(const GradedComplex& c, const MorseMatching& m, Pairing& pairing) {
    for (auto [u, x] : m.pairs) {
        const int k = wedge_degree(u);
        if (wedge_degree(x) != k - 1) return "pair " + pair_text(u, x) + " does not drop one degree";
        const int iu = c.find(u), ix = c.find(x);
        if (iu < 0 || ix < 0 || k > c.top_degree()) return "pair " + pair_text(u, x) + " leaves the complex";
        const std::int64_t coeff = entry(c.d[k], ix, iu);
        if (coeff != 1 && coeff != -1)
            return "pair " + pair_text(u, x) + " has coefficient " + std::to_string(coeff) + ", not a unit";
        if (pairing.matched(k, iu) || pairing.matched(k - 1, ix)) return "cell matched twice in " + pair_text(u, x);
        pairing.down[k][iu] = ix;
        pairing.up[k - 1][ix] = iu;
    }
    return {};
}

// Digraph of the degree pair (k, k-1): upper cells are nodes 0..U-1, lower
// cells U..U+L-1. Matched edges point upward.
template <class Visit>
void for_each_successor(const GradedComplex& c, const Pairing& pr, int k, int node, Visit visit) {
    const int U = int(c.cells[k].size());
    if (node < U) {
        for (auto [r, coeff] : c.d[k].columns[node])
            if (r != pr.down[k][node]) visit(U + r);
    } else {
        const int mate = pr.up[k - 1][node - U];
        if (mate >= 0) visit(mate);
    }
}

bool degree_pair_acyclic(const GradedComplex& c, const Pairing& pr, int k) {
    const int U = int(c.cells[k].size());
    const int N = U + int(c.cells[k - 1].size());
    std::vector<char> color(N, 0);
    std::vector<std::pair<int, std::vector<int>>> stack;
    for (int start = 0; start < N; ++start) {
        if (color[start]) continue;
        auto succ = [&](int v) {
            std::vector<int> s;
            for_each_successor(c, pr, k, v, [&](int w) { s.push_back(w); });
            return s;
        };
        stack.push_back({start, succ(start)});
        color[start] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next.empty()) {
                color[v] = 2;
                stack.pop_back();
                continue;
            }
            const int w = next.back();
            next.pop_back();
            if (color[w] == 1) return false;
            if (color[w] == 0) {
                color[w] = 1;
                stack.push_back({w, succ(w)});
            }
        }
    }
    return true;
}

// Is there a path from upper cell iu to lower cell ix other than the direct edge?
bool has_detour(const GradedComplex& c, const Pairing& pr, int k, int iu, int ix) {
    const int U = int(c.cells[k].size());
    const int N = U + int(c.cells[k - 1].size());
    std::vector<char> seen(N, 0);
    std::vector<int> queue;
    seen[iu] = 1;
    for (auto [r, coeff] : c.d[k].columns[iu])
        if (r != ix && r != pr.down[k][iu] && !seen[U + r]) {
            seen[U + r] = 1;
            queue.push_back(U + r);
        }
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        if (v == U + ix) return true;
        for_each_successor(c, pr, k, v, [&](int w) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        });
    }
    return false;
}

}  // namespace

nlohmann::json MorseMatching::to_json(const PosetLieAlgebra& g) const {
    nlohmann::json out = nlohmann::json::array();
    for (auto [u, x] : pairs) out.push_back({{"upper", wedge_to_string(g, u)}, {"lower", wedge_to_string(g, x)}});
    return out;
}

MatchingCheck verify_matching(const GradedComplex& c, const MorseMatching& m) {
    Pairing pr(c);
    if (std::string err = build_pairing(c, m, pr); !err.empty()) return {false, err};
    for (int k = 1; k <= c.top_degree(); ++k)
        if (!degree_pair_acyclic(c, pr, k))
            return {false, "directed cycle between degrees " + std::to_string(k) + " and " + std::to_string(k - 1)};
    return {};
}

GradedComplex ReducedComplex::as_complex() const {
    GradedComplex c;
    c.cells = critical;
    c.d = d;
    return c;
}

std::int64_t ReducedComplex::coefficient(WedgeMask from, WedgeMask to) const {
    const int k = wedge_degree(from);
    if (wedge_degree(to) != k - 1 || k >= int(critical.size()) || k < 1) return 0;
    auto pos = [](const std::vector<WedgeMask>& v, WedgeMask x) {
        auto it = std::lower_bound(v.begin(), v.end(), x);
        return it != v.end() && *it == x ? int(it - v.begin()) : -1;
    };
    const int j = pos(critical[k], from), i = pos(critical[k - 1], to);
    return i < 0 || j < 0 ? 0 : d[k].at(i, j);
}

nlohmann::json ReducedComplex::to_json(const PosetLieAlgebra& g) const {
    nlohmann::json degrees = nlohmann::json::array();
    for (std::size_t k = 0; k < critical.size(); ++k) {
        nlohmann::json cells = nlohmann::json::array();
        for (std::size_t j = 0; j < critical[k].size(); ++j) {
            nlohmann::json bd = nlohmann::json::array();
            if (k > 0)
                for (auto [r, v] : d[k].columns[j]) bd.push_back({{"cell", wedge_to_string(g, critical[k - 1][r])}, {"coeff", v}});
            cells.push_back({{"cell", wedge_to_string(g, critical[k][j])}, {"boundary", bd}});
        }
        degrees.push_back({{"degree", k}, {"critical", cells}});
    }
    return degrees;
}

ReducedComplex reduce(const GradedComplex& c, const MorseMatching& m) {
    if (auto check = verify_matching(c, m); !check) throw std::invalid_argument("invalid matching: " + check.problem);
    Pairing pr(c);
    build_pairing(c, m, pr);

    const int top = c.top_degree();
    ReducedComplex out;
    std::vector<std::vector<int>> crit_index(top + 1);
    for (int k = 0; k <= top; ++k) {
        crit_index[k].assign(c.cells[k].size(), -1);
        out.critical.emplace_back();
        for (std::size_t i = 0; i < c.cells[k].size(); ++i)
            if (!pr.matched(k, int(i))) {
                crit_index[k][i] = int(out.critical[k].size());
                out.critical[k].push_back(c.cells[k][i]);
            }
    }
    out.d.resize(top + 1);
    out.d[0] = SparseMatrix(0, int(out.critical[0].size()));

    for (int k = 1; k <= top; ++k) {
        // phi[y] for cells y of degree k-1: image in the critical cells of degree k-1.
        const int L = int(c.cells[k - 1].size());
        std::vector<SparseVec> phi(L);
        std::vector<char> done(L, 0);

        auto combine = [](SparseVec& acc, const SparseVec& v, std::int64_t f) {
            SparseVec merged;
            std::size_t i = 0, j = 0;
            while (i < acc.size() || j < v.size()) {
                if (j == v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
                    merged.push_back(acc[i++]);
                } else if (i == acc.size() || v[j].first < acc[i].first) {
                    merged.push_back({v[j].first, checked_mul_add(0, f, v[j].second)});
                    ++j;
                } else {
                    std::int64_t s = checked_mul_add(acc[i].second, f, v[j].second);
                    if (s) merged.push_back({acc[i].first, s});
                    ++i, ++j;
                }
            }
            acc.swap(merged);
        };

        auto resolve = [&](int y0) {
            std::vector<int> stack{y0};
            while (!stack.empty()) {
                const int y = stack.back();
                if (done[y]) {
                    stack.pop_back();
                    continue;
                }
                const int u = pr.up[k - 1][y];
                if (u < 0) {
                    // Critical cells map to themselves; cells matched downward vanish.
                    if (crit_index[k - 1][y] >= 0) phi[y] = {{crit_index[k - 1][y], 1}};
                    done[y] = 1;
                    stack.pop_back();
                    continue;
                }
                bool ready = true;
                for (auto [z, coeff] : c.d[k].columns[u])
                    if (z != y && !done[z]) {
                        stack.push_back(z);
                        ready = false;
                    }
                if (!ready) continue;
                const std::int64_t lambda = entry(c.d[k], y, u);
                SparseVec acc;
                for (auto [z, coeff] : c.d[k].columns[u])
                    if (z != y) combine(acc, phi[z], -lambda * coeff);
                phi[y] = std::move(acc);
                done[y] = 1;
                stack.pop_back();
            }
        };

        SparseMatrix dk(int(out.critical[k - 1].size()), int(out.critical[k].size()));
        for (std::size_t j = 0; j < c.cells[k].size(); ++j) {
            const int cj = crit_index[k][j];
            if (cj < 0) continue;
            SparseVec acc;
            for (auto [y, coeff] : c.d[k].columns[j]) {
                resolve(y);
                combine(acc, phi[y], coeff);
            }
            dk.columns[cj].assign(acc.begin(), acc.end());
        }
        out.d[k] = std::move(dk);
    }
    return out;
}

MorseMatching greedy_matching(const GradedComplex& c, std::optional<std::uint64_t> seed) {
    Pairing pr(c);
    MorseMatching m;
    std::mt19937_64 rng(seed.value_or(0));
    for (int k = 1; k <= c.top_degree(); ++k) {
        std::vector<int> order(c.cells[k].size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
        if (seed) std::shuffle(order.begin(), order.end(), rng);
        for (int iu : order) {
            if (pr.matched(k, iu)) continue;
            std::vector<std::pair<int, std::int64_t>> faces(c.d[k].columns[iu].begin(), c.d[k].columns[iu].end());
            if (seed) std::shuffle(faces.begin(), faces.end(), rng);
            for (auto [ix, coeff] : faces) {
                if ((coeff != 1 && coeff != -1) || pr.matched(k - 1, ix)) continue;
                if (has_detour(c, pr, k, iu, ix)) continue;
                pr.down[k][iu] = ix;
                pr.up[k - 1][ix] = iu;
                m.pairs.emplace_back(c.cells[k][iu], c.cells[k - 1][ix]);
                break;
            }
        }
    }
    return m;
}

WedgeMask diamond_double(const PosetLieAlgebra& g, int n, std::uint32_t sigma) {
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i)
        if (sigma >> (i - 1) & 1) {
            idx.push_back(g.index_of(1, 1 + i));
            idx.push_back(g.index_of(1 + i, n + 2));
        }
    return wedge_from_indices(idx);
}

WedgeMask diamond_prime(const PosetLieAlgebra& g, int n, std::uint32_t sigma) {
    return diamond_double(g, n, sigma) | (WedgeMask{1} << g.index_of(1, n + 2));
}

MorseFixture nil_matching(int n) {
    if (n < 3) throw std::invalid_argument("nil_matching needs n >= 3");
    PosetLieAlgebra g(chain(n), Mode::Strict);
    WeightVector w(n, 1);
    w[0] = -1;
    w[1] = 3 - n;
    std::vector<WedgeMask> cells = cells_with_weight(g, w);

    auto bit = [&](int i, int j) { return WedgeMask{1} << g.index_of(i, j); };
    MorseMatching m;
    for (WedgeMask v : cells) {
        if (v & bit(2, n)) continue;
        for (int i = 3; i < n; ++i)
            if ((v & bit(2, i)) && (v & bit(i, n))) {
                m.pairs.emplace_back(v, (v & ~bit(2, i) & ~bit(i, n)) | bit(2, n));
                break;
            }
    }
    WedgeMask alpha = bit(1, 2), beta = bit(1, n);
    for (int i = 3; i <= n; ++i) alpha |= bit(2, i);
    for (int i = 3; i < n; ++i) beta |= bit(2, i);
    GradedComplex block = complex_from_cells(g, std::move(cells));
    return {std::move(g), std::move(block), std::move(m), alpha, beta, n - 2};
}

MorseFixture interval_matching(const Poset& p, Element a, Element b, std::span<const Element> middles) {
    PosetLieAlgebra g(p, Mode::Reflexive);
    const int m = int(middles.size()) + 1;
    for (Element x : middles)
        if (!p.less(a, x) || !p.less(x, b)) throw std::invalid_argument("middles must lie strictly between a and b");
    if (!p.less(a, b)) throw std::invalid_argument("interval_matching needs a < b");

    auto bit = [&](Element i, Element j) -> WedgeMask {
        const int k = g.index_of(i, j);
        return k < 0 ? 0 : WedgeMask{1} << k;
    };
    auto pairs_except = [&](int skip) {
        WedgeMask v = 0;
        for (int i = 0; i < int(middles.size()); ++i)
            if (i != skip) v |= bit(a, middles[i]) | bit(middles[i], b);
        return v;
    };
    const WedgeMask v = bit(a, b) | pairs_except(-1);
    GradedComplex block = complex_from_cells(g, cells_with_weight(g, weight_vector(g, v)));

    auto is_middle = [&](Element x) { return std::find(middles.begin(), middles.end(), x) != middles.end(); };
    std::vector<std::pair<WedgeMask, WedgeMask>> candidates;
    std::vector<Element> between;
    for (Element x = 1; x <= p.size(); ++x)
        if (p.less(a, x) && p.less(x, b) && !is_middle(x)) between.push_back(x);
    if (!middles.empty()) {
        for (Element x : between)
            candidates.push_back({bit(a, x) | bit(x, b) | pairs_except(-1),
                                  bit(a, b) | bit(a, x) | bit(x, b) | pairs_except(0)});
        for (int r = 1; r < int(middles.size()); ++r) {
            const Element xr = middles[r];
            for (Element y : between) {
                if (p.less(y, xr))
                    candidates.push_back({bit(a, b) | bit(a, y) | bit(y, xr) | bit(xr, b) | pairs_except(r),
                                          bit(a, b) | bit(a, y) | bit(y, b) | pairs_except(r)});
                if (p.less(xr, y))
                    candidates.push_back({bit(a, b) | bit(a, xr) | bit(xr, y) | bit(y, b) | pairs_except(r),
                                          bit(a, b) | bit(a, y) | bit(y, b) | pairs_except(r)});
            }
        }
    }

    MorseMatching matching;
    for (const auto& pair : candidates) {
        MorseMatching trial = matching;
        trial.pairs.push_back(pair);
        if (verify_matching(block, trial)) matching = std::move(trial);
    }
    const WedgeMask source = v | bit(a, a);
    return {std::move(g), std::move(block), std::move(matching), source, v, m};
}

MorseFixture diamond_matching(int n, int p) {
    if (n < 1 || n > 20) throw std::invalid_argument("diamond_matching needs 1 <= n <= 20");
    PosetLieAlgebra g(diamond(n), Mode::Strict);
    GradedComplex cx = p_complex(g, p);
    MorseMatching m;
    const std::uint32_t nbit = 1u << (n - 1);
    for (std::uint32_t sigma = 0; sigma < nbit; ++sigma) {
        const WedgeMask upper = diamond_double(g, n, sigma | nbit), lower = diamond_prime(g, n, sigma);
        if (cx.find(upper) >= 0 && cx.find(lower) >= 0) m.pairs.emplace_back(upper, lower);
    }
    return {std::move(g), std::move(cx), std::move(m), 0, 0, 0};
}

}  // namespace posetlie
