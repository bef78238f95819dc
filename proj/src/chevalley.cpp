#include "posetlie/chevalley.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace posetlie {

std::vector<int> wedge_indices(WedgeMask v) {
    std::vector<int> out;
    while (v) {
        out.push_back(__builtin_ctzll(v));
        v &= v - 1;
    }
    return out;
}

WedgeMask wedge_from_indices(std::span<const int> idx) {
    WedgeMask v = 0;
    for (int i : idx) {
        if (i < 0 || i >= 64) throw std::invalid_argument("wedge index out of range");
        WedgeMask bit = WedgeMask{1} << i;
        if (v & bit) throw std::invalid_argument("repeated factor in wedge");
        v |= bit;
    }
    return v;
}

std::string wedge_to_string(const PosetLieAlgebra& g, WedgeMask v) {
    if (!v) return "1";
    std::string out;
    for (int k : wedge_indices(v)) {
        if (!out.empty()) out += ' ';
        out += 'e' + std::to_string(g[k].row);
        if (g.element_count() >= 10) out += ',';
        out += std::to_string(g[k].col);
    }
    return out;
}

WedgeMask wedge_of(const PosetLieAlgebra& g, std::initializer_list<std::pair<Element, Element>> units) {
    std::vector<int> idx;
    for (auto [i, j] : units) {
        int k = g.index_of(i, j);
        if (k < 0) throw std::invalid_argument("e" + std::to_string(i) + "," + std::to_string(j) + " is not in the algebra");
        idx.push_back(k);
    }
    return wedge_from_indices(idx);
}

namespace {

// Parity of the permutation sorting the concatenation x,y.
int concat_sign(WedgeMask x, WedgeMask y) {
    int inversions = 0;
    while (y) {
        int b = __builtin_ctzll(y);
        inversions += __builtin_popcountll(x >> b >> 1);
        y &= y - 1;
    }
    return inversions & 1 ? -1 : 1;
}

}  // namespace

std::pair<int, WedgeMask> wedge_product(WedgeMask x, WedgeMask y) {
    if (x & y) return {0, 0};
    return {concat_sign(x, y), x | y};
}

void add_to_chain(Chain& c, WedgeMask v, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = std::lower_bound(c.begin(), c.end(), v, [](const auto& t, WedgeMask m) { return t.first < m; });
    if (it != c.end() && it->first == v) {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    } else {
        c.insert(it, {v, coeff});
    }
}

Chain boundary(const PosetLieAlgebra& g, WedgeMask v) {
    Chain out;
    const std::vector<int> idx = wedge_indices(v);
    const int k = int(idx.size());
    for (int r = 0; r < k; ++r)
        for (int s = r + 1; s < k; ++s) {
            const BracketEntry& e = g.bracket_indices(idx[r], idx[s]);
            if (e.count == 0) continue;
            // Positions are 1-based in the sign (-1)^(r+s); the parity is the same 0-based.
            const int sign = ((r + s) & 1) ? -1 : 1;
            const WedgeMask rest = v & ~(WedgeMask{1} << idx[r]) & ~(WedgeMask{1} << idx[s]);
            for (int t = 0; t < e.count; ++t) {
                const WedgeMask bit = WedgeMask{1} << e.index[t];
                if (rest & bit) continue;
                const int shift = __builtin_popcountll(rest & (bit - 1));
                add_to_chain(out, rest | bit, std::int64_t(sign) * e.coeff[t] * ((shift & 1) ? -1 : 1));
            }
        }
    return out;
}

Chain boundary(const PosetLieAlgebra& g, const Chain& c) {
    Chain out;
    for (auto [v, a] : c)
        for (auto [u, b] : boundary(g, v)) add_to_chain(out, u, a * b);
    return out;
}

WeightVector weight_vector(const PosetLieAlgebra& g, WedgeMask v) {
    WeightVector w(g.element_count(), 0);
    for (int k : wedge_indices(v)) {
        ++w[g[k].col - 1];
        --w[g[k].row - 1];
    }
    return w;
}

std::size_t GradedComplex::size() const {
    std::size_t n = 0;
    for (const auto& c : cells) n += c.size();
    return n;
}

std::vector<std::int64_t> GradedComplex::sizes() const {
    std::vector<std::int64_t> out;
    for (const auto& c : cells) out.push_back(std::int64_t(c.size()));
    return out;
}

int GradedComplex::find(WedgeMask v) const {
    const int k = wedge_degree(v);
    if (k >= int(cells.size())) return -1;
    auto it = std::lower_bound(cells[k].begin(), cells[k].end(), v);
    return it != cells[k].end() && *it == v ? int(it - cells[k].begin()) : -1;
}

bool GradedComplex::boundary_squares_to_zero() const {
    for (int k = 2; k < int(d.size()); ++k)
        if (!d[k - 1].multiply(d[k]).is_zero()) return false;
    return true;
}

GradedComplex complex_from_cells(const PosetLieAlgebra& g, std::vector<WedgeMask> cells, int max_degree) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

    GradedComplex c;
    int top = 0;
    for (WedgeMask v : cells) top = std::max(top, wedge_degree(v));
    if (max_degree >= 0 && max_degree + 1 < top) {
        top = max_degree + 1;
        c.truncated = true;
    }
    c.cells.resize(top + 1);
    for (WedgeMask v : cells)
        if (wedge_degree(v) <= top) c.cells[wedge_degree(v)].push_back(v);

    c.d.resize(top + 1);
    c.d[0] = SparseMatrix(0, int(c.cells[0].size()));
    for (int k = 1; k <= top; ++k) {
        const auto& src = c.cells[k];
        const auto& dst = c.cells[k - 1];
        SparseMatrix m(int(dst.size()), int(src.size()));
        bool closed = true;
#pragma omp parallel for schedule(dynamic, 512) if (src.size() > 4096)
        for (std::size_t j = 0; j < src.size(); ++j) {
            auto& col = m.columns[j];
            for (auto [u, coeff] : boundary(g, src[j])) {
                auto it = std::lower_bound(dst.begin(), dst.end(), u);
                if (it == dst.end() || *it != u) {
#pragma omp atomic write
                    closed = false;
                    continue;
                }
                col.emplace_back(int(it - dst.begin()), coeff);
            }
            std::sort(col.begin(), col.end());
        }
        if (!closed) throw std::logic_error("cell set is not closed under the boundary");
        c.d[k] = std::move(m);
    }
    return c;
}

std::size_t memory_budget_mb(std::size_t requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("POSETLIE_MEMORY_MB")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return std::size_t(v);
    }
    return 4096;
}

double estimated_complex_bytes(int dim) {
    // Mask plus an average of about dim/4 boundary entries of 16 bytes per cell.
    return std::ldexp(1.0, dim) * (8.0 + 4.0 * dim);
}

GradedComplex build_complex(const PosetLieAlgebra& g, const BuildOptions& opts) {
    const int dim = g.dim();
    if (dim > opts.dim_cap)
        throw SizeError("algebra dimension " + std::to_string(dim) + " exceeds the cap of " + std::to_string(opts.dim_cap) +
                        "; use the block engine");
    const double budget = double(memory_budget_mb(opts.memory_mb)) * 1024 * 1024;
    if (estimated_complex_bytes(dim) > budget)
        throw SizeError("complex of dimension " + std::to_string(dim) + " exceeds the memory budget");
    const int top = opts.max_degree >= 0 ? std::min(dim, opts.max_degree + 1) : dim;
    std::vector<WedgeMask> cells;
    for (WedgeMask v = 0; v < (WedgeMask{1} << dim); ++v)
        if (wedge_degree(v) <= top) cells.push_back(v);
    return complex_from_cells(g, std::move(cells), opts.max_degree);
}

std::map<WeightVector, GradedComplex> block_decompose(const GradedComplex& c, const PosetLieAlgebra& g) {
    std::map<WeightVector, std::vector<WedgeMask>> groups;
    for (const auto& deg : c.cells)
        for (WedgeMask v : deg) groups[weight_vector(g, v)].push_back(v);
    std::map<WeightVector, GradedComplex> out;
    const int max_degree = c.truncated ? c.top_degree() - 1 : -1;
    for (auto& [w, cells] : groups) out.emplace(w, complex_from_cells(g, std::move(cells), max_degree));
    return out;
}

namespace {

// Depth-first enumeration over basis elements in index order. `accept(i, w_i)`
// is consulted once element i has seen its last basis element; `feasible`
// may prune earlier.
template <class Accept, class Feasible>
void enumerate_wedges(const PosetLieAlgebra& g, Accept accept, Feasible feasible, std::vector<WedgeMask>& out) {
    const int n = g.element_count();
    const int dim = g.dim();
    // finishing[k] lists elements whose last touching basis element is k.
    std::vector<int> last(n, -1);
    for (int k = 0; k < dim; ++k) {
        last[g[k].row - 1] = k;
        last[g[k].col - 1] = k;
    }
    std::vector<std::vector<int>> finishing(dim);
    std::vector<int> untouched;
    for (int i = 0; i < n; ++i) {
        if (last[i] >= 0)
            finishing[last[i]].push_back(i);
        else
            untouched.push_back(i);
    }
    for (int i : untouched)
        if (!accept(i, 0)) return;

    std::vector<int> w(n, 0);
    auto rec = [&](auto&& self, int k, WedgeMask v) -> void {
        if (k == dim) {
            out.push_back(v);
            return;
        }
        const BasisMatrix b = g[k];
        for (int take = 0; take < 2; ++take) {
            if (take) {
                --w[b.row - 1];
                ++w[b.col - 1];
            }
            bool ok = true;
            for (int i : finishing[k])
                if (!accept(i, w[i])) {
                    ok = false;
                    break;
                }
            if (ok && feasible(k, w)) self(self, k + 1, take ? v | (WedgeMask{1} << k) : v);
            if (take) {
                ++w[b.row - 1];
                --w[b.col - 1];
            }
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

std::vector<WedgeMask> p_complex_cells(const PosetLieAlgebra& g, int p) {
    if (g.mode() != Mode::Strict) throw std::invalid_argument("the p-complex is defined for strict algebras");
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    std::vector<WedgeMask> out;
    enumerate_wedges(
        g, [p](int, int wi) { return wi % p == 0; }, [](int, const std::vector<int>&) { return true; }, out);
    return out;
}

GradedComplex p_complex(const PosetLieAlgebra& g, int p, int max_degree) {
    return complex_from_cells(g, p_complex_cells(g, p), max_degree);
}

std::vector<WedgeMask> cells_with_weight(const PosetLieAlgebra& g, const WeightVector& target) {
    const int n = g.element_count();
    if (int(target.size()) != n) throw std::invalid_argument("weight vector has the wrong length");
    // remaining[k][i]: basis elements of index >= k that move w_i.
    const int dim = g.dim();
    std::vector<std::vector<int>> remaining(dim + 1, std::vector<int>(n, 0));
    for (int k = dim - 1; k >= 0; --k) {
        remaining[k] = remaining[k + 1];
        if (!g[k].is_diagonal()) {
            ++remaining[k][g[k].row - 1];
            ++remaining[k][g[k].col - 1];
        }
    }
    std::vector<WedgeMask> out;
    enumerate_wedges(
        g, [&](int i, int wi) { return wi == target[i]; },
        [&](int k, const std::vector<int>& w) {
            for (int i = 0; i < n; ++i)
                if (std::abs(target[i] - w[i]) > remaining[k + 1][i]) return false;
            return true;
        },
        out);
    std::sort(out.begin(), out.end());
    return out;
}

bool block_is_acyclic(const WeightVector& w, const Coefficients& coeff) {
    switch (coeff.kind) {
        case Coefficients::Kind::Z: {
            int gcd = 0;
            for (int x : w) gcd = std::gcd(gcd, x);
            return gcd == 1;
        }
        case Coefficients::Kind::Q:
            return std::any_of(w.begin(), w.end(), [](int x) { return x != 0; });
        case Coefficients::Kind::Zp:
            return std::any_of(w.begin(), w.end(), [&](int x) { return x % int(coeff.p) != 0; });
    }
    return false;
}

std::map<WeightVector, GradedComplex> gcd_prune(const PosetLieAlgebra& g, std::map<WeightVector, GradedComplex> blocks,
                                               const Coefficients& coeff) {
    if (g.mode() != Mode::Reflexive) throw std::invalid_argument("pruning needs the diagonal matrix units");
    std::erase_if(blocks, [&](const auto& kv) { return block_is_acyclic(kv.first, coeff); });
    return blocks;
}

namespace {

std::uint64_t element_bits(std::span<const Element> subset, int n) {
    std::uint64_t bits = 0;
    for (Element e : subset) {
        if (e < 1 || e > n) throw std::invalid_argument("element out of range");
        bits |= std::uint64_t{1} << (e - 1);
    }
    return bits;
}

std::uint64_t index_set(const PosetLieAlgebra& g, WedgeMask v) {
    std::uint64_t s = 0;
    for (int k : wedge_indices(v)) s |= (std::uint64_t{1} << (g[k].row - 1)) | (std::uint64_t{1} << (g[k].col - 1));
    return s;
}

}  // namespace

GradedComplex convex_summand(const PosetLieAlgebra& g, std::span<const Element> subset) {
    if (!g.poset().is_convex(subset)) throw ConvexityError("subset is not convex");
    const std::uint64_t allowed = element_bits(subset, g.element_count());
    WedgeMask usable = 0;
    for (int k = 0; k < g.dim(); ++k) {
        const std::uint64_t s = (std::uint64_t{1} << (g[k].row - 1)) | (std::uint64_t{1} << (g[k].col - 1));
        if ((s & ~allowed) == 0) usable |= WedgeMask{1} << k;
    }
    std::vector<WedgeMask> cells;
    // Enumerate submasks of `usable`.
    WedgeMask sub = usable;
    for (;;) {
        cells.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & usable;
    }
    return complex_from_cells(g, std::move(cells));
}

GradedComplex containing_summand(const PosetLieAlgebra& g, std::span<const Element> required) {
    const std::uint64_t need = element_bits(required, g.element_count());
    if (g.dim() > 30) throw SizeError("containing_summand enumerates all wedges; dimension too large");
    std::vector<WedgeMask> cells;
    for (WedgeMask v = 0; v < (WedgeMask{1} << g.dim()); ++v)
        if ((index_set(g, v) & need) == need) cells.push_back(v);
    return complex_from_cells(g, std::move(cells));
}

nlohmann::json block_inventory_json(const std::map<WeightVector, GradedComplex>& blocks) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [w, c] : blocks) out.push_back({{"weight", w}, {"sizes", c.sizes()}});
    return out;
}

}  // namespace posetlie
