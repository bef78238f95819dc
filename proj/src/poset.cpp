#include "posetlie/poset.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace posetlie {

namespace {

std::uint64_t bit(Element i) { return std::uint64_t{1} << (i - 1); }

std::vector<Element> elements_of(std::uint64_t mask) {
    std::vector<Element> out;
    while (mask) {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

void check_size(int n) {
    if (n < 0 || n > Poset::kMaxElements)
        throw std::invalid_argument("poset size must be in [0, 64]");
}

}  // namespace

Poset Poset::from_hasse(int n, std::span<const Edge> edges) {
    check_size(n);
    Poset p;
    p.n_ = n;
    p.up_.assign(n, 0);
    for (auto [i, j] : edges) {
        if (i < 1 || i > n || j < 1 || j > n)
            throw std::invalid_argument("edge endpoint out of range");
        if (i == j)
            throw CycleError("self-loop at element " + std::to_string(i));
        p.up_[i - 1] |= bit(j);
    }
    // Warshall closure on bit rows.
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            if (p.up_[i - 1] & bit(k)) p.up_[i - 1] |= p.up_[k - 1];
    for (int i = 1; i <= n; ++i)
        if (p.up_[i - 1] & bit(i))
            throw CycleError("relation closure contains a cycle through element " +
                             std::to_string(i));
    p.finish();
    return p;
}

void Poset::finish() {
    down_.assign(n_, 0);
    for (int i = 1; i <= n_; ++i)
        for (std::uint64_t m = up_[i - 1]; m; m &= m - 1)
            down_[std::countr_zero(m)] |= bit(i);
    hasse_.clear();
    for (int i = 1; i <= n_; ++i) {
        std::uint64_t above = up_[i - 1];
        std::uint64_t covers = above;
        for (std::uint64_t m = above; m; m &= m - 1) covers &= ~up_[std::countr_zero(m)];
        for (Element j : elements_of(covers)) hasse_.emplace_back(i, j);
    }
}

std::vector<Edge> Poset::strict_pairs() const {
    std::vector<Edge> out;
    for (int i = 1; i <= n_; ++i)
        for (Element j : elements_of(up_[i - 1])) out.emplace_back(i, j);
    return out;
}

int Poset::height() const {
    // Longest chain ending at each element; elements are processed in an order
    // compatible with the relation (repeated relaxation is fine at this size).
    std::vector<int> len(n_, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [i, j] : hasse_)
            if (len[j - 1] < len[i - 1] + 1) {
                len[j - 1] = len[i - 1] + 1;
                changed = true;
            }
    }
    return n_ == 0 ? 0 : *std::max_element(len.begin(), len.end());
}

std::vector<Element> Poset::interval(Element a, Element b) const {
    if (!leq(a, b)) return {};
    if (a == b) return {a};
    return elements_of((up_[a - 1] & down_[b - 1]) | bit(a) | bit(b));
}

bool Poset::is_convex(std::span<const Element> subset) const {
    std::uint64_t mask = 0;
    for (Element e : subset) mask |= bit(e);
    for (Element a : subset)
        for (Element b : subset)
            if (less(a, b) && ((up_[a - 1] & down_[b - 1]) & ~mask)) return false;
    return true;
}

bool Poset::is_bounded() const {
    if (n_ == 0) return false;
    int bottoms = 0, tops = 0;
    for (int i = 0; i < n_; ++i) {
        bottoms += down_[i] == 0;
        tops += up_[i] == 0;
    }
    return bottoms == 1 && tops == 1;
}

bool Poset::is_connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = bit(1), frontier = bit(1);
    while (frontier) {
        std::uint64_t next = 0;
        for (Element e : elements_of(frontier)) next |= up_[e - 1] | down_[e - 1];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n_;
}

bool Poset::is_forest_height_le1() const {
    if (height() > 1) return false;
    // Undirected Hasse graph is a forest iff union-find never closes a cycle.
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [i, j] : hasse_) {
        int ri = find(i - 1), rj = find(j - 1);
        if (ri == rj) return false;
        parent[ri] = rj;
    }
    return true;
}

std::vector<Element> Poset::minimal_elements() const {
    std::vector<Element> out;
    for (int i = 1; i <= n_; ++i)
        if (down_[i - 1] == 0) out.push_back(i);
    return out;
}

std::vector<Element> Poset::maximal_elements() const {
    std::vector<Element> out;
    for (int i = 1; i <= n_; ++i)
        if (up_[i - 1] == 0) out.push_back(i);
    return out;
}

Poset Poset::opposite() const {
    Poset p;
    p.n_ = n_;
    p.up_ = down_;
    p.finish();
    return p;
}

Poset Poset::disjoint_union(const Poset& other) const {
    check_size(n_ + other.n_);
    Poset p;
    p.n_ = n_ + other.n_;
    p.up_ = up_;
    for (std::uint64_t row : other.up_) p.up_.push_back(row << n_);
    p.finish();
    return p;
}

Poset Poset::induced(std::span<const Element> subset) const {
    std::vector<Element> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Edge> rel;
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = 0; b < sorted.size(); ++b)
            if (less(sorted[a], sorted[b])) rel.emplace_back(int(a) + 1, int(b) + 1);
    return from_hasse(int(sorted.size()), rel);
}

Poset Poset::relabel(std::span<const Element> perm) const {
    if (int(perm.size()) != n_) throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<Edge> rel;
    for (auto [i, j] : strict_pairs()) rel.emplace_back(perm[i - 1], perm[j - 1]);
    return from_hasse(n_, rel);
}

Poset chain(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Poset::from_hasse(n, e);
}

Poset antichain(int n) { return Poset::from_hasse(n, std::span<const Edge>{}); }

Poset cycle_poset(int n) {
    if (n < 2) throw std::invalid_argument("cycle_poset needs n >= 2");
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(i, n + i);
        int prev = i == 1 ? n : i - 1;
        e.emplace_back(i, n + prev);
    }
    return Poset::from_hasse(2 * n, e);
}

Poset complete_bipartite(int m, int n) {
    std::vector<Edge> e;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) e.emplace_back(i, m + j);
    return Poset::from_hasse(m + n, e);
}

Poset fork(int n) {
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(1, 1 + i);
        e.emplace_back(1 + i, 1 + n + i);
    }
    return Poset::from_hasse(2 * n + 1, e);
}

Poset umbrella(int n) {
    std::vector<Edge> e{{1, 2}};
    for (int i = 1; i <= n; ++i) e.emplace_back(2, 2 + i);
    return Poset::from_hasse(n + 2, e);
}

Poset diamond(int n) {
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(1, 1 + i);
        e.emplace_back(1 + i, n + 2);
    }
    if (n == 0) e.emplace_back(1, 2);
    return Poset::from_hasse(n + 2, e);
}

Poset family_poset(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                args.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw PosetFormatError("bad family parameter '" + tok + "'");
            }
        }
    }
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw PosetFormatError("family '" + name + "' takes " + std::to_string(k) +
                                   " parameter(s)");
        for (int a : args)
            if (a < 0 || a > 32) throw PosetFormatError("family parameter out of range");
    };
    if (name == "chain") return need(1), chain(args[0]);
    if (name == "antichain") return need(1), antichain(args[0]);
    if (name == "cycle") return need(1), cycle_poset(args[0]);
    if (name == "complete-bipartite") return need(2), complete_bipartite(args[0], args[1]);
    if (name == "fork") return need(1), fork(args[0]);
    if (name == "umbrella") return need(1), umbrella(args[0]);
    if (name == "diamond") return need(1), diamond(args[0]);
    throw PosetFormatError("unknown family '" + name + "'");
}

Poset parse_poset_text(std::istream& in) {
    std::stringstream clean;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        clean << line << '\n';
    }
    int n;
    if (!(clean >> n)) throw PosetFormatError("expected element count on the first line");
    std::vector<Edge> edges;
    int i, j;
    while (clean >> i) {
        if (!(clean >> j)) throw PosetFormatError("dangling edge endpoint");
        edges.emplace_back(i, j);
    }
    if (!clean.eof()) throw PosetFormatError("non-integer token in poset file");
    try {
        return Poset::from_hasse(n, edges);
    } catch (const std::invalid_argument& e) {
        throw PosetFormatError(e.what());
    }
}

Poset parse_poset_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("hasse")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return Poset::from_hasse(n, edges);
    } catch (const nlohmann::json::exception& e) {
        throw PosetFormatError(std::string("bad poset json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw PosetFormatError(e.what());
    }
}

nlohmann::json poset_to_json(const Poset& p) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [i, j] : p.hasse_edges()) edges.push_back({i, j});
    return {{"n", p.size()}, {"hasse", edges}};
}

std::string poset_to_text(const Poset& p) {
    std::ostringstream os;
    os << p.size() << '\n';
    for (auto [i, j] : p.hasse_edges()) os << i << ' ' << j << '\n';
    return os.str();
}

namespace {

std::uint64_t relation_key(const Poset& p, const std::vector<int>& perm) {
    // n <= 8: bit (perm[i]*8 + perm[j]) set iff i < j.
    std::uint64_t key = 0;
    for (auto [i, j] : p.strict_pairs())
        key |= std::uint64_t{1} << (perm[i - 1] * 8 + perm[j - 1]);
    return key;
}

std::uint64_t canonical_key(const Poset& p) {
    std::vector<int> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, relation_key(p, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<Poset> connected_posets(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("connected_posets supports 1 <= n <= 8");
    std::vector<Poset> level{antichain(1)};
    for (int k = 1; k < n; ++k) {
        std::vector<Poset> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Poset& p : level) {
            // New element k+1 sits on top of a down-closed subset.
            for (std::uint64_t ideal = 0; ideal < (std::uint64_t{1} << k); ++ideal) {
                bool closed = true;
                for (std::uint64_t m = ideal; m && closed; m &= m - 1)
                    closed = (p.down_set(std::countr_zero(m) + 1) & ~ideal) == 0;
                if (!closed) continue;
                std::vector<Edge> rel = p.strict_pairs();
                for (std::uint64_t m = ideal; m; m &= m - 1)
                    rel.emplace_back(std::countr_zero(m) + 1, k + 1);
                Poset q = Poset::from_hasse(k + 1, rel);
                if (seen.insert(canonical_key(q)).second) next.push_back(std::move(q));
            }
        }
        level = std::move(next);
    }
    std::vector<Poset> out;
    for (auto& p : level)
        if (p.is_connected()) out.push_back(std::move(p));
    return out;
}

}  // namespace posetlie
