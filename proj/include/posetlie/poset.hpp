#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace posetlie {

/// Elements are labelled 1..n.
using Element = int;
using Edge = std::pair<Element, Element>;

struct CycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PosetFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite strict partial order on {1..n}, n <= 64.
///
/// The relation is stored as its transitive closure in a dense bit table
/// (row i holds every j with i < j). The Hasse diagram is the transitive
/// reduction and is computed once at construction. Edge input order never
/// affects the stored structure.
class Poset {
public:
    static constexpr int kMaxElements = 64;

    Poset() = default;

    /// Builds the closure of the given covering (or arbitrary) relations.
    /// Throws CycleError if the closure is not antisymmetric.
    static Poset from_hasse(int n, std::span<const Edge> edges);
    static Poset from_hasse(int n, std::initializer_list<Edge> edges) {
        return from_hasse(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int size() const { return n_; }

    bool less(Element i, Element j) const { return (up_[i - 1] >> (j - 1)) & 1u; }
    bool leq(Element i, Element j) const { return i == j || less(i, j); }
    bool comparable(Element i, Element j) const { return leq(i, j) || leq(j, i); }

    /// Bitmask of elements strictly above i (bit j-1 for element j).
    std::uint64_t up_set(Element i) const { return up_[i - 1]; }
    std::uint64_t down_set(Element i) const { return down_[i - 1]; }

    /// All pairs i < j, sorted lexicographically.
    std::vector<Edge> strict_pairs() const;
    const std::vector<Edge>& hasse_edges() const { return hasse_; }

    int height() const;
    std::vector<Element> interval(Element a, Element b) const;
    bool is_convex(std::span<const Element> subset) const;
    bool is_bounded() const;
    bool is_connected() const;
    bool is_forest_height_le1() const;

    std::vector<Element> minimal_elements() const;
    std::vector<Element> maximal_elements() const;

    Poset opposite() const;
    Poset disjoint_union(const Poset& other) const;
    /// Induced subposet on `subset`, relabelled 1..k in increasing order.
    Poset induced(std::span<const Element> subset) const;
    /// Relabels element i as perm[i-1].
    Poset relabel(std::span<const Element> perm) const;

    bool operator==(const Poset& other) const { return n_ == other.n_ && up_ == other.up_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> up_;
    std::vector<std::uint64_t> down_;
    std::vector<Edge> hasse_;

    void finish();
};

Poset chain(int n);
Poset antichain(int n);
/// Height-1 poset whose Hasse diagram is a 2n-cycle: a_i = i, b_i = n+i,
/// a_i < b_i and a_i < b_{i-1} (indices mod n). Requires n >= 2.
Poset cycle_poset(int n);
/// Bottoms 1..m, tops m+1..m+n, every bottom below every top.
Poset complete_bipartite(int m, int n);
/// a = 1, b_i = 1+i, c_i = 1+n+i with a < b_i < c_i.
Poset fork(int n);
/// a = 1, b = 2, c_i = 2+i with a < b < c_i.
Poset umbrella(int n);
/// a = 1, b_i = 1+i, c = n+2 with a < b_i < c.
Poset diamond(int n);

/// Builds a family poset from "name:p1,p2" (e.g. "complete-bipartite:2,2").
Poset family_poset(const std::string& spec);

/// Text format: first token n, then pairs `i j`. Blank lines and `#` comments are ignored.
Poset parse_poset_text(std::istream& in);
Poset parse_poset_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);
std::string poset_to_text(const Poset& p);

/// One representative per isomorphism class of connected posets on n
/// elements, naturally labelled (i < j in the poset implies i < j as
/// integers). Brute-force canonical forms; intended for n <= 7.
std::vector<Poset> connected_posets(int n);

}  // namespace posetlie
