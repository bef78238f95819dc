#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "posetlie/coefficients.hpp"
#include "posetlie/liealg.hpp"
#include "posetlie/smith.hpp"

namespace posetlie {

/// A wedge of distinct basis vectors, bit k set iff basis element k occurs.
/// Factors are ordered by increasing basis index.
using WedgeMask = std::uint64_t;

/// Integer combination of wedges, sorted by mask, no zero coefficients.
using Chain = std::vector<std::pair<WedgeMask, std::int64_t>>;

using WeightVector = std::vector<int>;

struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvexityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int wedge_degree(WedgeMask v) { return __builtin_popcountll(v); }
std::vector<int> wedge_indices(WedgeMask v);
/// Throws std::invalid_argument on repeated or out-of-range indices.
WedgeMask wedge_from_indices(std::span<const int> idx);
/// "e12 e23", or "1" for the empty wedge.
std::string wedge_to_string(const PosetLieAlgebra& g, WedgeMask v);
/// Wedge of the listed matrix units; throws if one is not in the algebra.
WedgeMask wedge_of(const PosetLieAlgebra& g, std::initializer_list<std::pair<Element, Element>> units);

/// Sign and result of x ∧ y; sign 0 when they share a factor.
std::pair<int, WedgeMask> wedge_product(WedgeMask x, WedgeMask y);

Chain boundary(const PosetLieAlgebra& g, WedgeMask v);
Chain boundary(const PosetLieAlgebra& g, const Chain& c);
void add_to_chain(Chain& c, WedgeMask v, std::int64_t coeff);

WeightVector weight_vector(const PosetLieAlgebra& g, WedgeMask v);

/// Chain complex on an explicit set of wedges. cells[k] holds the degree-k
/// wedges in increasing mask order; d[k] maps C_k to C_{k-1} (d[0] has no rows).
struct GradedComplex {
    std::vector<std::vector<WedgeMask>> cells;
    std::vector<SparseMatrix> d;
    /// Set when degrees above the top one were cut off; the top degree then
    /// lacks its incoming boundary and its homology is not reported.
    bool truncated = false;

    int top_degree() const { return int(cells.size()) - 1; }
    int reported_top() const { return truncated ? top_degree() - 1 : top_degree(); }
    std::size_t size() const;
    std::vector<std::int64_t> sizes() const;
    /// Position of v in cells[degree(v)], or -1.
    int find(WedgeMask v) const;
    bool boundary_squares_to_zero() const;
};

/// Builds the complex spanned by `cells`, which must be closed under the
/// boundary (std::logic_error otherwise). Degrees above max_degree + 1 are dropped.
GradedComplex complex_from_cells(const PosetLieAlgebra& g, std::vector<WedgeMask> cells, int max_degree = -1);

struct BuildOptions {
    int max_degree = -1;
    std::size_t memory_mb = 0;  ///< 0: POSETLIE_MEMORY_MB or 4096
    int dim_cap = 24;
};

std::size_t memory_budget_mb(std::size_t requested = 0);
/// Rough byte count of the whole complex of an algebra of this dimension.
double estimated_complex_bytes(int dim);

GradedComplex build_complex(const PosetLieAlgebra& g, const BuildOptions& opts = {});

std::map<WeightVector, GradedComplex> block_decompose(const GradedComplex& c, const PosetLieAlgebra& g);

/// Wedges of gl^< (Strict mode only) whose weights all lie in pZ.
GradedComplex p_complex(const PosetLieAlgebra& g, int p, int max_degree = -1);
std::vector<WedgeMask> p_complex_cells(const PosetLieAlgebra& g, int p);

/// e_ii acts on a reflexive block C_[w] by the scalar -w_i and that action is
/// null-homotopic. So the block is acyclic over Z when w != 0 and gcd(w) = 1,
/// over Q when w != 0, and over Z_p when some w_i is not divisible by p.
bool block_is_acyclic(const WeightVector& w, const Coefficients& coeff = {});
/// Drops acyclic blocks. Reflexive algebras only (std::invalid_argument otherwise).
std::map<WeightVector, GradedComplex> gcd_prune(const PosetLieAlgebra& g, std::map<WeightVector, GradedComplex> blocks,
                                               const Coefficients& coeff = {});

/// Every wedge of the given weight, found by depth-first search with
/// per-element reachability pruning rather than full enumeration. Includes
/// diagonal factors in Reflexive mode.
std::vector<WedgeMask> cells_with_weight(const PosetLieAlgebra& g, const WeightVector& w);

/// Subcomplex of wedges whose indices all lie in `subset`, which must be convex.
GradedComplex convex_summand(const PosetLieAlgebra& g, std::span<const Element> subset);

/// Wedges whose index set contains every element of `required`.
GradedComplex containing_summand(const PosetLieAlgebra& g, std::span<const Element> required);

/// Block inventory: weight vector -> per-degree sizes.
nlohmann::json block_inventory_json(const std::map<WeightVector, GradedComplex>& blocks);

}  // namespace posetlie
