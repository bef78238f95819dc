#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "posetlie/chevalley.hpp"

namespace posetlie {

/// Pairs (upper, lower): lower is a face of upper one degree down.
struct MorseMatching {
    std::vector<std::pair<WedgeMask, WedgeMask>> pairs;

    nlohmann::json to_json(const PosetLieAlgebra& g) const;
};

struct MatchingCheck {
    bool ok = true;
    std::string problem;
    explicit operator bool() const { return ok; }
};

/// Unit coefficients, every cell used at most once, and no directed cycle in
/// any degree pair once matched edges are reversed.
MatchingCheck verify_matching(const GradedComplex& c, const MorseMatching& m);

/// Critical cells and the boundary summed over zig-zag paths.
struct ReducedComplex {
    std::vector<std::vector<WedgeMask>> critical;
    std::vector<SparseMatrix> d;

    GradedComplex as_complex() const;
    /// Coefficient of `to` in the reduced boundary of `from` (0 if either is not critical).
    std::int64_t coefficient(WedgeMask from, WedgeMask to) const;
    nlohmann::json to_json(const PosetLieAlgebra& g) const;
};

/// Requires a valid matching (std::invalid_argument otherwise).
ReducedComplex reduce(const GradedComplex& c, const MorseMatching& m);

/// Adds unit edges one at a time whenever the reversal keeps the degree pair
/// acyclic. Canonical order without a seed, shuffled order with one.
MorseMatching greedy_matching(const GradedComplex& c, std::optional<std::uint64_t> seed = std::nullopt);

/// A block together with one of the matchings from the torsion arguments.
struct MorseFixture {
    PosetLieAlgebra algebra;
    GradedComplex complex;
    MorseMatching matching;
    WedgeMask source = 0;  ///< cell whose reduced boundary carries the torsion
    WedgeMask target = 0;
    std::int64_t expected = 0;  ///< |coefficient| expected at target
};

/// nil_n block of weight (-1, 3-n, 1, ..., 1) with the matching
/// e_2i e_in ... -> e_2n ...; source alpha, target beta, expected n-2. n >= 3.
MorseFixture nil_matching(int n);

/// Block of gl^<= containing v = e_ab ∧ ⋀ e_{a x_i} e_{x_i b}, with the pairs
/// v'_x -> v_x, v'_ry -> v_ry, v'_sz -> v_sz (r, s != 1) kept when they are
/// valid. Source e_aa ∧ v, target v, expected m = |middles| + 1.
MorseFixture interval_matching(const Poset& p, Element a, Element b, std::span<const Element> middles);

/// p-complex of gl^< of diamond(n) with {e''_{σ∪{n}} -> e'_σ}.
MorseFixture diamond_matching(int n, int p);

/// Wedges e''_σ and e'_σ of the diamond family (a = 1, b_i = 1+i, c = n+2).
WedgeMask diamond_double(const PosetLieAlgebra& g, int n, std::uint32_t sigma);
WedgeMask diamond_prime(const PosetLieAlgebra& g, int n, std::uint32_t sigma);

}  // namespace posetlie
