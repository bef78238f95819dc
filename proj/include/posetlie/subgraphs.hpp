#pragma once

#include <span>
#include <stdexcept>

#include "posetlie/chevalley.hpp"
#include "posetlie/polynomial.hpp"
#include "posetlie/poset.hpp"

namespace posetlie {

struct HeightError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Edge subsets of the Hasse diagram of a height-1 poset in which every
/// vertex degree is divisible by q, counted by size.
Polynomial enumerate_p_plus_regular(const Poset& p, int q);

/// Even-degree edge subsets (connectivity not required), counted by size.
Polynomial count_eulerian_by_size(const Poset& p);

/// 2^(E - V + components) of the Hasse diagram.
BigInt cycle_space_size(const Poset& p);

/// 0/1 matrices of size m x n whose row and column sums lie in qZ, counted by
/// number of ones. Row-by-row dynamic program over column residues.
Polynomial enumerate_even_matrices(int m, int n, int q);

struct TorsionWitness {
    WedgeMask cycle = 0;           ///< wedge of all e_ij, i in bottoms, j in tops
    bool is_cycle = false;         ///< boundary of the wedge vanishes
    std::int64_t coefficient = 0;  ///< coefficient of the wedge in ∂(e_ii ∧ wedge), i = bottoms[0]
    bool ok(int q) const { return is_cycle && (coefficient == q || coefficient == -q); }
};

/// Checks the K_{q,q} torsion certificate inside gl^<= of p. Every bottom must
/// lie below every top.
TorsionWitness full_nondiagonal_torsion_witness(const Poset& p, std::span<const Element> bottoms,
                                                std::span<const Element> tops);

}  // namespace posetlie
