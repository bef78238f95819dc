#pragma once

#include <cstdint>
#include <vector>

#include "posetlie/chevalley.hpp"
#include "posetlie/homology.hpp"

namespace posetlie {

/// All wedges of one weight vector. In Reflexive mode only the strict parts
/// are stored; every subset of diagonals may be added to each of them.
struct WeightClass {
    WeightVector weight;
    std::vector<WedgeMask> strict_parts;

    /// Number of wedges in the block.
    std::uint64_t cell_count(const PosetLieAlgebra& g) const;
    std::vector<WedgeMask> cells(const PosetLieAlgebra& g, int max_degree = -1) const;
};

/// Partition of the whole exterior algebra by weight, sorted by weight vector.
/// Enumerates 2^(number of strict pairs) masks.
std::vector<WeightClass> weight_classes(const PosetLieAlgebra& g);

struct EngineOptions {
    Coefficients coeff;
    int jobs = 0;  ///< 0: OpenMP default
    /// Skip reflexive blocks that are acyclic for the coefficients (see block_is_acyclic).
    bool prune = false;
    int max_degree = -1;
};

struct EngineStats {
    std::size_t blocks = 0;
    std::size_t blocks_computed = 0;
    std::uint64_t cells_computed = 0;
    std::uint64_t largest_block = 0;
};

/// Homology as the direct sum of block homologies, blocks processed in
/// parallel; the merge is in weight order, so output does not depend on `jobs`.
HomologyTable block_homology(const PosetLieAlgebra& g, const EngineOptions& opts = {}, EngineStats* stats = nullptr);

/// Serial reference: builds the whole complex and reduces it in one piece.
HomologyTable reference_homology(const PosetLieAlgebra& g, const Coefficients& coeff, int max_degree = -1);

}  // namespace posetlie
