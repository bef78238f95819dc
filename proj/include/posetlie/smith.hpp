#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace posetlie {

using BigInt = mpz_class;

/// Column-major sparse integer matrix. Each column is sorted by row index and
/// holds no explicit zeros.
struct SparseMatrix {
    using Entry = std::pair<int, std::int64_t>;

    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Entry>> columns;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

    std::size_t nnz() const;
    std::int64_t at(int r, int c) const;
    SparseMatrix transposed() const;
    /// this * other, exact in int64 (entries are small in every use here).
    SparseMatrix multiply(const SparseMatrix& other) const;
    bool is_zero() const { return nnz() == 0; }
    std::vector<std::vector<std::int64_t>> dense() const;
    static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);
};

/// Nonzero invariant factors d_1 | d_2 | ... | d_r of an integer matrix.
/// Unit factors are only counted; `nontrivial` holds the factors > 1.
struct SmithForm {
    std::int64_t rank = 0;
    std::int64_t unit_factors = 0;
    std::vector<BigInt> nontrivial;

    std::vector<BigInt> factors() const;
};

/// Smith normal form by unit-pivot sparse elimination followed by a dense
/// minimal-pivot reduction and a gcd/lcm divisibility pass. Arithmetic runs in
/// checked 64-bit integers and restarts in GMP integers on overflow.
SmithForm smith_normal_form(const SparseMatrix& m);

/// Same result, always in GMP integers and fully dense; slow, kept as a reference.
SmithForm smith_normal_form_dense(const SparseMatrix& m);

/// Rank over Z/p (p prime, p < 2^31).
std::int64_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);

/// Rank over Q.
std::int64_t rank_over_Q(const SparseMatrix& m);

}  // namespace posetlie
