#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "posetlie/poset.hpp"

namespace posetlie {

enum class Mode { Reflexive, Strict };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

/// Matrix unit e_ij.
struct BasisMatrix {
    Element row = 0;
    Element col = 0;
    bool is_diagonal() const { return row == col; }
    auto operator<=>(const BasisMatrix&) const = default;
};

struct MatrixTerm {
    BasisMatrix unit;
    int coeff = 0;
    bool operator==(const MatrixTerm&) const = default;
};

/// [e_ij, e_kl] = delta_jk e_il - delta_il e_kj, with cancellation when both
/// terms coincide. Result has at most two terms.
std::vector<MatrixTerm> bracket(BasisMatrix a, BasisMatrix b);

/// Bracket of two basis vectors expressed in basis indices.
struct BracketEntry {
    std::int8_t count = 0;
    std::array<std::int8_t, 2> index{};
    std::array<std::int8_t, 2> coeff{};
};

/// gl^<= (Reflexive) or gl^< (Strict) over a poset.
///
/// Basis order: diagonals e_11..e_nn first (Reflexive only), then the strict
/// pairs in lexicographic order. The bracket table is filled at construction,
/// so a const algebra can be shared across threads.
class PosetLieAlgebra {
public:
    static constexpr int kMaxDim = 64;

    PosetLieAlgebra(Poset poset, Mode mode);

    const Poset& poset() const { return poset_; }
    Mode mode() const { return mode_; }
    int dim() const { return int(basis_.size()); }
    int element_count() const { return poset_.size(); }
    const std::vector<BasisMatrix>& basis() const { return basis_; }
    const BasisMatrix& operator[](int idx) const { return basis_[idx]; }

    /// Basis index of e_ij, or -1 when e_ij is not in the algebra.
    int index_of(Element i, Element j) const;
    const BracketEntry& bracket_indices(int a, int b) const { return table_[a * dim() + b]; }
    std::vector<std::pair<int, int>> bracket(int a, int b) const;

    /// Z-grading deg e_ij = i - j.
    int degree(int idx) const { return basis_[idx].row - basis_[idx].col; }

    /// Trace of ad(e) for basis element e.
    int ad_trace(int idx) const;
    bool check_unimodular() const;

private:
    Poset poset_;
    Mode mode_;
    std::vector<BasisMatrix> basis_;
    std::vector<int> index_;  // n*n lookup
    std::vector<BracketEntry> table_;
};

}  // namespace posetlie
