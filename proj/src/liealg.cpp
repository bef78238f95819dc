#include "posetlie/liealg.hpp"

#include <stdexcept>

namespace posetlie {

std::string to_string(Mode m) { return m == Mode::Reflexive ? "reflexive" : "strict"; }

Mode parse_mode(const std::string& s) {
    if (s == "reflexive") return Mode::Reflexive;
    if (s == "strict") return Mode::Strict;
    throw std::invalid_argument("mode must be 'reflexive' or 'strict'");
}

std::vector<MatrixTerm> bracket(BasisMatrix a, BasisMatrix b) {
    std::vector<MatrixTerm> out;
    if (a.col == b.row) out.push_back({{a.row, b.col}, 1});
    if (a.row == b.col) {
        BasisMatrix t{b.row, a.col};
        if (!out.empty() && out.front().unit == t)
            out.clear();
        else
            out.push_back({t, -1});
    }
    return out;
}

PosetLieAlgebra::PosetLieAlgebra(Poset poset, Mode mode) : poset_(std::move(poset)), mode_(mode) {
    const int n = poset_.size();
    if (mode_ == Mode::Reflexive)
        for (int i = 1; i <= n; ++i) basis_.push_back({i, i});
    for (auto [i, j] : poset_.strict_pairs()) basis_.push_back({i, j});
    if (dim() > kMaxDim)
        throw std::length_error("algebra dimension " + std::to_string(dim()) + " exceeds 64");

    index_.assign(std::size_t(n) * n, -1);
    for (int k = 0; k < dim(); ++k)
        index_[(basis_[k].row - 1) * n + (basis_[k].col - 1)] = k;

    table_.resize(std::size_t(dim()) * dim());
    for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b) {
            BracketEntry& e = table_[a * dim() + b];
            for (const MatrixTerm& t : posetlie::bracket(basis_[a], basis_[b])) {
                int idx = index_of(t.unit.row, t.unit.col);
                // Transitivity keeps the algebra closed under the bracket.
                if (idx < 0) throw std::logic_error("bracket left the algebra");
                e.index[e.count] = std::int8_t(idx);
                e.coeff[e.count] = std::int8_t(t.coeff);
                ++e.count;
            }
        }
}

int PosetLieAlgebra::index_of(Element i, Element j) const {
    const int n = poset_.size();
    if (i < 1 || j < 1 || i > n || j > n) return -1;
    return index_[(i - 1) * n + (j - 1)];
}

std::vector<std::pair<int, int>> PosetLieAlgebra::bracket(int a, int b) const {
    const BracketEntry& e = bracket_indices(a, b);
    std::vector<std::pair<int, int>> out;
    for (int t = 0; t < e.count; ++t) out.emplace_back(e.index[t], e.coeff[t]);
    return out;
}

int PosetLieAlgebra::ad_trace(int idx) const {
    int tr = 0;
    for (int b = 0; b < dim(); ++b) {
        const BracketEntry& e = bracket_indices(idx, b);
        for (int t = 0; t < e.count; ++t)
            if (e.index[t] == b) tr += e.coeff[t];
    }
    return tr;
}

bool PosetLieAlgebra::check_unimodular() const {
    for (int a = 0; a < dim(); ++a)
        if (ad_trace(a) != 0) return false;
    return true;
}

}  // namespace posetlie
