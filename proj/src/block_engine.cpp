#include "posetlie/block_engine.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace posetlie {

namespace {

// Diagonal basis indices occupy the low bits in Reflexive mode.
int diagonal_count(const PosetLieAlgebra& g) { return g.mode() == Mode::Reflexive ? g.element_count() : 0; }

}  // namespace

std::uint64_t WeightClass::cell_count(const PosetLieAlgebra& g) const {
    return std::uint64_t(strict_parts.size()) << diagonal_count(g);
}

std::vector<WedgeMask> WeightClass::cells(const PosetLieAlgebra& g, int max_degree) const {
    const int nd = diagonal_count(g);
    const int top = max_degree >= 0 ? max_degree + 1 : g.dim();
    std::vector<WedgeMask> out;
    out.reserve(cell_count(g));
    for (WedgeMask s : strict_parts)
        for (WedgeMask dgn = 0; dgn < (WedgeMask{1} << nd); ++dgn)
            if (wedge_degree(s | dgn) <= top) out.push_back(s | dgn);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeightClass> weight_classes(const PosetLieAlgebra& g) {
    const int n = g.element_count();
    const int nd = diagonal_count(g);
    const int m = g.dim() - nd;
    if (m > 40) throw SizeError("too many strict pairs to enumerate weight classes");

    std::vector<WeightClass> out;
    if (n <= 12) {
        // Packed key: 5-bit field per element, biased by 16; |w_i| < n <= 12.
        std::vector<std::uint64_t> delta(m);
        std::uint64_t bias = 0;
        for (int i = 0; i < n; ++i) bias |= std::uint64_t{16} << (5 * i);
        for (int k = 0; k < m; ++k) {
            const BasisMatrix b = g[nd + k];
            delta[k] = (std::uint64_t{1} << (5 * (b.col - 1))) - (std::uint64_t{1} << (5 * (b.row - 1)));
        }
        std::vector<std::pair<std::uint64_t, WedgeMask>> keyed(std::size_t{1} << m);
#pragma omp parallel for schedule(static)
        for (std::int64_t s = 0; s < (std::int64_t{1} << m); ++s) {
            std::uint64_t key = bias;
            for (std::uint64_t rest = std::uint64_t(s); rest; rest &= rest - 1) key += delta[__builtin_ctzll(rest)];
            keyed[std::size_t(s)] = {key, WedgeMask(s) << nd};
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size();) {
            std::size_t j = i;
            WeightClass wc;
            wc.weight.resize(n);
            for (int e = 0; e < n; ++e) wc.weight[e] = int((keyed[i].first >> (5 * e)) & 31) - 16;
            while (j < keyed.size() && keyed[j].first == keyed[i].first) wc.strict_parts.push_back(keyed[j++].second);
            out.push_back(std::move(wc));
            i = j;
        }
    } else {
        std::map<WeightVector, std::vector<WedgeMask>> groups;
        for (WedgeMask s = 0; s < (WedgeMask{1} << m); ++s) groups[weight_vector(g, s << nd)].push_back(s << nd);
        for (auto& [w, parts] : groups) out.push_back({w, std::move(parts)});
    }
    std::sort(out.begin(), out.end(), [](const WeightClass& a, const WeightClass& b) { return a.weight < b.weight; });
    return out;
}

HomologyTable block_homology(const PosetLieAlgebra& g, const EngineOptions& opts, EngineStats* stats) {
    std::vector<WeightClass> classes = weight_classes(g);
    const bool prune = opts.prune && g.mode() == Mode::Reflexive;

    std::vector<std::size_t> work;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (!prune || !block_is_acyclic(classes[i].weight, opts.coeff)) work.push_back(i);
    // Largest blocks first for load balance; results are stored by index.
    std::stable_sort(work.begin(), work.end(), [&](std::size_t a, std::size_t b) {
        return classes[a].strict_parts.size() > classes[b].strict_parts.size();
    });

    std::vector<HomologyTable> results(classes.size());
    std::vector<std::uint64_t> sizes(classes.size(), 0);
    const int jobs = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::size_t t = 0; t < work.size(); ++t) {
        try {
            const std::size_t i = work[t];
            GradedComplex c = complex_from_cells(g, classes[i].cells(g, opts.max_degree), opts.max_degree);
            sizes[i] = c.size();
            results[i] = homology(c, opts.coeff);
        } catch (...) {
#pragma omp critical
            error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    HomologyTable total;
    total.coefficients = opts.coeff;
    const int top = opts.max_degree >= 0 ? std::min(opts.max_degree, g.dim()) : g.dim();
    total.groups.resize(top + 1);
    for (std::size_t i = 0; i < classes.size(); ++i) total += results[i];
    total.groups.resize(top + 1);

    if (stats) {
        stats->blocks = classes.size();
        stats->blocks_computed = work.size();
        stats->cells_computed = std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0});
        stats->largest_block = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
    }
    return total;
}

HomologyTable reference_homology(const PosetLieAlgebra& g, const Coefficients& coeff, int max_degree) {
    BuildOptions opts;
    opts.max_degree = max_degree;
    HomologyTable t = homology(build_complex(g, opts), coeff);
    t.coefficients = coeff;
    return t;
}

}  // namespace posetlie
