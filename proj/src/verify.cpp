#include "posetlie/verify.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "posetlie/block_engine.hpp"
#include "posetlie/cup.hpp"
#include "posetlie/families.hpp"
#include "posetlie/homology.hpp"
#include "posetlie/morse.hpp"
#include "posetlie/subgraphs.hpp"

namespace posetlie {

void SuiteReport::check(bool ok, const std::string& what) {
    passed = passed && ok;
    lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
}

void SuiteReport::note(const std::string& what) { lines.push_back("NOTE " + what); }

std::string SuiteReport::to_text() const {
    std::string out = "[" + name + "] " + (passed ? "passed" : "FAILED") + "\n";
    for (const auto& l : lines) out += "  " + l + "\n";
    return out;
}

namespace {

constexpr std::size_t kMaxListed = 10;

std::string describe(const Poset& p) {
    std::string s = "n=" + std::to_string(p.size()) + " {";
    bool first = true;
    for (auto [a, b] : p.hasse_edges()) {
        s += (first ? "" : ",") + std::to_string(a) + "<" + std::to_string(b);
        first = false;
    }
    return s + "}";
}

std::vector<std::uint32_t> primes_upto(int n) {
    std::vector<std::uint32_t> out;
    for (int p = 2; p <= n; ++p)
        if (is_prime(std::uint64_t(p))) out.push_back(std::uint32_t(p));
    return out;
}

std::vector<Poset> connected_upto(int max_n) {
    std::vector<Poset> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& p : connected_posets(n)) out.push_back(std::move(p));
    return out;
}

// Collects failure messages and reports them as one summary line plus a few examples.
struct Tally {
    std::size_t total = 0;
    std::vector<std::string> failures;

    void add(bool ok, const std::string& what) {
        ++total;
        if (!ok) failures.push_back(what);
    }
    void report(SuiteReport& r, const std::string& label) const {
        r.check(failures.empty(), label + " (" + std::to_string(total - failures.size()) + "/" + std::to_string(total) + ")");
        for (std::size_t i = 0; i < failures.size() && i < kMaxListed; ++i) r.lines.push_back("     " + failures[i]);
    }
};

HomologyTable z_table(const PosetLieAlgebra& g, int jobs, bool prune = false) {
    EngineOptions o;
    o.jobs = jobs;
    o.prune = prune && g.mode() == Mode::Reflexive;
    return block_homology(g, o);
}

std::vector<std::int64_t> field_dims(const PosetLieAlgebra& g, const Coefficients& c, int jobs, bool prune = false) {
    EngineOptions o;
    o.coeff = c;
    o.jobs = jobs;
    o.prune = prune && g.mode() == Mode::Reflexive;
    return block_homology(g, o).dims();
}

Polynomial poly(const std::vector<std::int64_t>& dims) {
    std::vector<BigInt> c;
    for (auto d : dims) c.emplace_back(long(d));
    return Polynomial(std::move(c));
}

Polynomial one_plus_t(int e) { return Polynomial::binomial(1, 1).pow(e); }

// Universal coefficients from a Z table against a direct computation mod p.
bool ucoeff_consistent(const PosetLieAlgebra& g, const HomologyTable& t, std::uint32_t p, int jobs) {
    return field_dims_from_Z(t, p) == field_dims(g, Coefficients::mod(p), jobs);
}

// Integral tables of gl^<= for connected posets, computed once per run.
const HomologyTable& reflexive_z_table(const Poset& p, int jobs) {
    static std::mutex mutex;
    static std::map<std::string, HomologyTable> cache;
    const std::string key = poset_to_text(p);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    HomologyTable t = z_table(PosetLieAlgebra(p, Mode::Reflexive), jobs, true);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(t)).first->second;
}

std::set<std::uint32_t> torsion_primes(const HomologyTable& t) {
    std::set<std::uint32_t> out;
    for (const auto& g : t.groups)
        for (const BigInt& d : g.torsion)
            for (auto& [p, e] : factorize(d)) out.insert(std::uint32_t(p.get_ui()));
    return out;
}

bool any_degree(const HomologyTable& t, const std::function<bool(const HomologyGroup&)>& f) {
    for (const auto& g : t.groups)
        if (f(g)) return true;
    return false;
}

SuiteReport duality(const SuiteOptions& o) {
    SuiteReport r;
    const int max_n = o.max_n ? o.max_n : 5;
    Tally dual, uc;
    for (const Poset& p : connected_upto(max_n)) {
        PosetLieAlgebra g(p, Mode::Strict);
        HomologyTable t = z_table(g, o.jobs);
        dual.add(verify_poincare_duality(t, g.dim()), describe(p));
        for (std::uint32_t q : {2u, 3u}) uc.add(ucoeff_consistent(g, t, q, o.jobs), describe(p) + " mod " + std::to_string(q));
    }
    dual.report(r, "Poincare duality for gl^< of connected posets with n <= " + std::to_string(max_n));
    uc.report(r, "universal coefficients on the same tables, p = 2, 3");

    const int nil = std::max(6, max_n + 1);
    PosetLieAlgebra g(chain(nil), Mode::Strict);
    HomologyTable t = z_table(g, o.jobs);
    r.check(verify_poincare_duality(t, g.dim()), "Poincare duality for nil_" + std::to_string(nil));
    r.check(ucoeff_consistent(g, t, 2, o.jobs), "universal coefficients for nil_" + std::to_string(nil) + " mod 2");

    PosetLieAlgebra sol(chain(3), Mode::Reflexive);
    r.check(!verify_poincare_duality(z_table(sol, o.jobs), sol.dim()),
            "negative control: the duality predicate fails for gl^<= of chain(3)");
    return r;
}

SuiteReport recursion(const SuiteOptions& o) {
    SuiteReport r;
    const int max_n = o.max_n ? o.max_n : 6;
    for (const auto& c : {Coefficients::rationals(), Coefficients::mod(2), Coefficients::mod(3)}) {
        Tally t;
        for (int n = 2; n <= max_n; ++n) t.add(verify_nil_recursion(n, c).ok, "n=" + std::to_string(n));
        t.report(r, "nil_n recursion over " + c.to_string() + ", 2 <= n <= " + std::to_string(max_n));
    }
    return r;
}

SuiteReport torsion_scan(const SuiteOptions& o) {
    SuiteReport r;
    const int max_n = o.max_n ? o.max_n : 6;
    Tally interval_div, interval_exact, bounded, forest;
    for (const Poset& p : connected_upto(max_n)) {
        const HomologyTable& t = reflexive_z_table(p, o.jobs);
        std::size_t widest = 0;
        for (Element a = 1; a <= p.size(); ++a)
            for (Element b = 1; b <= p.size(); ++b)
                if (p.leq(a, b)) widest = std::max(widest, p.interval(a, b).size());
        for (long m = 2; m < long(widest); ++m) {
            const BigInt bm(m);
            interval_div.add(any_degree(t, [&](const HomologyGroup& g) { return g.has_factor_divisible_by(bm); }),
                             describe(p) + " m=" + std::to_string(m));
            interval_exact.add(any_degree(t, [&](const HomologyGroup& g) { return g.has_summand(bm); }),
                               describe(p) + " m=" + std::to_string(m));
        }
        const auto primes = torsion_primes(t);
        if (p.is_bounded()) {
            bool ok = true;
            for (std::uint32_t q : primes_upto(2 * p.size() + 2)) ok = ok && (primes.count(q) == 1) == (int(q) < p.size());
            bounded.add(ok, describe(p));
        }
        const bool no2 = primes.count(2) == 0;
        forest.add(no2 == p.is_forest_height_le1() && (!no2 || primes.empty()), describe(p));
    }
    interval_div.report(r, "interval [a,b] with more than m elements gives an invariant factor divisible by m");
    interval_exact.report(r, "... and Z_m is an exact direct summand");
    bounded.report(r, "bounded posets have p-torsion exactly for p < n");
    forest.report(r, "no 2-torsion iff forest of height <= 1, and then torsion-free");

    for (int n = 4; n <= std::min(std::max(max_n, 4), 6); ++n) {
        HomologyTable t = z_table(PosetLieAlgebra(chain(n), Mode::Strict), o.jobs);
        const BigInt m(n - 2);
        r.check(any_degree(t, [&](const HomologyGroup& g) { return g.has_factor_divisible_by(m); }) &&
                    any_degree(t, [&](const HomologyGroup& g) { return g.has_summand(m); }),
                "nil_" + std::to_string(n) + " has a Z_" + std::to_string(n - 2) + " summand");
    }
    return r;
}

SuiteReport conjecture(const SuiteOptions& o) {
    SuiteReport r;
    const int max_n = o.max_n ? o.max_n : 6;
    r.note("empirical scan only; passing is evidence, not a proof");
    Tally convex;
    std::size_t with_torsion = 0;
    for (const Poset& p : connected_upto(max_n)) {
        const auto primes = torsion_primes(reflexive_z_table(p, o.jobs));
        if (!primes.empty()) ++with_torsion;
        bool ok = true;
        if (!primes.empty())
            for (std::uint32_t q : primes_upto(int(*primes.rbegin()))) ok = ok && primes.count(q);
        convex.add(ok, describe(p));
    }
    convex.report(r, "torsion-convexity of H_*(gl^<=; Z) over connected posets with n <= " + std::to_string(max_n));
    r.note(std::to_string(with_torsion) + " of " + std::to_string(convex.total) + " posets have torsion");
    return r;
}

SuiteReport stanley_konvalinka(const SuiteOptions& o) {
    SuiteReport r;
    const int mx = o.max;
    Tally eq, engine;
    for (int m = 1; m <= mx; ++m)
        for (int n = 1; n <= mx; ++n) {
            const std::string tag = "K_" + std::to_string(m) + "," + std::to_string(n);
            const Polynomial s = hp_complete_bipartite_Z2_stanley(m, n);
            const Polynomial k = hp_complete_bipartite_Z2_konvalinka(m, n);
            const Polynomial en = one_plus_t(m + n) * enumerate_p_plus_regular(complete_bipartite(m, n), 2);
            const Polynomial mat = one_plus_t(m + n) * enumerate_even_matrices(m, n, 2);
            eq.add(s == k && k == en && en == mat, tag);
            if (m + n + m * n <= 18) {
                PosetLieAlgebra g(complete_bipartite(m, n), Mode::Reflexive);
                engine.add(poly(field_dims(g, Coefficients::mod(2), o.jobs)) == s, tag);
            }
        }
    eq.report(r, "Stanley = Konvalinka = subgraph enumeration = even-matrix count, m, n <= " + std::to_string(mx));
    engine.report(r, "Stanley formula = engine over Z_2 (dim <= 18)");
    return r;
}

// Engine field dimensions, unpruned up to this dimension.
constexpr int kUnprunedDim = 18;

SuiteReport formulas(const SuiteOptions& o) {
    SuiteReport r;
    Tally t, minus1;
    auto compare = [&](const std::string& tag, const Poset& p, std::uint32_t q, const Polynomial& f) {
        PosetLieAlgebra g(p, Mode::Reflexive);
        const bool prune = g.dim() > kUnprunedDim;
        const Coefficients c = q ? Coefficients::mod(q) : Coefficients::rationals();
        t.add(poly(field_dims(g, c, o.jobs, prune)) == f, tag + (q ? " mod " + std::to_string(q) : " over Q") + (prune ? " (pruned)" : ""));
        minus1.add(f.evaluate(-1) == 0, tag);
    };
    for (int n = 2; n <= 3; ++n) {
        compare("cycle(" + std::to_string(n) + ")", cycle_poset(n), 2, hp_cycle_Z2(n));
        compare("cycle(" + std::to_string(n) + ")", cycle_poset(n), 3, hp_cycle_Zp(n, 3));
    }
    for (int q : {2, 3})
        for (int n = 1; q + n <= 8; ++n)
            compare("K_" + std::to_string(q) + "," + std::to_string(n), complete_bipartite(q, n), q, hp_complete_bipartite_pnp(q, n));
    for (int n = 1; n <= 3; ++n) {
        compare("fork(" + std::to_string(n) + ")", fork(n), 2, hp_fork_Z2(n));
        compare("fork(" + std::to_string(n) + ")", fork(n), 3, hp_fork_Zp(n, 3));
    }
    for (int n = 1; n <= 4; ++n) {
        compare("umbrella(" + std::to_string(n) + ")", umbrella(n), 2, hp_umbrella_Z2(n));
        compare("umbrella(" + std::to_string(n) + ")", umbrella(n), 3, hp_umbrella_Zp(n, 3));
    }
    for (int n = 1; n <= 5; ++n) compare("diamond(" + std::to_string(n) + ")", diamond(n), 2, hp_diamond_Z2(n));
    for (int n = 1; n <= 4; ++n) compare("diamond(" + std::to_string(n) + ")", diamond(n), 3, hp_diamond_Z3(n));
    compare("diamond(3)", diamond(3), 5, closed_form("diamond", {3}, 5));
    for (int n = 1; n <= 4; ++n) compare("antichain(" + std::to_string(n) + ")", antichain(n), 0, hp_reflexive_char0(n));
    compare("chain(4)", chain(4), 0, hp_reflexive_char0(4));
    compare("fork(2) tree", fork(2), 0, hp_reflexive_char0(5));
    compare("star tree", Poset::from_hasse(4, {{1, 2}, {1, 3}, {1, 4}}), 2, hp_tree_height1(4));
    t.report(r, "closed forms equal engine Hilbert-Poincare series");

    Tally roots;
    for (int n = 1; n <= 12; ++n) {
        roots.add(hp_diamond_Z3(n) == hp_diamond_Z3_roots(n), "diamond Z3 roots n=" + std::to_string(n));
        roots.add(hp_diamond_Z3(n) == hp_diamond_rank_route(n, 3), "diamond Z3 rank route n=" + std::to_string(n));
        minus1.add(hp_diamond_Z3(n).evaluate(-1) == 0 && hp_diamond_Z2(n).evaluate(-1) == 0, "diamond n=" + std::to_string(n));
    }
    roots.report(r, "diamond Z_3 series: rank formula = root-of-unity form = computed ranks, n <= 12");

    Tally dft;
    for (int n = 0; n <= 12; ++n)
        for (int p : {2, 3, 5, 7}) {
            const Polynomial f = one_plus_t(n) * Polynomial{1, 2, 0, -1};
            dft.add(filter_every_pth(f, p, 2, 1) == filter_every_pth_roots(f, p, 2, 1), "n=" + std::to_string(n) + " p=" + std::to_string(p));
        }
    dft.report(r, "coefficient filter by selection = root-of-unity average");

    Tally ident;
    for (int n = 1; n <= 40; ++n) ident.add(diamond_rank_series_identity(n), "n=" + std::to_string(n));
    ident.report(r, "rank generating function identity, n <= 40");
    minus1.report(r, "HP(-1) = 0 for every series");
    return r;
}

SuiteReport incidence(const SuiteOptions& o) {
    SuiteReport r;
    const int max_n = o.max_n ? o.max_n : 8;
    Tally t;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            t.add(BigInt(long(subset_incidence_rank(n, k, 3))) == subset_incidence_rank_formula(n, k),
                  "n=" + std::to_string(n) + " k=" + std::to_string(k));
    t.report(r, "Z_3 rank of the subset incidence matrix equals the binomial sum, n <= " + std::to_string(max_n));
    return r;
}

SuiteReport morse(const SuiteOptions& o) {
    SuiteReport r;
    for (int n = 3; n <= 7; ++n) {
        MorseFixture f = nil_matching(n);
        const bool valid = bool(verify_matching(f.complex, f.matching));
        ReducedComplex red = reduce(f.complex, f.matching);
        const std::int64_t c = red.coefficient(f.source, f.target);
        r.check(valid && (c == f.expected || c == -f.expected) &&
                    homology_over_Z(red.as_complex()) == homology_over_Z(f.complex),
                "nil_" + std::to_string(n) + " matching: reduced boundary of alpha is " + std::to_string(c) + " beta");
    }

    struct Case {
        std::string name;
        Poset p;
        Element a, b;
        std::vector<Element> mid;
    };
    const std::vector<Case> cases{{"chain(3) [1,3]", chain(3), 1, 3, {2}},
                                  {"chain(4) [1,4]", chain(4), 1, 4, {2}},
                                  {"chain(4) [1,4]", chain(4), 1, 4, {2, 3}},
                                  {"diamond(2) [1,4]", diamond(2), 1, 4, {2, 3}},
                                  {"diamond(3) [1,5]", diamond(3), 1, 5, {2, 3}},
                                  {"diamond(3) [1,5]", diamond(3), 1, 5, {2, 3, 4}}};
    for (const auto& cs : cases) {
        MorseFixture f = interval_matching(cs.p, cs.a, cs.b, cs.mid);
        ReducedComplex red = reduce(f.complex, f.matching);
        const int k = wedge_degree(f.target);
        const auto& crit = red.critical[k];
        const bool target_critical = std::binary_search(crit.begin(), crit.end(), f.target);
        const std::int64_t c = red.coefficient(f.source, f.target);
        bool divisible = true;
        if (k + 1 < int(red.critical.size()))
            for (WedgeMask u : red.critical[k + 1]) divisible = divisible && red.coefficient(u, f.target) % f.expected == 0;
        r.check(target_critical && (c == f.expected || c == -f.expected) && divisible,
                "interval matching on " + cs.name + " with " + std::to_string(cs.mid.size()) + " middle(s): coefficient " +
                    std::to_string(c) + ", all incoming coefficients divisible by " + std::to_string(f.expected));
    }

    Tally dm;
    for (int n = 1; n <= 5; ++n)
        for (int p : {2, 3}) {
            MorseFixture f = diamond_matching(n, p);
            const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p);
            if (!verify_matching(f.complex, f.matching)) {
                dm.add(false, tag + " invalid");
                continue;
            }
            ReducedComplex red = reduce(f.complex, f.matching);
            bool even = true;
            if (p == 2)
                for (const auto& d : red.d)
                    for (const auto& col : d.columns)
                        for (auto [row, v] : col) even = even && v % 2 == 0;
            dm.add(even && homology_over_Z(red.as_complex()) == homology_over_Z(f.complex), tag);
        }
    dm.report(r, "diamond p-complex matchings are valid, preserve homology, and give even boundaries for p = 2");

    // Randomized greedy matchings on small blocks.
    std::vector<GradedComplex> pool;
    for (const Poset& p : {diamond(2), chain(4), complete_bipartite(2, 2), fork(2), umbrella(2)})
        for (Mode m : {Mode::Reflexive, Mode::Strict}) {
            PosetLieAlgebra g(p, m);
            if (g.dim() > 14) continue;
            for (auto& [w, c] : block_decompose(build_complex(g), g)) {
                std::size_t widest = 0;
                for (const auto& cells : c.cells) widest = std::max(widest, cells.size());
                if (widest <= 12 && c.size() >= 3) pool.push_back(std::move(c));
            }
        }
    Tally greedy;
    std::mt19937_64 rng(o.seed);
    for (int t = 0; t < o.trials && !pool.empty(); ++t) {
        const GradedComplex& c = pool[rng() % pool.size()];
        MorseMatching m = greedy_matching(c, rng());
        const bool ok = verify_matching(c, m) && homology_over_Z(reduce(c, m).as_complex()) == homology_over_Z(c);
        greedy.add(ok, "trial " + std::to_string(t));
    }
    r.note("greedy pool: " + std::to_string(pool.size()) + " blocks with at most 12 wedges per degree");
    greedy.report(r, "randomized greedy matchings preserve integral homology");
    return r;
}

SuiteReport propagation(const SuiteOptions& o) {
    SuiteReport r;
    const int max_n = o.max_n ? o.max_n : 6;
    Tally t;
    std::map<std::uint32_t, std::size_t> nonempty;
    for (const Poset& p : connected_upto(max_n)) {
        PosetLieAlgebra g(p, Mode::Strict);
        std::map<std::uint32_t, bool> has;
        for (std::uint32_t q : primes_upto(std::max(2, p.size()))) {
            has[q] = p_complex_cells(g, int(q)).size() > 1;
            if (has[q]) ++nonempty[q];
        }
        bool ok = true;
        for (auto [q, h] : has)
            for (auto [q2, h2] : has)
                if (q2 < q && h && !h2) ok = false;
        t.add(ok, describe(p));
    }
    t.report(r, "nonempty p-complex implies nonempty p'-complex for p' < p, connected n <= " + std::to_string(max_n));
    std::string counts;
    for (auto [q, k] : nonempty) counts += " p=" + std::to_string(q) + ":" + std::to_string(k);
    r.note("posets with a nonempty p-complex:" + counts);
    return r;
}

SuiteReport opposite(const SuiteOptions& o) {
    SuiteReport r;
    const int max_n = o.max_n ? o.max_n : 5;
    Tally t;
    for (const Poset& p : connected_upto(max_n))
        for (Mode m : {Mode::Reflexive, Mode::Strict})
            t.add(z_table(PosetLieAlgebra(p, m), o.jobs) == z_table(PosetLieAlgebra(p.opposite(), m), o.jobs),
                  describe(p) + " " + to_string(m));
    t.report(r, "H_*(P; Z) = H_*(P^op; Z) for connected posets with n <= " + std::to_string(max_n) + ", both modes");
    return r;
}

SuiteReport disjoint_union(const SuiteOptions& o) {
    SuiteReport r;
    const int total = o.max_n ? o.max_n : 6;
    const auto posets = connected_upto(total - 1);
    Tally t;
    for (std::size_t i = 0; i < posets.size(); ++i)
        for (std::size_t j = i; j < posets.size(); ++j) {
            const Poset &p = posets[i], &q = posets[j];
            if (p.size() + q.size() > total) continue;
            const Poset u = p.disjoint_union(q);
            for (Mode m : {Mode::Reflexive, Mode::Strict})
                for (const auto& c : {Coefficients::rationals(), Coefficients::mod(2), Coefficients::mod(3)}) {
                    auto hp = [&](const Poset& x) { return poly(field_dims(PosetLieAlgebra(x, m), c, o.jobs)); };
                    t.add(hp(u) == hp(p) * hp(q), describe(p) + " + " + describe(q) + " " + to_string(m) + " " + c.to_string());
                }
        }
    t.report(r, "HP(P + Q) = HP(P) HP(Q) over Q, Z_2, Z_3, total n <= " + std::to_string(total));
    return r;
}

SuiteReport factorization(const SuiteOptions& o) {
    SuiteReport r;
    const int max_n = o.max_n ? o.max_n : 6;
    Tally t, q0;
    for (const Poset& p : connected_upto(max_n)) {
        PosetLieAlgebra refl(p, Mode::Reflexive), strict(p, Mode::Strict);
        for (std::uint32_t q : {2u, 3u, 5u}) {
            const Coefficients c = Coefficients::mod(q);
            const Polynomial lhs = poly(field_dims(refl, c, o.jobs));
            const Polynomial rhs = one_plus_t(p.size()) * poly(homology_over_field(p_complex(strict, int(q)), c));
            t.add(lhs == rhs, describe(p) + " p=" + std::to_string(q));
        }
        if (p.size() <= 5) q0.add(poly(field_dims(refl, Coefficients::rationals(), o.jobs)) == one_plus_t(p.size()), describe(p));
    }
    t.report(r, "HP(gl^<=; Z_p) = (1+t)^n HP(C_{*,p}) for p <= 5, connected n <= " + std::to_string(max_n));
    q0.report(r, "HP(gl^<=; Q) = (1+t)^n, connected n <= 5");
    return r;
}

SuiteReport pruning(const SuiteOptions& o) {
    SuiteReport r;
    std::vector<Poset> posets = connected_upto(o.max_n ? o.max_n : 4);
    for (const Poset& p : {complete_bipartite(2, 2), complete_bipartite(3, 2), diamond(2), diamond(3), fork(2), cycle_poset(2)})
        posets.push_back(p);
    Tally pr, ref;
    for (const Poset& p : posets) {
        PosetLieAlgebra g(p, Mode::Reflexive);
        for (const auto& c : {Coefficients::integers(), Coefficients::rationals(), Coefficients::mod(2), Coefficients::mod(3)}) {
            EngineOptions a, b;
            a.coeff = b.coeff = c;
            a.jobs = b.jobs = o.jobs;
            b.prune = true;
            const HomologyTable full = block_homology(g, a);
            pr.add(full == block_homology(g, b), describe(p) + " " + c.to_string());
            if (g.dim() <= 12) ref.add(full == reference_homology(g, c), describe(p) + " " + c.to_string());
        }
    }
    pr.report(r, "pruned block engine = unpruned block engine");
    ref.report(r, "block engine = full-complex reference (dim <= 12)");
    return r;
}

SuiteReport boundary_suite(const SuiteOptions& o) {
    SuiteReport r;
    Tally full, pc, euler;
    for (const Poset& p : connected_upto(o.max_n ? o.max_n : 4))
        for (Mode m : {Mode::Reflexive, Mode::Strict}) {
            PosetLieAlgebra g(p, m);
            GradedComplex c = build_complex(g);
            full.add(c.boundary_squares_to_zero(), describe(p) + " " + to_string(m));
            std::int64_t chi = 0;
            for (std::size_t k = 0; k < c.cells.size(); ++k) chi += (k % 2 ? -1 : 1) * std::int64_t(c.cells[k].size());
            euler.add(chi == homology_over_Z(c).euler_characteristic(), describe(p) + " " + to_string(m));
        }
    for (const Poset& p : connected_upto(5))
        for (int q : {2, 3}) pc.add(p_complex(PosetLieAlgebra(p, Mode::Strict), q).boundary_squares_to_zero(), describe(p));
    full.report(r, "boundary squares to zero on full complexes");
    pc.report(r, "boundary squares to zero on p-complexes, p = 2, 3, n <= 5");
    euler.report(r, "Euler characteristic of chains equals that of homology");
    return r;
}

SuiteReport ucoeff(const SuiteOptions& o) {
    SuiteReport r;
    Tally t;
    for (const Poset& p : connected_upto(o.max_n ? o.max_n : 4))
        for (Mode m : {Mode::Reflexive, Mode::Strict}) {
            PosetLieAlgebra g(p, m);
            const HomologyTable z = z_table(g, o.jobs);
            for (std::uint32_t q : {2u, 3u, 5u}) t.add(ucoeff_consistent(g, z, q, o.jobs), describe(p) + " mod " + std::to_string(q));
        }
    for (const Poset& p : {complete_bipartite(2, 2), complete_bipartite(3, 2), diamond(2), diamond(3)}) {
        PosetLieAlgebra g(p, Mode::Reflexive);
        const HomologyTable z = z_table(g, o.jobs);
        for (std::uint32_t q : {2u, 3u, 5u}) t.add(ucoeff_consistent(g, z, q, o.jobs), describe(p) + " mod " + std::to_string(q));
    }
    t.report(r, "field dimensions from Z tables by universal coefficients = direct computation");
    return r;
}

void add_cup(SuiteReport& r, const std::string& label, Presentation pr) {
    try {
        CupModel model(std::move(pr.basis));
        const ProductTable table = wedge_basis_cup(model);
        CupReport a = check_table(model, table), b = verify_presentation(model, pr.relations);
        r.check(a.ok && b.ok, label + " (" + std::to_string(model.basis().basis.size()) + " classes, " +
                                  std::to_string(pr.relations.size()) + " relations)");
        for (const auto& l : a.lines)
            if (l.rfind("FAIL", 0) == 0) r.lines.push_back("     " + l);
        for (const auto& l : b.lines)
            if (l.rfind("FAIL", 0) == 0) r.lines.push_back("     " + l);
    } catch (const std::exception& e) {
        r.check(false, label + ": " + e.what());
    }
}

SuiteReport cup(const SuiteOptions&) {
    SuiteReport r;
    for (int n = 1; n <= 3; ++n) add_cup(r, "umbrella(" + std::to_string(n) + ") over Z_2", umbrella_presentation(n, 2));
    add_cup(r, "umbrella(3) over Z_3 is exterior on the diagonals", umbrella_presentation(3, 3));
    for (int n = 1; n <= 3; ++n) add_cup(r, "diamond(" + std::to_string(n) + ") over Z_2", diamond_presentation(n, 2));
    add_cup(r, "diamond(4) over Z_2", diamond_presentation(4, 2));
    add_cup(r, "K_2,2 disjoint-support rule over Z_2", height1_presentation(complete_bipartite(2, 2), 2));
    add_cup(r, "K_3,2 disjoint-support rule over Z_2", height1_presentation(complete_bipartite(3, 2), 2));

    // Products of disjoint ȳ generators are nonzero, and a false relation is caught.
    Presentation d5 = diamond_presentation(5, 2);
    CupModel model(d5.basis);
    auto gen = [&](const std::string& name) -> const Chain& {
        for (const auto& g : model.basis().generators)
            if (g.name == name) return g.rep;
        throw std::logic_error("missing generator " + name);
    };
    r.check(!model.expand(model.wedge(gen("y_{1,2}"), gen("y_{3,4}"))).empty(), "diamond(5): y_{1,2} y_{3,4} is nonzero");
    CupReport wrong = verify_presentation(model, {{{"y_{1,2}", "y_{3,4}"}, {}}});
    r.check(!wrong.ok, "negative control: the false relation y_{1,2} y_{3,4} = 0 is rejected");
    return r;
}

const std::map<std::string, std::function<SuiteReport(const SuiteOptions&)>>& registry() {
    static const std::map<std::string, std::function<SuiteReport(const SuiteOptions&)>> r{
        {"duality", duality},
        {"recursion", recursion},
        {"torsion-scan", torsion_scan},
        {"conjecture", conjecture},
        {"stanley-konvalinka", stanley_konvalinka},
        {"formulas", formulas},
        {"incidence", incidence},
        {"morse", morse},
        {"propagation", propagation},
        {"opposite", opposite},
        {"union", disjoint_union},
        {"factorization", factorization},
        {"pruning", pruning},
        {"boundary", boundary_suite},
        {"ucoeff", ucoeff},
        {"cup", cup},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"duality",  "recursion",   "torsion-scan", "conjecture", "stanley-konvalinka",
                                                "formulas", "incidence",   "morse",        "propagation", "opposite",
                                                "union",    "factorization", "pruning",    "boundary",   "ucoeff",
                                                "cup"};
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
    SuiteReport r = it->second(opts);
    r.name = name;
    return r;
}

}  // namespace posetlie
