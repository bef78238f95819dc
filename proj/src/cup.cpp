#include "posetlie/cup.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "posetlie/block_engine.hpp"
#include "posetlie/homology.hpp"
#include "posetlie/morse.hpp"
#include "posetlie/subgraphs.hpp"

namespace posetlie {

namespace {

std::uint32_t mod(std::int64_t x, std::uint32_t p) {
    const std::int64_t r = x % std::int64_t(p);
    return std::uint32_t(r < 0 ? r + p : r);
}

std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return std::uint32_t(std::uint64_t(a) * b % p); }

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
    std::uint32_t r = 1, e = p - 2;
    for (; e; e >>= 1, a = mul(a, a, p))
        if (e & 1) r = mul(r, a, p);
    return r;
}

// a -= f * b over Z_p.
void axpy(std::vector<std::uint32_t>& a, std::uint32_t f, const std::vector<std::uint32_t>& b, std::uint32_t p) {
    const std::uint32_t neg = (p - f) % p;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i]) a[i] = std::uint32_t((a[i] + std::uint64_t(neg) * b[i]) % p);
}

// Row-echelon span over Z_p of dense vectors.
class ModSpan {
public:
    explicit ModSpan(std::uint32_t p) : p_(p) {}
    /// Reduces v; adds it when independent. Returns whether it was independent.
    bool add(std::vector<std::uint32_t> v) {
        for (const auto& [pivot, row] : rows_)
            if (v[pivot]) axpy(v, v[pivot], row, p_);
        auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
        if (it == v.end()) return false;
        const int pivot = int(it - v.begin());
        const std::uint32_t inv = inverse(v[pivot], p_);
        for (auto& x : v) x = mul(x, inv, p_);
        rows_.emplace_back(pivot, std::move(v));
        return true;
    }
    std::size_t rank() const { return rows_.size(); }

private:
    std::uint32_t p_;
    std::vector<std::pair<int, std::vector<std::uint32_t>>> rows_;
};

std::vector<std::uint32_t> dense(const Coordinates& c, std::size_t n) {
    std::vector<std::uint32_t> v(n, 0);
    for (auto [i, x] : c) v[i] = x;
    return v;
}

int chain_degree(const Chain& c) {
    int d = -1;
    for (auto [m, x] : c) {
        if (d >= 0 && wedge_degree(m) != d) return -2;
        d = wedge_degree(m);
    }
    return d;
}

Chain single(WedgeMask m) { return {{m, 1}}; }

WedgeMask diagonal_mask(const PosetLieAlgebra& g, std::uint32_t tau) {
    WedgeMask m = 0;
    for (int i = 1; i <= g.poset().size(); ++i)
        if (tau >> (i - 1) & 1) m |= WedgeMask{1} << g.index_of(i, i);
    return m;
}

std::string diagonal_name(std::uint32_t tau, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (tau >> i & 1) s += (s.empty() ? "" : "*") + labels[i];
    return s;
}

// e_tau ∧ chain, signs from wedge concatenation.
Chain prefix(WedgeMask diag, const Chain& c) {
    Chain out;
    for (auto [m, x] : c) {
        auto [sign, w] = wedge_product(diag, m);
        if (sign) add_to_chain(out, w, sign * x);
    }
    return out;
}

std::string join(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

// Basis e_tau * rep for every subset tau of diagonals and every listed rep.
void add_tau_products(CohomologyBasis& b, const std::vector<std::string>& labels,
                      const std::vector<std::pair<std::string, Chain>>& reps) {
    const int n = b.algebra.poset().size();
    for (std::uint32_t tau = 0; tau < (1u << n); ++tau) {
        const WedgeMask diag = diagonal_mask(b.algebra, tau);
        for (const auto& [name, rep] : reps) {
            Chain c = prefix(diag, rep);
            std::string full = join(diagonal_name(tau, labels), name);
            b.basis.push_back({full.empty() ? "1" : full, c, chain_degree(c)});
        }
    }
}

void add_diagonal_generators(CohomologyBasis& b, const std::vector<std::string>& labels) {
    for (int i = 1; i <= b.algebra.poset().size(); ++i)
        b.generators.push_back({labels[i - 1], single(WedgeMask{1} << b.algebra.index_of(i, i)), 1});
}

}  // namespace

struct CupModel::Solver {
    std::uint32_t p = 2;
    std::vector<WedgeMask> cells;
    std::vector<int> basis_ids;
    struct Row {
        int pivot;
        std::vector<std::uint32_t> v, tag;
    };
    std::vector<Row> rows;

    // Reduces v (and its tag) by the rows; returns the leading position or -1.
    int reduce(std::vector<std::uint32_t>& v, std::vector<std::uint32_t>& tag) const {
        for (const Row& r : rows)
            if (std::uint32_t f = v[r.pivot]) {
                axpy(v, f, r.v, p);
                axpy(tag, f, r.tag, p);
            }
        auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
        return it == v.end() ? -1 : int(it - v.begin());
    }

    void insert(std::vector<std::uint32_t> v, std::vector<std::uint32_t> tag, bool must_be_new) {
        const int pivot = reduce(v, tag);
        if (pivot < 0) {
            if (must_be_new) throw BasisError("basis representatives are dependent modulo boundaries");
            return;
        }
        const std::uint32_t inv = inverse(v[pivot], p);
        for (auto& x : v) x = mul(x, inv, p);
        for (auto& x : tag) x = mul(x, inv, p);
        rows.push_back({pivot, std::move(v), std::move(tag)});
    }

    std::vector<std::uint32_t> vectorize(const Chain& c) const {
        std::vector<std::uint32_t> v(cells.size(), 0);
        for (auto [m, x] : c) {
            auto it = std::lower_bound(cells.begin(), cells.end(), m);
            if (it == cells.end() || *it != m) throw BasisError("chain leaves its weight block");
            v[it - cells.begin()] = mod(x, p);
        }
        return v;
    }
};

CupModel::CupModel(CohomologyBasis basis) : basis_(std::move(basis)) {
    const auto& g = basis_.algebra;
    if (!is_prime(basis_.p)) throw std::invalid_argument("cup products need a prime field");
    EngineOptions opts;
    opts.coeff = Coefficients::mod(basis_.p);
    dims_ = block_homology(g, opts).dims();

    std::vector<std::int64_t> counts(dims_.size(), 0);
    for (auto& b : basis_.basis) {
        b.rep = reduce_mod_p(std::move(b.rep));
        if (b.rep.empty()) throw BasisError("basis element " + b.name + " vanishes mod p");
        if (chain_degree(b.rep) != b.degree) throw BasisError("basis element " + b.name + " is not of degree " + std::to_string(b.degree));
        const WeightVector w = weight_vector(g, b.rep.front().first);
        for (auto [m, x] : b.rep)
            if (weight_vector(g, m) != w) throw BasisError("basis element " + b.name + " mixes weights");
        if (!reduce_mod_p(boundary(g, b.rep)).empty()) throw BasisError("basis element " + b.name + " is not a cycle");
        weights_.push_back(w);
        if (b.degree >= int(counts.size())) throw BasisError("basis element " + b.name + " above the top degree");
        ++counts[b.degree];
    }
    if (counts != dims_) throw BasisError("basis size does not match dim H_k in every degree");
    for (std::size_t i = 0; i < basis_.basis.size(); ++i) solver(basis_.basis[i].degree, weights_[i]);
    for (auto& gen : basis_.generators) gen.rep = reduce_mod_p(std::move(gen.rep));
}

CupModel::~CupModel() = default;

Chain CupModel::reduce_mod_p(Chain c) const {
    Chain out;
    for (auto [m, x] : c)
        if (std::uint32_t r = mod(x, basis_.p)) out.emplace_back(m, r);
    return out;
}

const CupModel::Solver& CupModel::solver(int degree, const WeightVector& w) const {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(degree, w);
    if (auto it = solvers_.find(key); it != solvers_.end()) return *it->second;

    const auto& g = basis_.algebra;
    auto s = std::make_unique<Solver>();
    s->p = basis_.p;
    std::vector<WedgeMask> upper;
    for (WedgeMask m : cells_with_weight(g, w)) {
        if (wedge_degree(m) == degree) s->cells.push_back(m);
        if (wedge_degree(m) == degree + 1) upper.push_back(m);
    }
    std::sort(s->cells.begin(), s->cells.end());
    for (std::size_t i = 0; i < basis_.basis.size(); ++i)
        if (basis_.basis[i].degree == degree && weights_[i] == w) s->basis_ids.push_back(int(i));
    const std::size_t nb = s->basis_ids.size();
    for (WedgeMask u : upper) s->insert(s->vectorize(boundary(g, u)), std::vector<std::uint32_t>(nb, 0), false);
    for (std::size_t j = 0; j < nb; ++j) {
        std::vector<std::uint32_t> tag(nb, 0);
        tag[j] = 1;
        s->insert(s->vectorize(basis_.basis[s->basis_ids[j]].rep), std::move(tag), true);
    }
    return *solvers_.emplace(key, std::move(s)).first->second;
}

Coordinates CupModel::expand(const Chain& chain) const {
    const auto& g = basis_.algebra;
    Chain c = reduce_mod_p(chain);
    if (c.empty()) return {};
    if (!reduce_mod_p(boundary(g, c)).empty()) throw BasisError("product is not a cycle");
    const int degree = chain_degree(c);
    if (degree < 0) throw BasisError("chain mixes degrees");

    std::map<WeightVector, Chain> parts;
    for (auto [m, x] : c) parts[weight_vector(g, m)].emplace_back(m, x);
    std::map<int, std::uint32_t> acc;
    for (const auto& [w, part] : parts) {
        const Solver& s = solver(degree, w);
        std::vector<std::uint32_t> v = s.vectorize(part), tag(s.basis_ids.size(), 0);
        if (s.reduce(v, tag) >= 0) throw BasisError("product lies outside the span of the basis and boundaries");
        // v was reduced to zero: part = sum of f_r row_r, and tag holds -sum f_r tag_r.
        for (std::size_t j = 0; j < tag.size(); ++j)
            if (tag[j]) acc[s.basis_ids[j]] = (acc[s.basis_ids[j]] + (basis_.p - tag[j])) % basis_.p;
    }
    Coordinates out;
    for (auto [i, x] : acc)
        if (x) out.emplace_back(i, x);
    return out;
}

Chain CupModel::wedge(const Chain& x, const Chain& y) const {
    std::map<WedgeMask, std::int64_t> acc;
    for (auto [a, ca] : x)
        for (auto [b, cb] : y) {
            auto [sign, m] = wedge_product(a, b);
            if (sign) acc[m] = (acc[m] + sign * std::int64_t(mul(mod(ca, basis_.p), mod(cb, basis_.p), basis_.p))) % basis_.p;
        }
    Chain out;
    for (auto [m, c] : acc)
        if (std::uint32_t r = mod(c, basis_.p)) out.emplace_back(m, r);
    return out;
}

Chain CupModel::chain_of(const Coordinates& c) const {
    Chain out;
    for (auto [i, x] : c)
        for (auto [m, y] : basis_.basis[i].rep) add_to_chain(out, m, std::int64_t(mul(x, mod(y, basis_.p), basis_.p)));
    return reduce_mod_p(std::move(out));
}

Coordinates CupModel::multiply(const Coordinates& x, const Coordinates& y) const {
    return expand(wedge(chain_of(x), chain_of(y)));
}

nlohmann::json ProductTable::to_json(const CupModel& model) const {
    const auto& b = model.basis();
    auto chain_json = [&](const Chain& c) {
        nlohmann::json out = nlohmann::json::array();
        for (auto [m, x] : c) out.push_back({{"wedge", wedge_to_string(b.algebra, m)}, {"coeff", x}});
        return out;
    };
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t i = 0; i < names.size(); ++i)
        gens.push_back({{"name", names[i]}, {"degree", degrees[i]}, {"representative", chain_json(b.generators[i].rep)}});
    nlohmann::json prods = nlohmann::json::array();
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = 0; j < names.size(); ++j) {
            nlohmann::json terms = nlohmann::json::array();
            for (auto [k, x] : products[i][j]) terms.push_back({{"basis", b.basis[k].name}, {"coeff", x}});
            prods.push_back({{"left", names[i]}, {"right", names[j]}, {"product", terms}});
        }
    return {{"schema", 1}, {"characteristic", b.p}, {"poset", poset_to_json(b.algebra.poset())},
            {"basis_size", b.basis.size()}, {"generators", gens}, {"products", prods}};
}

ProductTable wedge_basis_cup(const CupModel& model) {
    const auto& gens = model.basis().generators;
    const int n = int(gens.size());
    ProductTable t;
    for (const auto& g : gens) {
        t.names.push_back(g.name);
        t.degrees.push_back(g.degree);
    }
    t.products.assign(n, std::vector<Coordinates>(n));
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        try {
            for (int j = 0; j < n; ++j) t.products[i][j] = model.expand(model.wedge(gens[i].rep, gens[j].rep));
        } catch (...) {
#pragma omp critical
            error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return t;
}

void CupReport::add(bool pass, const std::string& what) {
    ok = ok && pass;
    lines.push_back(std::string(pass ? "PASS " : "FAIL ") + what);
}

CupReport check_table(const CupModel& model, const ProductTable& t) {
    CupReport report;
    const std::uint32_t p = model.p();
    const auto& b = model.basis();
    const int n = int(t.names.size());
    auto negate = [p](Coordinates c) {
        for (auto& [i, x] : c) x = (p - x) % p;
        return c;
    };

    int bad = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const bool odd = (t.degrees[i] * t.degrees[j]) % 2;
            if (t.products[i][j] != (odd ? negate(t.products[j][i]) : t.products[j][i])) ++bad;
        }
    report.add(bad == 0, "graded commutativity on " + std::to_string(n * n) + " ordered pairs");

    std::vector<Coordinates> gen(n);
    for (int i = 0; i < n; ++i) gen[i] = model.expand(b.generators[i].rep);
    bad = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (model.multiply(t.products[i][j], gen[k]) != model.multiply(gen[i], t.products[j][k])) ++bad;
    report.add(bad == 0, "associativity on " + std::to_string(n * n * n) + " generator triples");

    bad = 0;
    for (std::size_t i = 0; i < b.basis.size(); ++i)
        if (model.expand(b.basis[i].rep) != Coordinates{{int(i), 1}}) ++bad;
    report.add(bad == 0, "duality pairing on " + std::to_string(b.basis.size()) + " basis classes");

    bad = 0;
    for (int i = 0; i < n; ++i)
        if (!t.products[i][i].empty()) ++bad;
    report.add(bad == 0, "generator squares vanish");
    return report;
}

std::string Relation::to_string() const {
    auto mono = [](const std::vector<std::string>& m) {
        std::string s;
        for (const auto& x : m) s += (s.empty() ? "" : " ") + x;
        return s.empty() ? std::string("0") : s;
    };
    return mono(lhs) + " = " + mono(rhs);
}

CupReport verify_presentation(const CupModel& model, const std::vector<Relation>& relations) {
    CupReport report;
    const auto& b = model.basis();
    const std::uint32_t p = model.p();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < b.generators.size(); ++i) index[b.generators[i].name] = int(i);

    bool degrees_ok = true;
    for (const auto& g : b.generators)
        degrees_ok = degrees_ok && !g.rep.empty() && chain_degree(g.rep) == g.degree;
    report.add(degrees_ok, "generator degrees equal wedge lengths");

    auto monomial = [&](const std::vector<std::string>& names) -> std::optional<Coordinates> {
        if (names.empty()) return Coordinates{};
        Chain c = single(0);
        for (const auto& nm : names) {
            auto it = index.find(nm);
            if (it == index.end()) return std::nullopt;
            c = model.wedge(c, b.generators[it->second].rep);
        }
        return model.expand(c);
    };
    std::size_t held = 0;
    for (const auto& r : relations) {
        auto l = monomial(r.lhs), rr = monomial(r.rhs);
        bool ok = l && rr;
        if (ok) {
            Coordinates neg = *rr;
            for (auto& [i, x] : neg) x = (p - x) % p;
            ok = *l == *rr || *l == neg;
        }
        if (ok)
            ++held;
        else
            report.add(false, "relation " + r.to_string());
    }
    report.add(held == relations.size(),
               std::to_string(held) + "/" + std::to_string(relations.size()) + " relations hold");

    // Span of all products of distinct generators, degree by degree.
    const std::size_t N = b.basis.size();
    std::vector<ModSpan> spans(model.homology_dims().size(), ModSpan(p));
    const int ng = int(b.generators.size());
    auto dfs = [&](auto&& self, int next, const Chain& c) -> void {
        const int d = chain_degree(c);
        if (d >= 0 && d < int(spans.size())) spans[d].add(dense(model.expand(c), N));
        for (int i = next; i < ng; ++i) {
            Chain e = model.wedge(c, b.generators[i].rep);
            if (!e.empty()) self(self, i + 1, e);
        }
    };
    dfs(dfs, 0, single(0));
    std::vector<std::int64_t> generated;
    for (const auto& s : spans) generated.push_back(std::int64_t(s.rank()));
    report.add(generated == model.homology_dims(), "generated subalgebra has dimension dim H_k in every degree");
    return report;
}

GeneratorProbe minimal_generator_probe(const CupModel& model) {
    const auto& b = model.basis();
    const std::size_t N = b.basis.size();
    const int top = int(model.homology_dims().size()) - 1;
    std::vector<std::vector<int>> by_degree(top + 1);
    for (std::size_t i = 0; i < N; ++i) by_degree[b.basis[i].degree].push_back(int(i));

    GeneratorProbe probe;
    for (int k = 1; k <= top; ++k) {
        ModSpan span(model.p());
        for (int d = 1; 2 * d <= k; ++d)
            for (int i : by_degree[d])
                for (int j : by_degree[k - d]) {
                    Chain c = model.wedge(b.basis[i].rep, b.basis[j].rep);
                    if (!c.empty()) span.add(dense(model.expand(c), N));
                }
        for (int i : by_degree[k])
            if (span.add(dense(Coordinates{{i, 1}}, N))) probe.chosen.push_back(b.basis[i].name);
    }
    probe.size = probe.chosen.size();
    return probe;
}

Presentation height1_presentation(const Poset& poset, std::uint32_t prime) {
    if (poset.height() > 1) throw HeightError("height-1 presentation needs a poset of height at most 1");
    const auto& edges = poset.hasse_edges();
    if (edges.size() > 24) throw std::invalid_argument("too many edges for subset enumeration");
    Presentation pr{{PosetLieAlgebra(poset, Mode::Reflexive), prime, {}, {}}, {}};
    auto& g = pr.basis.algebra;
    std::vector<std::string> labels;
    for (int i = 1; i <= poset.size(); ++i) labels.push_back("x_" + std::to_string(i));

    std::vector<std::pair<std::string, Chain>> reps;
    std::vector<WedgeMask> regular;
    const int n = poset.size();
    for (std::uint32_t s = 0; s < (1u << edges.size()); ++s) {
        std::vector<int> deg(n + 1, 0);
        WedgeMask m = 0;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (s >> e & 1) {
                ++deg[edges[e].first], ++deg[edges[e].second];
                m |= WedgeMask{1} << g.index_of(edges[e].first, edges[e].second);
            }
        if (std::all_of(deg.begin(), deg.end(), [prime](int d) { return d % int(prime) == 0; })) {
            regular.push_back(m);
            reps.emplace_back(m ? "[" + wedge_to_string(g, m) + "]" : "", single(m));
        }
    }
    add_tau_products(pr.basis, labels, reps);
    add_diagonal_generators(pr.basis, labels);
    for (WedgeMask m : regular)
        if (m) pr.basis.generators.push_back({"[" + wedge_to_string(g, m) + "]", single(m), wedge_degree(m)});
    for (std::size_t i = 0; i < regular.size(); ++i)
        for (std::size_t j = i + 1; j < regular.size(); ++j) {
            const WedgeMask s = regular[i], t = regular[j];
            if (!s || !t) continue;
            Relation r{{"[" + wedge_to_string(g, s) + "]", "[" + wedge_to_string(g, t) + "]"}, {}};
            if (!(s & t)) r.rhs = {"[" + wedge_to_string(g, s | t) + "]"};
            pr.relations.push_back(r);
        }
    return pr;
}

Presentation umbrella_presentation(int n, std::uint32_t prime) {
    if (n < 1 || n > 8) throw std::invalid_argument("umbrella presentation supports 1 <= n <= 8");
    Presentation pr{{PosetLieAlgebra(umbrella(n), Mode::Reflexive), prime, {}, {}}, {}};
    auto& g = pr.basis.algebra;
    std::vector<std::string> labels{"x_a", "x_b"};
    for (int i = 1; i <= n; ++i) labels.push_back("x_" + std::to_string(i));
    if (prime != 2) {
        add_tau_products(pr.basis, labels, {{"", single(0)}});
        add_diagonal_generators(pr.basis, labels);
        return pr;
    }
    const int a = 1, b = 2;
    auto c = [](int i) { return 2 + i; };
    auto e2 = [&](std::uint32_t sigma) {
        WedgeMask m = 0;
        for (int i = 1; i <= n; ++i)
            if (sigma >> (i - 1) & 1) m |= wedge_of(g, {{a, c(i)}, {b, c(i)}});
        return m;
    };
    auto e1 = [&](std::uint32_t sigma) { return e2(sigma) | wedge_of(g, {{a, b}}); };
    auto set_name = [n](std::uint32_t sigma) {
        std::string s;
        for (int i = 1; i <= n; ++i)
            if (sigma >> (i - 1) & 1) s += (s.empty() ? "" : ",") + std::to_string(i);
        return "{" + s + "}";
    };
    std::vector<std::pair<std::string, Chain>> reps;
    for (std::uint32_t sigma = 0; sigma < (1u << n); ++sigma) {
        if (__builtin_popcount(sigma) % 2 == 0)
            reps.emplace_back(sigma ? "e''" + set_name(sigma) : "", single(e2(sigma)));
        else
            reps.emplace_back("e'" + set_name(sigma), single(e1(sigma)));
    }
    add_tau_products(pr.basis, labels, reps);
    add_diagonal_generators(pr.basis, labels);

    auto y = [](int i, int j) { return "y_{" + std::to_string(std::min(i, j)) + "," + std::to_string(std::max(i, j)) + "}"; };
    auto z = [](int i) { return "z_" + std::to_string(i); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pr.basis.generators.push_back({y(i, j), single(e2((1u << (i - 1)) | (1u << (j - 1)))), 4});
    for (int i = 1; i <= n; ++i) pr.basis.generators.push_back({z(i), single(e1(1u << (i - 1))), 3});

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (i < k) pr.relations.push_back({{y(i, j), y(j, k)}, {}});
                if (j < k) pr.relations.push_back({{y(i, j), z(k)}, {y(i, k), z(j)}});
            }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pr.relations.push_back({{y(i, j), z(i)}, {}});
            pr.relations.push_back({{y(i, j), z(j)}, {}});
            pr.relations.push_back({{z(i), z(j)}, {}});
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    pr.relations.push_back({{y(i, j), y(k, l)}, {y(i, k), y(j, l)}});
                    pr.relations.push_back({{y(i, j), y(k, l)}, {y(i, l), y(j, k)}});
                }
        }
    return pr;
}

Presentation diamond_presentation(int n, std::uint32_t prime) {
    if (n < 1 || n > 8) throw std::invalid_argument("diamond presentation supports 1 <= n <= 8");
    if (prime != 2 && int(prime) <= n + 1) throw std::invalid_argument("diamond presentation exists for p = 2 and p > n + 1");
    Presentation pr{{PosetLieAlgebra(diamond(n), Mode::Reflexive), prime, {}, {}}, {}};
    auto& g = pr.basis.algebra;
    std::vector<std::string> labels{"x_a"};
    for (int i = 1; i <= n; ++i) labels.push_back("x_" + std::to_string(i));
    labels.push_back("x_c");
    if (prime != 2) {
        add_tau_products(pr.basis, labels, {{"", single(0)}});
        add_diagonal_generators(pr.basis, labels);
        return pr;
    }
    const std::uint32_t nbit = 1u << (n - 1);
    auto set_name = [n](std::uint32_t sigma) {
        std::string s;
        for (int i = 1; i <= n; ++i)
            if (sigma >> (i - 1) & 1) s += (s.empty() ? "" : ",") + std::to_string(i);
        return "{" + s + "}";
    };
    // ē''_σ = e''_σ + Σ_{i∈σ} e''_{σ∖i ∪ n}, σ ⊆ [n-1].
    auto bar = [&](std::uint32_t sigma) {
        Chain c;
        add_to_chain(c, diamond_double(g, n, sigma), 1);
        for (int i = 1; i < n; ++i)
            if (sigma >> (i - 1) & 1) add_to_chain(c, diamond_double(g, n, (sigma & ~(1u << (i - 1))) | nbit), 1);
        return c;
    };
    std::vector<std::pair<std::string, Chain>> reps;
    for (std::uint32_t sigma = 0; sigma < nbit; ++sigma)
        if (__builtin_popcount(sigma) % 2 == 0) {
            reps.emplace_back(sigma ? "ē''" + set_name(sigma) : "", bar(sigma));
            reps.emplace_back("e'" + set_name(sigma | nbit), single(diamond_prime(g, n, sigma | nbit)));
        }
    add_tau_products(pr.basis, labels, reps);
    add_diagonal_generators(pr.basis, labels);

    auto y = [](int i, int j) { return "y_{" + std::to_string(std::min(i, j)) + "," + std::to_string(std::max(i, j)) + "}"; };
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pr.basis.generators.push_back({y(i, j), bar((1u << (i - 1)) | (1u << (j - 1))), 4});
    pr.basis.generators.push_back({"z", single(diamond_prime(g, n, nbit)), 3});
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            for (int k = i + 1; k < n; ++k)
                if (j != i && j != k) pr.relations.push_back({{y(i, j), y(j, k)}, {}});
    return pr;
}

}  // namespace posetlie
