#include "posetlie/homology.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace posetlie {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Coefficients Coefficients::parse(const std::string& s) {
    if (s == "Z") return integers();
    if (s == "Q") return rationals();
    std::smatch m;
    static const std::regex re(R"(Z(?:p:|_|p)?(\d+))");
    if (std::regex_match(s, m, re)) {
        unsigned long p = std::stoul(m[1]);
        if (!is_prime(p) || p > 0x7fffffffUL) throw std::invalid_argument("coefficient modulus must be a prime below 2^31");
        return mod(std::uint32_t(p));
    }
    throw std::invalid_argument("unknown coefficients '" + s + "' (expected Z, Q or Zp:P)");
}

std::string Coefficients::to_string() const {
    switch (kind) {
        case Kind::Z: return "Z";
        case Kind::Q: return "Q";
        case Kind::Zp: return "Zp:" + std::to_string(p);
    }
    return "?";
}

std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
    std::vector<std::pair<BigInt, int>> out;
    if (n < 0) n = -n;
    for (BigInt d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

// prime -> exponents, each exponent once per cyclic summand.
std::map<BigInt, std::vector<int>> primary_parts(const std::vector<BigInt>& orders) {
    std::map<BigInt, std::vector<int>> parts;
    for (const BigInt& d : orders)
        for (auto& [p, e] : factorize(d)) parts[p].push_back(e);
    for (auto& [p, es] : parts) std::sort(es.begin(), es.end());
    return parts;
}

BigInt power(const BigInt& p, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

}  // namespace

HomologyGroup HomologyGroup::from_parts(std::int64_t free_rank, std::vector<BigInt> cyclic_orders) {
    HomologyGroup g;
    g.free_rank = free_rank;
    std::erase_if(cyclic_orders, [](const BigInt& d) { return abs(d) <= 1; });
    auto parts = primary_parts(cyclic_orders);
    std::size_t count = 0;
    for (const auto& [p, es] : parts) count = std::max(count, es.size());
    // The largest invariant factor takes the largest power of every prime, and so on.
    std::vector<BigInt> inv(count, BigInt(1));
    for (const auto& [p, es] : parts)
        for (std::size_t i = 0; i < es.size(); ++i) inv[count - es.size() + i] *= power(p, es[i]);
    g.torsion = std::move(inv);
    return g;
}

std::vector<BigInt> HomologyGroup::elementary_divisors() const {
    std::vector<BigInt> out;
    for (const auto& [p, es] : primary_parts(torsion))
        for (int e : es) out.push_back(power(p, e));
    return out;
}

bool HomologyGroup::has_p_torsion(std::uint32_t p) const {
    return std::any_of(torsion.begin(), torsion.end(), [p](const BigInt& d) { return d % p == 0; });
}

bool HomologyGroup::has_factor_divisible_by(const BigInt& m) const {
    return std::any_of(torsion.begin(), torsion.end(), [&](const BigInt& d) { return d % m == 0; });
}

bool HomologyGroup::has_summand(const BigInt& m) const {
    if (m <= 1) return true;
    std::vector<BigInt> elem = elementary_divisors();
    for (auto& [p, e] : factorize(m)) {
        BigInt q = power(p, e);
        if (std::find(elem.begin(), elem.end(), q) == elem.end()) return false;
    }
    return true;
}

std::string HomologyGroup::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1)
        parts.push_back("Z");
    else if (free_rank > 1)
        parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& [p, es] : primary_parts(torsion)) {
        // Group equal exponents: Z_2^3 ⊕ Z_4.
        for (std::size_t i = 0; i < es.size();) {
            std::size_t j = i;
            while (j < es.size() && es[j] == es[i]) ++j;
            std::string s = "Z_" + power(p, es[i]).get_str();
            if (j - i > 1) s += "^" + std::to_string(j - i);
            parts.push_back(s);
            i = j;
        }
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
    return out;
}

HomologyGroup& HomologyGroup::operator+=(const HomologyGroup& other) {
    std::vector<BigInt> all = torsion;
    all.insert(all.end(), other.torsion.begin(), other.torsion.end());
    *this = from_parts(free_rank + other.free_rank, std::move(all));
    return *this;
}

HomologyGroup parse_group(const std::string& text) {
    std::string s;
    for (std::size_t i = 0; i < text.size();) {
        // Treat "⊕" (3 bytes) and '+' as separators, drop whitespace and '_'.
        if (text.compare(i, 3, "⊕") == 0) {
            s += '+';
            i += 3;
            continue;
        }
        char c = text[i++];
        if (c == ' ' || c == '_' || c == '\t') continue;
        s += c;
    }
    if (s == "0" || s.empty()) return {};
    std::int64_t free_rank = 0;
    std::vector<BigInt> orders;
    std::stringstream ss(s);
    std::string tok;
    static const std::regex re(R"(Z(\d*)(?:\^(\d+))?)");
    while (std::getline(ss, tok, '+')) {
        std::smatch m;
        if (!std::regex_match(tok, m, re)) throw std::invalid_argument("cannot parse group term '" + tok + "'");
        const long mult = m[2].matched ? std::stol(m[2]) : 1;
        if (m[1].str().empty())
            free_rank += mult;
        else
            for (long i = 0; i < mult; ++i) orders.emplace_back(m[1].str());
    }
    return HomologyGroup::from_parts(free_rank, std::move(orders));
}

nlohmann::json HomologyTable::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (int k = 0; k <= top_degree(); ++k) {
        nlohmann::json tors = nlohmann::json::array();
        for (const BigInt& d : groups[k].torsion) {
            if (d.fits_slong_p())
                tors.push_back(d.get_si());
            else
                tors.push_back(d.get_str());
        }
        out.push_back({{"degree", k}, {"free", groups[k].free_rank}, {"torsion", tors}});
    }
    return out;
}

std::string HomologyTable::to_text() const {
    std::string out;
    std::string field;
    if (coefficients.kind == Coefficients::Kind::Q) field = "Q";
    if (coefficients.kind == Coefficients::Kind::Zp) field = "F_" + std::to_string(coefficients.p);
    for (int k = 0; k <= top_degree(); ++k) {
        std::string g = groups[k].to_string();
        if (!field.empty() && groups[k].free_rank > 0)
            g = groups[k].free_rank == 1 ? field : field + "^" + std::to_string(groups[k].free_rank);
        out += "H_" + std::to_string(k) + " = " + g + "\n";
    }
    return out;
}

std::string HomologyTable::to_csv() const {
    std::string out = "degree,free,torsion\n";
    for (int k = 0; k <= top_degree(); ++k) {
        std::string t;
        for (const BigInt& d : groups[k].torsion) t += (t.empty() ? "" : " ") + d.get_str();
        out += std::to_string(k) + "," + std::to_string(groups[k].free_rank) + "," + t + "\n";
    }
    return out;
}

std::vector<std::int64_t> HomologyTable::dims() const {
    std::vector<std::int64_t> out;
    for (const auto& g : groups) out.push_back(g.free_rank);
    return out;
}

std::int64_t HomologyTable::euler_characteristic() const {
    std::int64_t chi = 0;
    for (int k = 0; k <= top_degree(); ++k) chi += (k % 2 ? -1 : 1) * groups[k].free_rank;
    return chi;
}

HomologyTable& HomologyTable::operator+=(const HomologyTable& other) {
    if (other.groups.size() > groups.size()) groups.resize(other.groups.size());
    for (std::size_t k = 0; k < other.groups.size(); ++k) groups[k] += other.groups[k];
    return *this;
}

HomologyTable table_from_dims(const std::vector<std::int64_t>& dims, const Coefficients& coeff) {
    HomologyTable t;
    t.coefficients = coeff;
    for (auto d : dims) t.groups.push_back({d, {}});
    return t;
}

HomologyTable homology_over_Z(const GradedComplex& c) {
    const int top = c.top_degree();
    std::vector<SmithForm> snf(top + 2);
#pragma omp parallel for schedule(dynamic)
    for (int k = 1; k <= top; ++k) snf[k] = smith_normal_form(c.d[k]);

    HomologyTable t;
    for (int k = 0; k <= c.reported_top(); ++k) {
        HomologyGroup g;
        g.free_rank = std::int64_t(c.cells[k].size()) - snf[k].rank - snf[k + 1].rank;
        g.torsion = snf[k + 1].nontrivial;
        t.groups.push_back(std::move(g));
    }
    return t;
}

std::vector<std::int64_t> homology_over_field(const GradedComplex& c, const Coefficients& coeff) {
    if (!coeff.is_field()) throw std::invalid_argument("homology_over_field needs Q or Z_p");
    const int top = c.top_degree();
    std::vector<std::int64_t> rank(top + 2, 0);
#pragma omp parallel for schedule(dynamic)
    for (int k = 1; k <= top; ++k)
        rank[k] = coeff.kind == Coefficients::Kind::Q ? rank_over_Q(c.d[k]) : rank_mod_p(c.d[k], coeff.p);
    std::vector<std::int64_t> dims;
    for (int k = 0; k <= c.reported_top(); ++k) dims.push_back(std::int64_t(c.cells[k].size()) - rank[k] - rank[k + 1]);
    return dims;
}

HomologyTable homology(const GradedComplex& c, const Coefficients& coeff) {
    if (!coeff.is_field()) return homology_over_Z(c);
    return table_from_dims(homology_over_field(c, coeff), coeff);
}

std::vector<std::int64_t> field_dims_from_Z(const HomologyTable& t, std::uint32_t p) {
    std::vector<std::int64_t> dims;
    for (int k = 0; k <= t.top_degree(); ++k) {
        std::int64_t d = t.groups[k].free_rank;
        if (p) {
            for (const BigInt& x : t.groups[k].torsion) d += x % p == 0;
            if (k > 0)
                for (const BigInt& x : t.groups[k - 1].torsion) d += x % p == 0;
        }
        dims.push_back(d);
    }
    return dims;
}

HomologyTable cohomology_from_homology(const HomologyTable& t) {
    HomologyTable out;
    out.coefficients = t.coefficients;
    for (int k = 0; k <= t.top_degree(); ++k) {
        HomologyGroup g;
        g.free_rank = t.groups[k].free_rank;
        if (k > 0) g.torsion = t.groups[k - 1].torsion;
        out.groups.push_back(std::move(g));
    }
    return out;
}

HomologyTable cohomology_over_Z(const GradedComplex& c) {
    if (c.truncated) throw std::invalid_argument("cohomology needs the untruncated complex");
    const int top = c.top_degree();
    // delta^k = (d_{k+1})^T : C^k -> C^{k+1}.
    std::vector<SmithForm> snf(top + 2);
    for (int k = 1; k <= top; ++k) snf[k] = smith_normal_form(c.d[k].transposed());
    HomologyTable t;
    for (int k = 0; k <= top; ++k) {
        HomologyGroup g;
        g.free_rank = std::int64_t(c.cells[k].size()) - snf[k + 1].rank - snf[k].rank;
        // H^k = ker delta^k / im delta^{k-1}; torsion from delta^{k-1} = d_k^T.
        g.torsion = snf[k].nontrivial;
        t.groups.push_back(std::move(g));
    }
    return t;
}

bool verify_poincare_duality(const HomologyTable& t, int N) {
    if (t.top_degree() != N) return false;
    for (int k = 0; k <= N; ++k) {
        if (t.groups[k].free_rank != t.groups[N - k].free_rank) return false;
        const std::vector<BigInt> none;
        const auto& mirror = N - k - 1 >= 0 ? t.groups[N - k - 1].torsion : none;
        if (t.groups[k].torsion != mirror) return false;
    }
    return true;
}

std::vector<std::int64_t> nil_dims(int n, const Coefficients& coeff) {
    if (n <= 1) return {1};
    PosetLieAlgebra g(chain(n), Mode::Strict);
    return homology_over_field(build_complex(g), coeff);
}

NilRecursionCheck verify_nil_recursion(int n, const Coefficients& coeff) {
    if (n < 2) throw std::invalid_argument("nil recursion needs n >= 2");
    NilRecursionCheck r;
    r.lhs = nil_dims(n, coeff);
    PosetLieAlgebra g(chain(n), Mode::Strict);
    const Element ends[] = {1, n};
    std::vector<std::int64_t> ends_dims = homology_over_field(containing_summand(g, ends), coeff);
    std::vector<std::int64_t> a = nil_dims(n - 1, coeff), b = nil_dims(n - 2, coeff);
    r.rhs.assign(r.lhs.size(), 0);
    auto at = [](const std::vector<std::int64_t>& v, std::size_t k) { return k < v.size() ? v[k] : 0; };
    for (std::size_t k = 0; k < r.rhs.size(); ++k) r.rhs[k] = at(ends_dims, k) + 2 * at(a, k) - at(b, k);
    r.ok = r.lhs == r.rhs;
    for (std::size_t k = r.lhs.size(); k < std::max({ends_dims.size(), a.size(), b.size()}); ++k)
        if (at(ends_dims, k) + 2 * at(a, k) - at(b, k) != 0) r.ok = false;
    return r;
}

}  // namespace posetlie
