#include "posetlie/smith.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace posetlie {

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

std::int64_t SparseMatrix::at(int r, int c) const {
    const auto& col = columns[c];
    auto it = std::lower_bound(col.begin(), col.end(), Entry{r, INT64_MIN});
    return it != col.end() && it->first == r ? it->second : 0;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t(cols, rows);
    for (int c = 0; c < cols; ++c)
        for (auto [r, v] : columns[c]) t.columns[r].emplace_back(c, v);
    return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    if (cols != other.rows) throw std::invalid_argument("matrix shape mismatch");
    SparseMatrix out(rows, other.cols);
    std::vector<std::int64_t> acc(rows, 0);
    std::vector<int> touched;
    for (int c = 0; c < other.cols; ++c) {
        for (auto [k, v] : other.columns[c])
            for (auto [r, w] : columns[k]) {
                if (acc[r] == 0) touched.push_back(r);
                acc[r] += v * w;
            }
        std::sort(touched.begin(), touched.end());
        for (int r : touched) {
            if (acc[r] != 0) out.columns[c].emplace_back(r, acc[r]);
            acc[r] = 0;
        }
        touched.clear();
    }
    return out;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::dense() const {
    std::vector<std::vector<std::int64_t>> d(rows, std::vector<std::int64_t>(cols, 0));
    for (int c = 0; c < cols; ++c)
        for (auto [r, v] : columns[c]) d[r][c] = v;
    return d;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& d) {
    SparseMatrix m(int(d.size()), d.empty() ? 0 : int(d[0].size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (d[r][c] != 0) m.columns[c].emplace_back(r, d[r][c]);
    return m;
}

std::vector<BigInt> SmithForm::factors() const {
    std::vector<BigInt> out(std::size_t(unit_factors), BigInt(1));
    out.insert(out.end(), nontrivial.begin(), nontrivial.end());
    return out;
}

namespace {

struct Overflow {};

constexpr std::int64_t kSafe = std::int64_t{1} << 62;

// ---- integer policies ------------------------------------------------------

inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(const BigInt& v) { return v == 0; }

inline std::int64_t checked(std::int64_t v) {
    if (v > kSafe || v < -kSafe) throw Overflow{};
    return v;
}

// a -= q * b
inline void sub_mul(std::int64_t& a, std::int64_t q, std::int64_t b) {
    std::int64_t p;
    if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &a)) throw Overflow{};
    checked(a);
}
inline void sub_mul(BigInt& a, const BigInt& q, const BigInt& b) { mpz_submul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t()); }

inline std::int64_t abs_of(std::int64_t v) { return v < 0 ? -v : v; }
inline BigInt abs_of(const BigInt& v) { return abs(v); }

inline std::int64_t trunc_div(std::int64_t a, std::int64_t b) { return a / b; }
inline BigInt trunc_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt to_big(std::int64_t v) {
    BigInt b;
    mpz_set_si(b.get_mpz_t(), long(v));
    return b;
}
inline BigInt to_big(const BigInt& v) { return v; }

template <class Int>
Int from_i64(std::int64_t v) {
    if constexpr (std::is_same_v<Int, BigInt>)
        return to_big(v);
    else
        return v;
}

// ---- sparse row elimination ------------------------------------------------
//
// Rows are sorted (column, value) vectors. Pivots are taken only where the
// policy allows (units of the ring); a min-heap on row length together with a
// least-populated-column choice keeps fill-in low.

template <class Value>
struct SparseRows {
    using Row = std::vector<std::pair<int, Value>>;
    std::vector<Row> rows;
    std::vector<std::vector<int>> col_rows;  // may hold stale row ids
    std::vector<int> col_count;
    std::vector<char> alive;

    SparseRows(const SparseMatrix& m, auto convert) : rows(m.rows), col_rows(m.cols), col_count(m.cols, 0), alive(m.rows, 1) {
        for (int c = 0; c < m.cols; ++c)
            for (auto [r, v] : m.columns[c]) {
                rows[r].emplace_back(c, convert(v));
                col_rows[c].push_back(r);
                ++col_count[c];
            }
    }

    const Value* find(int r, int c) const {
        const Row& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
        return it != row.end() && it->first == c ? &it->second : nullptr;
    }
};

/// Eliminates with unit pivots; returns the number of pivots used. `Ring`
/// supplies is_pivot(v), factor(v_target, v_pivot) and axpy(a, f, b): a -= f*b,
/// reduced.
template <class Value, class Ring>
std::int64_t eliminate(SparseRows<Value>& m, Ring& ring) {
    using Row = typename SparseRows<Value>::Row;
    using Item = std::pair<std::size_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (int r = 0; r < int(m.rows.size()); ++r)
        if (!m.rows[r].empty()) heap.emplace(m.rows[r].size(), r);

    std::int64_t pivots = 0;
    Row merged;
    while (!heap.empty()) {
        auto [len, r] = heap.top();
        heap.pop();
        if (!m.alive[r] || m.rows[r].size() != len || len == 0) continue;

        int pc = -1;
        for (const auto& [c, v] : m.rows[r])
            if (ring.is_pivot(v) && (pc < 0 || m.col_count[c] < m.col_count[pc])) pc = c;
        if (pc < 0) continue;  // re-enters the heap if a later update changes it
        const Value pv = *m.find(r, pc);
        const Row& prow = m.rows[r];

        std::vector<int> targets;
        for (int r2 : m.col_rows[pc])
            if (r2 != r && m.alive[r2] && m.find(r2, pc)) targets.push_back(r2);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

        for (int r2 : targets) {
            Row& row = m.rows[r2];
            const Value f = ring.factor(*m.find(r2, pc), pv);
            merged.clear();
            auto a = row.begin();
            auto b = prow.begin();
            while (a != row.end() || b != prow.end()) {
                if (b == prow.end() || (a != row.end() && a->first < b->first)) {
                    merged.push_back(std::move(*a));
                    ++a;
                } else if (a == row.end() || b->first < a->first) {
                    Value v{};
                    ring.axpy(v, f, b->second);
                    merged.emplace_back(b->first, std::move(v));
                    m.col_rows[b->first].push_back(r2);
                    ++m.col_count[b->first];
                    ++b;
                } else {
                    Value v = std::move(a->second);
                    ring.axpy(v, f, b->second);
                    if (is_zero(v))
                        --m.col_count[a->first];
                    else
                        merged.emplace_back(a->first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            row.swap(merged);
            heap.emplace(row.size(), r2);
        }
        for (const auto& [c, v] : prow) --m.col_count[c];
        m.alive[r] = 0;
        m.rows[r].clear();
        m.col_rows[pc].clear();
        ++pivots;
    }
    return pivots;
}

template <class Int>
struct IntegerRing {
    bool is_pivot(const Int& v) const { return v == 1 || v == -1; }
    Int factor(const Int& target, const Int& pivot) const { return target * pivot; }
    void axpy(Int& a, const Int& f, const Int& b) const {
        if constexpr (std::is_same_v<Int, std::int64_t>) {
            sub_mul(a, f, b);
        } else {
            mpz_submul(a.get_mpz_t(), f.get_mpz_t(), b.get_mpz_t());
        }
    }
};

struct PrimeField {
    std::uint64_t p;
    bool is_pivot(std::uint32_t v) const { return v != 0; }
    std::uint32_t inverse(std::uint32_t a) const {
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return std::uint32_t(result);
    }
    std::uint32_t factor(std::uint32_t target, std::uint32_t pivot) const {
        return std::uint32_t(std::uint64_t(target) * inverse(pivot) % p);
    }
    void axpy(std::uint32_t& a, std::uint32_t f, std::uint32_t b) const {
        a = std::uint32_t((a + p - std::uint64_t(f) * b % p) % p);
    }
};

// ---- dense SNF -------------------------------------------------------------

template <class Int>
std::vector<BigInt> dense_diagonal(std::vector<std::vector<Int>> a) {
    const int m = int(a.size());
    const int n = m ? int(a[0].size()) : 0;
    std::vector<BigInt> diag;
    for (int t = 0; t < std::min(m, n); ++t) {
        auto locate_min = [&](bool whole) {
            int bi = -1, bj = -1;
            Int best{};
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    if (!whole && i != t && j != t) continue;
                    if (is_zero(a[i][j])) continue;
                    Int v = abs_of(a[i][j]);
                    if (bi < 0 || v < best) {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            return std::pair{bi, bj};
        };
        auto [pi, pj] = locate_min(true);
        if (pi < 0) break;
        for (;;) {
            std::swap(a[t], a[pi]);
            for (int i = t; i < m; ++i) std::swap(a[i][t], a[i][pj]);
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (is_zero(a[i][t])) continue;
                Int q = trunc_div(a[i][t], a[t][t]);
                for (int j = t; j < n; ++j)
                    if (!is_zero(a[t][j])) sub_mul(a[i][j], q, a[t][j]);
                if (!is_zero(a[i][t])) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (is_zero(a[t][j])) continue;
                Int q = trunc_div(a[t][j], a[t][t]);
                for (int i = t; i < m; ++i)
                    if (!is_zero(a[i][t])) sub_mul(a[i][j], q, a[i][t]);
                if (!is_zero(a[t][j])) clean = false;
            }
            if (clean) break;
            std::tie(pi, pj) = locate_min(false);
        }
        diag.push_back(abs(to_big(a[t][t])));
    }
    return diag;
}

void divisibility_pass(std::vector<BigInt>& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] == 0) continue;
            BigInt g = gcd(d[i], d[j]);
            BigInt l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
}

template <class Int>
SmithForm smith_impl(const SparseMatrix& m) {
    SparseRows<Int> rows(m, [](std::int64_t v) { return from_i64<Int>(v); });
    IntegerRing<Int> ring;
    SmithForm out;
    out.unit_factors = eliminate(rows, ring);

    // Remaining rows have no unit entries; finish densely.
    std::vector<int> live_rows;
    std::vector<int> col_map(m.cols, -1);
    int nc = 0;
    for (int r = 0; r < m.rows; ++r)
        if (rows.alive[r] && !rows.rows[r].empty()) {
            live_rows.push_back(r);
            for (const auto& [c, v] : rows.rows[r])
                if (col_map[c] < 0) col_map[c] = nc++;
        }
    std::vector<std::vector<Int>> dense(live_rows.size(), std::vector<Int>(nc, Int{}));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : rows.rows[live_rows[i]]) dense[i][col_map[c]] = v;

    std::vector<BigInt> diag = dense_diagonal(std::move(dense));
    divisibility_pass(diag);
    for (BigInt& d : diag) {
        if (d == 1)
            ++out.unit_factors;
        else
            out.nontrivial.push_back(std::move(d));
    }
    std::sort(out.nontrivial.begin(), out.nontrivial.end());
    out.rank = out.unit_factors + std::int64_t(out.nontrivial.size());
    return out;
}

}  // namespace

SmithForm smith_normal_form(const SparseMatrix& m) {
    try {
        return smith_impl<std::int64_t>(m);
    } catch (const Overflow&) {
        return smith_impl<BigInt>(m);
    }
}

SmithForm smith_normal_form_dense(const SparseMatrix& m) {
    std::vector<std::vector<BigInt>> a(m.rows, std::vector<BigInt>(m.cols, BigInt(0)));
    for (int c = 0; c < m.cols; ++c)
        for (auto [r, v] : m.columns[c]) a[r][c] = to_big(v);
    std::vector<BigInt> diag = dense_diagonal(std::move(a));
    divisibility_pass(diag);
    SmithForm out;
    for (BigInt& d : diag) {
        if (d == 1)
            ++out.unit_factors;
        else
            out.nontrivial.push_back(std::move(d));
    }
    out.rank = out.unit_factors + std::int64_t(out.nontrivial.size());
    return out;
}

std::int64_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
    if (p < 2) throw std::invalid_argument("rank_mod_p needs a prime");
    PrimeField field{p};
    SparseRows<std::uint32_t> rows(m, [p](std::int64_t v) {
        std::int64_t r = v % std::int64_t(p);
        return std::uint32_t(r < 0 ? r + p : r);
    });
    // Drop entries that vanish mod p before elimination.
    for (int r = 0; r < m.rows; ++r) {
        auto& row = rows.rows[r];
        auto end = std::remove_if(row.begin(), row.end(), [&](const auto& e) {
            if (e.second != 0) return false;
            --rows.col_count[e.first];
            return true;
        });
        row.erase(end, row.end());
    }
    return eliminate(rows, field);
}

std::int64_t rank_over_Q(const SparseMatrix& m) { return smith_normal_form(m).rank; }

}  // namespace posetlie
