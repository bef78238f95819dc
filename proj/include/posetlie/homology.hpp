#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "posetlie/chevalley.hpp"
#include "posetlie/coefficients.hpp"
#include "posetlie/smith.hpp"

namespace posetlie {

/// Z^free ⊕ Z_{d_1} ⊕ ... ⊕ Z_{d_r}, with 1 < d_1 | d_2 | ... | d_r.
struct HomologyGroup {
    std::int64_t free_rank = 0;
    std::vector<BigInt> torsion;

    /// Accepts any list of cyclic orders (units are dropped) and brings it to
    /// invariant-factor form.
    static HomologyGroup from_parts(std::int64_t free_rank, std::vector<BigInt> cyclic_orders);

    /// Prime-power cyclic summands, ordered by prime then exponent.
    std::vector<BigInt> elementary_divisors() const;
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool has_p_torsion(std::uint32_t p) const;
    /// Some invariant factor is divisible by m.
    bool has_factor_divisible_by(const BigInt& m) const;
    /// Z_m is a direct summand (m's prime-power parts each occur as
    /// elementary divisors, with multiplicity).
    bool has_summand(const BigInt& m) const;

    /// "Z^6 ⊕ Z_2^3 ⊕ Z_4", or "0".
    std::string to_string() const;

    HomologyGroup& operator+=(const HomologyGroup& other);
    bool operator==(const HomologyGroup& other) const = default;
};

/// Parses "Z^6 ⊕ Z_2^3 ⊕ Z_4" and the compact "Z^6+Z2^3+Z4"; "0" is trivial.
HomologyGroup parse_group(const std::string& s);

/// Factorization by trial division; fine for the small orders that occur here.
std::vector<std::pair<BigInt, int>> factorize(BigInt n);

struct HomologyTable {
    std::vector<HomologyGroup> groups;
    Coefficients coefficients;

    int top_degree() const { return int(groups.size()) - 1; }
    /// [{"degree": k, "free": r, "torsion": [d, ...]}]
    nlohmann::json to_json() const;
    std::string to_text() const;
    std::string to_csv() const;
    /// Per-degree dimensions (free ranks); meaningful over fields.
    std::vector<std::int64_t> dims() const;
    std::int64_t euler_characteristic() const;

    /// Degree-wise direct sum.
    HomologyTable& operator+=(const HomologyTable& other);
    bool operator==(const HomologyTable& other) const { return groups == other.groups; }
};

HomologyTable table_from_dims(const std::vector<std::int64_t>& dims, const Coefficients& coeff);

/// Integral homology by Smith normal form of every boundary map.
HomologyTable homology_over_Z(const GradedComplex& c);

/// Field dimensions: Q by exact rank, Z_p by rank of the reduction mod p.
std::vector<std::int64_t> homology_over_field(const GradedComplex& c, const Coefficients& coeff);

/// Any coefficients; over a field the table has only free ranks.
HomologyTable homology(const GradedComplex& c, const Coefficients& coeff);

/// Universal coefficients: dimensions over Z_p (p = 0 for Q) from an integral table.
std::vector<std::int64_t> field_dims_from_Z(const HomologyTable& t, std::uint32_t p);

/// Integral cohomology from homology: same free ranks, torsion moved up one degree.
HomologyTable cohomology_from_homology(const HomologyTable& t);
/// Integral cohomology recomputed from transposed boundaries.
HomologyTable cohomology_over_Z(const GradedComplex& c);

/// free(k) = free(N-k) and torsion(k) = torsion(N-k-1) for every k.
bool verify_poincare_duality(const HomologyTable& t, int N);

/// Field dimensions of nil_n = gl^< of chain(n); nil_0 and nil_1 give 1 in degree 0.
std::vector<std::int64_t> nil_dims(int n, const Coefficients& coeff);

struct NilRecursionCheck {
    bool ok = false;
    std::vector<std::int64_t> lhs;  ///< dim H_k(nil_n)
    std::vector<std::int64_t> rhs;  ///< dim H_k(C_{1,n}) + 2 dim H_k(nil_{n-1}) - dim H_k(nil_{n-2})
};

/// Requires n >= 2 and a field.
NilRecursionCheck verify_nil_recursion(int n, const Coefficients& coeff);

}  // namespace posetlie
