#pragma once

#include <cstdint>
#include <string>

#include "posetlie/polynomial.hpp"

namespace posetlie {

/// Σ_{k ∈ pN} c_k t^{jk + l} for f = Σ c_k t^k, by coefficient selection.
Polynomial filter_every_pth(const Polynomial& f, int p, int j, int l);

/// The same filter as t^l/p Σ_{i<p} f(ε^i t^j), evaluated in the group ring of
/// p-th roots of unity. p must be prime; used to validate the identity.
Polynomial filter_every_pth_roots(const Polynomial& f, int p, int j, int l);

/// Hilbert–Poincaré series over fields for the named families. Suffixes name
/// the coefficient field; parameters follow the builders in poset.hpp.
Polynomial hp_reflexive_char0(int n);
Polynomial hp_cycle_Z2(int n);
Polynomial hp_cycle_Zp(int n, int p);
/// K_{p,n} over Z_p.
Polynomial hp_complete_bipartite_pnp(int p, int n);
Polynomial hp_complete_bipartite_Z2_stanley(int m, int n);
Polynomial hp_complete_bipartite_Z2_konvalinka(int m, int n);
Polynomial hp_fork_Z2(int n);
Polynomial hp_fork_Zp(int n, int p);
Polynomial hp_umbrella_Z2(int n);
Polynomial hp_umbrella_Zp(int n, int p);
Polynomial hp_diamond_Z2(int n);
/// Exact coefficient-filter form with the closed rank sum.
Polynomial hp_diamond_Z3(int n);
/// The ε-form with F(t), evaluated exactly over the cube roots of unity.
Polynomial hp_diamond_Z3_roots(int n);
/// The general-p derivation with ranks of subset-incidence matrices computed
/// over Z_p instead of the closed rank sum.
Polynomial hp_diamond_rank_route(int n, int p);
Polynomial hp_tree_height1(int n);

/// Rank over Z_p of the C(n,k-1) x C(n,k) inclusion matrix of (k-1)-subsets in k-subsets.
std::int64_t subset_incidence_rank(int n, int k, std::uint32_t p);
/// Σ_j C(n-2j-1, k-j-1).
BigInt subset_incidence_rank_formula(int n, int k);

/// F(s) = s Σ_{2j <= n-1} s^j (1+s)^{n-2j-1}, the generating function of the
/// rank sums; checked against the rational closed form by
/// (1+s+s^2) F(s) (1+s)^{2c} = s (1+s)^{n+1} ((1+s)^{2c} - s^c), c = ceil(n/2).
Polynomial diamond_rank_series(int n);
bool diamond_rank_series_identity(int n);

/// Looks up a closed form by family name and field ("diamond", 5, Zp:2).
/// Throws std::invalid_argument when no closed form is known.
Polynomial closed_form(const std::string& family, const std::vector<int>& params, std::uint32_t p);

/// "degree,coefficient,normalized,normalized_decimal" with coefficients divided by the largest one.
std::string normalized_csv(const Polynomial& f);
std::string series_csv(const Polynomial& f);

}  // namespace posetlie
