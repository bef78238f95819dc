#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "posetlie/chevalley.hpp"

namespace posetlie {

struct BasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A homology class given by a cycle; its dual cochain χ is the cohomology
/// class of the same name.
struct CohomologyClass {
    std::string name;
    Chain rep;
    int degree = 0;
};

/// Representatives over Z_p spanning a zero-boundary subcomplex that carries
/// all of homology, plus a chosen list of algebra generators.
struct CohomologyBasis {
    PosetLieAlgebra algebra;
    std::uint32_t p = 2;
    std::vector<CohomologyClass> basis;
    std::vector<CohomologyClass> generators;
};

/// Sparse coordinates in the basis: (basis index, coefficient mod p).
using Coordinates = std::vector<std::pair<int, std::uint32_t>>;

/// Products computed as wedge concatenation of representatives, re-expanded in
/// the basis modulo boundaries, one weight block at a time.
class CupModel {
public:
    /// Validates the basis: homogeneous cycles mod p, independent modulo
    /// boundaries, and as many per degree as dim H_k. Throws BasisError.
    explicit CupModel(CohomologyBasis basis);
    ~CupModel();

    const CohomologyBasis& basis() const { return basis_; }
    std::uint32_t p() const { return basis_.p; }
    const std::vector<std::int64_t>& homology_dims() const { return dims_; }

    /// Coordinates of the class of a cycle; BasisError if the chain is not a
    /// cycle or not in the span of the basis plus boundaries.
    Coordinates expand(const Chain& cycle) const;
    /// Signed wedge product of chains, coefficients reduced mod p.
    Chain wedge(const Chain& x, const Chain& y) const;
    Chain chain_of(const Coordinates& c) const;
    Coordinates multiply(const Coordinates& x, const Coordinates& y) const;

private:
    struct Solver;
    const Solver& solver(int degree, const WeightVector& w) const;
    Chain reduce_mod_p(Chain c) const;

    CohomologyBasis basis_;
    std::vector<std::int64_t> dims_;
    std::vector<WeightVector> weights_;  // per basis element
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, WeightVector>, std::unique_ptr<Solver>> solvers_;
};

/// Products of every ordered pair of generators.
struct ProductTable {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<std::vector<Coordinates>> products;

    nlohmann::json to_json(const CupModel& model) const;
};

ProductTable wedge_basis_cup(const CupModel& model);

/// One line per check, each prefixed PASS or FAIL.
struct CupReport {
    bool ok = true;
    std::vector<std::string> lines;
    void add(bool pass, const std::string& what);
};

/// Graded commutativity, associativity on generator triples, the duality
/// pairing and vanishing squares.
CupReport check_table(const CupModel& model, const ProductTable& table);

/// lhs == ±rhs as products of named generators; rhs empty means zero.
struct Relation {
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    std::string to_string() const;
};

struct Presentation {
    CohomologyBasis basis;
    std::vector<Relation> relations;
};

/// Relations hold, generator degrees match wedge lengths, and the generated
/// subalgebra has dimension dim H_k in every degree.
CupReport verify_presentation(const CupModel& model, const std::vector<Relation>& relations);

/// Height-1 poset over Z_p: diagonals and nonempty p+-regular edge subsets as
/// generators; relations S*T = S∪T for disjoint S, T and S*T = 0 otherwise.
Presentation height1_presentation(const Poset& p, std::uint32_t prime);
/// gl^<= of umbrella(n): Z_2 presentation with x, y, z generators, or the
/// exterior algebra on the diagonals for p >= 3.
Presentation umbrella_presentation(int n, std::uint32_t prime);
/// gl^<= of diamond(n): Z_2 presentation with x, ȳ, z generators, or the
/// exterior algebra on the diagonals for p > n + 1.
Presentation diamond_presentation(int n, std::uint32_t prime);

/// Greedy homogeneous generating set, built degree by degree from basis
/// elements outside the span of decomposables. Its size is an upper bound
/// for the minimal number of generators; an experiment, not a proof.
struct GeneratorProbe {
    std::size_t size = 0;
    std::vector<std::string> chosen;
};
GeneratorProbe minimal_generator_probe(const CupModel& model);

}  // namespace posetlie
