#pragma once

#include "ultrafun/lattice.hpp"
#include "ultrafun/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace uf::ind {

using lattice::Element;
using lattice::FinitePoset;
using lattice::QuasiLattice;
using lattice::Subset;
using Pair = std::pair<Element, Element>;

/// Finite-dimensional vector spaces X(a) over a finite poset with maps rho(a, b) for a <= b.
class IndSystem {
public:
    IndSystem() = default;
    /// `given` must contain at least one map per covering pair; other comparable pairs
    /// are composed along a chain of covers. Dimensions of every given map are checked.
    IndSystem(FinitePoset index, std::vector<std::size_t> dims, std::map<Pair, Matrix> given);

    const FinitePoset& index() const noexcept { return index_; }
    std::size_t size() const noexcept { return dims_.size(); }
    std::size_t dim(Element a) const { return dims_[a]; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    /// dim(b) x dim(a) matrix; identity for a == b.
    const Matrix& rho(Element a, Element b) const;
    const std::map<Pair, Matrix>& maps() const noexcept { return maps_; }
    bool given(Element a, Element b) const { return given_.count({a, b}) > 0; }

    /// Offset of X(a) inside the direct sum over all elements.
    std::size_t offset(Element a) const { return offsets_[a]; }
    std::size_t total_dim() const noexcept { return total_; }
    /// iota_a x in the direct sum.
    Vector embed(Element a, const Vector& x) const;
    /// sigma(x, a, b) = iota_a x - iota_b rho(a, b) x.
    Vector sigma(const Vector& x, Element a, Element b) const;

private:
    FinitePoset index_;
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
    std::map<Pair, Matrix> maps_;
    std::map<Pair, bool> given_;
};

struct ValidationReport {
    bool pass = true;
    std::vector<Element> witness;  // (a) for identity failures, (a, b, c) for functoriality
    std::string detail;
};

ValidationReport validate(const IndSystem& sys);

/// Colimit of the restriction to I, realized as M_I / N_I inside the direct sum over all elements.
struct Colimit {
    Subset subset;
    std::size_t dim = 0;
    Subspace relations;                 // N_I
    std::vector<std::size_t> free_cols; // coordinates of M_I that form a basis of the quotient
    std::map<Element, Matrix> projections;

    /// j_I: M_I -> colimit in the canonical basis.
    Vector quotient(const Vector& v) const;
    /// Canonical lift of a colimit vector to M_I.
    Vector lift(const Vector& c, std::size_t total_dim) const;
};

Colimit colimit(const IndSystem& sys, const Subset& subset);
Colimit colimit(const IndSystem& sys);

/// N_I built from covering pairs of the restricted order only.
Subspace covering_relations(const IndSystem& sys, const Subset& subset);
/// N_I built from all comparable pairs.
Subspace all_pair_relations(const IndSystem& sys, const Subset& subset);
/// M_I: coordinates of the elements of I.
Subspace coordinate_space(const IndSystem& sys, const Subset& subset);

IndSystem restrict(const IndSystem& sys, const Subset& subset);
/// The unique tau with tau rho^I_a = rho^J_a for a in I.
Matrix tau(const Colimit& ci, const Colimit& cj, std::size_t total_dim);
Matrix tau(const IndSystem& sys, const Subset& I, const Subset& J);

enum class Condition { I, II, III, IIIprime };
std::string to_string(Condition c);
std::optional<Condition> parse_condition(const std::string& s);

/// Outcome of one condition; failing reports carry a replayable counterexample.
struct ConditionReport {
    Condition condition = Condition::I;
    bool pass = true;
    std::vector<Element> family;      // pair (a, b), or the family for III'
    std::optional<Element> bound;     // upper bound (II: the join, III/III': the bound used)
    std::vector<Vector> vectors;      // I: kernel vector; II: vector of X(join) outside the image;
                                      // III/III': the compatible family with no common preimage
    std::string detail;
};

std::vector<ConditionReport> check_conditions(const IndSystem& sys, const std::vector<Condition>& which,
                                              std::size_t family_cap = SIZE_MAX);
ConditionReport check_localizable(const IndSystem& sys, std::size_t family_cap = SIZE_MAX);
/// Re-runs the recorded counterexample; true iff the failure is reproduced.
bool replay(const IndSystem& sys, const ConditionReport& r);
std::string to_string(const IndSystem& sys, const ConditionReport& r);

/// lambda(X)(b) = colim X over A_b = {a | lambda(a) <= b}; connecting maps are tau.
IndSystem pushforward(const IndSystem& sys, const lattice::LatticeMorphism& m);

/// Splits x in N_{I1 u I2} into pieces in N_{I1} and N_{I2}.
std::pair<Vector, Vector> split_over_union(const IndSystem& sys, const Subset& I1, const Subset& I2,
                                           const Vector& x);

/// x in colim X^{I1 n I2} with tau x = x1 and tau x = x2, built by lift and split.
Vector glue(const IndSystem& sys, const Subset& I1, const Subset& I2, const Subset& J, const Vector& x1,
            const Vector& x2);

struct IntersectionReport {
    bool preconditions = true;
    bool pass = true;
    std::optional<Vector> offending;
    std::string detail;
};

/// N_A n M_I == N_I for hereditary I.
IntersectionReport hereditary_intersection_check(const IndSystem& sys, const Subset& I);

struct Presentation {
    std::vector<Element> lambda;     // lambda(t) for t = 0..n-1
    std::size_t ambient_dim = 0;
    Subspace relations;              // the relation space from pairs of indices
    std::size_t quotient_dim = 0;
    Matrix iso;                      // quotient -> colimit, in canonical bases
    bool invertible = false;
    /// Same relation space from the antisymmetric parametrization x_il = -x_li.
    bool antisymmetric_agrees = false;
    /// ambient = relations + E, l'l = id on E, l(relations) = N_A n M_I.
    bool decomposition_holds = false;
};

Presentation quotient_presentation(const IndSystem& sys, const std::vector<Element>& lambda);

/// Stand-ins for the spaces over Gamma_i and V_ij with maps V_ij -> Gamma_i and V_ij -> Gamma_j.
struct CechData {
    std::vector<std::size_t> gamma_dims;
    std::map<Pair, std::size_t> v_dims;      // i < j, 0-based
    std::map<Pair, Matrix> to_first;         // V_ij -> Gamma_i
    std::map<Pair, Matrix> to_second;        // V_ij -> Gamma_j
};

struct CechReport {
    bool pass = true;
    std::size_t image_dim = 0;
    std::string detail;
};

/// Im delta == tau(N), with the alternating signs of the 1-based convention.
CechReport cech_sign_equivalence(const CechData& d);
Matrix cech_delta(const CechData& d);
Matrix cech_relations(const CechData& d);
Matrix cech_tau(const CechData& d);

/// Coordinate-subspace model over a distributive quasi-lattice, under a random change of basis.
IndSystem random_prelocalizable(const QuasiLattice& index, std::size_t max_dim, std::uint64_t seed);
/// Labels with order-convex supports; maps may fail to be injective.
IndSystem random_system(const FinitePoset& index, std::size_t max_dim, std::uint64_t seed);

/// Canonical map colim X^I -> X(top) and whether it is invertible.
std::pair<Matrix, bool> join_cover_isomorphism(const IndSystem& sys, const Subset& I, Element top);

}  // namespace uf::ind
