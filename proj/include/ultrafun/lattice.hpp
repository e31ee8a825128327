#pragma once

#include "ultrafun/sector.hpp"
#include "ultrafun/weight.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uf::lattice {

using Element = std::size_t;
using Subset = std::vector<Element>;  // sorted, no duplicates

struct LatticeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxPosetSize = 64;

/// Finite partial order on named elements 0..n-1.
class FinitePoset {
public:
    FinitePoset() = default;
    /// Validates reflexivity, antisymmetry and transitivity of an explicit relation.
    FinitePoset(std::vector<std::string> names, std::vector<std::vector<bool>> leq);
    /// Reflexive-transitive closure of the given pairs (a <= b); rejects cycles.
    static FinitePoset from_pairs(std::vector<std::string> names, const std::vector<std::pair<Element, Element>>& pairs);
    static FinitePoset chain(std::size_t n);

    std::size_t size() const noexcept { return names_.size(); }
    bool leq(Element a, Element b) const { return leq_[a][b]; }
    bool less(Element a, Element b) const { return a != b && leq_[a][b]; }
    const std::string& name(Element a) const { return names_[a]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<Element> find(const std::string& name) const;
    const std::vector<std::vector<bool>>& relation() const noexcept { return leq_; }

    Subset lower_bounds(const Subset& s) const;
    Subset upper_bounds(const Subset& s) const;
    std::optional<Element> greatest(const Subset& s) const;
    std::optional<Element> least(const Subset& s) const;
    Subset maximal(const Subset& s) const;
    /// Greatest lower bound of a nonempty subset, if it exists.
    std::optional<Element> infimum(const Subset& s) const;
    std::optional<Element> supremum(const Subset& s) const;
    bool bounded_above(const Subset& s) const { return !upper_bounds(s).empty(); }
    /// Pairs (a, b) with a < b and nothing strictly between.
    std::vector<std::pair<Element, Element>> covering_pairs() const;
    /// All pairs a <= b, including a == b.
    std::vector<std::pair<Element, Element>> comparable_pairs() const;
    Subset all() const;

    bool operator==(const FinitePoset&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> leq_;
};

/// Poset with total meet table and partial join table (defined exactly on bounded-above pairs).
class QuasiLattice {
public:
    QuasiLattice() = default;
    const FinitePoset& poset() const noexcept { return poset_; }
    std::size_t size() const noexcept { return poset_.size(); }
    bool leq(Element a, Element b) const { return poset_.leq(a, b); }
    const std::string& name(Element a) const { return poset_.name(a); }
    Element meet(Element a, Element b) const { return meet_[a][b]; }
    std::optional<Element> join(Element a, Element b) const { return join_[a][b]; }
    bool bounded(Element a, Element b) const { return poset_.bounded_above({a, b}); }
    bool is_lattice() const;
    std::optional<Element> top() const { return poset_.greatest(poset_.all()); }
    std::optional<Element> bottom() const { return poset_.least(poset_.all()); }

private:
    FinitePoset poset_;
    std::vector<std::vector<Element>> meet_;
    std::vector<std::vector<std::optional<Element>>> join_;
    friend QuasiLattice validate_quasilattice(const FinitePoset& p);
};

/// Computes the tables or throws LatticeError naming the first failing pair.
QuasiLattice validate_quasilattice(const FinitePoset& p);

struct ReportEntry {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct Report {
    std::vector<ReportEntry> entries;
    bool pass() const;
    const ReportEntry* first_failure() const;
    std::string to_string() const;
};

struct DistributivityReport {
    bool distributive = true;
    std::optional<std::vector<Element>> counterexample;  // (a1, a2, a3) with a2, a3 bounded
    /// Only set for lattices in which every nonempty subset has an infimum.
    std::optional<bool> infinitely_distributive;
    std::optional<std::pair<Element, Subset>> family_counterexample;
    bool families_exhaustive = true;  // false when the family-size cap truncated the search
};

DistributivityReport is_distributive(const QuasiLattice& q, std::size_t family_cap = 12);

struct LatticeMorphism {
    QuasiLattice source;
    QuasiLattice target;
    std::vector<Element> map;
};

Report check_morphism(const LatticeMorphism& m);
/// Morphism checks plus: source distributive, target a distributive lattice, join generation.
Report check_t1_hypotheses(const LatticeMorphism& m);
/// lambda(a') <= lambda(a) implies a' <= a; lambda(inf S) = inf lambda(S) for all nonempty S (up to cap).
Report check_order_reflection(const LatticeMorphism& m, std::size_t family_cap = 12);

Subset hereditary_closure(const QuasiLattice& q, const Subset& s);
bool is_hereditary(const QuasiLattice& q, const Subset& s);
Subset wedge_closure(const QuasiLattice& q, const Subset& s);
Subset normalize(Subset s);

/// Cone (quasi-)lattices from a family of proper cones in dimension k <= 2.
struct ConeLattice {
    QuasiLattice A;                  // proper cones: {0}, the inputs, closed under meets and bounded joins
    std::vector<cone::SectorSet> a_cones;
    QuasiLattice B;                  // all unions of elements of A
    std::vector<cone::SectorSet> b_cones;
    LatticeMorphism lambda;          // inclusion A -> B
};

ConeLattice cone_lattice_from_family(const std::vector<cone::AnyCone>& cones);

/// Subsets of the elements as bitmasks, for families enumeration.
std::vector<Subset> nonempty_subsets(const Subset& universe, std::size_t max_size);

}  // namespace uf::lattice
