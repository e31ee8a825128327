#include "doctest.h"

#include "ultrafun/lattice.hpp"

using namespace uf;
using namespace uf::lattice;

namespace {

FinitePoset powerset(std::size_t n) {
    std::vector<std::string> names;
    std::vector<std::vector<bool>> r(1u << n, std::vector<bool>(1u << n));
    for (std::size_t a = 0; a < (1u << n); ++a) {
        names.push_back("s" + std::to_string(a));
        for (std::size_t b = 0; b < (1u << n); ++b) r[a][b] = (a & b) == a;
    }
    return FinitePoset(names, r);
}

FinitePoset diamond() {
    return FinitePoset::from_pairs({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FinitePoset remark_poset() {
    return FinitePoset::from_pairs({"alpha", "beta", "gamma", "delta"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

FinitePoset p_of_r() { return FinitePoset::from_pairs({"0", "+", "-"}, {{0, 1}, {0, 2}}); }
FinitePoset k_of_r() { return FinitePoset::from_pairs({"0", "+", "-", "R"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("poset validation") {
    CHECK_THROWS_AS(FinitePoset::from_pairs({"a", "b"}, {{0, 1}, {1, 0}}), LatticeError);
    CHECK_THROWS_AS(FinitePoset({"a", "b"}, {{true, true}, {false, false}}), LatticeError);
    CHECK(FinitePoset::chain(3).covering_pairs().size() == 2);
}

TEST_CASE("validate_quasilattice") {
    auto c = validate_quasilattice(FinitePoset::chain(3));
    CHECK(c.is_lattice());
    CHECK(c.meet(0, 2) == 0);
    CHECK(*c.join(0, 2) == 2);
    try {
        validate_quasilattice(remark_poset());
        FAIL("expected an error");
    } catch (const LatticeError& e) {
        CHECK(std::string(e.what()) == "pair without infimum: {alpha, beta}");
    }
    auto p = validate_quasilattice(p_of_r());
    CHECK_FALSE(p.is_lattice());
    CHECK_FALSE(p.join(1, 2).has_value());
    CHECK(p.meet(1, 2) == 0);
}

TEST_CASE("is_distributive") {
    auto r = is_distributive(validate_quasilattice(powerset(3)));
    CHECK(r.distributive);
    REQUIRE(r.infinitely_distributive);
    CHECK(*r.infinitely_distributive);
    auto m3 = is_distributive(validate_quasilattice(diamond()));
    CHECK_FALSE(m3.distributive);
    CHECK(m3.counterexample.has_value());
    CHECK_FALSE(*m3.infinitely_distributive);
    auto pr = is_distributive(validate_quasilattice(p_of_r()));
    CHECK(pr.distributive);
    CHECK_FALSE(pr.infinitely_distributive.has_value());
}

TEST_CASE("morphisms and t1 hypotheses") {
    LatticeMorphism theta{validate_quasilattice(p_of_r()), validate_quasilattice(k_of_r()), {0, 1, 2}};
    CHECK(check_t1_hypotheses(theta).pass());
    CHECK(check_order_reflection(theta).pass());
    auto l = validate_quasilattice(powerset(2));
    LatticeMorphism id{l, l, {0, 1, 2, 3}};
    CHECK(check_morphism(id).pass());
    auto ch = validate_quasilattice(FinitePoset::chain(2));
    LatticeMorphism collapse{ch, ch, {0, 0}};
    auto rep = check_morphism(collapse);
    REQUIRE(rep.first_failure());
    CHECK(rep.first_failure()->name == "injective");
}

TEST_CASE("hereditary and wedge closures") {
    auto c = validate_quasilattice(FinitePoset::chain(3));
    CHECK(hereditary_closure(c, {2}) == Subset{0, 1, 2});
    auto k = validate_quasilattice(k_of_r());
    CHECK(hereditary_closure(k, {1}) == Subset{0, 1});
    CHECK(is_hereditary(k, {0, 2}));
    CHECK_FALSE(is_hereditary(k, {2}));
    CHECK(wedge_closure(k, {1, 2}) == Subset{0, 1, 2});
}

TEST_CASE("cone_lattice_from_family") {
    using cone::SectorSet;
    auto r = cone_lattice_from_family({SectorSet::half_lines(true, false), SectorSet::half_lines(false, true)});
    CHECK(r.A.size() == 3);
    CHECK(r.B.size() == 4);
    CHECK(check_t1_hypotheses(r.lambda).pass());
    CHECK_THROWS(cone_lattice_from_family({SectorSet::whole(1)}));

    auto single = cone_lattice_from_family({SectorSet::sector(Vector{1, 0}, Vector{1, 1})});
    CHECK(single.A.size() == 2);
    CHECK(single.B.size() == 2);

    auto three = cone_lattice_from_family({SectorSet::sector(Vector{1, 0}, Vector{-1, 1}),
                                           SectorSet::sector(Vector{0, 1}, Vector{-1, -1}),
                                           SectorSet::sector(Vector{-1, 1}, Vector{1, -2})});
    CHECK(check_t1_hypotheses(three.lambda).pass());
    CHECK(check_order_reflection(three.lambda).pass());
    auto d = is_distributive(three.B);
    CHECK(d.distributive);
    CHECK(d.infinitely_distributive.value_or(false));
    bool has_meet = false;
    for (const auto& s : three.a_cones)
        if (s == SectorSet::sector(Vector{0, 1}, Vector{-1, 1})) has_meet = true;
    CHECK(has_meet);
}
