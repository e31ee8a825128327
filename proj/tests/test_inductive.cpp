#include "doctest.h"

#include "ultrafun/errors.hpp"
#include "ultrafun/inductive.hpp"

using namespace uf;
using namespace uf::ind;
using lattice::FinitePoset;

namespace {

Matrix col(std::initializer_list<int> xs) {
    Vector v;
    for (int x : xs) v.emplace_back(x);
    return Matrix::from_columns({v}, v.size());
}

IndSystem remark_system() {
    auto p = FinitePoset::from_pairs({"alpha", "beta", "gamma", "delta"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    return IndSystem(p, {1, 1, 1, 1}, {{{0, 2}, col({1})}, {{0, 3}, col({-1})}, {{1, 2}, col({1})}, {{1, 3}, col({1})}});
}

FinitePoset p_of_r() { return FinitePoset::from_pairs({"0", "+", "-"}, {{0, 1}, {0, 2}}); }
FinitePoset k_of_r() { return FinitePoset::from_pairs({"0", "+", "-", "R"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

IndSystem coordinate_model() { return IndSystem(p_of_r(), {1, 2, 2}, {{{0, 1}, col({1, 0})}, {{0, 2}, col({1, 0})}}); }

FinitePoset powerset3() {
    std::vector<std::string> names;
    std::vector<std::vector<bool>> r(8, std::vector<bool>(8));
    for (std::size_t a = 0; a < 8; ++a) {
        names.push_back("s" + std::to_string(a));
        for (std::size_t b = 0; b < 8; ++b) r[a][b] = (a & b) == a;
    }
    return FinitePoset(names, r);
}

}  // namespace

TEST_CASE("validate") {
    CHECK(validate(remark_system()).pass);
    auto chain = FinitePoset::chain(3);
    IndSystem ok(chain, {1, 1, 1}, {{{0, 1}, col({2})}, {{1, 2}, col({3})}});
    CHECK(validate(ok).pass);
    CHECK(ok.rho(0, 2) == col({6}));
    IndSystem bad(chain, {1, 1, 1}, {{{0, 1}, col({2})}, {{1, 2}, col({3})}, {{0, 2}, col({5})}});
    auto r = validate(bad);
    CHECK_FALSE(r.pass);
    CHECK(r.witness == std::vector<Element>{0, 1, 2});
    CHECK_THROWS_AS(IndSystem(chain, {1, 2, 1}, {{{0, 1}, col({2})}, {{1, 2}, col({3})}}), DimensionError);
}

TEST_CASE("colimit examples") {
    auto sys = remark_system();
    auto c = colimit(sys);
    CHECK(c.dim == 0);
    for (const auto& [a, m] : c.projections) CHECK(m.is_zero());
    CHECK(c.relations.dim() == 4);

    IndSystem single(FinitePoset::chain(1), {2}, {});
    auto cs = colimit(single);
    CHECK(cs.dim == 2);
    CHECK(cs.projections.at(0) == Matrix::identity(2));

    CHECK(colimit(coordinate_model()).dim == 3);
    CHECK(covering_relations(sys, sys.index().all()) == all_pair_relations(sys, sys.index().all()));
}

TEST_CASE("tau") {
    auto sys = coordinate_model();
    CHECK(tau(sys, {0, 1, 2}, {0, 1, 2}) == Matrix::identity(3));
    auto t = tau(remark_system(), {0}, {0, 1, 2, 3});
    CHECK(t.rows() == 0);
    CHECK(t.cols() == 1);
    auto th = tau(sys, {0, 1}, {0, 1, 2});
    CHECK(th.rank() == 2);
}

TEST_CASE("conditions") {
    auto sys = coordinate_model();
    for (const auto& r : check_conditions(sys, {Condition::I, Condition::II, Condition::III, Condition::IIIprime}))
        CHECK_MESSAGE(r.pass, to_string(r.condition));
    IndSystem rankdef(FinitePoset::chain(2), {2, 2}, {{{0, 1}, Matrix::from_rows({{1, 0}, {0, 0}}, 2)}});
    auto r = check_conditions(rankdef, {Condition::I}).front();
    CHECK_FALSE(r.pass);
    CHECK(r.family == std::vector<Element>{0, 1});
    CHECK(replay(rankdef, r));
    CHECK_THROWS_AS(check_conditions(remark_system(), {Condition::I}), lattice::LatticeError);
}

TEST_CASE("III and III' agree on a finite index") {
    // three distinct lines in Q^2 over the atoms of the powerset of {a, b, c}
    auto p = FinitePoset::from_pairs({"0", "a", "b", "c", "ab", "ac", "bc", "1"},
                                     {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {1, 5}, {3, 5}, {2, 6}, {3, 6},
                                      {4, 7}, {5, 7}, {6, 7}});
    Matrix la = col({1, 0}), lb = col({0, 1}), lc = col({1, 1});
    Matrix id2 = Matrix::identity(2);
    IndSystem sys(p, {0, 1, 1, 1, 2, 2, 2, 2},
                  {{{0, 1}, Matrix(1, 0)}, {{0, 2}, Matrix(1, 0)}, {{0, 3}, Matrix(1, 0)},
                   {{1, 4}, la}, {{2, 4}, lb}, {{1, 5}, la}, {{3, 5}, lc}, {{2, 6}, lb}, {{3, 6}, lc},
                   {{4, 7}, id2}, {{5, 7}, id2}, {{6, 7}, id2}});
    REQUIRE(validate(sys).pass);
    auto rs = check_conditions(sys, {Condition::I, Condition::II, Condition::III, Condition::IIIprime});
    CHECK(rs[0].pass);
    CHECK(rs[1].pass);
    CHECK_FALSE(rs[2].pass);
    CHECK(replay(sys, rs[2]));
    CHECK_FALSE(rs[3].pass);
    CHECK(replay(sys, rs[3]));
    auto chain = random_prelocalizable(lattice::validate_quasilattice(FinitePoset::chain(3)), 2, 4);
    CHECK(check_localizable(chain).pass);
}

TEST_CASE("pushforward") {
    auto sys = coordinate_model();
    lattice::LatticeMorphism theta{lattice::validate_quasilattice(p_of_r()), lattice::validate_quasilattice(k_of_r()),
                                   {0, 1, 2}};
    auto z = pushforward(sys, theta);
    CHECK(z.dim(3) == 3);
    CHECK(z.dim(1) == 2);
    for (const auto& r : check_conditions(z, {Condition::I, Condition::II, Condition::III, Condition::IIIprime}))
        CHECK(r.pass);

    auto q = lattice::validate_quasilattice(powerset3());
    auto x = random_prelocalizable(q, 3, 7);
    lattice::LatticeMorphism id{q, q, {0, 1, 2, 3, 4, 5, 6, 7}};
    auto zi = pushforward(x, id);
    CHECK(zi.dims() == x.dims());

    IndSystem zero(p_of_r(), {0, 0, 0}, {{{0, 1}, Matrix(0, 0)}, {{0, 2}, Matrix(0, 0)}});
    auto zz = pushforward(zero, theta);
    for (std::size_t d : zz.dims()) CHECK(d == 0);
}

TEST_CASE("random generators") {
    auto q = lattice::validate_quasilattice(powerset3());
    for (std::uint64_t s = 0; s < 5; ++s) {
        auto x = random_prelocalizable(q, 3, s);
        CHECK(validate(x).pass);
        for (const auto& r : check_conditions(x, {Condition::I, Condition::II, Condition::III, Condition::IIIprime}))
            CHECK(r.pass);
    }
    auto pr = random_prelocalizable(lattice::validate_quasilattice(p_of_r()), 3, 1);
    auto inter = Subspace::column_space(pr.rho(0, 1));
    CHECK(inter.dim() == pr.dim(0));
    auto m3 = lattice::validate_quasilattice(
        FinitePoset::from_pairs({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
    CHECK_THROWS_AS(random_prelocalizable(m3, 2, 1), lattice::LatticeError);
    auto chain = random_prelocalizable(lattice::validate_quasilattice(FinitePoset::chain(4)), 3, 3);
    for (std::size_t a = 0; a + 1 < 4; ++a) CHECK(chain.dim(a) <= chain.dim(a + 1));
    for (std::uint64_t s = 0; s < 5; ++s) CHECK(validate(random_system(powerset3(), 3, s)).pass);
}

TEST_CASE("split, glue and hereditary intersection") {
    auto q = lattice::validate_quasilattice(powerset3());
    auto x = random_prelocalizable(q, 2, 11);
    Subset I1{0, 1, 2, 3}, I2{0, 4};  // hereditary: subsets of {0,1} and of {2}
    auto n = all_pair_relations(x, {0, 1, 2, 3, 4});
    for (const auto& v : n.basis()) {
        auto [a, b] = split_over_union(x, I1, I2, v);
        CHECK(add(a, b) == v);
        CHECK(all_pair_relations(x, I1).contains(a));
        CHECK(all_pair_relations(x, I2).contains(b));
    }
    auto g = x.sigma(Vector(x.dim(0), Scalar(1)), 0, 1);
    auto [g1, g2] = split_over_union(x, I1, I2, g);
    CHECK(g1 == g);
    CHECK(is_zero(g2));

    Subset J = x.index().all();
    auto c12 = colimit(x, {0});
    for (std::size_t i = 0; i < c12.dim; ++i) {
        Vector e(c12.dim);
        e[i] = 1;
        auto x1 = tau(x, {0}, I1) * e;
        auto x2 = tau(x, {0}, I2) * e;
        CHECK(glue(x, I1, I2, J, x1, x2) == e);
    }
    auto c1 = colimit(x, I1);
    CHECK(glue(x, I1, I1, J, Vector(c1.dim), Vector(c1.dim)) == Vector(c1.dim));
    if (c1.dim > 0) {
        Vector e(c1.dim);
        e[0] = 1;
        CHECK(glue(x, I1, I1, J, e, e) == e);
    }
    for (const Subset& I : {Subset{0}, I1, I2, J}) {
        auto r = hereditary_intersection_check(x, I);
        CHECK(r.preconditions);
        CHECK(r.pass);
    }
}

TEST_CASE("quotient presentation") {
    auto sys = coordinate_model();
    auto pr = quotient_presentation(sys, {1, 2});
    CHECK(pr.quotient_dim == 3);
    CHECK(pr.invertible);
    CHECK(pr.antisymmetric_agrees);
    CHECK(pr.decomposition_holds);
    auto dup = quotient_presentation(sys, {1, 2, 2, 1});
    CHECK(dup.quotient_dim == 3);
    CHECK(dup.invertible);
    CHECK(dup.antisymmetric_agrees);
    CHECK(dup.decomposition_holds);
    CHECK_THROWS_AS(quotient_presentation(sys, {1}), PreconditionError);
    auto q = lattice::validate_quasilattice(powerset3());
    auto x = random_prelocalizable(q, 2, 5);
    auto top = quotient_presentation(x, {7});
    CHECK(top.quotient_dim == x.dim(7));
    CHECK(top.invertible);
    CHECK_THROWS_AS(quotient_presentation(remark_system(), {2, 3}), PreconditionError);
}

TEST_CASE("cech sign equivalence") {
    CechData zero{{0, 0}, {}, {}, {}};
    CHECK(cech_sign_equivalence(zero).pass);
    CechData k1{{2, 2}, {{{0, 1}, 1}}, {{{0, 1}, col({1, 2})}}, {{{0, 1}, col({3, -1})}}};
    auto r = cech_sign_equivalence(k1);
    CHECK(r.pass);
    CHECK(r.image_dim == 1);
}

TEST_CASE("join cover isomorphism") {
    auto q = lattice::validate_quasilattice(powerset3());
    auto x = random_prelocalizable(q, 3, 2);
    auto I = lattice::wedge_closure(q, {3, 5, 6});  // {0,1}, {0,2}, {1,2} join to the top
    auto [m, inv] = join_cover_isomorphism(x, I, 7);
    CHECK(inv);
    CHECK(m.rows() == x.dim(7));
}
