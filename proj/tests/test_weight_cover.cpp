#include "doctest.h"

#include "ultrafun/cover.hpp"
#include "ultrafun/errors.hpp"
#include "ultrafun/weight.hpp"

using namespace uf;
using namespace uf::cone;

namespace {
Vector v(std::initializer_list<int> xs) {
    Vector out;
    for (int x : xs) out.emplace_back(x);
    return out;
}
Matrix m2(int a, int b, int c, int d) { return Matrix::from_rows({v({a, b}), v({c, d})}, 2); }
}  // namespace

TEST_CASE("bilinear_norm_constant") {
    CHECK(bilinear_norm_constant(BilinearForm::standard(1)) == 1);
    CHECK(bilinear_norm_constant(BilinearForm::standard(2)) == 2);
    CHECK(bilinear_norm_constant(BilinearForm(m2(1, 2, 2, 1))) == 6);
    CHECK_THROWS_AS(bilinear_norm_constant(BilinearForm::standard(3), 2), PreconditionError);
}

TEST_CASE("exp_membership") {
    WeightSpec w(SectorSet::half_lines(true, false), 1, 2);
    auto r = exp_membership(v({1}), w);
    CHECK(r.bounded);
    CHECK(r.certificate.size() == 2);

    WeightSpec w2(SectorSet::half_lines(true, false), Scalar(1, 2), 4);
    auto r2 = exp_membership(v({1}), w2);
    CHECK_FALSE(r2.bounded);
    REQUIRE(r2.violating);
    CHECK((*r2.violating)[0] > 0);

    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            CHECK_FALSE(exp_membership(v({0, 0}), WeightSpec(ConvexCone::whole(2), a, b)).bounded);

    // bounded iff A >= 1 and B >= 1 + 1/A
    for (int an = 1; an <= 6; ++an)
        for (int bn = 1; bn <= 8; ++bn) {
            Scalar A(an, 2), B(bn, 2);
            bool expect = A >= 1 && B >= 1 + 1 / A;
            CHECK(exp_membership(v({1}), WeightSpec(SectorSet::half_lines(true, false), A, B)).bounded == expect);
        }
}

TEST_CASE("weight and rho are opposite at y = 0 scaled by B") {
    WeightSpec w(ConvexCone(2, {v({1, 0}), v({0, 1})}), 2, 3);
    Vector x = v({-3, 2}), y = v({1, -1});
    CHECK(w.rho(x, y) == -Scalar(3, 2) + 3 * 3 + 3);
    CHECK(w.log_weight(x, y) == Scalar(3, 2) - 9 - 3);
}

TEST_CASE("multiplier_admissible") {
    auto id1 = BilinearForm::standard(1);
    WeightSpec w(SectorSet::half_lines(true, false), 2, 1);
    CHECK(multiplier_admissible(w, Vector{Scalar(2, 5)}, id1));
    CHECK_FALSE(multiplier_admissible(w, Vector{Scalar(1, 2)}, id1));
    WeightSpec w2(ConvexCone(2, {v({1, 0}), v({0, 1})}), 1, 1);
    CHECK(multiplier_admissible(w2, Vector{Scalar(1, 5), Scalar(1, 5)}, BilinearForm::standard(2)));
}

TEST_CASE("simplicial_cover k=1") {
    auto c = simplicial_cover({v({1}), v({-1})}, BilinearForm::standard(1));
    CHECK(c.K[0] == ConvexCone::ray(v({-1})));
    CHECK(c.K[1] == ConvexCone::ray(v({1})));
    CHECK(c.Kij.at({0, 1}) == ConvexCone::zero(1));
    CHECK(c.Gamma[0] == ConvexCone::ray(v({-1})));
    CHECK(c.Gamma[1] == ConvexCone::ray(v({1})));
    for (const auto& chk : check_cover(c)) CHECK_MESSAGE(chk.pass, chk.name);
}

TEST_CASE("simplicial_cover k=2 and k=3") {
    auto c = simplicial_cover({v({1, 0}), v({0, 1}), v({-1, -1})}, BilinearForm::standard(2));
    for (const auto& chk : check_cover(c)) CHECK_MESSAGE(chk.pass, chk.name);
    CHECK(c.Kij.at({0, 1}) == ConvexCone::ray(v({-1, -1})));
    auto c3 = simplicial_cover({v({1, 0, 0}), v({0, 1, 0}), v({0, 0, 1}), v({-1, -1, -1})}, BilinearForm::standard(3));
    for (const auto& chk : check_cover(c3)) CHECK_MESSAGE(chk.pass, chk.name);
    CHECK_THROWS_AS(simplicial_cover({v({1, 0}), v({1, 0}), v({0, 1})}, BilinearForm::standard(2)), PreconditionError);
}
