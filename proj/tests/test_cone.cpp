#include "doctest.h"

#include "ultrafun/cone.hpp"
#include "ultrafun/errors.hpp"
#include "ultrafun/lp.hpp"
#include "ultrafun/sector.hpp"

using namespace uf;
using namespace uf::cone;

namespace {
Vector v(std::initializer_list<int> xs) {
    Vector out;
    for (int x : xs) out.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("lp: small optimum and infeasibility") {
    lp::Program p(2);
    p.objective = v({1, 1});
    p.maximize = true;
    p.add(v({1, 2}), lp::Sense::LessEq, 4);
    p.add(v({3, 1}), lp::Sense::LessEq, 6);
    auto r = lp::solve(p);
    REQUIRE(r.status == lp::Status::Optimal);
    CHECK(r.value == Scalar(14, 5));

    lp::Program q(1);
    q.add(v({1}), lp::Sense::GreaterEq, 2);
    q.add(v({1}), lp::Sense::LessEq, 1);
    CHECK_FALSE(lp::feasible(q));

    lp::Program u(1);
    u.set_free(0);
    u.objective = v({1});
    CHECK(lp::solve(u).status == lp::Status::Unbounded);
}

TEST_CASE("dual_cone examples") {
    auto std2 = BilinearForm::standard(2);
    CHECK(dual_cone(ConvexCone::zero(2), std2) == ConvexCone::whole(2));
    ConvexCone q1(2, {v({1, 0}), v({0, 1})});
    CHECK(dual_cone(q1, std2) == q1);
    ConvexCone half(2, {v({1, -1}), v({-1, 1}), v({1, 1})});
    CHECK(dual_cone(ConvexCone::ray(v({1, 1})), std2) == half);
    CHECK_THROWS_AS(dual_cone(q1, BilinearForm::standard(3)), DimensionError);
}

TEST_CASE("is_proper examples") {
    CHECK(is_proper(SectorSet::half_lines(true, false)));
    CHECK_FALSE(is_proper(SectorSet::whole(1)));
    // 181 and 179 degree openings, approximated by rational directions
    CHECK_FALSE(is_proper(SectorSet::sector(v({1, 0}), v({-100, -2}))));
    CHECK(is_proper(SectorSet::sector(v({1, 0}), v({-100, 2}))));
    CHECK_FALSE(is_proper(ConvexCone(2, {v({1, 0}), v({-1, 0})})));
}

TEST_CASE("meet, join, leq examples") {
    auto q1 = SectorSet::sector(v({1, 0}), v({0, 1}));
    auto q2 = SectorSet::sector(v({0, 1}), v({-1, 0}));
    auto m = meet(q1, q2);
    CHECK(m == SectorSet::sector(v({0, 1}), v({0, 1})));
    CHECK(join(SectorSet::half_lines(true, false), SectorSet::half_lines(false, true)) == SectorSet::whole(1));
    ConvexCone upper(2, {v({1, 0}), v({-1, 0}), v({0, 1})});
    CHECK(leq(ConvexCone::ray(v({1, 1})), upper));
    CHECK_FALSE(leq(upper, ConvexCone::ray(v({1, 1}))));
    auto j = join(q1, q2);
    CHECK(j == SectorSet::sector(v({1, 0}), v({-1, 0})));
    CHECK(j.as_convex().has_value());
    auto q3 = SectorSet::sector(v({-1, 0}), v({0, -1}));
    auto three = join(j, q3);
    CHECK_FALSE(three.as_convex().has_value());
    CHECK(join(three, SectorSet::sector(v({0, -1}), v({1, 0}))).is_full());
    CHECK(three.contains(v({-1, -1})));
    CHECK_FALSE(three.contains(v({1, -1})));
    CHECK(three.contains(v({1, 0})));
}

TEST_CASE("distance examples") {
    ConvexCone q1(2, {v({1, 0}), v({0, 1})});
    CHECK(distance(q1, v({1, 2})) == 0);
    auto d = distance_with_witness(q1, v({-3, 2}));
    CHECK(d.value == 3);
    CHECK(distance(q1, v({-6, 4})) == 6);
    auto s = join(SectorSet::sector(v({1, 0}), v({1, 1})), SectorSet::sector(v({-1, 0}), v({-1, -1})));
    CHECK(distance(s, v({0, 2})) == 1);
    CHECK(distance(s, v({-2, -1})) == 0);
}

TEST_CASE("covers_space") {
    std::vector<ConvexCone> cs{ConvexCone(2, {v({1, 0}), v({0, 1})}), ConvexCone(2, {v({0, 1}), v({-1, -1})}),
                               ConvexCone(2, {v({-1, -1}), v({1, 0})})};
    CHECK(covers_space(cs, 2));
    cs.pop_back();
    CHECK_FALSE(covers_space(cs, 2));
}
