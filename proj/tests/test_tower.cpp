#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "kac/tower.hpp"

using namespace kac;

namespace {

struct Case {
    HopfPtr H;
    int max_level;
};

std::vector<Case> tower_cases() {
    return {{build_group_algebra(cyclic_group(2)), 3},
            {build_function_algebra(cyclic_group(2)), 3},
            {build_group_algebra(cyclic_group(3)), 2},
            {build_function_algebra(cyclic_group(3)), 2}};
}

}  // namespace

TEST_SUITE("tower") {

TEST_CASE("base is a single full matrix block for every builder") {
    for (const HopfPtr& H : test::all_builders()) {
        CAPTURE(H->label);
        TowerBase b = build_base(H);
        CHECK(b.N == H->N);
        CHECK(b.wd.blocks == std::vector<int>{H->N});
        ResidualReport r = check_base(b);
        CHECK(r.all_pass());
    }
}

TEST_CASE("levels satisfy closed forms, cocycle identity and compatibility") {
    for (const Case& c : tower_cases()) {
        CAPTURE(c.H->label);
        TowerBase b = build_base(c.H);
        std::vector<TowerLevel> lv;
        for (int n = 1; n <= c.max_level + 1; ++n) lv.push_back(build_level(b, n));
        for (int n = 1; n <= c.max_level; ++n) {
            CAPTURE(n);
            ResidualReport r = check_level(b, lv[n - 1], &lv[n]);
            CHECK(r.all_pass());
            CHECK(r.residual("closed form from comatrix units") < 1e-12);
            CHECK(r.residual("closed form from dual comatrix units") < 1e-12);
            CHECK(lv[n - 1].size() == static_cast<int>(std::pow(b.N, n)));
        }
    }
}

TEST_CASE("inclusion is a unital *-homomorphism") {
    TowerBase b = build_base(build_group_algebra(cyclic_group(3)));
    TowerLevel l1 = build_level(b, 1);
    const MatAlg& A = *l1.A;
    const MatAlg& B = *build_level(b, 2).A;
    Rng rng(3);
    Vec x = rng.cvec(A.dim()), y = rng.cvec(A.dim());
    CHECK(max_abs(Vec(tower_inclusion(l1, A.mul(x, y)) - B.mul(tower_inclusion(l1, x), tower_inclusion(l1, y)))) <
          1e-12);
    CHECK(max_abs(Vec(tower_inclusion(l1, A.star(x)) - B.star(tower_inclusion(l1, x)))) < 1e-14);
    CHECK(max_abs(Vec(tower_inclusion(l1, A.one()) - B.one())) == 0.0);
}

TEST_CASE("scope is the previous level") {
    TowerBase b = build_base(build_function_algebra(cyclic_group(2)));
    TowerLevel l1 = build_level(b, 1), l2 = build_level(b, 2);
    CHECK(l2.scope.size() == 4);
    for (const Vec& s : l2.scope) CHECK(max_abs(Vec(l2.A->mul(s, l2.p) - l2.A->mul(l2.p, s))) < 1e-14);
    CHECK(l1.scope.size() == 1);
}

TEST_CASE("level size limits") {
    TowerBase b = build_base(build_group_algebra(cyclic_group(3)));
    CHECK_THROWS_AS(build_level(b, 0), LevelTooLarge);
    CHECK_THROWS_AS(build_level(b, 4, 1000), LevelTooLarge);
    CHECK_NOTHROW(build_level(b, 2, 1000));
}


TEST_CASE("intertwiner of a unital homomorphism") {
    Rng rng(8);
    const int m = 3, n = 2;
    Mat W = rng.unitary(m * n);
    auto rho = [&](const Mat& x) { return Mat(W * kron(x, Mat::Identity(n, n)) * W.adjoint()); };
    Intertwiner it = intertwine_homomorphism(rho, m, n);
    CHECK(it.report.all_pass());
    Mat x = rng.cmat(m, m);
    CHECK(max_abs(Mat(it.u * kron(x, Mat::Identity(n, n)) * it.u.adjoint() - rho(x))) < 1e-9);
}

TEST_CASE("intertwiner obstructions") {
    const int m = 2, n = 2;
    auto nonunital = [&](const Mat& x) {
        Mat out = Mat::Zero(m * n, m * n);
        out.topLeftCorner(m, m) = x;
        return out;
    };
    CHECK_THROWS_AS(intertwine_homomorphism(nonunital, m, n), RankObstruction);
    auto scaled = [&](const Mat& x) { return Mat(0.5 * kron(x, Mat::Identity(n, n))); };
    CHECK_THROWS_AS(intertwine_homomorphism(scaled, m, n), RankObstruction);
}

TEST_CASE("tower coaction is implemented by u_n") {
    TowerBase b = build_base(build_function_algebra(cyclic_group(3)));
    TowerLevel l = build_level(b, 2);
    CHECK(check_witness(l.twisted(), l.u).all_pass());
}

}
