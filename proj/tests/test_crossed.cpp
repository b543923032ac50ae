#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "kac/crossed.hpp"
#include "kac/fdca.hpp"

using namespace kac;

namespace {

TwistedCoaction translation(const HopfPtr& K) { return {Coaction::from_matrix(K->alg, K, K->comult), Vec()}; }

}  // namespace

TEST_SUITE("crossed") {

TEST_CASE("translation crossed products are full matrix algebras") {
    for (const HopfPtr& K : test::all_builders()) {
        if (K->N > 4) continue;
        CAPTURE(K->label);
        CrossedPtr cp = build_crossed(translation(K), dual(*K));
        CHECK(check_crossed(*cp).all_pass());
        CHECK(check_V(*cp).all_pass());
        CHECK(check_saturated(*cp));
        WedderburnData wd = wedderburn(*to_struct(*cp));
        CHECK(wd.blocks == std::vector<int>{K->N});
    }
}

TEST_CASE("crossed product of the group algebra dual") {
    HopfPtr H = build_group_algebra(symmetric_group3());
    HopfPtr K = dual(*H);
    CrossedPtr cp = build_crossed(translation(K), H);
    CHECK(cp->dim() == 36);
    CHECK(check_crossed(*cp).all_pass());
    CHECK(wedderburn(*to_struct(*cp)).blocks == std::vector<int>{6});
}

TEST_CASE("twisted crossed product") {
    test::InnerExample ex = test::inner_z3();
    Rng rng(21);
    TwistedCoaction t = exterior_transform({ex.rho, Vec()}, test::random_counital(ex.rho, rng));
    CrossedPtr cp = build_crossed(t, ex.H);
    ResidualReport r = check_crossed(*cp);
    CHECK(r.all_pass());
    CHECK(check_V(*cp).all_pass());
    // Exterior equivalent to the trivial coaction, so M_3 (x) C^3; saturated
    // because M_3 is simple.
    CHECK(check_saturated(*cp));
    std::vector<int> b = wedderburn(*to_struct(*cp)).blocks;
    std::sort(b.begin(), b.end());
    CHECK(b == std::vector<int>{3, 3, 3});
}

TEST_CASE("trivial coaction is not saturated") {
    auto A = std::make_shared<MatAlg>(2);
    HopfPtr K = build_function_algebra(cyclic_group(2));
    CrossedPtr cp = build_crossed({Coaction::trivial(A, K), Vec()}, dual(*K));
    CHECK(check_crossed(*cp).all_pass());
    CHECK_FALSE(check_saturated(*cp));
}

TEST_CASE("dual coaction is a coaction") {
    HopfPtr K = build_function_algebra(cyclic_group(3));
    CrossedPtr cp = build_crossed(translation(K), dual(*K));
    Coaction rh = dual_coaction(cp);
    CHECK(validate_coaction(rh).all_pass());
    // The base is fixed by the dual coaction.
    Rng rng(1);
    Vec a = cp->embed(rng.cvec(3));
    CHECK(max_abs(Vec(rh(a) - kron(a, cp->acting()->one()))) < 1e-12);
}

TEST_CASE("iterated crossed product") {
    HopfPtr K = build_function_algebra(cyclic_group(2));
    CrossedPtr cp = build_crossed(translation(K), dual(*K));
    CrossedPtr cp2 = iterate_crossed(cp);
    CHECK(cp2->dim() == 8);
    CHECK(check_crossed(*cp2).all_pass());
    // C(Z2) (x) M_2.
    CHECK(wedderburn(*to_struct(*cp2)).blocks == std::vector<int>{2, 2});
}

TEST_CASE("exterior equivalent coactions have isomorphic crossed products") {
    test::InnerExample ex = test::inner_z3();
    Rng rng(22);
    Vec v = test::random_counital(ex.rho, rng);
    TwistedCoaction t1{ex.rho, Vec()};
    TwistedCoaction t2 = exterior_transform(t1, v);
    CrossedPtr c1 = build_crossed(t1, ex.H), c2 = build_crossed(t2, ex.H);
    ExteriorIso iso = iso_exterior(*c1, *c2, v);
    CHECK(iso.report.all_pass());
    Vec x = rng.cvec(c1->dim()), y = rng.cvec(c1->dim());
    CHECK(max_abs(Vec(iso.phi * c1->mul(x, y) - c2->mul(iso.phi * x, iso.phi * y))) < 1e-9);
    CHECK(max_abs(Vec(iso.psi * (iso.phi * x) - x)) < 1e-9);
}

TEST_CASE("E1 is a conditional expectation") {
    test::InnerExample ex = test::inner_z3();
    CrossedPtr cp = build_crossed({ex.rho, Vec()}, ex.H);
    Rng rng(23);
    Vec a = rng.cvec(9), b = rng.cvec(9), x = rng.cvec(cp->dim());
    Vec lhs = cp->E1(cp->mul(cp->mul(cp->embed(a), x), cp->embed(b)));
    Vec rhs = ex.A->mul(ex.A->mul(a, cp->E1(x)), b);
    CHECK(max_abs(Vec(lhs - rhs)) < 1e-12);
    CHECK(max_abs(Vec(cp->E1(cp->embed(a)) - a)) < 1e-12);
    Vec pos = cp->mul(cp->star(x), x);
    CHECK(ex.A->to_mat(cp->E1(pos)).selfadjointView<Eigen::Lower>().eigenvalues().minCoeff() > -1e-10);
}

TEST_CASE("mismatched acting algebra is rejected") {
    HopfPtr K = build_function_algebra(cyclic_group(2));
    CHECK_THROWS_AS(build_crossed(translation(K), build_group_algebra(cyclic_group(3))), ParentMismatch);
}

}
