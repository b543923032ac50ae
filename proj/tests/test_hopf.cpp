#include <doctest.h>

#include "helpers.hpp"

using namespace kac;

TEST_SUITE("hopf") {

TEST_CASE("every builder satisfies the Hopf axioms") {
    for (const HopfPtr& H : test::all_builders()) {
        CAPTURE(H->label);
        ResidualReport r = validate_hopf(*H);
        CHECK(r.entries().size() == 9);
        CHECK(r.all_pass());
    }
}

TEST_CASE("tensor products of Hopf algebras") {
    HopfPtr a = build_function_algebra(cyclic_group(2));
    HopfPtr b = build_group_algebra(symmetric_group3());
    HopfPtr t = tensor_hopf(*a, *b);
    CHECK(t->N == 12);
    CHECK(validate_hopf(*t).all_pass());
    CHECK(appendix_span_check(*t) == 144);
}

TEST_CASE("double dual returns the original structure") {
    for (const HopfPtr& H : test::all_builders()) {
        CAPTURE(H->label);
        HopfPtr DD = dual(*dual(*H));
        CHECK(max_abs(Mat(DD->comult - H->comult)) < 1e-12);
        CHECK(max_abs(Mat(DD->antipode - H->antipode)) < 1e-12);
        for (int i = 0; i < H->N; ++i)
            for (int j = 0; j < H->N; ++j)
                CHECK(max_abs(Vec(DD->alg->mul(H->basis(i), H->basis(j)) - H->alg->mul(H->basis(i), H->basis(j)))) <
                      1e-12);
    }
}

TEST_CASE("pairing intertwines products and comultiplications") {
    HopfPtr H = build_group_algebra(symmetric_group3());
    HopfPtr D = dual(*H);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int k = 0; k < 6; ++k) {
                // (f_a f_b)(h_k) = (f_a (x) f_b)(Delta h_k)
                cd lhs = pair(*H, D->alg->mul(D->basis(a), D->basis(b)), H->basis(k));
                cd rhs = H->delta(H->basis(k))(a * 6 + b);
                CHECK(std::abs(lhs - rhs) < 1e-12);
            }
}

TEST_CASE("haar element and trace") {
    for (const HopfPtr& H : test::all_builders()) {
        CAPTURE(H->label);
        HaarPair hp = haar_pair(*H);
        CHECK(check_haar(*H, hp).all_pass());
        CHECK(std::abs(H->eps(hp.e) - 1.0) < 1e-12);
        // The trace is tracial and normalized on the unit.
        CHECK(std::abs(pair(*H, hp.tau, H->one()) - 1.0) < 1e-10);
    }
}

TEST_CASE("haar absorbs group elements in the group algebra") {
    HopfPtr H = build_group_algebra(cyclic_group(4));
    Vec e = haar_element(*H);
    for (int g = 0; g < 4; ++g) CHECK(max_abs(Vec(H->alg->mul(H->basis(g), e) - e)) < 1e-12);
    CHECK(max_abs(Vec(e - Vec::Constant(4, 0.25))) < 1e-12);
}

TEST_CASE("comatrix units of every builder") {
    for (const HopfPtr& H : test::all_builders()) {
        CAPTURE(H->label);
        ComatrixUnits cu = comatrix_units(*H);
        CHECK(cu.size() == H->N);
        ResidualReport r = check_comatrix(*H, cu, haar_pair(*H));
        CHECK(r.all_pass());
        CHECK(r.max_residual() < 1e-8);
    }
}

TEST_CASE("comatrix units are seed independent in their identities") {
    HopfPtr H = dual(*build_group_algebra(symmetric_group3()));
    for (std::uint64_t seed : {1, 2, 3}) CHECK(check_comatrix(*H, comatrix_units(*H, seed), haar_pair(*H)).all_pass());
}

TEST_CASE("span dimension is N^2") {
    for (const HopfPtr& H : test::all_builders()) {
        CAPTURE(H->label);
        CHECK(appendix_span_check(*H) == H->N * H->N);
    }
}

TEST_CASE("group validation") {
    CHECK_THROWS_AS(validate_group({{0, 1}, {0, 1}}), NotAGroup);
    CHECK_THROWS_AS(validate_group({{0, 1}, {1, 1}}), NotAGroup);
    CHECK_THROWS_AS(validate_group({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 0, 0}}), NotAGroup);
    CayleyTable s3 = symmetric_group3();
    CHECK_NOTHROW(validate_group(s3));
    auto inv = group_inverses(s3);
    int e = group_identity(s3);
    for (int g = 0; g < 6; ++g) CHECK(s3[g][inv[g]] == e);
}

TEST_CASE("inconsistent structure maps are rejected") {
    HopfPtr H = build_group_algebra(cyclic_group(2));
    CHECK_THROWS_AS(make_hopf(H->alg, Mat::Zero(3, 2), H->counit, H->antipode), StructureFailure);
}

TEST_CASE("a broken comultiplication fails validation") {
    HopfPtr H = build_group_algebra(cyclic_group(3));
    Mat c = H->comult;
    c(0, 0) = 0.5;
    HopfPtr B = make_hopf(H->alg, c, H->counit, H->antipode);
    CHECK_FALSE(validate_hopf(*B).all_pass());
}

}
