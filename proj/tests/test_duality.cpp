#include <doctest.h>

#include "helpers.hpp"
#include "kac/duality.hpp"

using namespace kac;

namespace {

TwistedCoaction translation(const HopfPtr& K) { return {Coaction::from_matrix(K->alg, K, K->comult), Vec()}; }

void check_all(const DualityData& dd, double tol) {
    ResidualReport r = check_duality_data(dd);
    r.merge(check_psi(dd));
    r.merge(verify_duality(dd));
    CHECK(r.all_pass());
    CHECK(r.max_residual() < tol);
}

}  // namespace

TEST_SUITE("duality") {

TEST_CASE("double crossed product of translations") {
    for (int n : {2, 3}) {
        HopfPtr H = build_group_algebra(cyclic_group(n));
        DualityData dd = build_duality(translation(dual(*H)), H);
        CHECK(dd.size() == n);
        check_all(dd, 1e-9);
        HopfPtr C = build_function_algebra(cyclic_group(n));
        check_all(build_duality(translation(C), dual(*C)), 1e-9);
    }
}

TEST_CASE("duality for a twisted inner coaction") {
    test::InnerExample ex = test::inner_z3();
    Rng rng(31);
    TwistedCoaction t = exterior_transform({ex.rho, Vec()}, test::random_counital(ex.rho, rng));
    check_all(build_duality(t, ex.H), 1e-8);
}

TEST_CASE("Psi is onto") {
    HopfPtr C = build_function_algebra(cyclic_group(2));
    DualityData dd = build_duality(translation(C), dual(*C));
    Rng rng(2);
    Vec z = rng.cvec(dd.cp2->dim());
    Vec m = psi_inv(dd, z);
    CHECK(max_abs(Vec(psi(dd, m) - z)) < 1e-9);
}

TEST_CASE("witnesses transport through the duality") {
    test::InnerExample ex = test::inner_z3();
    DualityData dd = build_duality({ex.rho, Vec()}, ex.H);
    Vec w2 = transport_witness_dual(dd, ex.w);
    TwistedCoaction t2{dd.rho2, Vec()};
    CHECK(check_witness(amplify({ex.rho, Vec()}, dd.size()), amplify_witness(ex.w, 9, 3, dd.size())).all_pass());
    CHECK(max_abs(Vec(compress_witness(amplify_witness(ex.w, 9, 3, 3), 9, 3, 3) - ex.w)) == 0.0);
    CHECK(check_witness(t2, w2).all_pass());
}

}
