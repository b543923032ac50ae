#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kac/hopf.hpp"

namespace kac::test {

inline std::vector<std::pair<std::string, CayleyTable>> small_groups() {
    return {{"Z2", cyclic_group(2)},
            {"Z3", cyclic_group(3)},
            {"Z4", cyclic_group(4)},
            {"Z2xZ2", product_group(cyclic_group(2), cyclic_group(2))},
            {"S3", symmetric_group3()}};
}

// C(G), C[G] and both duals for every small group.
inline std::vector<HopfPtr> all_builders() {
    std::vector<HopfPtr> out;
    for (const auto& [name, g] : small_groups()) {
        HopfPtr f = build_function_algebra(g, "C(" + name + ")");
        HopfPtr c = build_group_algebra(g, "C[" + name + "]");
        out.push_back(f);
        out.push_back(c);
        out.push_back(dual(*f));
        out.push_back(dual(*c));
    }
    return out;
}


}  // namespace kac::test

#include "kac/coaction.hpp"
#include "kac/random.hpp"

namespace kac::test {

// Inner action of Z3 on M_3 by powers of the cyclic shift, as a coaction of
// the dual of C[Z3], with its implementing witness.
struct InnerExample {
    HopfPtr H;  // C[Z3], the acting algebra
    HopfPtr K;  // its dual
    std::shared_ptr<MatAlg> A;
    Coaction rho;
    Vec w;
};

inline InnerExample inner_z3() {
    InnerExample ex;
    CayleyTable g = cyclic_group(3);
    ex.H = build_group_algebra(g);
    ex.K = dual(*ex.H);
    ex.A = std::make_shared<MatAlg>(3);
    Mat sh = Mat::Zero(3, 3);
    for (int i = 0; i < 3; ++i) sh((i + 1) % 3, i) = 1.0;
    std::vector<Mat> alpha;
    std::vector<Vec> us;
    Mat P = Mat::Identity(3, 3);
    for (int t = 0; t < 3; ++t) {
        Mat al(9, 9);
        for (int j = 0; j < 9; ++j) al.col(j) = ex.A->from_mat(P * ex.A->to_mat(ex.A->basis(j)) * P.adjoint());
        alpha.push_back(al);
        us.push_back(ex.A->from_mat(P));
        P = sh * P;
    }
    ex.rho = coaction_from_group_action(ex.A, ex.K, g, alpha);
    ex.w = ex.rho.AK()->pack(us);
    return ex;
}

// Counital unitary in A (x) K with random unitary slices.
inline Vec random_counital(const Coaction& c, Rng& rng) {
    const auto* A = dynamic_cast<const MatAlg*>(c.algebra().get());
    std::vector<Vec> vs(c.N());
    const int e = 0;
    for (int s = 0; s < c.N(); ++s) vs[s] = s == e ? A->one() : A->from_mat(rng.unitary(A->size()));
    return c.AK()->pack(vs);
}

}  // namespace kac::test
