#pragma once

#include <memory>
#include <vector>

#include "kac/crossed.hpp"

namespace kac {

// Data for the double crossed product A x| L x| K of a twisted coaction of K
// on A, and its identification with M_N(A).
struct DualityData {
    TwistedCoaction t;
    CrossedPtr cp;
    CrossedPtr cp2;
    Coaction rho2;  // dual coaction of K on cp2
    std::shared_ptr<MatrixOver> MA;
    TensorPtr C2K, C2KK;
    std::vector<Vec> V, Vs;  // V_I and V_I^* in cp2
    std::vector<Vec> P;      // P_I = V_I^* V_I
    Vec tau;                 // 1 x| tau in cp2
    Vec Vbig;                // V of cp, pushed into cp2 (x) K
    std::vector<Vec> UI;
    Vec U;

    int size() const { return static_cast<int>(V.size()); }
    // (a x| 1) x| 1 in cp2.
    Vec embed(const Vec& a) const { return cp2->embed(cp->embed(a)); }
    // Element of A under the double conditional expectation.
    Vec extract(const Vec& y) const { return cp->E1(cp2->E1(y)); }
};

DualityData build_duality(const TwistedCoaction& t, HopfPtr acting, std::uint64_t seed = 0);

// Psi([a_IJ]) = sum V_I^* (a_IJ x| 1 x| 1) V_J, m laid out as in MatrixOver.
Vec psi(const DualityData& dd, const Vec& m);
Vec psi_inv(const DualityData& dd, const Vec& z, const Tolerance& tol = {});

// Structural identities of the duality data: orthogonality of V_I, partition
// of unity by P_I, unitarity of U_I and U, and the conjugation formula for
// the second dual coaction of 1 x| tau.
ResidualReport check_duality_data(const DualityData& dd, const Tolerance& tol = {});

// Psi is a unital *-homomorphism with two-sided inverse psi_inv.
ResidualReport check_psi(const DualityData& dd, const Tolerance& tol = {}, std::uint64_t seed = 0);

// Ad(U) after the second dual coaction against the amplified coaction, and
// the cocycle identity for U.
ResidualReport verify_duality(const DualityData& dd, const Tolerance& tol = {});

// w2 = v w1 for the exterior transform by v.
Vec transport_witness_exterior(const Coaction& rho1, const Vec& v, const Vec& w);
// Witness for the second dual coaction, U^* (Psi (x) id)(w (x) I_N).
Vec transport_witness_dual(const DualityData& dd, const Vec& w);

// w (x) I_n as an element of M_n(A) (x) K, and its (0, 0) compression.
Vec amplify_witness(const Vec& w, int nA, int N, int n);
Vec compress_witness(const Vec& W, int nA, int N, int n);

}  // namespace kac
