#pragma once

#include <memory>
#include <vector>

#include "kac/coaction.hpp"

namespace kac {

// Twisted crossed product A x|_{rho,u} L for a twisted coaction (rho, u) of
// K on A, where L is the dual of K (the basis l_s of L is dual to k_s). The
// element a x| l_s sits at flat index i_A * N + s.
class CrossedAlg : public Algebra {
public:
    CrossedAlg(TwistedCoaction t, HopfPtr acting, std::uint64_t seed = 0);

    int dim() const override { return nA_ * N_; }
    Vec mul(const Vec& x, const Vec& y) const override;
    Vec star(const Vec& x) const override;
    Vec one() const override;
    Mat rep(const Vec& x) const override;
    std::string label() const override;

    const TwistedCoaction& twisted() const { return t_; }
    const Coaction& coaction() const { return t_.rho; }
    const AlgPtr& base() const { return t_.rho.algebra(); }
    const HopfPtr& coacting() const { return t_.rho.hopf(); }
    const HopfPtr& acting() const { return L_; }
    int base_dim() const { return nA_; }
    int N() const { return N_; }

    Vec embed(const Vec& a) const;
    Vec embed_acting(const Vec& l) const;
    Vec simple(const Vec& a, const Vec& l) const { return kron(a, l); }
    Vec slice(const Vec& x, int s) const;
    // E_1(a x| l) = l(e) a with e the Haar projection of K.
    Vec E1(const Vec& x) const;

    const Vec& haar_coacting() const { return eK_; }
    const Vec& haar_acting() const { return eL_; }
    const ComatrixUnits& comatrix() const { return cu_; }
    // W_I = sqrt(d_k) x| w_I in Lambda order.
    const std::vector<Vec>& quasi_basis() const { return W_; }
    const std::vector<Vec>& quasi_basis_star() const { return Ws_; }

private:
    struct Term {
        int s, t, p, q, x;
        std::vector<std::pair<int, cd>> out;
    };

    TwistedCoaction t_;
    HopfPtr L_;
    int nA_, N_;
    Vec eK_, eL_;
    ComatrixUnits cu_;
    std::vector<Term> terms_;
    std::vector<Vec> uslices_;
    std::vector<Vec> star_acting_;
    std::vector<Vec> W_, Ws_;
};

using CrossedPtr = std::shared_ptr<const CrossedAlg>;

CrossedPtr build_crossed(const TwistedCoaction& t, HopfPtr acting, std::uint64_t seed = 0);

// Associativity, involution, covariance, quasi-basis and index checks.
ResidualReport check_crossed(const CrossedAlg& cp, const Tolerance& tol = {}, std::uint64_t seed = 0);

// Dual coaction of L on the crossed product.
Coaction dual_coaction(const CrossedPtr& cp);

// V = sum_s (1 x| l_s) (x) k_s in cp (x) K.
Vec V_unitary(const CrossedAlg& cp);
ResidualReport check_V(const CrossedAlg& cp, const Tolerance& tol = {});

// cp x|_{dual} K, with K acting through its pairing with L.
CrossedPtr iterate_crossed(const CrossedPtr& cp, std::uint64_t seed = 0);

// Linear isomorphism cp1 -> cp2 induced by a unitary v with
// (rho2, u2) = exterior_transform((rho1, u1), v), and its inverse.
struct ExteriorIso {
    Mat phi;
    Mat psi;
    ResidualReport report;
};
ExteriorIso iso_exterior(const CrossedAlg& cp1, const CrossedAlg& cp2, const Vec& v, const Tolerance& tol = {});

// span{(a x| 1)(1 x| e)(b x| 1)} equals the crossed product.
bool check_saturated(const CrossedAlg& cp, const Tolerance& tol = {}, std::uint64_t seed = 0);

}  // namespace kac
