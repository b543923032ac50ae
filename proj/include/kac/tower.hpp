#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "kac/rohlin.hpp"

namespace kac {

// Base of the tower: A = H0 x|_{Delta0} H identified with M_N through its
// single Wedderburn block, where H0 is the dual of H.
struct TowerBase {
    HopfPtr H, H0;
    CrossedPtr cp0;
    WedderburnData wd;
    int N = 0;
    std::vector<Mat> V;  // V_s = Theta(1 x| b_s)
    Mat p;               // Theta(tau x| 1)
    ComatrixUnits cuH, cuH0;

    Mat theta(const Vec& x) const { return wd.coordinates(x)[0]; }
    Mat Vhat(const Vec& h) const;
};

TowerBase build_base(HopfPtr H, std::uint64_t seed = 0);
// Single block, Theta a unital *-isomorphism, V unitary.
ResidualReport check_base(const TowerBase& b, const Tolerance& tol = {}, std::uint64_t seed = 0);

// Level n: A_n = M_N^{(x) n} as M_{N^n}, u_n = v_1 ... v_n in A_n (x) H0,
// rho_n = Ad(u_n) triv and p_n = 1 (x) ... (x) 1 (x) p.
struct TowerLevel {
    int n = 0;
    int N = 0;
    std::shared_ptr<const MatAlg> A;
    Vec u;
    Coaction rho;
    Vec p;
    // Spanning set of the image of A_{n-1}, the commutant scope of p_n.
    std::vector<Vec> scope;

    int size() const { return A->size(); }
    TwistedCoaction twisted() const { return {rho, Vec()}; }
};

constexpr long default_level_cap = 20000;

TowerLevel build_level(const TowerBase& b, int n, long cap = default_level_cap);

// a (x) I_N from level n to level n + 1.
Vec tower_inclusion(const TowerLevel& from, const Vec& a);

// Closed forms of u_n: comatrix units of H with dual matrix units of H0, and
// comatrix units of H0 with matrix units of H.
Vec closed_form_comatrix(const TowerBase& b, int n);
Vec closed_form_dual(const TowerBase& b, int n);

// Closed forms, the cocycle identity for u_n, coaction axioms and, when the
// next level is supplied, compatibility with the inclusion.
ResidualReport check_level(const TowerBase& b, const TowerLevel& lvl, const TowerLevel* next = nullptr,
                           const Tolerance& tol = {});

struct TowerRohlin {
    RohlinWitness rohlin;
    ResidualReport projection;
    ResidualReport witness;
};
TowerRohlin rohlin_report(const TowerBase& b, const TowerLevel& lvl, const Tolerance& tol = {});

// Unitary u with rho(x) = u (x (x) I_n) u^* for a unital *-homomorphism
// rho : M_m -> M_m (x) M_n.
struct Intertwiner {
    Mat u;
    ResidualReport report;
};
Intertwiner intertwine_homomorphism(const std::function<Mat(const Mat&)>& rho, int m, int n,
                                    const Tolerance& tol = {});

}  // namespace kac
