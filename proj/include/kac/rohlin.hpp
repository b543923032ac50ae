#pragma once

#include <vector>

#include "kac/crossed.hpp"

namespace kac {

// A candidate Rohlin projection p for a coaction of K on A. Centrality is
// only asserted against the scope subalgebra (given by a spanning list).
struct RohlinWitness {
    TwistedCoaction t;
    HopfPtr acting;  // dual of K
    Vec p;
    std::vector<Vec> scope;
};

// Projection axioms, e . p = 1/N with e the Haar projection of the acting
// algebra, and commutators with the scope.
ResidualReport check_rohlin_projection(const RohlinWitness& rw, const Tolerance& tol = {});

// sum_I W_I^* (p x| 1) W_I = 1 in the crossed product.
ResidualReport check_sum_condition(const CrossedAlg& cp, const Vec& p, const Tolerance& tol = {});

// Witness for the dual coaction built from p by the quasi-basis formula
//   w-hat(phi) = sum_I [phi . W_I^*] (p x| 1) W_I,   w = sum_s w-hat(k_s) (x) l_s.
struct DualWitness {
    CrossedPtr cp;
    Coaction rhohat;
    Vec w;                  // in cp (x) L
    std::vector<Vec> what;  // w-hat(k_s)
    ResidualReport report;
    // w-hat(phi) for phi in K.
    Vec evaluate(const Vec& phi) const;
};

DualWitness witness_from_projection(const RohlinWitness& rw, const Tolerance& tol = {}, std::uint64_t seed = 0);
DualWitness witness_from_projection(const CrossedPtr& cp, const Vec& p, const std::vector<Vec>& scope,
                                    const Tolerance& tol = {});

// w-hat(tau) with tau the Haar projection of K.
Vec projection_from_witness(const DualWitness& dw);

// Group actions: rho(a) = sum_t alpha_t(a) (x) delta_t for a coaction of
// C(G) on A, with the group order of the Cayley table.
struct GroupRep {
    std::vector<Vec> u;  // u(t) in A
};
GroupRep group_rep_from_witness(const Coaction& c, const Vec& w);
Vec witness_from_group_rep(const Coaction& c, const GroupRep& g);
// u is a unitary representation with alpha_t = Ad u(t) and
// alpha_t(u(s)) = u(t s t^-1).
ResidualReport check_group_rep(const Coaction& c, const CayleyTable& g, const GroupRep& rep,
                               const Tolerance& tol = {});

// e_t = alpha_t(p), and the inverse p = e_identity.
std::vector<Vec> partition_from_projection(const Coaction& c, const CayleyTable& g, const Vec& p,
                                           const Tolerance& tol = {});
Vec projection_from_partition(const Coaction& c, const CayleyTable& g, const std::vector<Vec>& e,
                              const Tolerance& tol = {});
ResidualReport check_partition(const Coaction& c, const CayleyTable& g, const std::vector<Vec>& e,
                               const std::vector<Vec>& scope, const Tolerance& tol = {});

}  // namespace kac
