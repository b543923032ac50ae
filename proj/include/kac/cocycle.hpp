#pragma once

#include <vector>

#include "kac/random.hpp"
#include "kac/rohlin.hpp"

namespace kac {

struct TrivializationResult {
    Vec x;
    double residual_before = 0.0;
    double residual_after = 0.0;
    int iterations = 0;
    double L = 0.0;
    // ||u_k - 1|| before each step of the iterative scheme, then the final value.
    std::vector<double> profile;
    ResidualReport report;
};

// exp(i h) for selfadjoint h, by scaling and squaring.
Vec exp_i(const Algebra& alg, const Vec& h);
// Unitary part of an invertible x through the Newton-Schulz iteration.
Vec unitary_part(const Algebra& alg, const Vec& x);
// exp(i scale h) with h a random selfadjoint element of span{basis}.
Vec random_unitary(const Algebra& alg, const std::vector<Vec>& basis, double scale, Rng& rng);
// Unitary in A (x) K with (id (x) eps)(v) = 1, built from span (x) K.
Vec random_counital_unitary(const Coaction& c, const std::vector<Vec>& span, double scale, Rng& rng);

// (id (x) phi) on A (x) K for phi in the dual of K.
Vec slice_pair(const Coaction& c, const Vec& x, const Vec& phi);

// Given rho with Rohlin projection p and a unitary cocycle v for rho, find a
// unitary x in A with Ad(v) rho = Ad(x (x) 1) rho Ad(x^*).
TrivializationResult one_cocycle_trivialize(const Coaction& rho, const Vec& p, const Vec& v,
                                            const Tolerance& tol = {});

// One application of the theta construction: x in A (x) K with
// (x (x) 1)(rho (x) id)(x) u (id (x) Delta)(x^*) = 1.
TrivializationResult two_cocycle_trivialize_once(const TwistedCoaction& t, HopfPtr acting, const Vec& p,
                                                 const std::vector<Vec>& scope, const Tolerance& tol = {},
                                                 std::uint64_t seed = 0);

// Repeats the one-step construction until ||u_k - 1|| < target.
TrivializationResult two_cocycle_trivialize_iterative(const TwistedCoaction& t, HopfPtr acting, const Vec& p,
                                                      const std::vector<Vec>& scope, int max_iter = 8,
                                                      double target = 1e-10, const Tolerance& tol = {},
                                                      std::uint64_t seed = 0);

struct LConstants {
    double sum_variant = 0.0;  // sum d_k ||w_ij^k||
    double max_variant = 0.0;  // max of the nested sum and 1
};
LConstants compute_L(const Hopf& H, std::uint64_t seed = 0);

// One step of the approximate unitary equivalence argument. Every element of
// F gets a commutator entry checked against eps + L max ||sigma(b) - rho(b)||
// over the translates b = S(w) . a.
struct AueStep {
    Vec x;
    double eps = 0.0;
    double L = 0.0;
    ResidualReport report;
};
AueStep aue_one_step(const Coaction& rho, const Vec& p, const Coaction& sigma, const Vec& v,
                     const std::vector<Vec>& F, const Tolerance& tol = {}, std::uint64_t seed = 0);

}  // namespace kac
