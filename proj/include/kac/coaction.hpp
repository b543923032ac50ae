#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kac/hopf.hpp"

namespace kac {

// Coaction rho : A -> A (x) K, rho(a) stored at flat index i_A * N + s.
class Coaction {
public:
    using Map = std::function<Vec(const Vec&)>;

    Coaction() = default;
    Coaction(AlgPtr a, HopfPtr k, Map f, std::string label = {});
    static Coaction from_matrix(AlgPtr a, HopfPtr k, Mat r, std::string label = {});
    static Coaction trivial(AlgPtr a, HopfPtr k);

    Vec operator()(const Vec& a) const;
    // rho_s(a), the coefficient of k_s.
    Vec slice(const Vec& a, int s) const;
    // act(phi, a) = sum_s phi_s rho_s(a) for phi in the dual of K.
    Vec act(const Vec& phi, const Vec& a) const;

    const AlgPtr& algebra() const { return a_; }
    const HopfPtr& hopf() const { return k_; }
    int dimA() const { return a_->dim(); }
    int N() const { return k_->N; }
    const TensorPtr& AK() const { return ak_; }
    const TensorPtr& AKK() const { return akk_; }
    const TensorPtr& AKKK() const { return akkk_; }
    Mat matrix() const;
    const std::string& label() const { return label_; }

private:
    AlgPtr a_;
    HopfPtr k_;
    Map f_;
    std::string label_;
    TensorPtr ak_, akk_, akkk_;
};

// Leg operations on elements of A (x) K^{(x) m}, stored as rows of length N^m.
namespace leg {
// (rho (x) id^m)(x): A (x) K^m -> A (x) K^{m+1}.
Vec rho(const Coaction& c, const Vec& x, int m);
// Comultiplication on the K factor at position f (0-based).
Vec delta(const Hopf& K, const Vec& x, int nA, int m, int f);
// Insert 1_K as a new factor at position f.
Vec one(const Hopf& K, const Vec& x, int nA, int m, int f);
// Counit on the K factor at position f.
Vec eps(const Hopf& K, const Vec& x, int nA, int m, int f);
// Apply a functional (row vector of length N) to factor f.
Vec pair(const Hopf& K, const Eigen::RowVectorXcd& phi, const Vec& x, int nA, int m, int f);
}  // namespace leg

// A twisted coaction (rho, u) with u in A (x) K (x) K; empty u means 1.
struct TwistedCoaction {
    Coaction rho;
    Vec u;

    bool twisted() const { return u.size() > 0; }
    Vec cocycle() const;
    // u-hat(phi, psi) = (id (x) phi (x) psi)(u) as an element of A.
    Vec uhat(const Vec& phi, const Vec& psi) const;
    // Slice u_{q,x} so that u = sum u_{q,x} (x) k_q (x) k_x.
    Vec uslice(int q, int x) const;
};

ResidualReport validate_coaction(const Coaction& c, const Tolerance& tol = {}, std::uint64_t seed = 0);
ResidualReport validate_twisted(const TwistedCoaction& t, const Tolerance& tol = {}, std::uint64_t seed = 0);

// Exterior transform by a unitary w in A (x) K:
//   rho' = Ad(w) rho,  u' = (w (x) 1)(rho (x) id)(w) u (id (x) Delta)(w*).
TwistedCoaction exterior_transform(const TwistedCoaction& t, const Vec& w, const Tolerance& tol = {});

// Finite-level witness w in A (x) K for (rho, u): rho = Ad(w) triv,
// u = (w (x) 1)(triv (x) id)(w)(id (x) Delta)(w*) and
// u = (rho (x) id)(w)(w (x) 1)(id (x) Delta)(w*).
ResidualReport check_witness(const TwistedCoaction& t, const Vec& w, const Tolerance& tol = {},
                             std::uint64_t seed = 0);

// Basis (columns) of the fixed-point algebra {a : rho(a) = a (x) 1}.
Mat fixed_point(const Coaction& c, const Tolerance& tol = {});

// Coaction of C(G) built from automorphisms alpha_t given as coefficient maps.
Coaction coaction_from_group_action(AlgPtr a, HopfPtr cg, const CayleyTable& g, const std::vector<Mat>& alpha,
                                    const Tolerance& tol = {});

// n x n matrices over A; entry (r, c) coefficient i at ((r * n + c) * dim A + i).
class MatrixOver : public Algebra {
public:
    MatrixOver(AlgPtr a, int n) : a_(std::move(a)), n_(n) {}
    int dim() const override { return n_ * n_ * a_->dim(); }
    Vec mul(const Vec& x, const Vec& y) const override;
    Vec star(const Vec& x) const override;
    Vec one() const override;
    Mat rep(const Vec& x) const override;
    std::string label() const override { return "M_" + std::to_string(n_) + "(" + a_->label() + ")"; }

    int size() const { return n_; }
    const AlgPtr& base() const { return a_; }
    Vec entry(const Vec& x, int r, int c) const;
    Vec pack(const std::vector<Vec>& entries) const;

private:
    AlgPtr a_;
    int n_;
};

// id (x) rho on M_n(A), with the matching amplified cocycle 1 (x) u.
TwistedCoaction amplify(const TwistedCoaction& t, int n);

// Basis indices to sweep when checking identities: all of them up to cap,
// otherwise a seeded sample of size cap.
std::vector<int> sample_indices(int n, int cap, std::uint64_t seed);

}  // namespace kac
