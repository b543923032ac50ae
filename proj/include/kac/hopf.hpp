#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "kac/algebra.hpp"
#include "kac/fdca.hpp"

namespace kac {

using CayleyTable = std::vector<std::vector<int>>;

// A finite-dimensional C*-Hopf algebra on a structure algebra. Coefficients:
//   Delta(b_k) = sum_{a,b} comult(a * N + b, k) b_a (x) b_b
//   S(b_k)     = sum_j antipode(j, k) b_j
struct Hopf {
    StructPtr alg;
    int N = 0;
    Mat comult;
    Eigen::RowVectorXcd counit;
    Mat antipode;
    std::string label;
    // H (x) H and H (x) H (x) H with left-major indices.
    StructPtr alg2;
    StructPtr alg3;

    Vec delta(const Vec& h) const { return comult * h; }
    cd eps(const Vec& h) const { return (counit * h)(0); }
    Vec S(const Vec& h) const { return antipode * h; }
    Vec one() const { return alg->one(); }
    Vec basis(int i) const { return alg->basis(i); }
    // Multiplication as an N x N^2 matrix acting on flat H (x) H.
    Mat mult_matrix() const;
};

using HopfPtr = std::shared_ptr<const Hopf>;

HopfPtr make_hopf(StructPtr alg, Mat comult, Eigen::RowVectorXcd counit, Mat antipode, std::string label = {});

ResidualReport validate_hopf(const Hopf& H, const Tolerance& tol = {});

// Dual Hopf algebra in the coefficient-functional basis f_s(b_t) = delta_st.
HopfPtr dual(const Hopf& H);

// Bilinear pairing phi(h) in the fixed dual bases.
cd pair(const Hopf& H, const Vec& phi, const Vec& h);

// Two-sided integral e of H with eps(e) = 1.
Vec haar_element(const Hopf& H);

struct HaarPair {
    Vec e;    // in H
    Vec tau;  // in the dual, read as a functional on H
};
HaarPair haar_pair(const Hopf& H);

// Lambda is ordered (k, i, j); w are comatrix units of H and phi the dual
// matrix units of the dual algebra with pair(phi_I, w_J) = delta_IJ.
struct ComatrixUnits {
    std::vector<int> blocks;
    std::vector<std::array<int, 3>> lambda;
    std::vector<Vec> w;
    std::vector<Vec> phi;

    int size() const { return static_cast<int>(w.size()); }
    int index(int k, int i, int j) const;
    const Vec& at(int k, int i, int j) const { return w[index(k, i, j)]; }
    int d(int I) const { return blocks[lambda[I][0]]; }
};

ComatrixUnits comatrix_units(const Hopf& H, std::uint64_t seed = 0);

ResidualReport check_comatrix(const Hopf& H, const ComatrixUnits& cu, const HaarPair& hp,
                              const Tolerance& tol = {});
ResidualReport check_haar(const Hopf& H, const HaarPair& hp, const Tolerance& tol = {});

// Dimension of span{(b_h (x) 1) Delta(b_g)}.
int appendix_span_check(const Hopf& H);

void validate_group(const CayleyTable& g);
int group_identity(const CayleyTable& g);
std::vector<int> group_inverses(const CayleyTable& g);
CayleyTable cyclic_group(int n);
CayleyTable product_group(const CayleyTable& a, const CayleyTable& b);
CayleyTable symmetric_group3();

HopfPtr build_function_algebra(const CayleyTable& g, std::string label = "C(G)");
HopfPtr build_group_algebra(const CayleyTable& g, std::string label = "C[G]");
HopfPtr tensor_hopf(const Hopf& a, const Hopf& b);

}  // namespace kac
