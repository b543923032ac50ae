#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "kac/errors.hpp"

namespace kac {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RowMat = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Tolerance {
    double absolute = 1e-9;
    double relative = 1e-9;
    double bound(double scale) const { return absolute + relative * scale; }
};

// Index convention: every tensor product is left factor major, so the pair
// (i, k) of A (x) B with dim B = m sits at flat index i * m + k.
Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

Mat adjoint(const Mat& a);
double op_norm(const Mat& a);
std::vector<double> singular_values(const Mat& a);

struct Polar {
    Mat unitary;
    Mat positive;
};
Polar polar(const Mat& y, double tol = 1e-12);

int rank_eps(const Mat& a, const Tolerance& tol = {});
Mat solve_linear(const Mat& a, const Mat& b, const Tolerance& tol = {});

// Orthonormal basis (columns) of {x : a x = 0}, singular values below
// tol * (1 + |a|) count as zero.
Mat nullspace(const Mat& a, double tol = 1e-9);

// Spectral functions of a Hermitian matrix.
Mat herm_sqrt(const Mat& h);
Mat herm_inv_sqrt(const Mat& h);

double max_abs(const Mat& a);
double max_abs(const Vec& a);

// Row-major reshape helpers for elements of A (x) K stored flat.
RowMat as_rows(const Vec& x, int rows, int cols);
Vec from_rows(const RowMat& m);

}  // namespace kac
