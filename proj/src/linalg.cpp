#include "kac/linalg.hpp"
#include "kac/random.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace kac {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vec kron(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

Mat adjoint(const Mat& a) { return a.adjoint(); }

double op_norm(const Mat& a) {
    if (a.size() == 0) return 0.0;
    Mat g = a.rows() >= a.cols() ? Mat(a.adjoint() * a) : Mat(a * a.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(g, Eigen::EigenvaluesOnly);
    double top = es.eigenvalues().maxCoeff();
    return std::sqrt(std::max(top, 0.0));
}

std::vector<double> singular_values(const Mat& a) {
    if (a.size() == 0) return {};
    Eigen::JacobiSVD<Mat> svd(a);
    const auto& s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

Polar polar(const Mat& y, double tol) {
    if (y.rows() != y.cols()) throw SingularInput("polar needs a square matrix");
    auto sv = singular_values(y);
    double smin = sv.empty() ? 0.0 : *std::min_element(sv.begin(), sv.end());
    if (smin <= tol) throw SingularInput("smallest singular value " + std::to_string(smin));
    Mat g = y.adjoint() * y;
    g = 0.5 * (g + g.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Mat> es(g);
    Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Mat& v = es.eigenvectors();
    Polar p;
    p.positive = v * lam.cast<cd>().asDiagonal() * v.adjoint();
    p.unitary = y * (v * lam.cwiseInverse().cast<cd>().asDiagonal() * v.adjoint());
    return p;
}

int rank_eps(const Mat& a, const Tolerance& tol) {
    if (a.size() == 0) return 0;
    auto sv = singular_values(a);
    double thr = tol.absolute * (1.0 + (sv.empty() ? 0.0 : sv.front()));
    int r = 0;
    for (double s : sv)
        if (s > thr) ++r;
    return r;
}

Mat solve_linear(const Mat& a, const Mat& b, const Tolerance& tol) {
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(a);
    cod.setThreshold(1e-13);
    Mat x = cod.solve(b);
    double res = op_norm(a * x - b);
    double scale = op_norm(b);
    if (res > tol.absolute * (1.0 + scale))
        throw Inconsistent("least-squares residual " + std::to_string(res));
    return x;
}

Mat nullspace(const Mat& a, double tol) {
    const Eigen::Index n = a.cols();
    if (a.rows() == 0) return Mat::Identity(n, n);
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    double thr = tol * (1.0 + (s.size() ? s(0) : 0.0));
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > thr) ++rank;
    return svd.matrixV().rightCols(n - rank);
}

Mat herm_sqrt(const Mat& h) {
    Mat hs = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(hs);
    Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * lam.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
}

Mat herm_inv_sqrt(const Mat& h) {
    Mat hs = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(hs);
    Eigen::VectorXd lam = es.eigenvalues();
    if (lam.minCoeff() <= 0.0) throw SingularInput("matrix is not positive definite");
    Eigen::VectorXd inv = lam.cwiseSqrt().cwiseInverse();
    return es.eigenvectors() * inv.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
}

double max_abs(const Mat& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }
double max_abs(const Vec& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

RowMat as_rows(const Vec& x, int rows, int cols) {
    return Eigen::Map<const RowMat>(x.data(), rows, cols);
}

Vec from_rows(const RowMat& m) {
    return Eigen::Map<const Vec>(m.data(), m.size());
}

double Rng::gauss() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u = 0.0;
    while (u <= 0.0) u = uniform();
    double v = uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    double t = 2.0 * M_PI * v;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

Vec Rng::cvec(int n) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = cgauss();
    return v;
}

Mat Rng::cmat(int r, int c) {
    Mat m(r, c);
    for (int j = 0; j < c; ++j)
        for (int i = 0; i < r; ++i) m(i, j) = cgauss();
    return m;
}

Mat Rng::unitary(int n) {
    Mat g = cmat(n, n);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        cd d = r(i, i);
        if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
    }
    return q;
}

}  // namespace kac
