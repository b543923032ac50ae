#include "kac/algebra.hpp"

#include <cmath>

namespace kac {

Vec Algebra::basis(int i) const {
    Vec e = Vec::Zero(dim());
    e(i) = 1.0;
    return e;
}

double max_norm(const Algebra& alg, const std::vector<Vec>& xs) {
    double m = 0.0;
    for (const auto& x : xs) m = std::max(m, alg.norm(x));
    return m;
}

StructAlg::StructAlg(int n, std::vector<Triplet> mult, Vec unit, Mat star_matrix, std::string label,
                     std::vector<Mat> basis_rep)
    : n_(n), mult_(std::move(mult)), unit_(std::move(unit)), star_(std::move(star_matrix)),
      label_(std::move(label)), basis_rep_(std::move(basis_rep)) {
    if (unit_.size() != n_ || star_.rows() != n_ || star_.cols() != n_)
        throw StructureFailure("structure data has inconsistent sizes");
    for (const auto& t : mult_)
        if (t.i < 0 || t.j < 0 || t.k < 0 || t.i >= n_ || t.j >= n_ || t.k >= n_)
            throw StructureFailure("multiplication index out of range");
}

Vec StructAlg::mul(const Vec& x, const Vec& y) const {
    Vec out = Vec::Zero(n_);
    for (const auto& t : mult_) out(t.k) += t.v * x(t.i) * y(t.j);
    return out;
}

Vec StructAlg::star(const Vec& x) const { return star_ * x.conjugate(); }

Mat StructAlg::left(const Vec& x) const {
    Mat l = Mat::Zero(n_, n_);
    for (const auto& t : mult_) l(t.k, t.j) += t.v * x(t.i);
    return l;
}

Mat StructAlg::right(const Vec& x) const {
    Mat r = Mat::Zero(n_, n_);
    for (const auto& t : mult_) r(t.k, t.i) += t.v * x(t.j);
    return r;
}

cd StructAlg::regular_trace(const Vec& x) const {
    cd s = 0.0;
    for (const auto& t : mult_)
        if (t.j == t.k) s += t.v * x(t.i);
    return s;
}

const std::vector<Mat>& StructAlg::basis_rep() const {
    std::call_once(rep_once_, [this] {
        if (!basis_rep_.empty()) return;
        // Orthonormalize the left regular representation with respect to the
        // regular trace; this gives a faithful *-representation.
        Mat g(n_, n_);
        std::vector<Vec> stars(n_);
        for (int i = 0; i < n_; ++i) stars[i] = star(basis(i));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) g(i, j) = regular_trace(mul(stars[i], basis(j)));
        basis_rep_.resize(n_);
        try {
            Mat gs = herm_sqrt(g);
            Mat gi = herm_inv_sqrt(g);
            for (int i = 0; i < n_; ++i) basis_rep_[i] = gs * left(basis(i)) * gi;
        } catch (const SingularInput&) {
            for (int i = 0; i < n_; ++i) basis_rep_[i] = left(basis(i));
        }
    });
    return basis_rep_;
}

void StructAlg::set_factors(std::shared_ptr<const StructAlg> a, std::shared_ptr<const StructAlg> b) {
    fa_ = std::move(a);
    fb_ = std::move(b);
}

Mat StructAlg::basis_rep_of(int i) const {
    if (fa_) return kron(fa_->basis_rep_of(i / fb_->dim()), fb_->basis_rep_of(i % fb_->dim()));
    return basis_rep()[i];
}

Mat StructAlg::rep(const Vec& x) const {
    Mat out;
    for (int i = 0; i < n_; ++i) {
        if (x(i) == cd(0.0)) continue;
        if (out.size() == 0)
            out = x(i) * basis_rep_of(i);
        else
            out += x(i) * basis_rep_of(i);
    }
    if (out.size() == 0) {
        Mat b0 = basis_rep_of(0);
        out = Mat::Zero(b0.rows(), b0.cols());
    }
    return out;
}

Vec MatAlg::mul(const Vec& x, const Vec& y) const { return from_mat(to_mat(x) * to_mat(y)); }
Vec MatAlg::star(const Vec& x) const { return from_mat(to_mat(x).adjoint()); }
Vec MatAlg::one() const { return from_mat(Mat::Identity(d_, d_)); }

Mat MatAlg::to_mat(const Vec& x) const { return as_rows(x, d_, d_); }

Vec MatAlg::from_mat(const Mat& m) const {
    RowMat r = m;
    return from_rows(r);
}

TensorAlg::TensorAlg(AlgPtr a, StructPtr b) : a_(std::move(a)), b_(std::move(b)) {}

Vec TensorAlg::slice(const Vec& x, int s) const {
    const int na = a_->dim(), nb = b_->dim();
    Vec out(na);
    for (int i = 0; i < na; ++i) out(i) = x(i * nb + s);
    return out;
}

Vec TensorAlg::pack(const std::vector<Vec>& slices) const {
    const int na = a_->dim(), nb = b_->dim();
    Vec out = Vec::Zero(na * nb);
    for (int s = 0; s < nb; ++s)
        for (int i = 0; i < na; ++i) out(i * nb + s) = slices[s](i);
    return out;
}

Vec TensorAlg::mul(const Vec& x, const Vec& y) const {
    const int nb = b_->dim();
    std::vector<Vec> xs(nb), ys(nb);
    std::vector<bool> xz(nb), yz(nb);
    for (int s = 0; s < nb; ++s) {
        xs[s] = slice(x, s);
        ys[s] = slice(y, s);
        xz[s] = xs[s].isZero(0.0);
        yz[s] = ys[s].isZero(0.0);
    }
    std::vector<Vec> out(nb, a_->zero());
    for (const auto& t : b_->mult()) {
        if (xz[t.i] || yz[t.j]) continue;
        out[t.k] += t.v * a_->mul(xs[t.i], ys[t.j]);
    }
    return pack(out);
}

Vec TensorAlg::star(const Vec& x) const {
    const int nb = b_->dim();
    const Mat& T = b_->star_matrix();
    std::vector<Vec> out(nb, a_->zero());
    for (int s = 0; s < nb; ++s) {
        Vec xs = slice(x, s);
        if (xs.isZero(0.0)) continue;
        Vec st = a_->star(xs);
        for (int t = 0; t < nb; ++t)
            if (T(t, s) != cd(0.0)) out[t] += T(t, s) * st;
    }
    return pack(out);
}

Vec TensorAlg::one() const { return kron(a_->one(), b_->one()); }

Mat TensorAlg::rep(const Vec& x) const {
    const int nb = b_->dim();
    Mat out;
    for (int s = 0; s < nb; ++s) {
        Vec xs = slice(x, s);
        if (xs.isZero(0.0)) continue;
        Mat term = kron(a_->rep(xs), b_->basis_rep_of(s));
        if (out.size() == 0)
            out = term;
        else
            out += term;
    }
    if (out.size() == 0) {
        Mat r0 = a_->rep(a_->zero());
        Mat b0 = b_->basis_rep_of(0);
        out = Mat::Zero(r0.rows() * b0.rows(), r0.cols() * b0.cols());
    }
    return out;
}

StructPtr struct_tensor(const StructPtr& a, const StructPtr& b) {
    const int na = a->dim(), nb = b->dim();
    std::vector<Triplet> m;
    m.reserve(a->mult().size() * b->mult().size());
    for (const auto& s : a->mult())
        for (const auto& t : b->mult())
            m.push_back({s.i * nb + t.i, s.j * nb + t.j, s.k * nb + t.k, s.v * t.v});
    auto out = std::make_shared<StructAlg>(na * nb, std::move(m), kron(a->one(), b->one()),
                                           kron(a->star_matrix(), b->star_matrix()),
                                           a->label() + "(x)" + b->label());
    out->set_factors(a, b);
    return out;
}

StructPtr to_struct(const Algebra& alg, std::string label) {
    const int n = alg.dim();
    std::vector<Triplet> m;
    std::vector<Vec> e(n);
    for (int i = 0; i < n; ++i) e[i] = alg.basis(i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec p = alg.mul(e[i], e[j]);
            for (int k = 0; k < n; ++k)
                if (std::abs(p(k)) > 1e-14) m.push_back({i, j, k, p(k)});
        }
    Mat T(n, n);
    std::vector<Mat> reps(n);
    for (int i = 0; i < n; ++i) {
        T.col(i) = alg.star(e[i]);
        reps[i] = alg.rep(e[i]);
    }
    if (label.empty()) label = alg.label();
    return std::make_shared<StructAlg>(n, std::move(m), alg.one(), T, label, std::move(reps));
}

ResidualReport validate_algebra(const StructAlg& alg, const Tolerance& tol) {
    const int n = alg.dim();
    std::vector<Vec> e(n);
    for (int i = 0; i < n; ++i) e[i] = alg.basis(i);
    std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i][j] = alg.mul(e[i], e[j]);
    double assoc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec l = alg.mul(prod[i][j], e[k]);
                Vec r = alg.mul(e[i], prod[j][k]);
                assoc = std::max(assoc, max_abs(Vec(l - r)));
            }
    double unit = 0.0, anti = 0.0, invol = 0.0;
    Vec one = alg.one();
    std::vector<Vec> st(n);
    for (int i = 0; i < n; ++i) st[i] = alg.star(e[i]);
    for (int i = 0; i < n; ++i) {
        unit = std::max(unit, max_abs(Vec(alg.mul(one, e[i]) - e[i])));
        unit = std::max(unit, max_abs(Vec(alg.mul(e[i], one) - e[i])));
        invol = std::max(invol, max_abs(Vec(alg.star(st[i]) - e[i])));
        for (int j = 0; j < n; ++j) {
            Vec l = alg.star(prod[i][j]);
            Vec r = alg.mul(st[j], st[i]);
            anti = std::max(anti, max_abs(Vec(l - r)));
        }
    }
    ResidualReport rep;
    rep.add("associativity", assoc, tol.absolute);
    rep.add("unit", unit, tol.absolute);
    rep.add("star antimultiplicative", anti, tol.absolute);
    rep.add("star involutive", invol, tol.absolute);
    return rep;
}

ResidualReport validate_algebra_generic(const Algebra& alg, const Tolerance& tol) {
    const int n = alg.dim();
    std::vector<Vec> e(n);
    for (int i = 0; i < n; ++i) e[i] = alg.basis(i);
    double assoc = 0.0, unit = 0.0, anti = 0.0, invol = 0.0;
    Vec one = alg.one();
    for (int i = 0; i < n; ++i) {
        unit = std::max(unit, max_abs(Vec(alg.mul(one, e[i]) - e[i])));
        unit = std::max(unit, max_abs(Vec(alg.mul(e[i], one) - e[i])));
        invol = std::max(invol, max_abs(Vec(alg.star(alg.star(e[i])) - e[i])));
        for (int j = 0; j < n; ++j) {
            Vec ij = alg.mul(e[i], e[j]);
            anti = std::max(anti, max_abs(Vec(alg.star(ij) - alg.mul(alg.star(e[j]), alg.star(e[i])))));
            for (int k = 0; k < n; ++k)
                assoc = std::max(assoc, max_abs(Vec(alg.mul(ij, e[k]) - alg.mul(e[i], alg.mul(e[j], e[k])))));
        }
    }
    ResidualReport rep;
    rep.add("associativity", assoc, tol.absolute);
    rep.add("unit", unit, tol.absolute);
    rep.add("star antimultiplicative", anti, tol.absolute);
    rep.add("star involutive", invol, tol.absolute);
    return rep;
}

}  // namespace kac
