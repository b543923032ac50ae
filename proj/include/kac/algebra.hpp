#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "kac/linalg.hpp"
#include "kac/report.hpp"

namespace kac {

// A finite-dimensional *-algebra with elements stored as coefficient vectors.
class Algebra {
public:
    virtual ~Algebra() = default;
    virtual int dim() const = 0;
    virtual Vec mul(const Vec& x, const Vec& y) const = 0;
    virtual Vec star(const Vec& x) const = 0;
    virtual Vec one() const = 0;
    // Faithful *-representation, used for C*-norms.
    virtual Mat rep(const Vec& x) const = 0;
    virtual std::string label() const { return {}; }

    double norm(const Vec& x) const { return op_norm(rep(x)); }
    Vec basis(int i) const;
    Vec zero() const { return Vec::Zero(dim()); }
    Vec mul3(const Vec& x, const Vec& y, const Vec& z) const { return mul(mul(x, y), z); }
};

using AlgPtr = std::shared_ptr<const Algebra>;

struct Triplet {
    int i, j, k;
    cd v;
};

// Structure-constant algebra: b_i b_j = sum_k m(i,j,k) b_k and
// star(x) = T conj(x).
class StructAlg : public Algebra {
public:
    StructAlg(int n, std::vector<Triplet> mult, Vec unit, Mat star_matrix, std::string label = {},
              std::vector<Mat> basis_rep = {});

    int dim() const override { return n_; }
    Vec mul(const Vec& x, const Vec& y) const override;
    Vec star(const Vec& x) const override;
    Vec one() const override { return unit_; }
    Mat rep(const Vec& x) const override;
    std::string label() const override { return label_; }

    const std::vector<Triplet>& mult() const { return mult_; }
    const Mat& star_matrix() const { return star_; }
    Mat left(const Vec& x) const;
    Mat right(const Vec& x) const;
    cd regular_trace(const Vec& x) const;
    const std::vector<Mat>& basis_rep() const;
    // Image of b_i in rep(); tensor products compute it from their factors.
    Mat basis_rep_of(int i) const;
    void set_factors(std::shared_ptr<const StructAlg> a, std::shared_ptr<const StructAlg> b);

private:
    int n_;
    std::vector<Triplet> mult_;
    Vec unit_;
    Mat star_;
    std::string label_;
    mutable std::vector<Mat> basis_rep_;
    mutable std::once_flag rep_once_;
    std::shared_ptr<const StructAlg> fa_, fb_;
};

using StructPtr = std::shared_ptr<const StructAlg>;

// M_d(C) with the row-major matrix-unit basis E_rc at index r * d + c.
class MatAlg : public Algebra {
public:
    explicit MatAlg(int d) : d_(d) {}
    int dim() const override { return d_ * d_; }
    int size() const { return d_; }
    Vec mul(const Vec& x, const Vec& y) const override;
    Vec star(const Vec& x) const override;
    Vec one() const override;
    Mat rep(const Vec& x) const override { return to_mat(x); }
    std::string label() const override { return "M_" + std::to_string(d_); }

    Mat to_mat(const Vec& x) const;
    Vec from_mat(const Mat& m) const;

private:
    int d_;
};

// A (x) B with B a structure algebra; index i_A * dim B + s.
class TensorAlg : public Algebra {
public:
    TensorAlg(AlgPtr a, StructPtr b);
    int dim() const override { return a_->dim() * b_->dim(); }
    Vec mul(const Vec& x, const Vec& y) const override;
    Vec star(const Vec& x) const override;
    Vec one() const override;
    Mat rep(const Vec& x) const override;
    std::string label() const override { return a_->label() + "(x)" + b_->label(); }

    const AlgPtr& left() const { return a_; }
    const StructPtr& right() const { return b_; }
    // Coefficient of b_s as an element of A.
    Vec slice(const Vec& x, int s) const;
    Vec pack(const std::vector<Vec>& slices) const;
    Vec simple(const Vec& a, const Vec& b) const { return kron(a, b); }

private:
    AlgPtr a_;
    StructPtr b_;
};

using TensorPtr = std::shared_ptr<const TensorAlg>;

StructPtr struct_tensor(const StructPtr& a, const StructPtr& b);
// Materialize any algebra as structure constants (basis products).
StructPtr to_struct(const Algebra& alg, std::string label = {});

ResidualReport validate_algebra(const StructAlg& alg, const Tolerance& tol = {});
// Same checks for an arbitrary algebra on its basis, using C*-norms.
ResidualReport validate_algebra_generic(const Algebra& alg, const Tolerance& tol = {});

// Largest C*-norm among elements.
double max_norm(const Algebra& alg, const std::vector<Vec>& xs);

}  // namespace kac
