#include "kac/coaction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kac/random.hpp"

namespace kac {
namespace {

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// x has layout [outer][inner][post]; op (R x inner) acts on the middle index.
Vec leg_apply(const Vec& x, long outer, long inner, long post, const Mat& op) {
    const long R = op.rows();
    Vec out = Vec::Zero(outer * R * post);
    for (long o = 0; o < outer; ++o)
        for (long s = 0; s < inner; ++s)
            for (long b = 0; b < post; ++b) {
                cd v = x((o * inner + s) * post + b);
                if (v == cd(0.0)) continue;
                for (long r = 0; r < R; ++r) {
                    cd c = op(r, s);
                    if (c != cd(0.0)) out((o * R + r) * post + b) += c * v;
                }
            }
    return out;
}

std::vector<std::pair<int, int>> sample_pairs(const std::vector<int>& idx, int cap, std::uint64_t seed) {
    std::vector<std::pair<int, int>> all;
    for (int i : idx)
        for (int j : idx) all.emplace_back(i, j);
    if (static_cast<int>(all.size()) <= cap) return all;
    std::vector<int> pick = sample_indices(static_cast<int>(all.size()), cap, seed);
    std::vector<std::pair<int, int>> out;
    for (int p : pick) out.push_back(all[p]);
    return out;
}

}  // namespace

std::vector<int> sample_indices(int n, int cap, std::uint64_t seed) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    if (n <= cap) return idx;
    Rng rng(seed);
    for (int i = 0; i < cap; ++i) {
        int j = i + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(cap);
    std::sort(idx.begin(), idx.end());
    return idx;
}

Coaction::Coaction(AlgPtr a, HopfPtr k, Map f, std::string label)
    : a_(std::move(a)), k_(std::move(k)), f_(std::move(f)), label_(std::move(label)) {
    ak_ = std::make_shared<TensorAlg>(a_, k_->alg);
    akk_ = std::make_shared<TensorAlg>(a_, k_->alg2);
    akkk_ = std::make_shared<TensorAlg>(a_, k_->alg3);
}

Coaction Coaction::from_matrix(AlgPtr a, HopfPtr k, Mat r, std::string label) {
    if (r.rows() != a->dim() * k->N || r.cols() != a->dim())
        throw StructureFailure("coaction matrix has the wrong shape");
    auto m = std::make_shared<const Mat>(std::move(r));
    return Coaction(std::move(a), std::move(k), [m](const Vec& x) -> Vec { return (*m) * x; }, std::move(label));
}

Coaction Coaction::trivial(AlgPtr a, HopfPtr k) {
    Vec one = k->one();
    return Coaction(a, k, [one](const Vec& x) -> Vec { return kron(x, one); }, "trivial");
}

Vec Coaction::operator()(const Vec& a) const { return f_(a); }

Vec Coaction::slice(const Vec& a, int s) const { return ak_->slice(f_(a), s); }

Vec Coaction::act(const Vec& phi, const Vec& a) const {
    Vec r = f_(a);
    return as_rows(r, dimA(), N()) * phi;
}

Mat Coaction::matrix() const {
    const int n = dimA();
    Mat r(n * N(), n);
    for (int i = 0; i < n; ++i) r.col(i) = f_(a_->basis(i));
    return r;
}

namespace leg {

Vec rho(const Coaction& c, const Vec& x, int m) {
    const int nA = c.dimA(), N = c.N();
    const long cols = ipow(N, m);
    RowMat X = as_rows(x, nA, static_cast<int>(cols));
    Vec out = Vec::Zero(nA * N * cols);
    for (long col = 0; col < cols; ++col) {
        Vec xc = X.col(col);
        if (xc.isZero(0.0)) continue;
        Vec r = c(xc);
        for (long j = 0; j < nA * N; ++j) out(j * cols + col) = r(j);
    }
    return out;
}

Vec delta(const Hopf& K, const Vec& x, int nA, int m, int f) {
    return leg_apply(x, nA * ipow(K.N, f), K.N, ipow(K.N, m - f - 1), K.comult);
}

Vec one(const Hopf& K, const Vec& x, int nA, int m, int f) {
    Mat u = K.one();
    return leg_apply(x, nA * ipow(K.N, f), 1, ipow(K.N, m - f), u);
}

Vec eps(const Hopf& K, const Vec& x, int nA, int m, int f) {
    return leg_apply(x, nA * ipow(K.N, f), K.N, ipow(K.N, m - f - 1), Mat(K.counit));
}

Vec pair(const Hopf& K, const Eigen::RowVectorXcd& phi, const Vec& x, int nA, int m, int f) {
    return leg_apply(x, nA * ipow(K.N, f), K.N, ipow(K.N, m - f - 1), Mat(phi));
}

}  // namespace leg

Vec TwistedCoaction::cocycle() const {
    if (twisted()) return u;
    const Hopf& K = *rho.hopf();
    return kron(rho.algebra()->one(), kron(K.one(), K.one()));
}

Vec TwistedCoaction::uslice(int q, int x) const {
    const int N = rho.N();
    if (!twisted()) {
        Vec one = rho.hopf()->one();
        return (one(q) * one(x)) * rho.algebra()->one();
    }
    return rho.AKK()->slice(u, q * N + x);
}

Vec TwistedCoaction::uhat(const Vec& phi, const Vec& psi) const {
    const int N = rho.N();
    if (!twisted()) {
        Vec one = rho.hopf()->one();
        cd a = (phi.transpose() * one)(0), b = (psi.transpose() * one)(0);
        return (a * b) * rho.algebra()->one();
    }
    Vec out = rho.algebra()->zero();
    for (int q = 0; q < N; ++q)
        for (int x = 0; x < N; ++x) {
            cd c = phi(q) * psi(x);
            if (c != cd(0.0)) out += c * uslice(q, x);
        }
    return out;
}

namespace {

void coaction_core(const Coaction& c, const Vec* u, const Tolerance& tol, std::uint64_t seed,
                   ResidualReport& rep) {
    const Algebra& A = *c.algebra();
    const Hopf& K = *c.hopf();
    const TensorAlg& AK = *c.AK();
    const TensorAlg& AKK = *c.AKK();
    const int nA = A.dim();
    auto idx = sample_indices(nA, 64, seed);
    std::vector<Vec> rb(nA);
    for (int i : idx) rb[i] = c(A.basis(i));

    double unital = max_abs(Vec(c(A.one()) - AK.one()));
    double mult = 0.0, star = 0.0, counit = 0.0, coassoc = 0.0;
    for (int i : idx) {
        Vec bi = A.basis(i);
        star = std::max(star, max_abs(Vec(c(A.star(bi)) - AK.star(rb[i]))));
        counit = std::max(counit, max_abs(Vec(leg::eps(K, rb[i], nA, 1, 0) - bi)));
        Vec lhs = leg::rho(c, rb[i], 1);
        Vec rhs = leg::delta(K, rb[i], nA, 1, 0);
        if (u) rhs = AKK.mul(AKK.mul(*u, rhs), AKK.star(*u));
        coassoc = std::max(coassoc, max_abs(Vec(lhs - rhs)));
    }
    for (auto [i, j] : sample_pairs(idx, 1024, seed + 1)) {
        Vec p = A.mul(A.basis(i), A.basis(j));
        mult = std::max(mult, max_abs(Vec(c(p) - AK.mul(rb[i], rb[j]))));
    }
    rep.add("coaction unital", unital, tol.absolute);
    rep.add("coaction multiplicative", mult, tol.absolute);
    rep.add("coaction star", star, tol.absolute);
    rep.add("coaction counit", counit, tol.absolute);
    rep.add(u ? "twisted coassociativity" : "coaction coassociativity", coassoc, tol.absolute);
}

}  // namespace

ResidualReport validate_coaction(const Coaction& c, const Tolerance& tol, std::uint64_t seed) {
    ResidualReport rep;
    coaction_core(c, nullptr, tol, seed, rep);
    return rep;
}

ResidualReport validate_twisted(const TwistedCoaction& t, const Tolerance& tol, std::uint64_t seed) {
    if (!t.twisted()) return validate_coaction(t.rho, tol, seed);
    ResidualReport rep;
    coaction_core(t.rho, &t.u, tol, seed, rep);
    const Hopf& K = *t.rho.hopf();
    const int nA = t.rho.dimA();
    const TensorAlg& AK = *t.rho.AK();
    const TensorAlg& AKK = *t.rho.AKK();
    const TensorAlg& AKKK = *t.rho.AKKK();
    const Vec& u = t.u;
    Vec lhs = AKKK.mul(leg::one(K, u, nA, 2, 2), leg::delta(K, u, nA, 2, 0));
    Vec rhs = AKKK.mul(leg::rho(t.rho, u, 2), leg::delta(K, u, nA, 2, 1));
    rep.add("cocycle identity", max_abs(Vec(lhs - rhs)), tol.absolute);
    double norm = std::max(max_abs(Vec(leg::eps(K, u, nA, 2, 0) - AK.one())),
                           max_abs(Vec(leg::eps(K, u, nA, 2, 1) - AK.one())));
    rep.add("cocycle normalized", norm, tol.absolute);
    double unit = std::max(max_abs(Vec(AKK.mul(AKK.star(u), u) - AKK.one())),
                           max_abs(Vec(AKK.mul(u, AKK.star(u)) - AKK.one())));
    rep.add("cocycle unitary", unit, tol.absolute);
    return rep;
}

TwistedCoaction exterior_transform(const TwistedCoaction& t, const Vec& w, const Tolerance& tol) {
    const Hopf& K = *t.rho.hopf();
    const int nA = t.rho.dimA();
    auto AK = t.rho.AK();
    auto AKK = t.rho.AKK();
    const double gate = std::max(tol.absolute, 1e-7);
    Vec ws = AK->star(w);
    double unit = std::max(max_abs(Vec(AK->mul(ws, w) - AK->one())), max_abs(Vec(AK->mul(w, ws) - AK->one())));
    if (unit > gate) throw CompatibilityFailure("transforming element is not unitary");
    if (max_abs(Vec(leg::eps(K, w, nA, 1, 0) - t.rho.algebra()->one())) > gate)
        throw NotCounital("(id (x) eps)(w) differs from 1");
    Coaction base = t.rho;
    Coaction rho2(t.rho.algebra(), t.rho.hopf(),
                  [base, w, ws, AK](const Vec& a) -> Vec { return AK->mul(AK->mul(w, base(a)), ws); },
                  "Ad(w)" + t.rho.label());
    Vec u = t.cocycle();
    Vec u2 = AKK->mul(leg::one(K, w, nA, 1, 1), leg::rho(t.rho, w, 1));
    u2 = AKK->mul(AKK->mul(u2, u), leg::delta(K, ws, nA, 1, 0));
    return {rho2, u2};
}

ResidualReport check_witness(const TwistedCoaction& t, const Vec& w, const Tolerance& tol, std::uint64_t seed) {
    const Hopf& K = *t.rho.hopf();
    const Algebra& A = *t.rho.algebra();
    const int nA = t.rho.dimA();
    const TensorAlg& AK = *t.rho.AK();
    const TensorAlg& AKK = *t.rho.AKK();
    Vec ws = AK.star(w);
    ResidualReport rep;
    rep.add("witness unitary",
            std::max(max_abs(Vec(AK.mul(ws, w) - AK.one())), max_abs(Vec(AK.mul(w, ws) - AK.one()))), tol.absolute);
    double impl = 0.0;
    Vec oneK = K.one();
    for (int i : sample_indices(nA, 64, seed)) {
        Vec a = A.basis(i);
        Vec r = AK.mul(AK.mul(w, kron(a, oneK)), ws);
        impl = std::max(impl, max_abs(Vec(t.rho(a) - r)));
    }
    rep.add("witness implements coaction", impl, tol.absolute);
    Vec u = t.cocycle();
    Vec dws = leg::delta(K, ws, nA, 1, 0);
    Vec w1 = leg::one(K, w, nA, 1, 1);
    Vec c1 = AKK.mul(AKK.mul(w1, leg::one(K, w, nA, 1, 0)), dws);
    Vec c2 = AKK.mul(AKK.mul(leg::rho(t.rho, w, 1), w1), dws);
    rep.add("witness cocycle", max_abs(Vec(c1 - u)), tol.absolute);
    rep.add("witness cocycle dual form", max_abs(Vec(c2 - u)), tol.absolute);
    return rep;
}

Mat fixed_point(const Coaction& c, const Tolerance& tol) {
    const int nA = c.dimA();
    Mat m(nA * c.N(), nA);
    Vec one = c.hopf()->one();
    for (int i = 0; i < nA; ++i) {
        Vec b = c.algebra()->basis(i);
        m.col(i) = c(b) - kron(b, one);
    }
    return nullspace(m, tol.absolute);
}

Coaction coaction_from_group_action(AlgPtr a, HopfPtr cg, const CayleyTable& g, const std::vector<Mat>& alpha,
                                    const Tolerance& tol) {
    validate_group(g);
    const int n = static_cast<int>(g.size());
    const int nA = a->dim();
    if (static_cast<int>(alpha.size()) != n || cg->N != n) throw NotAnAction("one automorphism per group element");
    const double gate = std::max(tol.absolute, 1e-9);
    const int e = group_identity(g);
    if (max_abs(Mat(alpha[e] - Mat::Identity(nA, nA))) > gate) throw NotAnAction("identity does not act trivially");
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (max_abs(Mat(alpha[s] * alpha[t] - alpha[g[s][t]])) > gate)
                throw NotAnAction("composition is not compatible with the group law");
    auto idx = sample_indices(nA, 24, 7);
    for (int t = 0; t < n; ++t)
        for (int i : idx) {
            Vec bi = a->basis(i);
            if (max_abs(Vec(alpha[t] * a->star(bi) - a->star(alpha[t] * bi))) > gate)
                throw NotAnAction("automorphism does not preserve the involution");
            for (int j : idx) {
                Vec bj = a->basis(j);
                if (max_abs(Vec(alpha[t] * a->mul(bi, bj) - a->mul(alpha[t] * bi, alpha[t] * bj))) > gate)
                    throw NotAnAction("automorphism is not multiplicative");
            }
        }
    Mat r = Mat::Zero(nA * n, nA);
    for (int t = 0; t < n; ++t)
        for (int i = 0; i < nA; ++i) r.row(i * n + t) = alpha[t].row(i);
    return Coaction::from_matrix(std::move(a), std::move(cg), std::move(r), "group action");
}

Vec MatrixOver::entry(const Vec& x, int r, int c) const {
    const int nA = a_->dim();
    return x.segment((r * n_ + c) * nA, nA);
}

Vec MatrixOver::pack(const std::vector<Vec>& entries) const {
    const int nA = a_->dim();
    Vec out(dim());
    for (int k = 0; k < n_ * n_; ++k) out.segment(k * nA, nA) = entries[k];
    return out;
}

Vec MatrixOver::mul(const Vec& x, const Vec& y) const {
    std::vector<Vec> out(n_ * n_, a_->zero());
    for (int r = 0; r < n_; ++r)
        for (int k = 0; k < n_; ++k) {
            Vec xr = entry(x, r, k);
            if (xr.isZero(0.0)) continue;
            for (int c = 0; c < n_; ++c) {
                Vec yk = entry(y, k, c);
                if (!yk.isZero(0.0)) out[r * n_ + c] += a_->mul(xr, yk);
            }
        }
    return pack(out);
}

Vec MatrixOver::star(const Vec& x) const {
    std::vector<Vec> out(n_ * n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) out[r * n_ + c] = a_->star(entry(x, c, r));
    return pack(out);
}

Vec MatrixOver::one() const {
    std::vector<Vec> out(n_ * n_, a_->zero());
    for (int r = 0; r < n_; ++r) out[r * n_ + r] = a_->one();
    return pack(out);
}

Mat MatrixOver::rep(const Vec& x) const {
    Mat r0 = a_->rep(entry(x, 0, 0));
    const Eigen::Index d = r0.rows();
    Mat out(d * n_, d * n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) out.block(r * d, c * d, d, d) = (r == 0 && c == 0) ? r0 : a_->rep(entry(x, r, c));
    return out;
}

TwistedCoaction amplify(const TwistedCoaction& t, int n) {
    auto m = std::make_shared<MatrixOver>(t.rho.algebra(), n);
    const int nA = t.rho.dimA(), N = t.rho.N();
    Coaction base = t.rho;
    Coaction rho(m, t.rho.hopf(),
                 [base, n, nA, N](const Vec& x) -> Vec {
                     Vec out(x.size() * N);
                     for (int k = 0; k < n * n; ++k) out.segment(k * nA * N, nA * N) = base(x.segment(k * nA, nA));
                     return out;
                 },
                 "amplified " + t.rho.label());
    TwistedCoaction out{rho, Vec()};
    if (t.twisted()) {
        const long blk = static_cast<long>(nA) * N * N;
        out.u = Vec::Zero(n * n * blk);
        for (int r = 0; r < n; ++r) out.u.segment((r * n + r) * blk, blk) = t.u;
    }
    return out;
}

}  // namespace kac
