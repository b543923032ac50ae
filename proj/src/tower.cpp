#include "kac/tower.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "kac/random.hpp"

namespace kac {

namespace {

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Vec pack_matrices(const MatAlg& A, const TensorAlg& AK, const std::vector<Mat>& slices) {
    std::vector<Vec> s;
    for (const Mat& m : slices) s.push_back(A.from_mat(m));
    return AK.pack(s);
}

}  // namespace

Mat TowerBase::Vhat(const Vec& h) const {
    Mat out = Mat::Zero(N, N);
    for (int s = 0; s < static_cast<int>(V.size()); ++s)
        if (h(s) != cd(0.0)) out += h(s) * V[s];
    return out;
}

TowerBase build_base(HopfPtr H, std::uint64_t seed) {
    TowerBase b;
    b.H = H;
    b.H0 = dual(*H);
    b.N = H->N;
    Coaction d0 = Coaction::from_matrix(b.H0->alg, b.H0, b.H0->comult, "Delta0");
    b.cp0 = build_crossed(TwistedCoaction{d0, Vec()}, H, seed);
    b.wd = wedderburn(*to_struct(*b.cp0, "base"), seed);
    if (b.wd.blocks.size() != 1 || b.wd.blocks[0] != b.N)
        throw StructureFailure("the base crossed product is not a single N x N block");
    for (int s = 0; s < b.N; ++s) b.V.push_back(b.theta(b.cp0->embed_acting(H->basis(s))));
    b.p = b.theta(b.cp0->embed(haar_element(*b.H0)));
    b.cuH = comatrix_units(*H, seed);
    b.cuH0 = comatrix_units(*b.H0, seed);
    return b;
}

ResidualReport check_base(const TowerBase& b, const Tolerance& tol, std::uint64_t seed) {
    const CrossedAlg& cp = *b.cp0;
    Rng rng(seed);
    double hom = 0.0, st = 0.0, rt = 0.0;
    for (int r = 0; r < 4; ++r) {
        Vec x = rng.cvec(cp.dim()), y = rng.cvec(cp.dim());
        Mat tx = b.theta(x), ty = b.theta(y);
        hom = std::max(hom, max_abs(Mat(b.theta(cp.mul(x, y)) - tx * ty)));
        st = std::max(st, max_abs(Mat(b.theta(cp.star(x)) - tx.adjoint())));
        rt = std::max(rt, max_abs(Vec(b.wd.from_coordinates({tx}) - x)));
    }
    double vh = 0.0;
    Mat I = Mat::Identity(b.N, b.N);
    const StructAlg& H = *b.H->alg;
    for (int s = 0; s < b.N; ++s) {
        Vec bs = H.basis(s);
        vh = std::max(vh, max_abs(Mat(b.Vhat(H.star(bs)) - b.V[s].adjoint())));
        for (int t = 0; t < b.N; ++t) vh = std::max(vh, max_abs(Mat(b.Vhat(H.mul(bs, H.basis(t))) - b.V[s] * b.V[t])));
    }
    ResidualReport rep;
    rep.add("base is a single N x N block", b.wd.blocks.size() == 1 && b.wd.blocks[0] == b.N ? 0.0 : 1.0, 0.5);
    rep.add("base isomorphism multiplicative", hom, tol.absolute);
    rep.add("base isomorphism star", st, tol.absolute);
    rep.add("base isomorphism unital", max_abs(Mat(b.theta(cp.one()) - I)), tol.absolute);
    rep.add("base isomorphism invertible", rt, tol.absolute);
    rep.add("V-hat is a *-homomorphism", vh, tol.absolute);
    rep.add("V-hat unital", max_abs(Mat(b.Vhat(H.one()) - I)), tol.absolute);
    rep.add("base projection", max_abs(Mat(b.p * b.p - b.p)) + max_abs(Mat(b.p.adjoint() - b.p)), tol.absolute);
    return rep;
}

TowerLevel build_level(const TowerBase& b, int n, long cap) {
    if (n < 1) throw LevelTooLarge("tower levels start at 1");
    const int N = b.N;
    const long d = ipow(N, n);
    if (d * d * N > cap)
        throw LevelTooLarge("dim A_n * N = " + std::to_string(d * d * N) + " exceeds " + std::to_string(cap));
    TowerLevel lvl;
    lvl.n = n;
    lvl.N = N;
    lvl.A = std::make_shared<const MatAlg>(static_cast<int>(d));
    const MatAlg& A = *lvl.A;
    auto AK = std::make_shared<const TensorAlg>(lvl.A, b.H0->alg);

    Vec u;
    for (int k = 0; k < n; ++k) {
        const long pre = ipow(N, k), post = ipow(N, n - k - 1);
        std::vector<Mat> sl;
        for (int s = 0; s < N; ++s)
            sl.push_back(kron(kron(Mat::Identity(pre, pre), b.V[s]), Mat::Identity(post, post)));
        Vec v = pack_matrices(A, *AK, sl);
        u = k == 0 ? v : AK->mul(u, v);
    }
    lvl.u = u;
    Vec us = AK->star(u);
    Vec one0 = b.H0->one();
    lvl.rho = Coaction(lvl.A, b.H0,
                       [AK, u, us, one0](const Vec& a) -> Vec { return AK->mul(AK->mul(u, kron(a, one0)), us); },
                       "rho_" + std::to_string(n));
    const long pre = ipow(N, n - 1);
    lvl.p = A.from_mat(kron(Mat::Identity(pre, pre), b.p));
    for (long r = 0; r < pre; ++r)
        for (long c = 0; c < pre; ++c) {
            Mat e = Mat::Zero(pre, pre);
            e(r, c) = 1.0;
            lvl.scope.push_back(A.from_mat(kron(e, Mat::Identity(N, N))));
        }
    return lvl;
}

Vec tower_inclusion(const TowerLevel& from, const Vec& a) {
    MatAlg big(from.size() * from.N);
    return big.from_mat(kron(from.A->to_mat(a), Mat::Identity(from.N, from.N)));
}

Vec closed_form_comatrix(const TowerBase& b, int n) {
    const ComatrixUnits& cu = b.cuH;
    const int N = b.N;
    const long d = ipow(N, n);
    std::vector<Mat> sl(N, Mat::Zero(d, d));
    for (size_t k = 0; k < cu.blocks.size(); ++k) {
        const int dk = cu.blocks[k];
        // T[i][j] sums V-hat(w_{i j1}) (x) ... (x) V-hat(w_{j_{m-1} j}) over the inner indices.
        std::vector<Mat> T(dk * dk);
        for (int i = 0; i < dk; ++i)
            for (int j = 0; j < dk; ++j) T[i * dk + j] = b.Vhat(cu.at(k, i, j));
        for (int m = 1; m < n; ++m) {
            std::vector<Mat> next(dk * dk);
            for (int i = 0; i < dk; ++i)
                for (int j = 0; j < dk; ++j) {
                    Mat acc = Mat::Zero(T[0].rows() * N, T[0].cols() * N);
                    for (int l = 0; l < dk; ++l) acc += kron(T[i * dk + l], b.Vhat(cu.at(k, l, j)));
                    next[i * dk + j] = acc;
                }
            T = std::move(next);
        }
        for (int i = 0; i < dk; ++i)
            for (int j = 0; j < dk; ++j) {
                const Vec& ph = cu.phi[cu.index(k, i, j)];
                for (int s = 0; s < N; ++s)
                    if (ph(s) != cd(0.0)) sl[s] += ph(s) * T[i * dk + j];
            }
    }
    auto A = std::make_shared<const MatAlg>(static_cast<int>(d));
    return pack_matrices(*A, TensorAlg(A, b.H0->alg), sl);
}

Vec closed_form_dual(const TowerBase& b, int n) {
    const ComatrixUnits& cu = b.cuH0;
    const StructAlg& K = *b.H0->alg;
    const int N = b.N;
    struct Term {
        Mat m;
        Vec omega;
    };
    std::vector<Term> terms{{Mat::Identity(1, 1), K.one()}};
    for (int m = 0; m < n; ++m) {
        std::vector<Term> next;
        for (const Term& t : terms)
            for (int I = 0; I < cu.size(); ++I)
                next.push_back({kron(t.m, b.Vhat(cu.phi[I])), K.mul(t.omega, cu.w[I])});
        terms = std::move(next);
    }
    const long d = ipow(N, n);
    std::vector<Mat> sl(N, Mat::Zero(d, d));
    for (const Term& t : terms)
        for (int s = 0; s < N; ++s)
            if (t.omega(s) != cd(0.0)) sl[s] += t.omega(s) * t.m;
    auto A = std::make_shared<const MatAlg>(static_cast<int>(d));
    return pack_matrices(*A, TensorAlg(A, b.H0->alg), sl);
}

ResidualReport check_level(const TowerBase& b, const TowerLevel& lvl, const TowerLevel* next,
                           const Tolerance& tol) {
    const Hopf& K = *b.H0;
    const int nA = lvl.A->dim();
    const TensorAlg& AKK = *lvl.rho.AKK();
    ResidualReport rep;
    rep.add("closed form from comatrix units", max_abs(Vec(closed_form_comatrix(b, lvl.n) - lvl.u)), tol.absolute);
    rep.add("closed form from dual comatrix units", max_abs(Vec(closed_form_dual(b, lvl.n) - lvl.u)),
            tol.absolute);
    Vec lhs = AKK.mul(leg::one(K, lvl.u, nA, 1, 1), leg::one(K, lvl.u, nA, 1, 0));
    Vec rhs = leg::delta(K, lvl.u, nA, 1, 0);
    rep.add("u_n cocycle identity", max_abs(Vec(lhs - rhs)), tol.absolute);
    rep.merge(validate_coaction(lvl.rho, tol), "rho_n ");
    if (next) {
        if (next->n != lvl.n + 1 || next->N != lvl.N) throw ParentMismatch("next level does not follow this one");
        double inc = 0.0;
        const int N = lvl.N;
        for (int i = 0; i < nA; ++i) {
            Vec a = lvl.A->basis(i);
            RowMat r = as_rows(lvl.rho(a), nA, N);
            std::vector<Vec> sl(N);
            for (int s = 0; s < N; ++s) sl[s] = tower_inclusion(lvl, Vec(r.col(s)));
            Vec l = next->rho.AK()->pack(sl);
            inc = std::max(inc, max_abs(Vec(l - next->rho(tower_inclusion(lvl, a)))));
        }
        rep.add("inclusion intertwines rho_n", inc, tol.absolute);
    }
    return rep;
}

TowerRohlin rohlin_report(const TowerBase& b, const TowerLevel& lvl, const Tolerance& tol) {
    TowerRohlin tr;
    tr.rohlin = RohlinWitness{lvl.twisted(), b.H, lvl.p, lvl.scope};
    tr.projection = check_rohlin_projection(tr.rohlin, tol);
    tr.witness = check_witness(lvl.twisted(), lvl.u, tol);
    return tr;
}

Intertwiner intertwine_homomorphism(const std::function<Mat(const Mat&)>& rho, int m, int n,
                                    const Tolerance& tol) {
    auto unit = [m](int i, int j) {
        Mat e = Mat::Zero(m, m);
        e(i, j) = 1.0;
        return e;
    };
    const Mat In = Mat::Identity(n, n);
    Mat f = rho(unit(0, 0));
    Eigen::SelfAdjointEigenSolver<Mat> es(Mat(0.5 * (f + f.adjoint())));
    std::vector<int> range;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double ev = es.eigenvalues()(i);
        if (std::abs(ev - 1.0) < 1e-6) range.push_back(i);
        else if (std::abs(ev) > 1e-6) throw RankObstruction("rho(e_11) is not a projection");
    }
    if (static_cast<int>(range.size()) != n)
        throw RankObstruction("rank of rho(e_11) is " + std::to_string(range.size()) + ", expected " +
                              std::to_string(n));
    // w is a partial isometry from the range of e_11 (x) I_n onto the range of rho(e_11).
    Mat Q(m * n, n);
    for (int c = 0; c < n; ++c) Q.col(c) = es.eigenvectors().col(range[c]);
    Mat P = Mat::Zero(m * n, n);
    for (int c = 0; c < n; ++c) P(c, c) = 1.0;
    Mat w = Q * P.adjoint();
    Mat u = Mat::Zero(m * n, m * n);
    for (int i = 0; i < m; ++i) u += rho(unit(i, 0)) * w * kron(unit(0, i), In);

    Intertwiner out;
    out.u = u;
    const Mat I = Mat::Identity(m * n, m * n);
    out.report.add("intertwiner unitary", std::max(max_abs(Mat(u.adjoint() * u - I)), max_abs(Mat(u * u.adjoint() - I))),
                   tol.absolute);
    double impl = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            impl = std::max(impl, max_abs(Mat(rho(unit(i, j)) - u * kron(unit(i, j), In) * u.adjoint())));
    out.report.add("intertwiner implements rho", impl, tol.absolute);
    return out;
}

}  // namespace kac
