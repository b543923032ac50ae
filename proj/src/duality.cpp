#include "kac/duality.hpp"

#include <cmath>

#include "kac/random.hpp"

namespace kac {

DualityData build_duality(const TwistedCoaction& t, HopfPtr acting, std::uint64_t seed) {
    DualityData dd;
    dd.t = t;
    dd.cp = build_crossed(t, std::move(acting), seed);
    dd.cp2 = iterate_crossed(dd.cp, seed);
    dd.rho2 = dual_coaction(dd.cp2);
    const Hopf& K = *dd.cp->coacting();
    const int N = dd.cp->N();
    dd.MA = std::make_shared<MatrixOver>(t.rho.algebra(), N);
    dd.C2K = std::make_shared<TensorAlg>(dd.cp2, K.alg);
    dd.C2KK = std::make_shared<TensorAlg>(dd.cp2, K.alg2);

    const CrossedAlg& cp2 = *dd.cp2;
    dd.tau = cp2.embed_acting(cp2.haar_acting());
    for (const Vec& w : dd.cp->quasi_basis()) {
        dd.V.push_back(cp2.mul(dd.tau, cp2.embed(w)));
        dd.Vs.push_back(cp2.star(dd.V.back()));
        dd.P.push_back(cp2.mul(dd.Vs.back(), dd.V.back()));
    }

    std::vector<Vec> sl(N);
    for (int s = 0; s < N; ++s) sl[s] = cp2.embed(dd.cp->embed_acting(dd.cp->acting()->basis(s)));
    dd.Vbig = dd.C2K->pack(sl);

    const TensorAlg& C2K = *dd.C2K;
    Vec oneK = K.one();
    dd.U = C2K.zero();
    for (int I = 0; I < dd.size(); ++I) {
        Vec ui = C2K.mul(C2K.mul(kron(dd.Vs[I], oneK), dd.Vbig), dd.rho2(dd.V[I]));
        dd.U += ui;
        dd.UI.push_back(std::move(ui));
    }
    return dd;
}

Vec psi(const DualityData& dd, const Vec& m) {
    const CrossedAlg& cp2 = *dd.cp2;
    const int n = dd.size();
    Vec out = cp2.zero();
    for (int I = 0; I < n; ++I)
        for (int J = 0; J < n; ++J) {
            Vec a = dd.MA->entry(m, I, J);
            if (a.isZero(0.0)) continue;
            out += cp2.mul(cp2.mul(dd.Vs[I], dd.embed(a)), dd.V[J]);
        }
    return out;
}

Vec psi_inv(const DualityData& dd, const Vec& z, const Tolerance& tol) {
    const CrossedAlg& cp2 = *dd.cp2;
    const int n = dd.size();
    std::vector<Vec> entries(n * n);
    double worst = 0.0;
    for (int M = 0; M < n; ++M) {
        Vec left = cp2.mul(dd.V[M], z);
        for (int L = 0; L < n; ++L) {
            // V_M z V_L^* = (a_ML x| 1) x| tau, and E_1 of tau is 1/N.
            Vec y = cp2.mul(left, dd.Vs[L]);
            Vec a = static_cast<double>(cp2.N()) * dd.extract(y);
            worst = std::max(worst, max_abs(Vec(y - cp2.mul(dd.embed(a), dd.tau))));
            entries[M * n + L] = a;
        }
    }
    if (worst > tol.bound(max_abs(z))) throw NotInImage("V_M z V_L^* leaves A x| tau by " + std::to_string(worst));
    return dd.MA->pack(entries);
}

ResidualReport check_duality_data(const DualityData& dd, const Tolerance& tol) {
    const CrossedAlg& cp2 = *dd.cp2;
    const TensorAlg& C2K = *dd.C2K;
    const Hopf& K = *dd.cp->coacting();
    const int n = dd.size();
    Vec oneK = K.one();
    double orth = 0.0, proj = 0.0, uu = 0.0, uu2 = 0.0;
    Vec sum = cp2.zero();
    for (int I = 0; I < n; ++I) {
        for (int J = 0; J < n; ++J) {
            Vec l = cp2.mul(dd.V[I], dd.Vs[J]);
            Vec r = I == J ? dd.tau : cp2.zero();
            orth = std::max(orth, max_abs(Vec(l - r)));
        }
        sum += dd.P[I];
        proj = std::max(proj, max_abs(Vec(cp2.mul(dd.P[I], dd.P[I]) - dd.P[I])));
        Vec us = C2K.star(dd.UI[I]);
        uu = std::max(uu, max_abs(Vec(C2K.mul(dd.UI[I], us) - kron(dd.P[I], oneK))));
        uu2 = std::max(uu2, max_abs(Vec(C2K.mul(us, dd.UI[I]) - dd.rho2(dd.P[I]))));
    }
    Vec Us = C2K.star(dd.U);
    double un = std::max(max_abs(Vec(C2K.mul(Us, dd.U) - C2K.one())), max_abs(Vec(C2K.mul(dd.U, Us) - C2K.one())));
    Vec lhs = dd.rho2(dd.tau);
    Vec rhs = C2K.mul(C2K.mul(C2K.star(dd.Vbig), kron(dd.tau, oneK)), dd.Vbig);

    ResidualReport rep;
    rep.add("V_I V_J^* orthogonality", orth, tol.absolute);
    rep.add("P_I projections", proj, tol.absolute);
    rep.add("P_I partition of unity", max_abs(Vec(sum - cp2.one())), tol.absolute);
    rep.add("U_I U_I^* = P_I (x) 1", uu, tol.absolute);
    rep.add("U_I^* U_I = dual coaction of P_I", uu2, tol.absolute);
    rep.add("U unitary", un, tol.absolute);
    rep.add("dual coaction of 1 x| tau", max_abs(Vec(lhs - rhs)), tol.absolute);
    return rep;
}

ResidualReport check_psi(const DualityData& dd, const Tolerance& tol, std::uint64_t seed) {
    const CrossedAlg& cp2 = *dd.cp2;
    const MatrixOver& MA = *dd.MA;
    Rng rng(seed);
    double hom = 0.0, st = 0.0, rt = 0.0, rt2 = 0.0;
    for (int r = 0; r < 3; ++r) {
        Vec m1 = rng.cvec(MA.dim()), m2 = rng.cvec(MA.dim());
        Vec p1 = psi(dd, m1), p2 = psi(dd, m2);
        hom = std::max(hom, max_abs(Vec(psi(dd, MA.mul(m1, m2)) - cp2.mul(p1, p2))));
        st = std::max(st, max_abs(Vec(psi(dd, MA.star(m1)) - cp2.star(p1))));
        rt = std::max(rt, max_abs(Vec(psi_inv(dd, p1, tol) - m1)));
        Vec z = rng.cvec(cp2.dim());
        rt2 = std::max(rt2, max_abs(Vec(psi(dd, psi_inv(dd, z, tol)) - z)));
    }
    ResidualReport rep;
    rep.add("Psi multiplicative", hom, tol.absolute);
    rep.add("Psi star", st, tol.absolute);
    rep.add("Psi unital", max_abs(Vec(psi(dd, MA.one()) - cp2.one())), tol.absolute);
    rep.add("Psi inverse after Psi", rt, tol.absolute);
    rep.add("Psi after inverse", rt2, tol.absolute);
    return rep;
}

ResidualReport verify_duality(const DualityData& dd, const Tolerance& tol) {
    const CrossedAlg& cp2 = *dd.cp2;
    const MatrixOver& MA = *dd.MA;
    const TensorAlg& C2K = *dd.C2K;
    const TensorAlg& C2KK = *dd.C2KK;
    const Hopf& K = *dd.cp->coacting();
    const int N = K.N, n2 = cp2.dim();
    TwistedCoaction amp = amplify(dd.t, dd.size());
    Vec Us = C2K.star(dd.U);

    double eq = 0.0;
    for (int i : sample_indices(MA.dim(), 96, 17)) {
        Vec m = MA.basis(i);
        Vec lhs = C2K.mul(C2K.mul(dd.U, dd.rho2(psi(dd, m))), Us);
        RowMat R = as_rows(amp.rho(m), MA.dim(), N);
        std::vector<Vec> sl(N);
        for (int s = 0; s < N; ++s) sl[s] = psi(dd, Vec(R.col(s)));
        eq = std::max(eq, max_abs(Vec(lhs - C2K.pack(sl))));
    }

    std::vector<Vec> us(N * N);
    for (int q = 0; q < N; ++q)
        for (int x = 0; x < N; ++x) {
            Vec a = dd.embed(dd.t.uslice(q, x));
            Vec acc = cp2.zero();
            for (int I = 0; I < dd.size(); ++I) acc += cp2.mul(cp2.mul(dd.Vs[I], a), dd.V[I]);
            us[q * N + x] = acc;
        }
    Vec lhs = C2KK.pack(us);
    Vec rhs = C2KK.mul(C2KK.mul(leg::one(K, dd.U, n2, 1, 1), leg::rho(dd.rho2, dd.U, 1)),
                       leg::delta(K, Us, n2, 1, 0));
    ResidualReport rep;
    rep.add("dual coaction equivalence", eq, tol.absolute);
    rep.add("cocycle equivalence", max_abs(Vec(lhs - rhs)), tol.absolute);
    return rep;
}

Vec transport_witness_exterior(const Coaction& rho1, const Vec& v, const Vec& w) { return rho1.AK()->mul(v, w); }

Vec transport_witness_dual(const DualityData& dd, const Vec& w) {
    const int N = dd.cp->N(), nA = dd.t.rho.dimA(), n = dd.size();
    Vec W = amplify_witness(w, nA, N, n);
    RowMat R = as_rows(W, dd.MA->dim(), N);
    std::vector<Vec> sl(N);
    for (int s = 0; s < N; ++s) sl[s] = psi(dd, Vec(R.col(s)));
    return dd.C2K->mul(dd.C2K->star(dd.U), dd.C2K->pack(sl));
}

Vec amplify_witness(const Vec& w, int nA, int N, int n) {
    const long blk = static_cast<long>(nA) * N;
    Vec out = Vec::Zero(n * n * blk);
    for (int r = 0; r < n; ++r) out.segment((r * n + r) * blk, blk) = w;
    return out;
}

Vec compress_witness(const Vec& W, int nA, int N, int n) {
    (void)n;
    return W.segment(0, static_cast<long>(nA) * N);
}

}  // namespace kac
