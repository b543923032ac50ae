#include "kac/cocycle.hpp"

#include <algorithm>
#include <cmath>

namespace kac {

namespace {

double basis_conjugation_residual(const Coaction& rho, const Vec& v, const Vec& X) {
    const Algebra& A = *rho.algebra();
    const TensorAlg& AK = *rho.AK();
    Vec one = rho.hopf()->one();
    Vec vs = AK.star(v), Xs = A.star(X);
    Vec X1 = kron(X, one), Xs1 = kron(Xs, one);
    double r = 0.0;
    for (int i : sample_indices(A.dim(), 256, 11)) {
        Vec a = A.basis(i);
        Vec sigma = AK.mul(AK.mul(v, rho(a)), vs);
        Vec conj = AK.mul(AK.mul(X1, rho(A.mul(A.mul(Xs, a), X))), Xs1);
        r = std::max(r, max_abs(Vec(sigma - conj)));
    }
    return r;
}

double unitarity(const Algebra& A, const Vec& x) {
    Vec xs = A.star(x);
    return std::max(max_abs(Vec(A.mul(xs, x) - A.one())), max_abs(Vec(A.mul(x, xs) - A.one())));
}

// (id (x) phi (x) psi)(X) for X in A (x) K (x) K.
Vec pair2(const Vec& X, int nA, int N, const Vec& phi, const Vec& psi) {
    RowMat R = as_rows(X, nA, N * N);
    Vec c(N * N);
    for (int q = 0; q < N; ++q)
        for (int x = 0; x < N; ++x) c(q * N + x) = phi(q) * psi(x);
    return R * c;
}

}  // namespace

Vec exp_i(const Algebra& alg, const Vec& h) {
    double nrm = alg.norm(h);
    int s = 0;
    while (nrm > 0.25) {
        nrm *= 0.5;
        ++s;
    }
    Vec y = cd(0.0, 1.0) * h / std::ldexp(1.0, s);
    Vec term = alg.one(), out = alg.one();
    for (int k = 1; k <= 20; ++k) {
        term = alg.mul(term, y) / static_cast<double>(k);
        out += term;
    }
    for (int i = 0; i < s; ++i) out = alg.mul(out, out);
    return out;
}

Vec unitary_part(const Algebra& alg, const Vec& x) {
    double nrm = alg.norm(x);
    if (nrm == 0.0) throw SingularInput("zero element has no unitary part");
    Vec X = x / nrm;
    Vec one = alg.one();
    for (int it = 0; it < 200; ++it) {
        Vec g = alg.mul(alg.star(X), X);
        if (max_abs(Vec(g - one)) < 1e-15) break;
        X = 0.5 * alg.mul(X, Vec(3.0 * one - g));
    }
    if (unitarity(alg, X) > 1e-10) throw SingularInput("element is not invertible");
    return X;
}

Vec random_unitary(const Algebra& alg, const std::vector<Vec>& basis, double scale, Rng& rng) {
    Vec z = alg.zero();
    for (const Vec& b : basis) z += rng.cgauss() * b;
    Vec h = z + alg.star(z);
    double nrm = alg.norm(h);
    if (nrm > 0.0) h /= nrm;
    return exp_i(alg, Vec(scale * h));
}

Vec random_counital_unitary(const Coaction& c, const std::vector<Vec>& span, double scale, Rng& rng) {
    const TensorAlg& AK = *c.AK();
    const Hopf& K = *c.hopf();
    Vec z = AK.zero();
    for (const Vec& b : span)
        for (int s = 0; s < K.N; ++s) z += rng.cgauss() * kron(b, K.basis(s));
    Vec h = z + AK.star(z);
    // Remove (id (x) eps)(h) (x) 1 so that exp stays counital.
    Vec ce = as_rows(h, c.dimA(), K.N) * K.counit.transpose();
    h -= kron(ce, K.one());
    double nrm = AK.norm(h);
    if (nrm > 0.0) h /= nrm;
    return exp_i(AK, Vec(scale * h));
}

Vec slice_pair(const Coaction& c, const Vec& x, const Vec& phi) { return as_rows(x, c.dimA(), c.N()) * phi; }

TrivializationResult one_cocycle_trivialize(const Coaction& rho, const Vec& p, const Vec& v, const Tolerance& tol) {
    const Algebra& A = *rho.algebra();
    const Hopf& K = *rho.hopf();
    const TensorAlg& AK = *rho.AK();
    const TensorAlg& AKK = *rho.AKK();
    const int nA = rho.dimA(), N = K.N;
    Vec e = haar_element(*dual(K));
    Vec one = K.one();
    TrivializationResult res;
    ResidualReport& rep = res.report;

    Vec vs = AK.star(v);
    rep.add("v unitary", std::max(max_abs(Vec(AK.mul(vs, v) - AK.one())), max_abs(Vec(AK.mul(v, vs) - AK.one()))),
            tol.absolute);
    Vec lhs = AKK.mul(leg::one(K, v, nA, 1, 1), leg::rho(rho, v, 1));
    rep.add("v cocycle identity", max_abs(Vec(lhs - leg::delta(K, v, nA, 1, 0))), tol.absolute);
    res.residual_before = basis_conjugation_residual(rho, v, A.one());

    Vec x0raw = static_cast<double>(N) * slice_pair(rho, AK.mul(v, rho(p)), e);
    // Exactly unitary only when p commutes with the support of v; the polar
    // step below only needs it invertible.
    std::vector<double> sv = singular_values(A.rep(x0raw));
    rep.add_at_least("stage 1 invertible", *std::min_element(sv.begin(), sv.end()), 1e-8);
    rep.add("stage 1 coaction identity", max_abs(Vec(rho(x0raw) - AK.mul(vs, kron(x0raw, one)))), tol.absolute);
    Vec x0 = unitary_part(A, x0raw);
    Vec x0s = A.star(x0);
    Vec v1 = AK.mul(kron(x0, one), rho(x0s));
    double gap = AK.norm(Vec(v - v1));
    rep.add("stage 1 gap", gap, 1.0);
    if (gap >= 1.0) throw GapTooLarge("||v - (x0 (x) 1) rho(x0*)|| = " + std::to_string(gap));

    Vec v2 = AK.mul(v, AK.star(v1));
    Vec y = slice_pair(rho, v2, e);
    Vec xp = unitary_part(A, y);
    Vec ay = A.mul(A.star(xp), y);
    Vec rho1ay = AK.mul(AK.mul(kron(x0, one), rho(A.mul(A.mul(x0s, ay), x0))), kron(x0s, one));
    rep.add("stage 2 modulus fixed", max_abs(Vec(rho1ay - kron(ay, one))), tol.absolute);

    res.x = A.mul(xp, x0);
    rep.add("x unitary", unitarity(A, res.x), tol.absolute);
    res.residual_after = basis_conjugation_residual(rho, v, res.x);
    rep.add("trivialized coaction", res.residual_after, tol.absolute);
    res.iterations = 1;
    return res;
}

TrivializationResult two_cocycle_trivialize_once(const TwistedCoaction& t, HopfPtr acting, const Vec& p,
                                                 const std::vector<Vec>& scope, const Tolerance& tol,
                                                 std::uint64_t seed) {
    const Hopf& K = *t.rho.hopf();
    const Hopf& L = *acting;
    const int nA = t.rho.dimA(), N = K.N;
    const TensorAlg& AK = *t.rho.AK();
    const TensorAlg& AKK = *t.rho.AKK();
    CrossedPtr cpp = build_crossed(t, acting, seed);
    const CrossedAlg& cp = *cpp;
    DualWitness dw = witness_from_projection(cpp, p, scope, tol);
    Vec q = projection_from_witness(dw);
    TrivializationResult res;
    ResidualReport& rep = res.report;
    rep.merge(dw.report, "dual witness ");

    const auto& W = cp.quasi_basis();
    const auto& Ws = cp.quasi_basis_star();
    const int n = static_cast<int>(W.size());
    std::vector<Vec> M(n * n);
    for (int I = 0; I < n; ++I) {
        Vec l = cp.mul(Ws[I], q);
        for (int J = 0; J < n; ++J) M[I * n + J] = cp.mul(l, W[J]);
    }
    double mu = 0.0;
    Vec diag = cp.zero();
    for (int I = 0; I < n; ++I) {
        diag += M[I * n + I];
        for (int J = 0; J < n; ++J)
            for (int Kk = 0; Kk < n; ++Kk)
                for (int Ll = 0; Ll < n; ++Ll) {
                    Vec r = J == Kk ? M[I * n + Ll] : cp.zero();
                    mu = std::max(mu, max_abs(Vec(cp.mul(M[I * n + J], M[Kk * n + Ll]) - r)));
                }
    }
    mu = std::max(mu, max_abs(Vec(diag - cp.one())));
    rep.add("matrix units from witness", mu, tol.absolute);
    if (mu > tol.absolute) throw WitnessQualityTooLow("matrix-unit residual " + std::to_string(mu));

    const ComatrixUnits& cu = cp.comatrix();
    std::vector<Vec> theta(N, cp.zero());
    for (int I = 0; I < cu.size(); ++I) {
        Vec l = cp.mul(cp.star(cp.embed_acting(cu.w[I])), q) * static_cast<double>(cu.d(I));
        for (int s = 0; s < N; ++s) theta[s] += cp.mul(l, cp.embed_acting(L.alg->mul(cu.w[I], L.basis(s))));
    }
    double th = 0.0;
    for (int s = 0; s < N; ++s)
        for (int r = 0; r < N; ++r) {
            Vec prod = L.alg->mul(L.basis(s), L.basis(r));
            Vec lin = cp.zero();
            for (int k = 0; k < N; ++k)
                if (prod(k) != cd(0.0)) lin += prod(k) * theta[k];
            th = std::max(th, max_abs(Vec(cp.mul(theta[s], theta[r]) - lin)));
        }
    rep.add("theta multiplicative", th, tol.absolute);

    auto CK = std::make_shared<const TensorAlg>(cpp, K.alg);
    Vec v = CK->pack(theta);
    Vec xc = CK->mul(v, CK->star(V_unitary(cp)));
    double mem = 0.0;
    std::vector<Vec> xs(N);
    for (int s = 0; s < N; ++s) {
        Vec sl = CK->slice(xc, s);
        xs[s] = cp.E1(sl);
        mem = std::max(mem, max_abs(Vec(sl - cp.embed(xs[s]))));
    }
    rep.add("x lies in A (x) K", mem, tol.absolute);
    res.x = AK.pack(xs);
    Vec xst = AK.star(res.x);
    rep.add("x unitary",
            std::max(max_abs(Vec(AK.mul(xst, res.x) - AK.one())), max_abs(Vec(AK.mul(res.x, xst) - AK.one()))),
            tol.absolute);

    // Closed expression for x-hat(l_s) in terms of u-hat and the translates of p.
    Vec pA = cp.E1(q);
    Vec u = t.cocycle();
    Vec us = AKK.star(u);
    double cf = 0.0;
    for (int s = 0; s < N; ++s) {
        Vec acc = Vec::Zero(nA);
        for (size_t k = 0; k < cu.blocks.size(); ++k) {
            const int d = cu.blocks[k];
            for (int i = 0; i < d; ++i)
                for (int j1 = 0; j1 < d; ++j1)
                    for (int j2 = 0; j2 < d; ++j2) {
                        Vec left = pair2(us, nA, N, L.alg->star(cu.at(k, j1, j2)), cu.at(k, j1, i));
                        for (int j3 = 0; j3 < d; ++j3) {
                            Vec mid = t.rho.act(L.alg->star(cu.at(k, j2, j3)), pA);
                            Vec lm = t.rho.algebra()->mul(left, mid);
                            for (int j4 = 0; j4 < d; ++j4) {
                                Vec h = L.alg->mul(cu.at(k, i, j4), L.basis(s));
                                Vec right = pair2(u, nA, N, L.alg->star(cu.at(k, j3, j4)), h);
                                acc += static_cast<double>(d) * t.rho.algebra()->mul(lm, right);
                            }
                        }
                    }
        }
        cf = std::max(cf, max_abs(Vec(acc - xs[s])));
    }
    rep.add("x closed expression", cf, tol.absolute);

    Vec one = K.one();
    Vec xd = leg::delta(K, xst, nA, 1, 0);
    Vec lhs = AKK.mul(AKK.mul(AKK.mul(leg::one(K, res.x, nA, 1, 1), leg::rho(t.rho, res.x, 1)), u), xd);
    res.residual_before = AKK.norm(Vec(u - AKK.one()));
    res.residual_after = AKK.norm(Vec(lhs - AKK.one()));
    rep.add("cocycle trivialized", max_abs(Vec(lhs - AKK.one())), tol.absolute);
    res.L = compute_L(L, seed).max_variant;
    double step = AK.norm(Vec(res.x - AK.one()));
    rep.add("step size within bound", step, res.residual_after + res.L * res.residual_before + tol.absolute);
    res.iterations = 1;
    return res;
}

TrivializationResult two_cocycle_trivialize_iterative(const TwistedCoaction& t, HopfPtr acting, const Vec& p,
                                                      const std::vector<Vec>& scope, int max_iter, double target,
                                                      const Tolerance& tol, std::uint64_t seed) {
    const TensorAlg& AK = *t.rho.AK();
    const TensorAlg& AKK = *t.rho.AKK();
    TrivializationResult res;
    TwistedCoaction cur = t;
    Vec X = AK.one();
    res.residual_before = AKK.norm(Vec(t.cocycle() - AKK.one()));
    double r = res.residual_before;
    int it = 0;
    for (;; ++it) {
        res.profile.push_back(r);
        if (r < target || it >= max_iter) break;
        TrivializationResult step = two_cocycle_trivialize_once(cur, acting, p, scope, tol, seed);
        res.L = step.L;
        cur = exterior_transform(cur, step.x, tol);
        X = AK.mul(step.x, X);
        r = AKK.norm(Vec(cur.cocycle() - AKK.one()));
    }
    if (r >= target) throw NoConvergence("||u_k - 1|| = " + std::to_string(r) + " after " + std::to_string(it) +
                                         " steps");
    res.iterations = it;
    res.x = X;
    TwistedCoaction fin = exterior_transform(t, X, tol);
    res.residual_after = AKK.norm(Vec(fin.cocycle() - AKK.one()));
    double ratio = 0.0;
    for (size_t k = 0; k + 1 < res.profile.size(); ++k)
        if (res.profile[k] < 0.5 && res.profile[k] > 0.0) ratio = std::max(ratio, res.profile[k + 1] / res.profile[k]);
    ResidualReport& rep = res.report;
    rep.add("iteration reached target", r, target);
    rep.add("decay ratio inside basin", ratio, 0.6);
    rep.add("accumulated unitary trivializes", res.residual_after, std::max(target, tol.absolute));
    return res;
}

LConstants compute_L(const Hopf& H, std::uint64_t seed) {
    ComatrixUnits cu = comatrix_units(H, seed);
    const StructAlg& alg = *H.alg;
    HopfPtr H0 = dual(H);
    auto Vstar = [&](const Vec& g) {
        Vec out = alg.zero();
        for (int s = 0; s < H.N; ++s) {
            cd c = pair(H, H0->alg->star(H0->basis(s)), g);
            if (c != cd(0.0)) out += c * alg.star(H.basis(s));
        }
        return out;
    };
    LConstants out;
    for (int I = 0; I < cu.size(); ++I) out.sum_variant += cu.d(I) * alg.norm(cu.w[I]);
    double acc = 0.0;
    for (size_t k = 0; k < cu.blocks.size(); ++k) {
        const int d = cu.blocks[k];
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                double a = d * alg.norm(alg.star(cu.at(k, i, j)));
                for (int j1 = 0; j1 < d; ++j1)
                    for (size_t r = 0; r < cu.blocks.size(); ++r) {
                        const int dr = cu.blocks[r];
                        for (int t = 0; t < dr; ++t)
                            for (int t1 = 0; t1 < dr; ++t1)
                                for (int t2 = 0; t2 < dr; ++t2) {
                                    Vec m = alg.mul(alg.mul(cu.at(k, j1, j), cu.at(r, t2, t1)), Vstar(cu.at(r, t1, t)));
                                    acc += a * alg.norm(m);
                                }
                    }
            }
    }
    out.max_variant = std::max(acc, 1.0);
    return out;
}

AueStep aue_one_step(const Coaction& rho, const Vec& p, const Coaction& sigma, const Vec& v,
                     const std::vector<Vec>& F, const Tolerance& tol, std::uint64_t seed) {
    const Algebra& A = *rho.algebra();
    const Hopf& K = *rho.hopf();
    const TensorAlg& AK = *rho.AK();
    HopfPtr H = dual(K);
    Vec e = haar_element(*H);
    ComatrixUnits cu = comatrix_units(*H, seed);
    Vec one = K.one();
    AueStep out;
    out.L = compute_L(*H, seed).sum_variant;
    out.x = static_cast<double>(K.N) * slice_pair(rho, AK.mul(v, rho(p)), e);
    out.report.add("x unitary", unitarity(A, out.x), tol.absolute);

    Vec vs = AK.star(v), xs = A.star(out.x);
    auto approx = [&](const Vec& a) { return AK.norm(Vec(sigma(a) - AK.mul(AK.mul(v, rho(a)), vs))); };
    std::vector<double> dev(F.size(), 0.0), conj(F.size()), comm(F.size());
    for (size_t f = 0; f < F.size(); ++f) {
        const Vec& a = F[f];
        out.eps = std::max(out.eps, approx(a));
        for (int I = 0; I < cu.size(); ++I) {
            Vec Sw = H->S(cu.w[I]);
            Vec b = rho.act(Sw, a), bs = sigma.act(Sw, a);
            out.eps = std::max({out.eps, approx(b), approx(bs)});
            dev[f] = std::max(dev[f], AK.norm(Vec(sigma(b) - rho(b))));
        }
        Vec c = AK.mul(AK.mul(kron(out.x, one), rho(A.mul(A.mul(xs, a), out.x))), kron(xs, one));
        conj[f] = AK.norm(Vec(sigma(a) - c));
        comm[f] = A.norm(Vec(A.mul(out.x, a) - A.mul(a, out.x)));
    }
    double worst_conj = 0.0;
    for (double c : conj) worst_conj = std::max(worst_conj, c);
    out.report.add("conjugation residual", worst_conj, out.eps + tol.absolute);
    for (size_t f = 0; f < F.size(); ++f)
        out.report.add("commutator " + std::to_string(f), comm[f], out.eps + out.L * dev[f] + tol.absolute);
    return out;
}

}  // namespace kac
