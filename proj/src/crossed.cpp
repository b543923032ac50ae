#include "kac/crossed.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "kac/random.hpp"

namespace kac {
namespace {

constexpr double kDrop = 1e-14;

struct Coef3 {
    int p, q, r;
    cd v;
};

// Coefficients of the double comultiplication of l_s.
std::vector<std::vector<Coef3>> double_comult(const Hopf& L) {
    const int N = L.N;
    std::vector<std::vector<Coef3>> out(N);
    for (int s = 0; s < N; ++s)
        for (int m = 0; m < N; ++m)
            for (int r = 0; r < N; ++r) {
                cd outer = L.comult(m * N + r, s);
                if (std::abs(outer) < kDrop) continue;
                for (int p = 0; p < N; ++p)
                    for (int q = 0; q < N; ++q) {
                        cd inner = L.comult(p * N + q, m);
                        if (std::abs(inner) > kDrop) out[s].push_back({p, q, r, outer * inner});
                    }
            }
    for (auto& v : out) {
        std::map<std::tuple<int, int, int>, cd> acc;
        for (const auto& c : v) acc[{c.p, c.q, c.r}] += c.v;
        v.clear();
        for (const auto& [k, c] : acc)
            if (std::abs(c) > kDrop) v.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), c});
    }
    return out;
}

}  // namespace

CrossedAlg::CrossedAlg(TwistedCoaction t, HopfPtr acting, std::uint64_t seed)
    : t_(std::move(t)), L_(std::move(acting)), nA_(t_.rho.dimA()), N_(t_.rho.N()) {
    if (L_->N != N_) throw ParentMismatch("acting algebra has the wrong dimension");
    const Hopf& K = *t_.rho.hopf();
    const Hopf& L = *L_;
    const int N = N_;
    eK_ = haar_element(K);
    eL_ = haar_element(L);
    cu_ = comatrix_units(L, seed);

    const bool tw = t_.twisted();
    Vec oneK = K.one();
    auto c3 = double_comult(L);
    std::vector<std::vector<std::vector<std::pair<int, cd>>>> mL(N, std::vector<std::vector<std::pair<int, cd>>>(N));
    for (const auto& tr : L.alg->mult()) mL[tr.i][tr.j].push_back({tr.k, tr.v});

    std::map<std::tuple<int, int, int, int, int>, std::map<int, cd>> acc;
    for (int s = 0; s < N; ++s)
        for (const auto& c : c3[s])
            for (int tt = 0; tt < N; ++tt)
                for (int x = 0; x < N; ++x)
                    for (int z = 0; z < N; ++z) {
                        cd d = L.comult(x * N + z, tt);
                        if (std::abs(d) < kDrop) continue;
                        cd base = c.v * d;
                        int q = c.q, xx = x;
                        if (!tw) {
                            base *= oneK(c.q) * oneK(x);
                            q = 0;
                            xx = 0;
                            if (std::abs(base) < kDrop) continue;
                        }
                        for (const auto& [y, m] : mL[c.r][z]) acc[{s, tt, c.p, q, xx}][y] += base * m;
                    }
    for (const auto& [key, outs] : acc) {
        Term term{std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key), std::get<4>(key), {}};
        for (const auto& [y, v] : outs)
            if (std::abs(v) > kDrop) term.out.push_back({y, v});
        if (!term.out.empty()) terms_.push_back(std::move(term));
    }
    if (tw) {
        uslices_.resize(N * N);
        for (int q = 0; q < N; ++q)
            for (int x = 0; x < N; ++x) uslices_[q * N + x] = t_.uslice(q, x);
    }

    // (1 x| l_s)^* = sum conj(c) uhat(S l_q, l_p)^* x| l_r^*.
    const Algebra& A = *base();
    const Mat& TL = L.alg->star_matrix();
    star_acting_.resize(N);
    for (int s = 0; s < N; ++s) {
        Vec out = Vec::Zero(dim());
        for (const auto& c : c3[s]) {
            Vec u = A.zero();
            for (int j = 0; j < N; ++j) {
                cd sj = L.antipode(j, c.q);
                if (sj != cd(0.0)) u += sj * t_.uhat(L.basis(j), L.basis(c.p));
            }
            Vec us = A.star(u);
            for (int m = 0; m < N; ++m)
                if (TL(m, c.r) != cd(0.0)) out += std::conj(c.v) * TL(m, c.r) * kron(us, L.basis(m));
        }
        star_acting_[s] = out;
    }

    Vec oneA = A.one();
    for (int I = 0; I < cu_.size(); ++I) {
        W_.push_back(kron(Vec(std::sqrt(static_cast<double>(cu_.d(I))) * oneA), cu_.w[I]));
        Ws_.push_back(star(W_.back()));
    }
}

std::string CrossedAlg::label() const { return base()->label() + " x| " + L_->label; }

Vec CrossedAlg::slice(const Vec& x, int s) const {
    Vec out(nA_);
    for (int i = 0; i < nA_; ++i) out(i) = x(i * N_ + s);
    return out;
}

Vec CrossedAlg::embed(const Vec& a) const { return kron(a, L_->one()); }
Vec CrossedAlg::embed_acting(const Vec& l) const { return kron(base()->one(), l); }
Vec CrossedAlg::one() const { return kron(base()->one(), L_->one()); }

Vec CrossedAlg::E1(const Vec& x) const { return as_rows(x, nA_, N_) * eK_; }

Vec CrossedAlg::mul(const Vec& x, const Vec& y) const {
    const Algebra& A = *base();
    const int N = N_;
    std::vector<Vec> xs(N), ys(N);
    std::vector<RowMat> ry(N);
    std::vector<bool> xz(N), yz(N);
    for (int s = 0; s < N; ++s) {
        xs[s] = slice(x, s);
        ys[s] = slice(y, s);
        xz[s] = xs[s].isZero(0.0);
        yz[s] = ys[s].isZero(0.0);
        if (!yz[s]) ry[s] = as_rows(t_.rho(ys[s]), nA_, N);
    }
    std::vector<Vec> out(N, A.zero());
    int ls = -1, lt = -1, lp = -1;
    Vec prod;
    for (const auto& term : terms_) {
        if (xz[term.s] || yz[term.t]) continue;
        if (term.s != ls || term.t != lt || term.p != lp) {
            prod = A.mul(xs[term.s], Vec(ry[term.t].col(term.p)));
            ls = term.s;
            lt = term.t;
            lp = term.p;
        }
        Vec v = t_.twisted() ? A.mul(prod, uslices_[term.q * N + term.x]) : prod;
        for (const auto& [yy, c] : term.out) out[yy] += c * v;
    }
    Vec r(dim());
    for (int s = 0; s < N; ++s)
        for (int i = 0; i < nA_; ++i) r(i * N + s) = out[s](i);
    return r;
}

Vec CrossedAlg::star(const Vec& x) const {
    const Algebra& A = *base();
    Vec out = Vec::Zero(dim());
    for (int s = 0; s < N_; ++s) {
        Vec xs = slice(x, s);
        if (xs.isZero(0.0)) continue;
        out += mul(star_acting_[s], embed(A.star(xs)));
    }
    return out;
}

Mat CrossedAlg::rep(const Vec& x) const {
    const Algebra& A = *base();
    const int n = static_cast<int>(W_.size());
    std::vector<Mat> blocks(n * n);
    Eigen::Index d = 0;
    for (int J = 0; J < n; ++J) {
        Vec y = mul(x, Ws_[J]);
        for (int I = 0; I < n; ++I) {
            blocks[I * n + J] = A.rep(E1(mul(W_[I], y)));
            d = blocks[I * n + J].rows();
        }
    }
    Mat out(d * n, d * n);
    for (int I = 0; I < n; ++I)
        for (int J = 0; J < n; ++J) out.block(I * d, J * d, d, d) = blocks[I * n + J];
    return out;
}

CrossedPtr build_crossed(const TwistedCoaction& t, HopfPtr acting, std::uint64_t seed) {
    return std::make_shared<CrossedAlg>(t, std::move(acting), seed);
}

ResidualReport check_crossed(const CrossedAlg& cp, const Tolerance& tol, std::uint64_t seed) {
    const Algebra& A = *cp.base();
    const Hopf& L = *cp.acting();
    const int n = cp.dim(), N = cp.N(), nA = cp.base_dim();
    Rng rng(seed);
    auto idx = sample_indices(n, 16, seed);
    std::vector<Vec> b(n);
    for (int i : idx) b[i] = cp.basis(i);

    double assoc = 0.0, anti = 0.0, invol = 0.0, unit = 0.0;
    Vec one = cp.one();
    for (int i : idx) {
        unit = std::max(unit, max_abs(Vec(cp.mul(one, b[i]) - b[i])));
        unit = std::max(unit, max_abs(Vec(cp.mul(b[i], one) - b[i])));
        invol = std::max(invol, max_abs(Vec(cp.star(cp.star(b[i])) - b[i])));
    }
    for (int r = 0; r < 48; ++r) {
        Vec x = b[idx[rng.next() % idx.size()]], y = b[idx[rng.next() % idx.size()]],
            z = b[idx[rng.next() % idx.size()]];
        Vec xy = cp.mul(x, y);
        assoc = std::max(assoc, max_abs(Vec(cp.mul(xy, z) - cp.mul(x, cp.mul(y, z)))));
        anti = std::max(anti, max_abs(Vec(cp.star(xy) - cp.mul(cp.star(y), cp.star(x)))));
    }
    for (int r = 0; r < 4; ++r) {
        Vec x = rng.cvec(n), y = rng.cvec(n), z = rng.cvec(n);
        Vec xy = cp.mul(x, y);
        double sc = 1.0 + max_abs(x) * max_abs(y) * max_abs(z);
        assoc = std::max(assoc, max_abs(Vec(cp.mul(xy, z) - cp.mul(x, cp.mul(y, z)))) / sc);
        anti = std::max(anti, max_abs(Vec(cp.star(xy) - cp.mul(cp.star(y), cp.star(x)))) / sc);
    }

    // (1 x| l_s)(a x| 1) = sum Delta(l_s) coefficients rho_x(a) x| l_z.
    double cov = 0.0;
    auto aidx = sample_indices(nA, 8, seed + 3);
    for (int s = 0; s < N; ++s)
        for (int i : aidx) {
            Vec a = A.basis(i);
            Vec lhs = cp.mul(cp.embed_acting(L.basis(s)), cp.embed(a));
            Vec rhs = Vec::Zero(n);
            for (int x = 0; x < N; ++x)
                for (int z = 0; z < N; ++z) {
                    cd c = L.comult(x * N + z, s);
                    if (c != cd(0.0)) rhs += c * kron(cp.coaction().slice(a, x), L.basis(z));
                }
            cov = std::max(cov, max_abs(Vec(lhs - rhs)));
        }

    const auto& W = cp.quasi_basis();
    const auto& Ws = cp.quasi_basis_star();
    double qb = 0.0;
    for (int i : idx) {
        Vec l = Vec::Zero(n), r = Vec::Zero(n);
        for (size_t I = 0; I < W.size(); ++I) {
            l += cp.mul(Ws[I], cp.embed(cp.E1(cp.mul(W[I], b[i]))));
            r += cp.mul(cp.embed(cp.E1(cp.mul(b[i], Ws[I]))), W[I]);
        }
        qb = std::max({qb, max_abs(Vec(l - b[i])), max_abs(Vec(r - b[i]))});
    }
    Vec idxsum = Vec::Zero(n);
    for (size_t I = 0; I < W.size(); ++I) idxsum += cp.mul(Ws[I], W[I]);

    double bimod = 0.0;
    for (int i : aidx)
        for (int j : idx) {
            Vec a = A.basis(i);
            Vec l = cp.E1(cp.mul(cp.embed(a), cp.mul(b[j], cp.embed(a))));
            Vec r = A.mul(a, A.mul(cp.E1(b[j]), a));
            bimod = std::max(bimod, max_abs(Vec(l - r)));
        }
    Vec e1tau = cp.E1(cp.embed_acting(cp.haar_acting()));

    ResidualReport rep;
    rep.add("crossed associativity", assoc, tol.absolute);
    rep.add("crossed unit", unit, tol.absolute);
    rep.add("crossed star antimultiplicative", anti, tol.absolute);
    rep.add("crossed star involutive", invol, tol.absolute);
    rep.add("covariance relation", cov, tol.absolute);
    rep.add("quasi-basis reconstruction", qb, tol.absolute);
    rep.add("watatani index", max_abs(Vec(idxsum - static_cast<double>(N) * one)), tol.absolute);
    rep.add("E1 bimodule", bimod, tol.absolute);
    rep.add("E1 of haar", max_abs(Vec(e1tau - A.one() / static_cast<double>(N))), tol.absolute);
    return rep;
}

Coaction dual_coaction(const CrossedPtr& cp) {
    const Mat D = cp->acting()->comult;
    const int nA = cp->base_dim(), N = cp->N();
    return Coaction(cp, cp->acting(),
                    [D, nA, N](const Vec& x) -> Vec {
                        RowMat X = as_rows(x, nA, N);
                        RowMat out = X * D.transpose();
                        return from_rows(out);
                    },
                    "dual coaction");
}

Vec V_unitary(const CrossedAlg& cp) {
    const int N = cp.N(), nA = cp.base_dim();
    Vec oneA = cp.base()->one();
    Vec v = Vec::Zero(nA * N * N);
    for (int i = 0; i < nA; ++i)
        for (int s = 0; s < N; ++s) v((i * N + s) * N + s) = oneA(i);
    return v;
}

ResidualReport check_V(const CrossedAlg& cp, const Tolerance& tol) {
    auto self = std::shared_ptr<const CrossedAlg>(&cp, [](const CrossedAlg*) {});
    const Hopf& K = *cp.coacting();
    const int n = cp.dim(), nA = cp.base_dim();
    TensorAlg CK(self, K.alg), CKK(self, K.alg2);
    Vec V = V_unitary(cp);
    Vec Vs = CK.star(V);
    ResidualReport rep;
    double un = std::max(max_abs(Vec(CK.mul(Vs, V) - CK.one())), max_abs(Vec(CK.mul(V, Vs) - CK.one())));
    rep.add("V unitary", un, tol.absolute);

    Vec lhs = CKK.mul(CKK.mul(leg::one(K, V, n, 1, 1), leg::one(K, V, n, 1, 0)), leg::delta(K, Vs, n, 1, 0));
    Vec u = cp.twisted().cocycle();
    RowMat U = as_rows(u, nA, K.N * K.N);
    std::vector<Vec> us(K.N * K.N);
    for (int c = 0; c < K.N * K.N; ++c) us[c] = cp.embed(Vec(U.col(c)));
    rep.add("V recovers cocycle", max_abs(Vec(lhs - CKK.pack(us))), tol.absolute);

    double conj = 0.0;
    auto aidx = sample_indices(nA, 16, 5);
    for (int i : aidx) {
        Vec a = cp.base()->basis(i);
        Vec l = CK.mul(CK.mul(V, kron(cp.embed(a), K.one())), Vs);
        RowMat R = as_rows(cp.coaction()(a), nA, K.N);
        std::vector<Vec> sl(K.N);
        for (int s = 0; s < K.N; ++s) sl[s] = cp.embed(Vec(R.col(s)));
        conj = std::max(conj, max_abs(Vec(l - CK.pack(sl))));
    }
    rep.add("V implements coaction", conj, tol.absolute);
    return rep;
}

CrossedPtr iterate_crossed(const CrossedPtr& cp, std::uint64_t seed) {
    return build_crossed(TwistedCoaction{dual_coaction(cp), Vec()}, cp->coacting(), seed);
}

ExteriorIso iso_exterior(const CrossedAlg& cp1, const CrossedAlg& cp2, const Vec& v, const Tolerance& tol) {
    const Algebra& A = *cp1.base();
    const Hopf& L = *cp1.acting();
    const Hopf& K = *cp1.coacting();
    const int n = cp1.dim(), N = cp1.N(), nA = cp1.base_dim();
    if (cp2.dim() != n) throw ParentMismatch("crossed products have different dimensions");
    TensorAlg AK(cp1.base(), K.alg);
    Vec vs = AK.star(v);
    ExteriorIso iso;
    iso.phi = Mat::Zero(n, n);
    iso.psi = Mat::Zero(n, n);
    for (int i = 0; i < nA; ++i) {
        Vec a = A.basis(i);
        for (int s = 0; s < N; ++s)
            for (int x = 0; x < N; ++x)
                for (int z = 0; z < N; ++z) {
                    cd c = L.comult(x * N + z, s);
                    if (c == cd(0.0)) continue;
                    iso.phi.col(i * N + s) += c * kron(A.mul(a, AK.slice(vs, x)), L.basis(z));
                    iso.psi.col(i * N + s) += c * kron(A.mul(a, AK.slice(v, x)), L.basis(z));
                }
    }
    auto idx = sample_indices(n, 16, 11);
    double mult = 0.0, st = 0.0, e1 = 0.0;
    for (int i : idx) {
        Vec x = cp1.basis(i);
        Vec px = iso.phi * x;
        st = std::max(st, max_abs(Vec(iso.phi * cp1.star(x) - cp2.star(px))));
        e1 = std::max(e1, max_abs(Vec(cp1.E1(x) - cp2.E1(px))));
        for (int j : idx) {
            Vec y = cp1.basis(j);
            mult = std::max(mult, max_abs(Vec(iso.phi * cp1.mul(x, y) - cp2.mul(px, iso.phi * y))));
        }
    }
    iso.report.add("exterior iso multiplicative", mult, tol.absolute);
    iso.report.add("exterior iso star", st, tol.absolute);
    iso.report.add("exterior iso unital", max_abs(Vec(iso.phi * cp1.one() - cp2.one())), tol.absolute);
    iso.report.add("exterior iso E1", e1, tol.absolute);
    iso.report.add("exterior iso inverse", max_abs(Mat(iso.psi * iso.phi - Mat::Identity(n, n))), tol.absolute);
    if (!iso.report.all_pass()) throw NotEquivalent(iso.report.summary());
    return iso;
}

bool check_saturated(const CrossedAlg& cp, const Tolerance& tol, std::uint64_t seed) {
    const Algebra& A = *cp.base();
    const int n = cp.dim(), nA = cp.base_dim();
    Vec pe = cp.embed_acting(cp.haar_acting());
    std::vector<Vec> right;
    Mat cols;
    if (nA * nA <= 4 * n || nA <= 64) {
        for (int j = 0; j < nA; ++j) right.push_back(cp.mul(pe, cp.embed(A.basis(j))));
        cols.resize(n, nA * nA);
        for (int i = 0; i < nA; ++i) {
            Vec a = cp.embed(A.basis(i));
            for (int j = 0; j < nA; ++j) cols.col(i * nA + j) = cp.mul(a, right[j]);
        }
    } else {
        Rng rng(seed);
        const int m = 2 * n;
        cols.resize(n, m);
        for (int c = 0; c < m; ++c)
            cols.col(c) = cp.mul(cp.embed(rng.cvec(nA)), cp.mul(pe, cp.embed(rng.cvec(nA))));
    }
    return rank_eps(cols, tol) == n;
}

}  // namespace kac
