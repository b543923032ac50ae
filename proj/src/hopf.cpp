#include "kac/hopf.hpp"

#include <algorithm>
#include <cmath>

namespace kac {
namespace {

Mat dense_mult(const StructAlg& a) {
    const int n = a.dim();
    Mat m = Mat::Zero(n, n * n);
    for (const auto& t : a.mult()) m(t.k, t.i * n + t.j) += t.v;
    return m;
}

}  // namespace

Mat Hopf::mult_matrix() const { return dense_mult(*alg); }

HopfPtr make_hopf(StructPtr alg, Mat comult, Eigen::RowVectorXcd counit, Mat antipode, std::string label) {
    const int n = alg->dim();
    if (comult.rows() != n * n || comult.cols() != n || counit.size() != n || antipode.rows() != n ||
        antipode.cols() != n)
        throw StructureFailure("Hopf structure maps have inconsistent sizes");
    auto h = std::make_shared<Hopf>();
    h->alg = std::move(alg);
    h->N = n;
    h->comult = std::move(comult);
    h->counit = std::move(counit);
    h->antipode = std::move(antipode);
    h->label = label.empty() ? h->alg->label() : std::move(label);
    h->alg2 = struct_tensor(h->alg, h->alg);
    h->alg3 = struct_tensor(h->alg, h->alg2);
    return h;
}

ResidualReport validate_hopf(const Hopf& H, const Tolerance& tol) {
    const int n = H.N;
    const Mat I = Mat::Identity(n, n);
    const Mat& D = H.comult;
    const Mat eps = H.counit;
    const Mat M = H.mult_matrix();
    const Vec one = H.one();
    ResidualReport rep;

    rep.add("coassociativity", max_abs(Mat(kron(D, I) * D - kron(I, D) * D)), tol.absolute);
    rep.add("counit left", max_abs(Mat(kron(eps, I) * D - I)), tol.absolute);
    rep.add("counit right", max_abs(Mat(kron(I, eps) * D - I)), tol.absolute);
    Mat unit_eps = one * eps;
    rep.add("antipode left", max_abs(Mat(M * kron(H.antipode, I) * D - unit_eps)), tol.absolute);
    rep.add("antipode right", max_abs(Mat(M * kron(I, H.antipode) * D - unit_eps)), tol.absolute);

    double mult = max_abs(Vec(H.delta(one) - kron(one, one)));
    double star = 0.0, eps_hom = std::abs(H.eps(one) - 1.0), invol = 0.0;
    for (int i = 0; i < n; ++i) {
        Vec bi = H.basis(i);
        Vec di = H.delta(bi);
        Vec si = H.alg->star(bi);
        star = std::max(star, max_abs(Vec(H.delta(si) - H.alg2->star(di))));
        eps_hom = std::max(eps_hom, std::abs(H.eps(si) - std::conj(H.eps(bi))));
        invol = std::max(invol, max_abs(Vec(H.S(H.alg->star(H.S(si))) - bi)));
        invol = std::max(invol, max_abs(Vec(H.S(H.S(bi)) - bi)));
        for (int j = 0; j < n; ++j) {
            Vec bj = H.basis(j);
            Vec p = H.alg->mul(bi, bj);
            mult = std::max(mult, max_abs(Vec(H.delta(p) - H.alg2->mul(di, H.delta(bj)))));
            eps_hom = std::max(eps_hom, std::abs(H.eps(p) - H.eps(bi) * H.eps(bj)));
        }
    }
    rep.add("comultiplication multiplicative", mult, tol.absolute);
    rep.add("comultiplication star", star, tol.absolute);
    rep.add("counit star homomorphism", eps_hom, tol.absolute);
    rep.add("antipode star involution", invol, tol.absolute);
    return rep;
}

HopfPtr dual(const Hopf& H) {
    const int n = H.N;
    // Products of functionals come from the comultiplication of H and the
    // other way around.
    std::vector<Triplet> m;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k) {
                cd v = H.comult(a * n + b, k);
                if (std::abs(v) > 1e-15) m.push_back({a, b, k, v});
            }
    Vec unit = H.counit.transpose();
    Mat star = H.antipode.transpose() * H.alg->star_matrix().adjoint();
    auto alg = std::make_shared<StructAlg>(n, std::move(m), unit, star, "dual(" + H.alg->label() + ")");
    Mat comult = H.mult_matrix().transpose();
    Eigen::RowVectorXcd counit = H.one().transpose();
    Mat S = H.antipode.transpose();
    return make_hopf(alg, comult, counit, S, "dual(" + H.label + ")");
}

cd pair(const Hopf& H, const Vec& phi, const Vec& h) {
    if (phi.size() != H.N || h.size() != H.N) throw ParentMismatch("pairing arguments have the wrong dimension");
    return (phi.transpose() * h)(0);
}

Vec haar_element(const Hopf& H) {
    const int n = H.N;
    Mat stacked(2 * n * n, n);
    for (int b = 0; b < n; ++b) {
        Vec bb = H.basis(b);
        Mat shift = H.eps(bb) * Mat::Identity(n, n);
        stacked.block(b * n, 0, n, n) = H.alg->left(bb) - shift;
        stacked.block((n + b) * n, 0, n, n) = H.alg->right(bb) - shift;
    }
    Mat z = nullspace(stacked, 1e-9);
    if (z.cols() != 1) throw NoIntegral("space of integrals has dimension " + std::to_string(z.cols()));
    Vec e = z.col(0);
    cd c = H.eps(e);
    if (std::abs(c) < 1e-12) throw NoIntegral("integral is annihilated by the counit");
    return e / c;
}

HaarPair haar_pair(const Hopf& H) {
    HaarPair hp;
    hp.e = haar_element(H);
    hp.tau = haar_element(*dual(H));
    return hp;
}

ResidualReport check_haar(const Hopf& H, const HaarPair& hp, const Tolerance& tol) {
    ResidualReport rep;
    const Vec& e = hp.e;
    rep.add("haar projection", max_abs(Vec(H.alg->mul(e, e) - e)), tol.absolute);
    rep.add("haar selfadjoint", max_abs(Vec(H.alg->star(e) - e)), tol.absolute);
    rep.add("haar antipode invariant", max_abs(Vec(H.S(e) - e)), tol.absolute);
    double absorb = 0.0;
    for (int b = 0; b < H.N; ++b) {
        Vec bb = H.basis(b);
        absorb = std::max(absorb, max_abs(Vec(H.alg->mul(bb, e) - H.eps(bb) * e)));
        absorb = std::max(absorb, max_abs(Vec(H.alg->mul(e, bb) - H.eps(bb) * e)));
    }
    rep.add("haar absorbs", absorb, tol.absolute);
    return rep;
}

int ComatrixUnits::index(int k, int i, int j) const {
    int o = 0;
    for (int r = 0; r < k; ++r) o += blocks[r] * blocks[r];
    return o + i * blocks[k] + j;
}

ComatrixUnits comatrix_units(const Hopf& H, std::uint64_t seed) {
    HopfPtr D = dual(H);
    WedderburnData wd = wedderburn(*D->alg, seed);
    ComatrixUnits cu;
    cu.blocks = wd.blocks;
    for (size_t k = 0; k < wd.blocks.size(); ++k) {
        int d = wd.blocks[k];
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                cu.lambda.push_back({static_cast<int>(k), i, j});
                cu.phi.push_back(wd.e(static_cast<int>(k), i, j));
            }
    }
    const int n = H.N;
    if (static_cast<int>(cu.phi.size()) != n) throw NotSemisimple("matrix units do not span the dual");
    // Dual basis: pair(phi_I, w_J) = delta_IJ.
    Mat W = wd.unit_basis.transpose().inverse();
    for (int J = 0; J < n; ++J) cu.w.push_back(W.col(J));
    return cu;
}

ResidualReport check_comatrix(const Hopf& H, const ComatrixUnits& cu, const HaarPair& hp, const Tolerance& tol) {
    const int n = cu.size();
    HopfPtr D = dual(H);
    double co = 0.0, eps = 0.0, st = 0.0, orth = 0.0, duality = 0.0;
    for (int I = 0; I < n; ++I) {
        auto [k, i, j] = cu.lambda[I];
        int d = cu.blocks[k];
        Vec sum = Vec::Zero(n * n);
        for (int t = 0; t < d; ++t) sum += kron(cu.at(k, i, t), cu.at(k, t, j));
        co = std::max(co, max_abs(Vec(H.delta(cu.w[I]) - sum)));
        eps = std::max(eps, std::abs(H.eps(cu.w[I]) - (i == j ? 1.0 : 0.0)));
        st = std::max(st, max_abs(Vec(H.alg->star(cu.w[I]) - H.S(cu.at(k, j, i)))));
        for (int J = 0; J < n; ++J) {
            auto [r, s, u] = cu.lambda[J];
            cd lhs = pair(H, hp.tau, H.alg->mul(cu.w[I], H.alg->star(cu.w[J])));
            double rhs = (k == r && i == s && j == u) ? 1.0 / d : 0.0;
            orth = std::max(orth, std::abs(lhs - rhs));
            duality = std::max(duality, std::abs(pair(H, cu.phi[I], cu.w[J]) - (I == J ? 1.0 : 0.0)));
        }
    }
    double mu = 0.0;
    for (int I = 0; I < n; ++I)
        for (int J = 0; J < n; ++J) {
            auto [k, i, j] = cu.lambda[I];
            auto [r, s, u] = cu.lambda[J];
            Vec lhs = D->alg->mul(cu.phi[I], cu.phi[J]);
            Vec rhs = (k == r && j == s) ? cu.phi[cu.index(k, i, u)] : Vec(Vec::Zero(n));
            mu = std::max(mu, max_abs(Vec(lhs - rhs)));
        }
    Vec e = Vec::Zero(n);
    for (size_t k = 0; k < cu.blocks.size(); ++k) {
        int d = cu.blocks[k];
        for (int i = 0; i < d; ++i) e += (static_cast<double>(d) / n) * cu.at(static_cast<int>(k), i, i);
    }
    ResidualReport rep;
    rep.add("comatrix comultiplication", co, tol.absolute);
    rep.add("comatrix counit", eps, tol.absolute);
    rep.add("comatrix star", st, tol.absolute);
    rep.add("comatrix orthogonality", orth, tol.absolute);
    rep.add("comatrix pairing", duality, tol.absolute);
    rep.add("dual matrix units", mu, tol.absolute);
    rep.add("haar from comatrix units", max_abs(Vec(e - hp.e)), tol.absolute);
    return rep;
}

int appendix_span_check(const Hopf& H) {
    const int n = H.N;
    Mat cols(n * n, n * n);
    Vec one = H.one();
    for (int h = 0; h < n; ++h) {
        Vec left = kron(H.basis(h), one);
        for (int g = 0; g < n; ++g) cols.col(h * n + g) = H.alg2->mul(left, H.delta(H.basis(g)));
    }
    return rank_eps(cols);
}

void validate_group(const CayleyTable& g) {
    const int n = static_cast<int>(g.size());
    if (n == 0) throw NotAGroup("empty table");
    for (const auto& row : g) {
        if (static_cast<int>(row.size()) != n) throw NotAGroup("table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw NotAGroup("entry out of range");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g[g[a][b]][c] != g[a][g[b][c]]) throw NotAGroup("table is not associative");
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n; ++b)
            if (g[a][b] != b || g[b][a] != b) ok = false;
        if (ok) e = a;
    }
    if (e < 0) throw NotAGroup("no identity element");
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n; ++b)
            if (g[a][b] == e && g[b][a] == e) found = true;
        if (!found) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
    }
}

int group_identity(const CayleyTable& g) {
    const int n = static_cast<int>(g.size());
    for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int b = 0; b < n; ++b)
            if (g[a][b] != b) ok = false;
        if (ok) return a;
    }
    throw NotAGroup("no identity element");
}

std::vector<int> group_inverses(const CayleyTable& g) {
    const int n = static_cast<int>(g.size());
    int e = group_identity(g);
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g[a][b] == e) inv[a] = b;
    return inv;
}

CayleyTable cyclic_group(int n) {
    CayleyTable g(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g[a][b] = (a + b) % n;
    return g;
}

CayleyTable product_group(const CayleyTable& a, const CayleyTable& b) {
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    CayleyTable g(na * nb, std::vector<int>(na * nb));
    for (int x = 0; x < na * nb; ++x)
        for (int y = 0; y < na * nb; ++y) g[x][y] = a[x / nb][y / nb] * nb + b[x % nb][y % nb];
    return g;
}

CayleyTable symmetric_group3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    CayleyTable g(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            g[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return g;
}

HopfPtr build_function_algebra(const CayleyTable& g, std::string label) {
    validate_group(g);
    const int n = static_cast<int>(g.size());
    const int e = group_identity(g);
    const auto inv = group_inverses(g);
    std::vector<Triplet> m;
    for (int t = 0; t < n; ++t) m.push_back({t, t, t, 1.0});
    auto alg = std::make_shared<StructAlg>(n, std::move(m), Vec::Ones(n), Mat::Identity(n, n), label);
    Mat comult = Mat::Zero(n * n, n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) comult(s * n + g[inv[s]][t], t) = 1.0;
    Eigen::RowVectorXcd counit = Eigen::RowVectorXcd::Zero(n);
    counit(e) = 1.0;
    Mat S = Mat::Zero(n, n);
    for (int t = 0; t < n; ++t) S(inv[t], t) = 1.0;
    return make_hopf(alg, comult, counit, S, label);
}

HopfPtr build_group_algebra(const CayleyTable& g, std::string label) {
    validate_group(g);
    const int n = static_cast<int>(g.size());
    const int e = group_identity(g);
    const auto inv = group_inverses(g);
    std::vector<Triplet> m;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m.push_back({a, b, g[a][b], 1.0});
    Vec unit = Vec::Zero(n);
    unit(e) = 1.0;
    Mat T = Mat::Zero(n, n);
    for (int a = 0; a < n; ++a) T(inv[a], a) = 1.0;
    auto alg = std::make_shared<StructAlg>(n, std::move(m), unit, T, label);
    Mat comult = Mat::Zero(n * n, n);
    for (int a = 0; a < n; ++a) comult(a * n + a, a) = 1.0;
    Eigen::RowVectorXcd counit = Eigen::RowVectorXcd::Ones(n);
    return make_hopf(alg, comult, counit, T, label);
}

HopfPtr tensor_hopf(const Hopf& a, const Hopf& b) {
    const int na = a.N, nb = b.N, n = na * nb;
    StructPtr alg = struct_tensor(a.alg, b.alg);
    Mat comult = Mat::Zero(n * n, n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int a1 = 0; a1 < na; ++a1)
                for (int a2 = 0; a2 < na; ++a2) {
                    cd ca = a.comult(a1 * na + a2, i);
                    if (ca == cd(0.0)) continue;
                    for (int c1 = 0; c1 < nb; ++c1)
                        for (int c2 = 0; c2 < nb; ++c2) {
                            cd cb = b.comult(c1 * nb + c2, j);
                            if (cb == cd(0.0)) continue;
                            comult((a1 * nb + c1) * n + (a2 * nb + c2), i * nb + j) += ca * cb;
                        }
                }
    Mat counit = kron(Mat(a.counit), Mat(b.counit));
    return make_hopf(alg, comult, counit.row(0), kron(a.antipode, b.antipode), a.label + "(x)" + b.label);
}

}  // namespace kac
