#include "kac/rohlin.hpp"

#include <cmath>

namespace kac {

namespace {

double commutator(const Algebra& A, const Vec& x, const std::vector<Vec>& scope) {
    double r = 0.0;
    for (const Vec& a : scope) r = std::max(r, max_abs(Vec(A.mul(x, a) - A.mul(a, x))));
    return r;
}

// Basis of scope x| L inside the crossed product.
std::vector<Vec> scope_crossed(const CrossedAlg& cp, const std::vector<Vec>& scope) {
    std::vector<Vec> out;
    const Hopf& L = *cp.acting();
    for (const Vec& a : scope)
        for (int s = 0; s < L.N; ++s) out.push_back(cp.simple(a, L.basis(s)));
    return out;
}

}  // namespace

ResidualReport check_rohlin_projection(const RohlinWitness& rw, const Tolerance& tol) {
    const Algebra& A = *rw.t.rho.algebra();
    const Hopf& K = *rw.t.rho.hopf();
    Vec e = haar_element(*dual(K));
    const Vec& p = rw.p;
    ResidualReport rep;
    rep.add("projection idempotent", max_abs(Vec(A.mul(p, p) - p)), tol.absolute);
    rep.add("projection selfadjoint", max_abs(Vec(A.star(p) - p)), tol.absolute);
    Vec avg = rw.t.rho.act(e, p);
    rep.add("e.p - 1/N", max_abs(Vec(avg - A.one() / static_cast<double>(K.N))), tol.absolute);
    rep.add("projection commutes with scope", commutator(A, p, rw.scope), tol.absolute);
    return rep;
}

ResidualReport check_sum_condition(const CrossedAlg& cp, const Vec& p, const Tolerance& tol) {
    Vec pp = cp.embed(p);
    Vec sum = cp.zero();
    const auto& W = cp.quasi_basis();
    const auto& Ws = cp.quasi_basis_star();
    for (size_t I = 0; I < W.size(); ++I) sum += cp.mul(cp.mul(Ws[I], pp), W[I]);
    ResidualReport rep;
    rep.add("quasi-basis sum of p", max_abs(Vec(sum - cp.one())), tol.absolute);
    return rep;
}

Vec DualWitness::evaluate(const Vec& phi) const {
    Vec out = cp->zero();
    for (size_t s = 0; s < what.size(); ++s)
        if (phi(s) != cd(0.0)) out += phi(s) * what[s];
    return out;
}

DualWitness witness_from_projection(const RohlinWitness& rw, const Tolerance& tol, std::uint64_t seed) {
    CrossedPtr cp = build_crossed(rw.t, rw.acting, seed);
    if (!check_saturated(*cp, tol, seed)) throw NotSaturated("crossed product is not saturated");
    return witness_from_projection(cp, rw.p, rw.scope, tol);
}

DualWitness witness_from_projection(const CrossedPtr& cpp, const Vec& p, const std::vector<Vec>& scope,
                                    const Tolerance& tol) {
    const CrossedAlg& cp = *cpp;
    const Hopf& L = *cp.acting();
    const Hopf& K = *cp.coacting();
    const int N = cp.N(), n = cp.dim();
    DualWitness dw;
    dw.cp = cpp;
    dw.rhohat = dual_coaction(cpp);
    const TensorAlg& CL = *dw.rhohat.AK();
    const TensorAlg& CLL = *dw.rhohat.AKK();

    Vec pp = cp.embed(p);
    std::vector<Vec> xs = scope_crossed(cp, scope);
    double cov = 0.0;
    for (const Vec& x : xs) {
        Vec l = cp.mul(cp.mul(pp, x), pp);
        Vec r = cp.mul(cp.embed(cp.E1(x)), pp);
        cov = std::max(cov, max_abs(Vec(l - r)));
    }
    // Above this level the quasi-basis formula no longer produces a witness.
    if (cov > 1e-6) throw CovarianceFailure("(p x| 1) x (p x| 1) != E1(x)(p x| 1), residual " + std::to_string(cov));

    const auto& W = cp.quasi_basis();
    const auto& Ws = cp.quasi_basis_star();
    dw.what.assign(N, cp.zero());
    for (size_t I = 0; I < W.size(); ++I) {
        Vec right = cp.mul(pp, W[I]);
        RowMat r = as_rows(dw.rhohat(Ws[I]), n, N);
        for (int s = 0; s < N; ++s) dw.what[s] += cp.mul(Vec(r.col(s)), right);
    }
    dw.w = CL.pack(dw.what);

    ResidualReport& rep = dw.report;
    rep.add("witness at unit", max_abs(Vec(dw.evaluate(K.one()) - cp.one())), tol.absolute);
    Vec ws = CL.star(dw.w);
    rep.add("witness unitary",
            std::max(max_abs(Vec(CL.mul(ws, dw.w) - CL.one())), max_abs(Vec(CL.mul(dw.w, ws) - CL.one()))),
            tol.absolute);
    double impl = 0.0;
    Vec oneL = L.one();
    for (const Vec& x : xs) {
        Vec r = CL.mul(CL.mul(dw.w, kron(x, oneL)), ws);
        impl = std::max(impl, max_abs(Vec(dw.rhohat(x) - r)));
    }
    rep.add("witness implements dual coaction", impl, tol.absolute);
    Vec dw1 = leg::delta(L, dw.w, n, 1, 0);
    Vec w1 = leg::one(L, dw.w, n, 1, 1);
    Vec c1 = CLL.mul(w1, leg::one(L, dw.w, n, 1, 0));
    Vec c2 = CLL.mul(leg::rho(dw.rhohat, dw.w, 1), w1);
    rep.add("witness cocycle", max_abs(Vec(c1 - dw1)), tol.absolute);
    rep.add("witness cocycle dual form", max_abs(Vec(c2 - dw1)), tol.absolute);
    rep.add("covariance", cov, tol.absolute);

    double comm = 0.0;
    for (const Vec& a : scope) {
        Vec ea = cp.embed(a);
        for (const Vec& x : dw.what) comm = std::max(comm, max_abs(Vec(cp.mul(x, ea) - cp.mul(ea, x))));
    }
    rep.add("witness commutes with scope", comm, tol.absolute);

    Vec q = projection_from_witness(dw);
    double comp = 0.0;
    for (const Vec& x : xs) {
        Vec l = cp.mul(cp.mul(q, x), q);
        Vec r = cp.mul(cp.embed(cp.E1(x)), q);
        comp = std::max(comp, max_abs(Vec(l - r)));
    }
    rep.add("witness at haar compresses to E1", comp, tol.absolute);
    Vec qa = cp.E1(q);
    rep.add("witness at haar lies in A", max_abs(Vec(q - cp.embed(qa))), tol.absolute);
    rep.add("witness at haar returns p", max_abs(Vec(qa - p)), tol.absolute);
    Vec avg = cp.coaction().act(cp.haar_acting(), qa);
    rep.add("e.witness at haar - 1/N",
            max_abs(Vec(avg - cp.base()->one() / static_cast<double>(N))), tol.absolute);
    rep.merge(check_sum_condition(cp, qa, tol));
    return dw;
}

Vec projection_from_witness(const DualWitness& dw) { return dw.evaluate(dw.cp->haar_coacting()); }

GroupRep group_rep_from_witness(const Coaction& c, const Vec& w) {
    GroupRep g;
    for (int t = 0; t < c.N(); ++t) g.u.push_back(c.AK()->slice(w, t));
    return g;
}

Vec witness_from_group_rep(const Coaction& c, const GroupRep& g) { return c.AK()->pack(g.u); }

ResidualReport check_group_rep(const Coaction& c, const CayleyTable& g, const GroupRep& rep,
                               const Tolerance& tol) {
    const Algebra& A = *c.algebra();
    const int n = static_cast<int>(g.size());
    if (c.N() != n || static_cast<int>(rep.u.size()) != n) throw ParentMismatch("group size does not match");
    const auto inv = group_inverses(g);
    const int e = group_identity(g);
    double uni = 0.0, hom = 0.0, impl = 0.0, conj = 0.0;
    std::vector<Vec> us(n);
    for (int t = 0; t < n; ++t) {
        us[t] = A.star(rep.u[t]);
        uni = std::max({uni, max_abs(Vec(A.mul(us[t], rep.u[t]) - A.one())),
                        max_abs(Vec(A.mul(rep.u[t], us[t]) - A.one()))});
    }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            hom = std::max(hom, max_abs(Vec(A.mul(rep.u[s], rep.u[t]) - rep.u[g[s][t]])));
            Vec at = c.slice(rep.u[s], t);
            conj = std::max(conj, max_abs(Vec(at - rep.u[g[g[t][s]][inv[t]]])));
        }
    for (int i : sample_indices(A.dim(), 64, 3)) {
        Vec a = A.basis(i);
        for (int t = 0; t < n; ++t)
            impl = std::max(impl, max_abs(Vec(c.slice(a, t) - A.mul(A.mul(rep.u[t], a), us[t]))));
    }
    ResidualReport r;
    r.add("group rep unitary", uni, tol.absolute);
    r.add("group rep unital", max_abs(Vec(rep.u[e] - A.one())), tol.absolute);
    r.add("group rep multiplicative", hom, tol.absolute);
    r.add("group rep implements action", impl, tol.absolute);
    r.add("action conjugates group rep", conj, tol.absolute);
    return r;
}

ResidualReport check_partition(const Coaction& c, const CayleyTable& g, const std::vector<Vec>& e,
                               const std::vector<Vec>& scope, const Tolerance& tol) {
    const Algebra& A = *c.algebra();
    const int n = static_cast<int>(g.size());
    if (static_cast<int>(e.size()) != n || c.N() != n) throw ParentMismatch("one projection per group element");
    Vec sum = A.zero();
    double orth = 0.0, sa = 0.0, tr = 0.0, comm = 0.0;
    for (int s = 0; s < n; ++s) {
        sum += e[s];
        sa = std::max(sa, max_abs(Vec(A.star(e[s]) - e[s])));
        comm = std::max(comm, commutator(A, e[s], scope));
        for (int t = 0; t < n; ++t) {
            Vec r = s == t ? e[s] : A.zero();
            orth = std::max(orth, max_abs(Vec(A.mul(e[s], e[t]) - r)));
            tr = std::max(tr, max_abs(Vec(c.slice(e[s], t) - e[g[t][s]])));
        }
    }
    ResidualReport r;
    r.add("partition sums to one", max_abs(Vec(sum - A.one())), tol.absolute);
    r.add("partition orthogonal projections", std::max(orth, sa), tol.absolute);
    r.add("partition translated by action", tr, tol.absolute);
    r.add("partition commutes with scope", comm, tol.absolute);
    return r;
}

std::vector<Vec> partition_from_projection(const Coaction& c, const CayleyTable& g, const Vec& p,
                                           const Tolerance& tol) {
    (void)tol;
    validate_group(g);
    std::vector<Vec> e;
    for (int t = 0; t < static_cast<int>(g.size()); ++t) e.push_back(c.slice(p, t));
    return e;
}

Vec projection_from_partition(const Coaction& c, const CayleyTable& g, const std::vector<Vec>& e,
                              const Tolerance& tol) {
    ResidualReport r = check_partition(c, g, e, {}, tol);
    const double gate = std::max(tol.absolute, 1e-9);
    if (r.residual("partition sums to one") > gate || r.residual("partition translated by action") > gate ||
        r.residual("partition orthogonal projections") > gate)
        throw NotPartition("translates of the projections do not form a partition of unity");
    return e[group_identity(g)];
}

}  // namespace kac
