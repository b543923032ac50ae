#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "kac/fdca.hpp"
#include "kac/random.hpp"

namespace kac {
namespace {

constexpr double kClusterGap = 1e-7;

std::vector<std::vector<int>> clusters(const Eigen::VectorXd& lam) {
    std::vector<std::vector<int>> out;
    const int n = static_cast<int>(lam.size());
    if (n == 0) return out;
    double width = lam.maxCoeff() - lam.minCoeff();
    out.push_back({0});
    for (int i = 1; i < n; ++i) {
        if (width > 1e-12 && lam(i) - lam(i - 1) > kClusterGap * width)
            out.push_back({i});
        else
            out.back().push_back(i);
    }
    return out;
}

int isqrt_exact(int m) {
    int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
    return d * d == m ? d : -1;
}

struct Frame {
    Mat gs, gi;
    const StructAlg* alg;
    Mat lt(const Vec& x) const { return gs * alg->left(x) * gi; }
    Vec element(const Mat& proj) const { return gi * proj * gs * alg->one(); }
};

Vec self_adjoint_part(const StructAlg& alg, const Vec& x) { return 0.5 * (x + alg.star(x)); }

}  // namespace

int WedderburnData::offset(int k) const {
    int o = 0;
    for (int r = 0; r < k; ++r) o += blocks[r] * blocks[r];
    return o;
}

std::vector<Mat> WedderburnData::coordinates(const Vec& x) const {
    Vec c = coord * x;
    std::vector<Mat> out;
    int o = 0;
    for (int d : blocks) {
        Mat m(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(i, j) = c(o + i * d + j);
        out.push_back(m);
        o += d * d;
    }
    return out;
}

Vec WedderburnData::from_coordinates(const std::vector<Mat>& in) const {
    Vec c(dim());
    int o = 0;
    for (size_t k = 0; k < blocks.size(); ++k) {
        int d = blocks[k];
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) c(o + i * d + j) = in[k](i, j);
        o += d * d;
    }
    return unit_basis * c;
}

WedderburnData wedderburn(const StructAlg& alg, std::uint64_t seed) {
    const int n = alg.dim();
    Rng rng(seed);

    Mat g(n, n);
    for (int i = 0; i < n; ++i) {
        Vec si = alg.star(alg.basis(i));
        for (int j = 0; j < n; ++j) g(i, j) = alg.regular_trace(alg.mul(si, alg.basis(j)));
    }
    Mat gh = 0.5 * (g + g.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> ges(gh, Eigen::EigenvaluesOnly);
    double gmax = ges.eigenvalues().cwiseAbs().maxCoeff();
    if (max_abs(Mat(g - g.adjoint())) > 1e-8 * (1.0 + gmax) || ges.eigenvalues().minCoeff() <= 1e-10 * gmax)
        throw NotSemisimple("trace form is degenerate or indefinite");
    Frame fr{herm_sqrt(gh), herm_inv_sqrt(gh), &alg};

    // Center as the common kernel of x -> x b - b x.
    Mat stacked(n * n, n);
    for (int j = 0; j < n; ++j) {
        Vec b = alg.basis(j);
        stacked.block(j * n, 0, n, n) = alg.right(b) - alg.left(b);
    }
    Mat z = nullspace(stacked, 1e-8);
    const int K = static_cast<int>(z.cols());
    if (K == 0) throw NotSemisimple("trivial center");

    struct Block {
        int d;
        Vec p;
        Mat range;
    };
    std::vector<Block> blocks;
    for (int attempt = 0; attempt < 32 && static_cast<int>(blocks.size()) != K; ++attempt) {
        blocks.clear();
        Vec h = self_adjoint_part(alg, z * rng.cvec(K));
        Mat lh = fr.lt(h);
        lh = 0.5 * (lh + lh.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<Mat> es(lh);
        for (const auto& cl : clusters(es.eigenvalues())) {
            int d = isqrt_exact(static_cast<int>(cl.size()));
            if (d < 0) break;
            Mat v(n, cl.size());
            for (size_t c = 0; c < cl.size(); ++c) v.col(c) = es.eigenvectors().col(cl[c]);
            blocks.push_back({d, fr.element(v * v.adjoint()), v});
        }
    }
    if (static_cast<int>(blocks.size()) != K) throw NotSemisimple("could not split the center");

    auto key = [](const Vec& p) {
        std::vector<long long> k;
        for (int i = 0; i < p.size(); ++i) {
            k.push_back(std::llround(p(i).real() * 1e8));
            k.push_back(std::llround(p(i).imag() * 1e8));
        }
        return k;
    };
    std::stable_sort(blocks.begin(), blocks.end(), [&](const Block& a, const Block& b) {
        if (a.d != b.d) return a.d < b.d;
        return key(a.p) > key(b.p);
    });

    WedderburnData wd;
    for (const auto& blk : blocks) {
        const int d = blk.d;
        wd.blocks.push_back(d);
        wd.central.push_back(blk.p);
        std::vector<Vec> units(d * d);
        if (d == 1) {
            units[0] = blk.p;
            wd.units.push_back(units);
            continue;
        }
        std::vector<Vec> f;
        for (int attempt = 0; attempt < 32 && static_cast<int>(f.size()) != d; ++attempt) {
            f.clear();
            Vec r = self_adjoint_part(alg, rng.cvec(n));
            Vec q = alg.mul(alg.mul(blk.p, r), blk.p);
            Mat lq = blk.range.adjoint() * fr.lt(q) * blk.range;
            lq = 0.5 * (lq + lq.adjoint()).eval();
            Eigen::SelfAdjointEigenSolver<Mat> es(lq);
            auto cls = clusters(es.eigenvalues());
            if (static_cast<int>(cls.size()) != d) continue;
            bool ok = true;
            for (const auto& cl : cls) {
                if (static_cast<int>(cl.size()) != d) {
                    ok = false;
                    break;
                }
                Mat y(lq.rows(), d);
                for (int c = 0; c < d; ++c) y.col(c) = es.eigenvectors().col(cl[c]);
                Mat v = blk.range * y;
                f.push_back(fr.element(v * v.adjoint()));
            }
            if (!ok) f.clear();
        }
        if (static_cast<int>(f.size()) != d) throw NotSemisimple("could not split a simple block");

        double tf = alg.regular_trace(f[0]).real();
        std::vector<Vec> col(d);
        col[0] = f[0];
        for (int i = 1; i < d; ++i) {
            for (int attempt = 0; attempt < 32; ++attempt) {
                Vec x = rng.cvec(n);
                Vec y = alg.mul(alg.mul(f[i], x), f[0]);
                double c = alg.regular_trace(alg.mul(alg.star(y), y)).real() / tf;
                if (c > 1e-6) {
                    col[i] = y / std::sqrt(c);
                    break;
                }
            }
            if (col[i].size() == 0) throw NotSemisimple("could not link minimal projections");
        }
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) units[i * d + j] = alg.mul(col[i], alg.star(col[j]));
        wd.units.push_back(units);
    }

    wd.unit_basis.resize(n, n);
    int c = 0;
    for (const auto& us : wd.units)
        for (const auto& u : us) {
            if (c >= n) throw NotSemisimple("block dimensions exceed algebra dimension");
            wd.unit_basis.col(c++) = u;
        }
    if (c != n) throw NotSemisimple("block dimensions do not add up to the algebra dimension");
    wd.coord = wd.unit_basis.partialPivLu().inverse();
    return wd;
}

ResidualReport check_wedderburn(const StructAlg& alg, const WedderburnData& wd, const Tolerance& tol) {
    double mu = 0.0, adj = 0.0;
    Vec sum = alg.zero();
    int total = 0;
    for (size_t k = 0; k < wd.blocks.size(); ++k) {
        int d = wd.blocks[k];
        total += d * d;
        for (int i = 0; i < d; ++i) {
            sum += wd.e(k, i, i);
            for (int j = 0; j < d; ++j) {
                adj = std::max(adj, max_abs(Vec(alg.star(wd.e(k, i, j)) - wd.e(k, j, i))));
                for (size_t r = 0; r < wd.blocks.size(); ++r)
                    for (int s = 0; s < wd.blocks[r]; ++s)
                        for (int t = 0; t < wd.blocks[r]; ++t) {
                            Vec lhs = alg.mul(wd.e(k, i, j), wd.e(r, s, t));
                            Vec rhs = (k == r && j == s) ? wd.e(k, i, t) : alg.zero();
                            mu = std::max(mu, max_abs(Vec(lhs - rhs)));
                        }
            }
        }
    }
    ResidualReport rep;
    rep.add("matrix unit products", mu, tol.absolute);
    rep.add("matrix unit adjoints", adj, tol.absolute);
    rep.add("sum of diagonal units", max_abs(Vec(sum - alg.one())), tol.absolute);
    rep.add("block dimension count", std::abs(total - alg.dim()), 0.5);
    rep.add("span rank deficit", alg.dim() - rank_eps(wd.unit_basis, tol), 0.5);
    return rep;
}

CanonicalTrace canonical_trace(const StructAlg& alg, const WedderburnData& wd) {
    CanonicalTrace tr;
    double norm = 0.0;
    for (int d : wd.blocks) norm += d * d;
    tr.functional = Eigen::RowVectorXcd::Zero(alg.dim());
    int o = 0;
    for (int d : wd.blocks) {
        double w = d / norm;
        tr.weights.push_back(w);
        for (int i = 0; i < d; ++i) tr.functional += w * wd.coord.row(o + i * d + i);
        o += d * d;
    }
    return tr;
}

bool mvn_equivalent(const StructAlg& alg, const Vec& p, const Vec& q, const WedderburnData& wd,
                    const Tolerance& tol) {
    for (const Vec* x : {&p, &q}) {
        double r1 = alg.norm(Vec(alg.mul(*x, *x) - *x));
        double r2 = alg.norm(Vec(alg.star(*x) - *x));
        if (r1 > std::max(tol.absolute, 1e-7) || r2 > std::max(tol.absolute, 1e-7))
            throw NotProjection("element is not a projection");
    }
    auto cp = wd.coordinates(p);
    auto cq = wd.coordinates(q);
    for (size_t k = 0; k < cp.size(); ++k) {
        long rp = std::lround(cp[k].trace().real());
        long rq = std::lround(cq[k].trace().real());
        if (rp != rq) return false;
    }
    return true;
}

}  // namespace kac
