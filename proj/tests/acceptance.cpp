#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "kac/cocycle.hpp"
#include "kac/duality.hpp"
#include "kac/tower.hpp"

using namespace kac;

namespace {

// Pinned acceptance tolerances.
constexpr double tol_hopf = 1e-9;
constexpr double time_hopf = 10.0;
constexpr double tol_comatrix = 1e-8;
constexpr double tol_haar_formula = 1e-9;
constexpr double tol_orthogonality = 1e-9;
constexpr double tol_psi = 1e-9;
constexpr double tol_duality = 1e-8;
constexpr double time_duality = 60.0;
constexpr double tol_closed_form = 1e-12;
constexpr double tol_tower = 1e-9;
constexpr double tol_average = 1e-10;
constexpr double tol_witness = 1e-10;
constexpr double time_tower = 180.0;
constexpr double tol_dual_unit = 1e-9;
constexpr double tol_dual_witness = 1e-8;
constexpr double tol_covariance = 1e-8;
constexpr double tol_dual_average = 1e-9;
constexpr double tol_sum = 1e-8;
constexpr double tol_round_trip = 1e-9;
constexpr double tol_one_cocycle = 1e-7;
constexpr double time_one_cocycle = 60.0;
constexpr double tol_two_cocycle = 1e-7;
constexpr double tol_iteration = 1e-6;
constexpr double decay_basin = 0.5;
constexpr double decay_ratio = 0.6;
constexpr double tol_aue_unitary = 1e-9;
constexpr double tol_bridge = 1e-12;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Largest residual over the entries whose name contains one of the keys.
double worst(const ResidualReport& r, const std::vector<std::string>& keys) {
    double w = 0.0;
    for (const auto& e : r.entries())
        for (const auto& k : keys)
            if (e.name.find(k) != std::string::npos) w = std::max(w, e.residual);
    return w;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

struct Tracker {
    Outcome out;
    void need(bool ok, const std::string& what) {
        if (!ok) {
            out.pass = false;
            out.detail += (out.detail.empty() ? "" : "; ") + what;
        }
    }
    void max(const std::string& what, double value, double tol) {
        need(value < tol, what + " " + fmt(value) + " >= " + fmt(tol));
        add(what + " " + fmt(value));
    }
    void add(const std::string& s) {
        if (out.pass) info += (info.empty() ? "" : ", ") + s;
    }
    Outcome done() {
        if (out.pass) out.detail = info;
        return out;
    }
    std::string info;
};

std::vector<std::pair<std::string, CayleyTable>> groups() {
    return {{"Z2", cyclic_group(2)},
            {"Z3", cyclic_group(3)},
            {"Z4", cyclic_group(4)},
            {"Z2xZ2", product_group(cyclic_group(2), cyclic_group(2))},
            {"S3", symmetric_group3()}};
}

std::vector<HopfPtr> builders() {
    std::vector<HopfPtr> out;
    for (const auto& [name, g] : groups()) {
        HopfPtr f = build_function_algebra(g, "C(" + name + ")");
        HopfPtr c = build_group_algebra(g, "C[" + name + "]");
        out.insert(out.end(), {f, c, dual(*f), dual(*c)});
    }
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome hopf_axioms() {
    Tracker t;
    auto t0 = std::chrono::steady_clock::now();
    double w = 0.0;
    int n = 0;
    for (const HopfPtr& H : builders()) {
        ResidualReport r = validate_hopf(*H, {tol_hopf, tol_hopf});
        r.merge(validate_algebra(*H->alg, {tol_hopf, tol_hopf}));
        r.merge(check_haar(*H, haar_pair(*H), {tol_hopf, tol_hopf}));
        t.need(r.entries().size() >= 9, H->label + " incomplete axiom list");
        w = std::max(w, r.max_residual());
        ++n;
    }
    t.max("max residual over " + std::to_string(n) + " algebras", w, tol_hopf);
    double s = seconds_since(t0);
    t.need(s < time_hopf, "runtime " + fmt(s) + " s");
    t.add("time " + fmt(s) + " s");
    return t.done();
}

Outcome comatrix() {
    Tracker t;
    double w = 0.0, e = 0.0;
    for (const HopfPtr& H : builders()) {
        ResidualReport r = check_comatrix(*H, comatrix_units(*H), haar_pair(*H), {tol_comatrix, tol_comatrix});
        w = std::max(w, worst(r, {"comatrix comultiplication", "comatrix counit", "comatrix star",
                                  "comatrix orthogonality", "comatrix pairing", "dual matrix units"}));
        e = std::max(e, r.residual("haar from comatrix units"));
    }
    t.max("identities", w, tol_comatrix);
    t.max("haar formula", e, tol_haar_formula);
    return t.done();
}

Outcome crossed_base() {
    Tracker t;
    std::vector<HopfPtr> hs = {build_group_algebra(cyclic_group(2)), build_group_algebra(cyclic_group(3)),
                               build_group_algebra(cyclic_group(4)), build_group_algebra(symmetric_group3()),
                               build_function_algebra(symmetric_group3())};
    std::string seen;
    for (const HopfPtr& H : hs) {
        TowerBase b = build_base(H);
        t.need(b.wd.blocks == std::vector<int>{H->N}, H->label + " blocks are not [N]");
        t.need(check_base(b).all_pass(), H->label + " base isomorphism");
        seen += (seen.empty() ? "" : " ") + std::string("[") + std::to_string(b.wd.blocks[0]) + "]";
    }
    t.add("blocks " + seen);
    return t.done();
}

Outcome duality() {
    Tracker t;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<TwistedCoaction, HopfPtr>> cases;
    for (int n : {2, 3}) {
        HopfPtr H = build_group_algebra(cyclic_group(n));
        HopfPtr K = dual(*H);
        cases.push_back({{Coaction::from_matrix(K->alg, K, K->comult), Vec()}, H});
        TowerBase b = build_base(H);
        cases.push_back({build_level(b, 1).twisted(), H});
    }
    HopfPtr C = build_function_algebra(cyclic_group(2));
    cases.push_back({{Coaction::from_matrix(C->alg, C, C->comult), Vec()}, dual(*C)});
    double orth = 0.0, ps = 0.0, thm = 0.0;
    for (auto& [tc, L] : cases) {
        DualityData dd = build_duality(tc, L);
        ResidualReport r = check_duality_data(dd);
        orth = std::max(orth, worst(r, {"V_I V_J^* orthogonality", "P_I projections", "P_I partition of unity"}));
        thm = std::max(thm, worst(r, {"U_I", "U unitary", "dual coaction of 1 x| tau"}));
        ps = std::max(ps, check_psi(dd).max_residual());
        thm = std::max(thm, verify_duality(dd).max_residual());
    }
    t.max("orthogonality", orth, tol_orthogonality);
    t.max("Psi", ps, tol_psi);
    t.max("equivalence", thm, tol_duality);
    double s = seconds_since(t0);
    t.need(s < time_duality, "runtime " + fmt(s) + " s");
    t.add("time " + fmt(s) + " s");
    return t.done();
}

struct TowerCase {
    HopfPtr H;
    int max_level;
};

std::vector<TowerCase> tower_cases() {
    return {{build_group_algebra(cyclic_group(2)), 3},
            {build_group_algebra(cyclic_group(3)), 2},
            {build_function_algebra(cyclic_group(2)), 3},
            {build_function_algebra(cyclic_group(3)), 2}};
}

Outcome tower() {
    Tracker t;
    auto t0 = std::chrono::steady_clock::now();
    double cf = 0.0, lem = 0.0, avg = 0.0, wit = 0.0;
    for (const TowerCase& c : tower_cases()) {
        TowerBase b = build_base(c.H);
        std::vector<TowerLevel> lv;
        for (int n = 1; n <= c.max_level + 1; ++n) lv.push_back(build_level(b, n));
        for (int n = 1; n <= c.max_level; ++n) {
            ResidualReport r = check_level(b, lv[n - 1], &lv[n]);
            cf = std::max(cf, worst(r, {"closed form"}));
            lem = std::max(lem, worst(r, {"cocycle identity", "rho_n", "inclusion"}));
            TowerRohlin tr = rohlin_report(b, lv[n - 1]);
            avg = std::max(avg, tr.projection.residual("e.p - 1/N"));
            lem = std::max(lem, worst(tr.projection, {"projection"}));
            wit = std::max(wit, tr.witness.max_residual());
        }
    }
    t.max("closed forms", cf, tol_closed_form);
    t.max("level identities", lem, tol_tower);
    t.max("|e.p - 1/N|", avg, tol_average);
    t.max("witness", wit, tol_witness);
    double s = seconds_since(t0);
    t.need(s < time_tower, "runtime " + fmt(s) + " s");
    t.add("time " + fmt(s) + " s");
    return t.done();
}

Outcome rohlin() {
    Tracker t;
    double unit = 0.0, eqs = 0.0, cov = 0.0, avg = 0.0, sum = 0.0, rt = 0.0;
    for (const TowerCase& c : tower_cases()) {
        TowerBase b = build_base(c.H);
        for (int n = 1; n <= c.max_level; ++n) {
            TowerLevel l = build_level(b, n);
            DualWitness dw = witness_from_projection(rohlin_report(b, l).rohlin);
            const ResidualReport& r = dw.report;
            unit = std::max(unit, r.residual("witness at unit"));
            eqs = std::max(eqs, worst(r, {"witness unitary", "witness implements dual coaction", "witness cocycle"}));
            cov = std::max(cov, r.residual("covariance"));
            avg = std::max(avg, r.residual("e.witness at haar - 1/N"));
            sum = std::max(sum, r.residual("quasi-basis sum of p"));
            rt = std::max(rt, max_abs(Vec(dw.cp->E1(projection_from_witness(dw)) - l.p)));
            rt = std::max(rt, r.residual("witness at haar lies in A"));
        }
    }
    t.max("witness at unit", unit, tol_dual_unit);
    t.max("witness identities", eqs, tol_dual_witness);
    t.max("covariance", cov, tol_covariance);
    t.max("|e.q - 1/N|", avg, tol_dual_average);
    t.max("quasi-basis sum", sum, tol_sum);
    t.max("round trip", rt, tol_round_trip);
    return t.done();
}

std::vector<Vec> full_basis(const Algebra& A) {
    std::vector<Vec> out;
    for (int i = 0; i < A.dim(); ++i) out.push_back(A.basis(i));
    return out;
}

Vec coboundary(const Coaction& rho, const Vec& x0) {
    return rho.AK()->mul(kron(x0, rho.hopf()->one()), rho(rho.algebra()->star(x0)));
}

Outcome one_cocycle() {
    Tracker t;
    auto t0 = std::chrono::steady_clock::now();
    TowerBase b = build_base(build_group_algebra(cyclic_group(2)));
    TowerLevel l = build_level(b, 2);
    std::vector<Vec> basis = full_basis(*l.A);
    double w = 0.0, before = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng(1000 + trial);
        Vec x0 = random_unitary(*l.A, basis, 1.0, rng);
        TrivializationResult r = one_cocycle_trivialize(l.rho, l.p, coboundary(l.rho, x0));
        t.need(r.report.all_pass(), "trial " + std::to_string(trial) + " report");
        w = std::max(w, r.residual_after);
        before = std::max(before, r.residual_before);
    }
    t.add("max initial " + fmt(before));
    t.max("max trivialized residual", w, tol_one_cocycle);
    double s = seconds_since(t0);
    t.need(s < time_one_cocycle, "runtime " + fmt(s) + " s");
    t.add("time " + fmt(s) + " s");
    return t.done();
}

Outcome two_cocycle() {
    Tracker t;
    TowerBase b = build_base(build_group_algebra(cyclic_group(2)));
    TowerLevel l = build_level(b, 2);
    double once = 0.0, fin = 0.0, ratio = 0.0, start = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        Rng rng(2000 + trial);
        double scale = 0.2 + 0.15 * trial;
        Vec y = random_counital_unitary(l.rho, l.scope, scale, rng);
        TwistedCoaction tc = exterior_transform(l.twisted(), y);
        TrivializationResult r1 = two_cocycle_trivialize_once(tc, b.H, l.p, l.scope);
        once = std::max(once, r1.report.residual("cocycle trivialized"));
        t.need(r1.report.all_pass(), "trial " + std::to_string(trial) + " one-step report");
        TrivializationResult it = two_cocycle_trivialize_iterative(tc, b.H, l.p, l.scope);
        start = std::max(start, it.profile.front());
        fin = std::max(fin, it.profile.back());
        for (size_t k = 0; k + 1 < it.profile.size(); ++k)
            if (it.profile[k] < decay_basin && it.profile[k] > 0.0)
                ratio = std::max(ratio, it.profile[k + 1] / it.profile[k]);
    }
    t.max("one-step residual", once, tol_two_cocycle);
    t.add("max initial ||u - 1|| " + fmt(start));
    t.max("iterated ||u - 1||", fin, tol_iteration);
    t.need(ratio <= decay_ratio, "decay ratio " + fmt(ratio));
    t.add("decay ratio " + fmt(ratio));
    return t.done();
}

Outcome aue() {
    Tracker t;
    TowerBase b = build_base(build_group_algebra(cyclic_group(2)));
    TowerLevel l = build_level(b, 2);
    double un = 0.0, margin = 1e300;
    int commutators = 0;
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng(3000 + trial);
        Vec y = random_unitary(*l.A, l.scope, 0.05 + 0.05 * trial, rng);
        Vec v = coboundary(l.rho, y);
        TensorPtr AK = l.rho.AK();
        Coaction rho = l.rho;
        Vec vs = AK->star(v);
        Coaction sigma(l.A, rho.hopf(), [AK, rho, v, vs](const Vec& a) { return AK->mul(AK->mul(v, rho(a)), vs); });
        std::vector<Vec> F;
        for (int k = 0; k < 4; ++k) {
            Vec z = rng.cvec(l.A->dim());
            F.push_back(z / l.A->norm(z));
        }
        AueStep st = aue_one_step(l.rho, l.p, sigma, v, F);
        un = std::max(un, st.report.residual("x unitary"));
        for (const auto& e : st.report.entries())
            if (e.name.rfind("commutator", 0) == 0) {
                ++commutators;
                t.need(e.pass, "trial " + std::to_string(trial) + " " + e.name + " " + fmt(e.residual) + " > " +
                                   fmt(e.tolerance));
                margin = std::min(margin, e.tolerance - e.residual);
            }
    }
    t.add(std::to_string(commutators) + " commutators within bound, min slack " + fmt(margin));
    t.max("x unitary", un, tol_aue_unitary);
    return t.done();
}

Outcome span() {
    Tracker t;
    int n = 0;
    std::vector<HopfPtr> hs = builders();
    hs.push_back(tensor_hopf(*build_function_algebra(cyclic_group(2)), *build_group_algebra(cyclic_group(3))));
    for (const HopfPtr& H : hs) {
        int d = appendix_span_check(*H);
        t.need(d == H->N * H->N, H->label + " span " + std::to_string(d));
        ++n;
    }
    t.add(std::to_string(n) + " algebras exact");
    return t.done();
}

Outcome bridges() {
    Tracker t;
    CayleyTable g = cyclic_group(2);
    TowerBase b = build_base(build_group_algebra(g));
    double w = 0.0;
    for (int n = 1; n <= 3; ++n) {
        TowerLevel l = build_level(b, n);
        GroupRep rep = group_rep_from_witness(l.rho, l.u);
        ResidualReport r = check_group_rep(l.rho, g, rep, {tol_bridge, tol_bridge});
        std::vector<Vec> e = partition_from_projection(l.rho, g, l.p);
        r.merge(check_partition(l.rho, g, e, l.scope, {tol_bridge, tol_bridge}));
        w = std::max(w, r.max_residual());
        w = std::max(w, max_abs(Vec(witness_from_group_rep(l.rho, rep) - l.u)));
        w = std::max(w, max_abs(Vec(projection_from_partition(l.rho, g, e) - l.p)));
    }
    t.max("round trips", w, tol_bridge);
    return t.done();
}

std::string suite_reports() {
    const std::string d = KAC_TEST_DATA;
    std::vector<std::vector<std::string>> cmds = {
        {"validate", d + "/f2.json"},
        {"validate", d + "/base3.json"},
        {"dual", d + "/cs3.json"},
        {"haar", d + "/s3.json"},
        {"comatrix", d + "/s3.json"},
        {"crossed", d + "/c3.json"},
        {"duality-check", d + "/dual_c2.json"},
        {"tower", "--level", "3", "--hopf", d + "/f2.json"},
        {"rohlin-check", "--level", "2", d + "/c2.json"},
        {"trivialize-1", "--level", "2", d + "/c2.json"},
        {"trivialize-2", "--level", "2", d + "/c2.json"},
        {"aue-step", "--level", "2", d + "/c2.json"},
        {"span-check", d + "/tensor.json"},
    };
    std::string all;
    for (auto c : cmds) {
        c.insert(c.end(), {"--format", "json"});
        std::ostringstream out, err;
        int code = io::run(c, out, err);
        all += std::to_string(code) + "\n" + out.str();
    }
    return all;
}

Outcome determinism() {
    Tracker t;
    std::string a = suite_reports(), b = suite_reports();
    t.need(a == b, "reports differ");
    t.need(a.find("\"pass\": false") == std::string::npos, "a suite report has failing entries");
    t.add(std::to_string(a.size()) + " bytes identical, digest " + io::digest(a));
    return t.done();
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"hopf axiom suite", hopf_axioms},
        {"comatrix units", comatrix},
        {"crossed base is M_N", crossed_base},
        {"duality", duality},
        {"tower", tower},
        {"rohlin witness", rohlin},
        {"one-cocycle vanishing", one_cocycle},
        {"two-cocycle vanishing", two_cocycle},
        {"one-step unitary equivalence", aue},
        {"span dimension", span},
        {"group bridges", bridges},
        {"deterministic reports", determinism},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
