#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kac/cocycle.hpp"
#include "kac/duality.hpp"

namespace kac::io {

namespace {

Tolerance tolerance(const Options& o) { return {o.tol, o.tol}; }

HopfPtr need_hopf(const AlgebraFile& s) {
    if (!s.hopf) throw ParseError("input is not a Hopf algebra");
    return s.hopf;
}

json blocks_json(const std::vector<int>& b) { return json(b); }

struct LevelContext {
    TowerBase base;
    TowerLevel level;
};

LevelContext level_context(const Options& o, const AlgebraFile& s) {
    if (o.level < 1) throw LevelTooLarge("level must be at least 1");
    if (o.level > o.max_level)
        throw LevelTooLarge("level " + std::to_string(o.level) + " exceeds --max-level " + std::to_string(o.max_level));
    TowerBase b = build_base(need_hopf(s), o.seed);
    TowerLevel l = build_level(b, o.level, o.cap);
    return {std::move(b), std::move(l)};
}

std::string prefix(const char* what, int i) { return std::string(what) + " " + std::to_string(i) + " "; }

CommandResult cmd_validate(const Options& o, const AlgebraFile& s) {
    CommandResult r;
    if (s.hopf) {
        r.report = validate_hopf(*s.hopf, tolerance(o));
        r.data["dim"] = s.hopf->N;
    } else {
        r.report = validate_algebra(*s.alg, tolerance(o));
        r.data["dim"] = s.alg->dim();
    }
    WedderburnData wd = wedderburn(*s.alg, o.seed);
    r.data["blocks"] = blocks_json(wd.blocks);
    r.data["label"] = s.alg->label();
    return r;
}

CommandResult cmd_dual(const Options& o, const AlgebraFile& s) {
    const Hopf& H = *need_hopf(s);
    HopfPtr D = dual(H);
    HopfPtr DD = dual(*D);
    CommandResult r;
    r.report.merge(validate_hopf(*D, tolerance(o)), "dual ");
    double mult = 0.0;
    for (int i = 0; i < H.N; ++i)
        for (int j = 0; j < H.N; ++j)
            mult = std::max(mult, max_abs(Vec(DD->alg->mul(DD->basis(i), DD->basis(j)) -
                                              H.alg->mul(H.basis(i), H.basis(j)))));
    r.report.add("double dual multiplication", mult, o.tol);
    r.report.add("double dual comultiplication", max_abs(Mat(DD->comult - H.comult)), o.tol);
    r.report.add("double dual star", max_abs(Mat(DD->alg->star_matrix() - H.alg->star_matrix())), o.tol);
    r.data["dual"] = to_json(*D);
    if (!o.output.empty()) {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + o.output + "'");
        f << r.data["dual"].dump(2) << "\n";
    }
    return r;
}

CommandResult cmd_haar(const Options& o, const AlgebraFile& s) {
    const Hopf& H = *need_hopf(s);
    HaarPair hp = haar_pair(H);
    CommandResult r;
    r.report = check_haar(H, hp, tolerance(o));
    json e = json::array(), tau = json::array();
    for (int i = 0; i < H.N; ++i) {
        e.push_back(complex_json(hp.e(i)));
        tau.push_back(complex_json(hp.tau(i)));
    }
    r.data["haar_element"] = e;
    r.data["haar_trace"] = tau;
    return r;
}

CommandResult cmd_comatrix(const Options& o, const AlgebraFile& s) {
    const Hopf& H = *need_hopf(s);
    ComatrixUnits cu = comatrix_units(H, o.seed);
    CommandResult r;
    r.report = check_comatrix(H, cu, haar_pair(H), tolerance(o));
    r.data["blocks"] = blocks_json(cu.blocks);
    return r;
}

CommandResult cmd_crossed(const Options& o, const AlgebraFile& s) {
    HopfPtr H = need_hopf(s);
    TowerBase b = build_base(H, o.seed);
    CommandResult r;
    r.report = check_base(b, tolerance(o), o.seed);
    r.report.merge(check_crossed(*b.cp0, tolerance(o), o.seed), "crossed ");
    r.report.add("crossed saturated", check_saturated(*b.cp0, tolerance(o), o.seed) ? 0.0 : 1.0, 0.5);
    r.data["blocks"] = blocks_json(b.wd.blocks);
    r.data["N"] = b.N;
    r.headline.push_back("blocks [" + std::to_string(b.N) + "]");
    return r;
}

// Translation coaction of the input algebra on itself.
CommandResult cmd_duality(const Options& o, const AlgebraFile& s) {
    HopfPtr K = need_hopf(s);
    TwistedCoaction t{Coaction::from_matrix(K->alg, K, K->comult, "translation"), Vec()};
    DualityData dd = build_duality(t, dual(*K), o.seed);
    CommandResult r;
    r.report = check_duality_data(dd, tolerance(o));
    r.report.merge(check_psi(dd, tolerance(o), o.seed));
    r.report.merge(verify_duality(dd, tolerance(o)));
    r.data["N"] = K->N;
    return r;
}

CommandResult cmd_tower(const Options& o, const AlgebraFile& s) {
    if (o.level > o.max_level)
        throw LevelTooLarge("level " + std::to_string(o.level) + " exceeds --max-level " + std::to_string(o.max_level));
    if (o.level < 1) throw LevelTooLarge("level must be at least 1");
    TowerBase b = build_base(need_hopf(s), o.seed);
    CommandResult r;
    r.report.merge(check_base(b, tolerance(o), o.seed), "base ");
    std::vector<TowerLevel> levels;
    for (int n = 1; n <= o.level; ++n) levels.push_back(build_level(b, n, o.cap));
    json sizes = json::array();
    for (int n = 1; n <= o.level; ++n) {
        const TowerLevel& l = levels[n - 1];
        const TowerLevel* next = n < o.level ? &levels[n] : nullptr;
        std::string pre = prefix("level", n);
        r.report.merge(check_level(b, l, next, tolerance(o)), pre);
        TowerRohlin tr = rohlin_report(b, l, tolerance(o));
        r.report.merge(tr.projection, pre);
        r.report.merge(tr.witness, pre);
        sizes.push_back(l.size());
    }
    r.data["N"] = b.N;
    r.data["matrix_sizes"] = sizes;
    return r;
}

CommandResult cmd_rohlin(const Options& o, const AlgebraFile& s) {
    LevelContext ctx = level_context(o, s);
    const TowerLevel& l = ctx.level;
    TowerRohlin tr = rohlin_report(ctx.base, l, tolerance(o));
    CommandResult r;
    r.report.merge(tr.projection);
    DualWitness dw = witness_from_projection(tr.rohlin, tolerance(o), o.seed);
    r.report.merge(dw.report);
    r.report.add("projection from witness", max_abs(Vec(dw.cp->E1(projection_from_witness(dw)) - l.p)), o.tol);
    // Group specialization: the tower of C[G] carries a coaction of C(G).
    if (s.group && s.kind == "group_algebra") {
        const CayleyTable& g = *s.group;
        GroupRep rep = group_rep_from_witness(l.rho, l.u);
        r.report.merge(check_group_rep(l.rho, g, rep, tolerance(o)));
        r.report.add("group rep round trip", max_abs(Vec(witness_from_group_rep(l.rho, rep) - l.u)), o.tol);
        std::vector<Vec> e = partition_from_projection(l.rho, g, l.p, tolerance(o));
        r.report.merge(check_partition(l.rho, g, e, l.scope, tolerance(o)));
        r.report.add("partition round trip", max_abs(Vec(projection_from_partition(l.rho, g, e, tolerance(o)) - l.p)),
                     o.tol);
    }
    r.data["N"] = l.N;
    r.data["level"] = l.n;
    return r;
}

std::vector<Vec> full_basis(const Algebra& A) {
    std::vector<Vec> out;
    for (int i = 0; i < A.dim(); ++i) out.push_back(A.basis(i));
    return out;
}

Vec coboundary(const Coaction& rho, const Vec& x0) {
    const Algebra& A = *rho.algebra();
    return rho.AK()->mul(kron(x0, rho.hopf()->one()), rho(A.star(x0)));
}

CommandResult cmd_trivialize1(const Options& o, const AlgebraFile& s) {
    LevelContext ctx = level_context(o, s);
    const TowerLevel& l = ctx.level;
    Rng rng(o.seed);
    std::vector<Vec> basis = full_basis(*l.A);
    CommandResult r;
    json trials = json::array();
    for (int i = 0; i < o.trials; ++i) {
        Vec x0 = random_unitary(*l.A, basis, 1.0, rng);
        TrivializationResult t = one_cocycle_trivialize(l.rho, l.p, coboundary(l.rho, x0), tolerance(o));
        r.report.merge(t.report, prefix("trial", i));
        trials.push_back({{"residual_before", t.residual_before}, {"residual_after", t.residual_after}});
    }
    r.data["trials"] = trials;
    return r;
}

CommandResult cmd_trivialize2(const Options& o, const AlgebraFile& s) {
    LevelContext ctx = level_context(o, s);
    const TowerLevel& l = ctx.level;
    Rng rng(o.seed);
    CommandResult r;
    json trials = json::array();
    for (int i = 0; i < o.trials; ++i) {
        Vec y = random_counital_unitary(l.rho, l.scope, 0.5, rng);
        TwistedCoaction t = exterior_transform(l.twisted(), y, tolerance(o));
        std::string pre = prefix("trial", i);
        TrivializationResult once = two_cocycle_trivialize_once(t, ctx.base.H, l.p, l.scope, tolerance(o), o.seed);
        r.report.merge(once.report, pre);
        TrivializationResult it =
            two_cocycle_trivialize_iterative(t, ctx.base.H, l.p, l.scope, 8, 1e-10, tolerance(o), o.seed);
        r.report.merge(it.report, pre + "iterative ");
        trials.push_back({{"residual_before", once.residual_before},
                          {"residual_after", once.residual_after},
                          {"L", once.L},
                          {"iterations", it.iterations},
                          {"profile", it.profile}});
    }
    r.data["trials"] = trials;
    return r;
}

CommandResult cmd_aue(const Options& o, const AlgebraFile& s) {
    LevelContext ctx = level_context(o, s);
    const TowerLevel& l = ctx.level;
    Rng rng(o.seed);
    CommandResult r;
    json trials = json::array();
    for (int i = 0; i < o.trials; ++i) {
        Vec y = random_unitary(*l.A, l.scope, 0.1, rng);
        Vec v = coboundary(l.rho, y);
        TensorPtr AK = l.rho.AK();
        Coaction rho = l.rho;
        Vec vs = AK->star(v);
        Coaction sigma(l.A, rho.hopf(), [AK, rho, v, vs](const Vec& a) { return AK->mul(AK->mul(v, rho(a)), vs); },
                       "Ad(v) rho");
        std::vector<Vec> F;
        for (int k = 0; k < 4; ++k) {
            Vec z = rng.cvec(l.A->dim());
            F.push_back(z / l.A->norm(z));
        }
        AueStep st = aue_one_step(l.rho, l.p, sigma, v, F, tolerance(o), o.seed);
        r.report.merge(st.report, prefix("trial", i));
        trials.push_back({{"eps", st.eps}, {"L", st.L}});
    }
    r.data["trials"] = trials;
    return r;
}

CommandResult cmd_span(const Options&, const AlgebraFile& s) {
    const Hopf& H = *need_hopf(s);
    int d = appendix_span_check(H);
    CommandResult r;
    r.report.add("span dimension equals N^2", std::abs(d - H.N * H.N), 0.5);
    r.data["span_dimension"] = d;
    r.data["N"] = H.N;
    r.headline.push_back(std::to_string(d));
    return r;
}

using Handler = CommandResult (*)(const Options&, const AlgebraFile&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
    static const std::vector<std::pair<std::string, Handler>> h = {
        {"validate", cmd_validate},       {"dual", cmd_dual},
        {"haar", cmd_haar},               {"comatrix", cmd_comatrix},
        {"crossed", cmd_crossed},         {"duality-check", cmd_duality},
        {"tower", cmd_tower},             {"rohlin-check", cmd_rohlin},
        {"trivialize-1", cmd_trivialize1}, {"trivialize-2", cmd_trivialize2},
        {"aue-step", cmd_aue},            {"span-check", cmd_span},
    };
    return h;
}

void print_text(std::ostream& out, const CommandResult& r) {
    for (const auto& line : r.headline) out << line << "\n";
    out << r.report.summary();
    int failed = 0;
    for (const auto& e : r.report.entries()) failed += e.pass ? 0 : 1;
    if (failed == 0) out << "all " << r.report.entries().size() << " checks pass\n";
    else out << failed << " of " << r.report.entries().size() << " checks fail\n";
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, h] : handlers()) n.push_back(name);
        return n;
    }();
    return names;
}

CommandResult execute(const Options& opt) {
    for (const auto& [name, h] : handlers())
        if (name == opt.command) return h(opt, load_algebra(opt.input));
    throw ParseError("unknown command '" + opt.command + "'");
}

json report_json(const Options& opt, const std::string& input_digest, const CommandResult& r, double seconds) {
    json j;
    j["tool"] = "kac";
    j["version"] = tool_version;
    j["command"] = opt.command;
    j["input_digest"] = input_digest;
    j["seed"] = opt.seed;
    j["tolerance"] = opt.tol;
    json entries = json::array();
    for (const auto& e : r.report.entries())
        entries.push_back({{"name", e.name}, {"residual", e.residual}, {"tolerance", e.tolerance}, {"pass", e.pass}});
    j["entries"] = entries;
    j["pass"] = r.report.all_pass();
    j["data"] = r.data;
    if (seconds >= 0.0) j["timing_seconds"] = seconds;
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Numerical checks for finite-dimensional C*-Hopf algebras and their coactions", "kac"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);
    for (const std::string& name : command_names()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("input", opt.input, "algebra file (JSON)");
        sub->add_option("--hopf", opt.input, "algebra file (JSON)");
        sub->add_option("--tol", opt.tol, "absolute and relative tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--seed", opt.seed, "seed for randomized elements");
        sub->add_option("--level", opt.level, "tower level");
        sub->add_option("--max-level", opt.max_level, "refuse tower levels above this");
        sub->add_option("--trials", opt.trials, "randomized trials")->check(CLI::NonNegativeNumber);
        sub->add_option("--report", opt.report_path, "write the JSON report here");
        sub->add_option("--format", opt.format, "stdout format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", opt.output, "write the computed dual here (dual only)");
        sub->add_flag("--timing", opt.timing, "include wall time in the report");
        sub->final_callback([&opt, name] { opt.command = name; });
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << "\n";
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    }
    if (opt.input.empty()) {
        err << "error: no input file\n";
        return exit_parse;
    }

    CommandResult r;
    std::string dig;
    auto t0 = std::chrono::steady_clock::now();
    try {
        dig = digest(read_file(opt.input));
        r = execute(opt);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const Error& e) {
        err << (e.kind() == ErrorKind::Numeric ? "numerical failure: " : "validation failure: ") << e.what() << "\n";
        return e.kind() == ErrorKind::Numeric ? exit_numeric : exit_validation;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json rep = report_json(opt, dig, r, opt.timing ? secs : -1.0);
    if (opt.format == "json") out << rep.dump(2) << "\n";
    else print_text(out, r);
    if (!opt.report_path.empty()) {
        std::ofstream f(opt.report_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write '" << opt.report_path << "'\n";
            return exit_parse;
        }
        f << rep.dump(2) << "\n";
    }
    if (!r.report.all_pass()) {
        for (const auto& e : r.report.entries())
            if (!e.pass) err << "failed: " << e.name << " residual " << e.residual << " > " << e.tolerance << "\n";
        return exit_validation;
    }
    return exit_ok;
}

}  // namespace kac::io
