#include "algebra_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "kac/tower.hpp"

namespace kac::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int as_index(const json& v, int n, const char* what) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer index");
    int i = v.get<int>();
    if (i < 0 || i >= n) throw ParseError(std::string(what) + ": index " + std::to_string(i) + " out of range");
    return i;
}

double as_real(const json& v, const char* what) {
    if (!v.is_number()) throw ParseError(std::string(what) + ": expected a number");
    return v.get<double>();
}

// Sparse entries [i_1 .. i_k, re] or [i_1 .. i_k, re, im].
template <typename F>
void triplets(const json& list, int nidx, int n, const char* what, F&& f) {
    if (!list.is_array()) throw ParseError(std::string(what) + ": expected a list of triplets");
    for (const json& t : list) {
        if (!t.is_array() || (t.size() != static_cast<size_t>(nidx) + 1 && t.size() != static_cast<size_t>(nidx) + 2))
            throw ParseError(std::string(what) + ": malformed entry " + t.dump());
        std::vector<int> idx;
        for (int k = 0; k < nidx; ++k) idx.push_back(as_index(t[k], n, what));
        double re = as_real(t[nidx], what);
        double im = t.size() == static_cast<size_t>(nidx) + 2 ? as_real(t[nidx + 1], what) : 0.0;
        f(idx, cd(re, im));
    }
}

CayleyTable parse_group(const json& g) {
    if (g.is_string()) return named_group(g.get<std::string>());
    if (!g.is_array() || g.empty()) throw ParseError("group: expected a Cayley table or a group name");
    CayleyTable t;
    const int n = static_cast<int>(g.size());
    for (const json& row : g) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("group: Cayley table must be square");
        std::vector<int> r;
        for (const json& v : row) r.push_back(as_index(v, n, "group"));
        t.push_back(r);
    }
    return t;
}

std::string label_or(const json& j, const std::string& fallback) {
    return j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : fallback;
}

AlgebraFile parse_raw(const json& j) {
    const json& dj = field(j, "dim");
    if (!dj.is_number_integer() || dj.get<int>() < 1) throw ParseError("dim: expected a positive integer");
    const int n = dj.get<int>();
    std::vector<Triplet> mult;
    triplets(field(j, "mult"), 3, n, "mult",
             [&](const std::vector<int>& i, cd v) { mult.push_back({i[0], i[1], i[2], v}); });
    Vec unit = Vec::Zero(n);
    triplets(field(j, "unit"), 1, n, "unit", [&](const std::vector<int>& i, cd v) { unit(i[0]) += v; });
    Mat star = Mat::Zero(n, n);
    triplets(field(j, "star"), 2, n, "star", [&](const std::vector<int>& i, cd v) { star(i[0], i[1]) += v; });
    AlgebraFile s;
    s.kind = "raw";
    s.alg = std::make_shared<StructAlg>(n, std::move(mult), unit, star, label_or(j, "A"));
    if (!j.contains("comult")) return s;
    Mat comult = Mat::Zero(n * n, n);
    triplets(field(j, "comult"), 3, n, "comult",
             [&](const std::vector<int>& i, cd v) { comult(i[0] * n + i[1], i[2]) += v; });
    Eigen::RowVectorXcd counit = Eigen::RowVectorXcd::Zero(n);
    triplets(field(j, "counit"), 1, n, "counit", [&](const std::vector<int>& i, cd v) { counit(i[0]) += v; });
    Mat S = Mat::Zero(n, n);
    triplets(field(j, "antipode"), 2, n, "antipode", [&](const std::vector<int>& i, cd v) { S(i[0], i[1]) += v; });
    s.hopf = make_hopf(s.alg, comult, counit, S, label_or(j, "H"));
    return s;
}

HopfPtr need_hopf(const AlgebraFile& s, const char* kind) {
    if (!s.hopf) throw ParseError(std::string(kind) + ": operand is not a Hopf algebra");
    return s.hopf;
}

void triplet_out(json& out, std::vector<int> idx, const cd& v) {
    json t = json::array();
    for (int i : idx) t.push_back(i);
    t.push_back(v.real());
    t.push_back(v.imag());
    out.push_back(std::move(t));
}

}  // namespace

CayleyTable named_group(const std::string& name) {
    if (name == "Z2xZ2") return product_group(cyclic_group(2), cyclic_group(2));
    if (name == "S3") return symmetric_group3();
    if (name.size() > 1 && name[0] == 'Z') {
        try {
            size_t used = 0;
            int n = std::stoi(name.substr(1), &used);
            if (used == name.size() - 1 && n >= 1) return cyclic_group(n);
        } catch (const std::exception&) {
        }
    }
    throw ParseError("unknown group name '" + name + "'");
}

AlgebraFile parse_algebra(const json& j) {
    const json& kj = field(j, "kind");
    if (!kj.is_string()) throw ParseError("kind: expected a string");
    const std::string kind = kj.get<std::string>();
    AlgebraFile s;
    s.kind = kind;
    if (kind == "function_algebra" || kind == "group_algebra") {
        CayleyTable g = parse_group(field(j, "group"));
        s.group = g;
        s.hopf = kind == "function_algebra" ? build_function_algebra(g, label_or(j, "C(G)"))
                                            : build_group_algebra(g, label_or(j, "C[G]"));
    } else if (kind == "dual") {
        AlgebraFile of = parse_algebra(field(j, "of"));
        s.hopf = dual(*need_hopf(of, "dual"));
    } else if (kind == "tensor") {
        AlgebraFile l = parse_algebra(field(j, "left")), r = parse_algebra(field(j, "right"));
        s.hopf = tensor_hopf(*need_hopf(l, "tensor"), *need_hopf(r, "tensor"));
    } else if (kind == "crossed_base") {
        AlgebraFile of = parse_algebra(field(j, "of"));
        TowerBase b = build_base(need_hopf(of, "crossed_base"));
        s.crossed_of = of.hopf;
        s.alg = to_struct(*b.cp0, label_or(j, b.cp0->label()));
        return s;
    } else if (kind == "raw") {
        return parse_raw(j);
    } else {
        throw ParseError("unknown kind '" + kind + "'");
    }
    s.alg = s.hopf->alg;
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AlgebraFile load_algebra(const std::string& path) {
    std::string text = read_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return parse_algebra(j);
}

json complex_json(const cd& z) { return json::array({z.real(), z.imag()}); }

json to_json(const StructAlg& alg) {
    const int n = alg.dim();
    json j;
    j["kind"] = "raw";
    j["label"] = alg.label();
    j["dim"] = n;
    json mult = json::array(), unit = json::array(), star = json::array();
    for (const Triplet& t : alg.mult()) triplet_out(mult, {t.i, t.j, t.k}, t.v);
    Vec one = alg.one();
    for (int i = 0; i < n; ++i)
        if (one(i) != cd(0.0)) triplet_out(unit, {i}, one(i));
    const Mat& T = alg.star_matrix();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (T(i, k) != cd(0.0)) triplet_out(star, {i, k}, T(i, k));
    j["mult"] = mult;
    j["unit"] = unit;
    j["star"] = star;
    return j;
}

json to_json(const Hopf& H) {
    const int n = H.N;
    json j = to_json(*H.alg);
    j["label"] = H.label;
    json comult = json::array(), counit = json::array(), S = json::array();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k)
                if (H.comult(a * n + b, k) != cd(0.0)) triplet_out(comult, {a, b, k}, H.comult(a * n + b, k));
    for (int k = 0; k < n; ++k)
        if (H.counit(k) != cd(0.0)) triplet_out(counit, {k}, H.counit(k));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (H.antipode(i, k) != cd(0.0)) triplet_out(S, {i, k}, H.antipode(i, k));
    j["comult"] = comult;
    j["counit"] = counit;
    j["antipode"] = S;
    return j;
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace kac::io
