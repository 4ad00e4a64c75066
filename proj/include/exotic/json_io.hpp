#pragma once

// JSON encoding of inputs and reports. Parse errors carry a JSON pointer to
// the offending value.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "exotic/exotic_rep.hpp"
#include "exotic/hecke.hpp"
#include "exotic/orbits.hpp"
#include "exotic/params.hpp"

namespace exotic {

using Json = nlohmann::ordered_json;

inline constexpr int kInputVersion = 1;

struct JsonInputError : InvalidInput {
    std::string pointer;
    JsonInputError(std::string ptr, const std::string& what)
        : InvalidInput((ptr.empty() ? std::string("/") : ptr) + ": " + what), pointer(std::move(ptr))
    {
    }
};

namespace detail {

inline std::string escape_pointer(const std::string& key)
{
    std::string out;
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

// A value together with its location in the document.
struct Node {
    const Json& j;
    std::string ptr;

    Node at(std::size_t k) const { return {j.at(k), ptr + "/" + std::to_string(k)}; }
    Node at(const std::string& key) const
    {
        if (!j.contains(key)) fail("missing required member '" + key + "'");
        return {j.at(key), ptr + "/" + escape_pointer(key)};
    }
    bool has(const std::string& key) const { return j.contains(key); }

    [[noreturn]] void fail(const std::string& what) const { throw JsonInputError(ptr, what); }

    const Json& array() const
    {
        if (!j.is_array()) fail("expected an array");
        return j;
    }
    const Json& object() const
    {
        if (!j.is_object()) fail("expected an object");
        return j;
    }
    void only(std::initializer_list<const char*> keys) const
    {
        object();
        for (const auto& [k, v] : j.items()) {
            bool known = false;
            for (const char* a : keys) known = known || k == a;
            if (!known) fail("unknown member '" + k + "'");
        }
    }
    long integer() const
    {
        if (!j.is_number_integer()) fail("expected an integer");
        return j.get<long>();
    }
    std::string string() const
    {
        if (!j.is_string()) fail("expected a string");
        return j.get<std::string>();
    }
    Rational rational() const
    {
        try {
            return parse_rational(string());
        } catch (const JsonInputError&) {
            throw;
        } catch (const InvalidInput& e) {
            fail(e.what());
        }
    }
};

inline void check_symbol(const Node& node, const std::string& sym, const SymbolTable* symbols)
{
    if (symbols != nullptr && !symbols->contains(sym)) node.fail("undeclared symbol '" + sym + "'");
}

} // namespace detail

// ---------------------------------------------------------------- scalars

inline Json to_json(const FormalExponent& x)
{
    Json a = Json::array();
    for (const auto& [s, c] : x.coefficients()) a.push_back({{"sym", s}, {"coef", to_string(c)}});
    return a;
}

inline FormalExponent formal_exponent_from_json(const detail::Node& node, const SymbolTable* symbols = nullptr)
{
    FormalExponent x;
    std::set<std::string> seen;
    for (std::size_t k = 0; k < node.array().size(); ++k) {
        auto term = node.at(k);
        term.only({"sym", "coef"});
        auto sym_node = term.at("sym");
        std::string sym = sym_node.string();
        if (sym.empty()) sym_node.fail("empty symbol name");
        detail::check_symbol(sym_node, sym, symbols);
        if (!seen.insert(sym).second) sym_node.fail("symbol '" + sym + "' listed twice");
        x.add(sym, term.at("coef").rational());
    }
    return x;
}

inline Json to_json(const Weight& w) { return Json(w.coords); }

inline Weight weight_from_json(const detail::Node& node, int n)
{
    const Json& a = node.array();
    if (static_cast<int>(a.size()) != n) node.fail("expected " + std::to_string(n) + " coordinates");
    Weight w = Weight::zero(n);
    for (std::size_t k = 0; k < a.size(); ++k) {
        long c = node.at(k).integer();
        if (c < -1000000 || c > 1000000) node.at(k).fail("coordinate out of range");
        w.coords[k] = static_cast<int>(c);
    }
    return w;
}

inline Json to_json(const WeylElement& w)
{
    Json a = Json::array();
    for (int i = 1; i <= w.rank(); ++i) a.push_back(w(i));
    return a;
}

// ---------------------------------------------------------------- vectors

namespace detail {

inline Json entries_json(const std::map<Weight, Rational>& m)
{
    Json a = Json::array();
    for (const auto& [w, c] : m) a.push_back({{"weight", to_json(w)}, {"coef", to_string(c)}});
    return a;
}

} // namespace detail

inline Json to_json(const ExoticVector& X)
{
    Json j{{"rank", X.n}, {"x0", detail::entries_json(X.x[0])}};
    if (!X.x[1].empty()) j["x1"] = detail::entries_json(X.x[1]);
    j["y"] = detail::entries_json(X.y);
    return j;
}

inline ExoticVector exotic_vector_from_json(const detail::Node& node, std::optional<int> expected_rank = {})
{
    node.only({"rank", "x0", "x1", "y"});
    auto rank_node = node.at("rank");
    long n = rank_node.integer();
    if (n < 1 || n > 64) rank_node.fail("rank must lie in [1, 64]");
    if (expected_rank && n != *expected_rank) rank_node.fail("rank does not match the parameter point");
    ExoticVector X(static_cast<int>(n));
    auto read = [&](const char* key, auto&& store) {
        if (!node.has(key)) return;
        auto list = node.at(key);
        std::set<Weight> seen;
        for (std::size_t k = 0; k < list.array().size(); ++k) {
            auto e = list.at(k);
            e.only({"weight", "coef"});
            auto wn = e.at("weight");
            Weight w = weight_from_json(wn, X.n);
            if (!seen.insert(w).second) wn.fail("weight listed twice");
            Rational c = e.at("coef").rational();
            try {
                store(w, c);
            } catch (const JsonInputError&) {
                throw;
            } catch (const InvalidInput& err) {
                wn.fail(err.what());
            }
        }
    };
    if (!node.has("x0")) node.fail("missing required member 'x0'");
    if (!node.has("y")) node.fail("missing required member 'y'");
    read("x0", [&](const Weight& w, const Rational& c) { X.set_x(w, c, 0); });
    read("x1", [&](const Weight& w, const Rational& c) { X.set_x(w, c, 1); });
    read("y", [&](const Weight& w, const Rational& c) { X.set_y(w, c); });
    return X;
}

// ---------------------------------------------------------------- marked partitions

inline Json to_json(const MarkedPartition& s)
{
    Json delta = Json::array();
    for (const auto& m : s.marks) {
        Json d = Json::object();
        for (int j : m) d[std::to_string(j)] = 1;
        delta.push_back(d);
    }
    return {{"J", s.J}, {"delta", delta}};
}

inline MarkedPartition marked_partition_from_json(const detail::Node& node)
{
    node.only({"J", "delta"});
    MarkedPartition s;
    auto jn = node.at("J");
    int n = 0;
    for (std::size_t k = 0; k < jn.array().size(); ++k) {
        auto member = jn.at(k);
        std::vector<int> entries;
        for (std::size_t t = 0; t < member.array().size(); ++t) {
            long e = member.at(t).integer();
            if (e == 0 || e < -64 || e > 64) member.at(t).fail("entry outside [-64, 64]*");
            entries.push_back(static_cast<int>(e));
            n += 1;
        }
        s.J.push_back(std::move(entries));
    }
    s.n = n;
    if (node.has("delta")) {
        auto dn = node.at("delta");
        for (std::size_t m = 0; m < dn.array().size(); ++m) {
            auto d = dn.at(m);
            d.object();
            std::set<int> marks;
            for (const auto& [key, val] : d.j.items()) {
                detail::Node v{val, d.ptr + "/" + detail::escape_pointer(key)};
                int j = 0;
                try {
                    std::size_t used = 0;
                    j = std::stoi(key, &used);
                    if (used != key.size()) throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    v.fail("key is not a signed index");
                }
                long flag = v.integer();
                if (flag != 0 && flag != 1) v.fail("foot function values are 0 or 1");
                if (flag == 1) marks.insert(j);
            }
            s.marks.push_back(std::move(marks));
        }
    }
    try {
        s.validate();
    } catch (const InvalidInput& e) {
        node.fail(e.what());
    }
    return s;
}

inline Json to_json(const Bipartition& b) { return Json::array({b.lambda1, b.lambda2}); }

// ---------------------------------------------------------------- input documents

// A parameter point file, optionally carrying an exotic vector (a parameter).
struct InputDocument {
    std::string description;
    std::vector<std::string> symbols;
    ParameterPoint point;
    std::optional<ExoticVector> X;
};

inline Json to_json(const InputDocument& d)
{
    Json j{{"version", kInputVersion}};
    if (!d.description.empty()) j["description"] = d.description;
    j["symbols"] = d.symbols;
    Json s = Json::array();
    for (const auto& l : d.point.logs) s.push_back(to_json(l));
    j["s"] = s;
    j["q"] = Json::array({to_json(d.point.qlogs[0]), to_json(d.point.qlogs[1]), to_json(d.point.qlogs[2])});
    if (d.X) j["X"] = to_json(*d.X);
    return j;
}

inline InputDocument input_document_from_json(const Json& root)
{
    detail::Node node{root, ""};
    node.only({"version", "description", "symbols", "s", "q", "X"});
    auto vn = node.at("version");
    if (vn.integer() != kInputVersion) vn.fail("unsupported version");
    InputDocument d;
    if (node.has("description")) d.description = node.at("description").string();
    SymbolTable table;
    auto sn = node.at("symbols");
    for (std::size_t k = 0; k < sn.array().size(); ++k) {
        std::string name = sn.at(k).string();
        try {
            table.declare(name);
        } catch (const InvalidInput& e) {
            sn.at(k).fail(e.what());
        }
        d.symbols.push_back(name);
    }
    auto logs_node = node.at("s");
    if (logs_node.array().empty()) logs_node.fail("expected at least one coordinate");
    std::vector<FormalExponent> logs;
    for (std::size_t k = 0; k < logs_node.j.size(); ++k) logs.push_back(formal_exponent_from_json(logs_node.at(k), &table));
    auto qn = node.at("q");
    if (qn.array().size() != 3) qn.fail("expected exactly three entries (q0, q1, q2)");
    std::array<FormalExponent, 3> q;
    for (std::size_t k = 0; k < 3; ++k) q[k] = formal_exponent_from_json(qn.at(k), &table);
    d.point = ParameterPoint(std::move(logs), std::move(q));
    if (node.has("X")) d.X = exotic_vector_from_json(node.at("X"), d.point.n);
    return d;
}

inline Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw JsonInputError("", std::string("not valid JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------- reports

inline Json to_json(const VWeight& v) { return {{"weight", to_json(v.weight)}, {"part", v.part}}; }

inline Json to_json(const Support& s)
{
    Json a = Json::array();
    for (const auto& v : s) a.push_back(to_json(v));
    return a;
}

inline Json to_json(const RelationReport& r)
{
    Json results = Json::array();
    for (const auto& x : r.results) {
        Json e{{"relation", x.relation}, {"status", x.passed ? "pass" : "fail"}};
        if (x.witness) e["witness"] = to_json(*x.witness);
        if (!x.detail.empty()) e["detail"] = x.detail;
        results.push_back(e);
    }
    return {{"rank", r.rank},
            {"box", r.box},
            {"family", r.family},
            {"specialization", r.specialization},
            {"all_passed", r.all_passed()},
            {"results", results},
            {"notes", r.notes},
            {"provenance", "operator identities on the polynomial representation, checked on every monomial of the box"}};
}

inline Json params_report_json(const ParameterPoint& a)
{
    const auto rep = admissibility(a);
    Json clans = Json::array();
    for (const auto& c : clan_decompose(a)) clans.push_back(c);
    Json j{{"rank", a.n}, {"clans", clans}, {"verdict", to_string(rep.verdict)}, {"reasons", rep.reasons}};
    if (rep.verdict != Admissibility::not_preadmissible) {
        Json fw = Json::array();
        for (const auto& v : fixed_weight_space(a)) fw.push_back(to_json(v));
        j["fixed_weights"] = fw;
    }
    j["provenance"] = {{"clans", "connectivity of coordinates through q2^{+-1} and sign congruences"},
                       {"verdict", "eigenvalue avoidance conditions on (q0, q1, q2)"},
                       {"fixed_weights", "weights of V1 + V1 + V2 on which the point acts by the matching q"}};
    return j;
}

inline Json to_json(const ClassificationReport& r, const std::string& method)
{
    Json reps = Json::array();
    for (const auto& o : r.representatives) {
        Json e{{"support", to_json(o.support)}, {"vector", to_json(o.vector)}};
        if (!o.provenance.empty()) {
            Json prov = Json::array();
            for (const auto& p : o.provenance)
                prov.push_back({{"clan", p.clan}, {"sigma", to_json(p.sigma)}, {"w", to_json(p.w)}, {"v1_part", p.v1_part}});
            e["clans"] = prov;
        }
        reps.push_back(e);
    }
    Json amb = Json::array();
    for (const auto& s : r.ambiguous_supports) amb.push_back(to_json(s));
    Json wit = Json::array();
    for (const auto& w : r.witnesses)
        wit.push_back({{"support", to_json(w.support)}, {"w", to_json(w.w)}, {"representative", w.representative}});
    return {{"method", method},
            {"count", r.count()},
            {"continuous_families", r.continuous_families},
            {"ambiguous", r.ambiguous},
            {"ambiguous_supports", amb},
            {"symmetry_order", r.symmetry.size()},
            {"representatives", reps},
            {"dedup_witnesses", wit},
            {"notes", r.notes}};
}

inline Json to_json(const CharacterSum& c)
{
    Json a = Json::array();
    for (const auto& [e, m] : c) a.push_back({{"exponent", to_json(e)}, {"multiplicity", m}});
    return a;
}

inline Json to_json(const StandardModuleReport& r)
{
    Json fps = Json::array();
    for (const auto& w : r.fixed_points) fps.push_back(to_json(w));
    Json j{{"fixed_points", r.fixed_points.size()}, {"fixed_point_list", fps}, {"torus_regular", r.torus_regular}};
    j["dim"] = r.dim ? Json(*r.dim) : Json(nullptr);
    Json chars = Json::array();
    for (const auto& [l, c] : r.characters)
        chars.push_back({{"lambda", to_json(l)}, {"character", to_json(c)}, {"text", character_to_string(c)}});
    j["characters"] = chars;
    j["provenance"] = {{"dim", "Euler characteristic of the fixed fiber, counted by torus-fixed flags"},
                       {"characters", "sum over fixed flags of e^{<w lambda, log s>} modulo 2 pi i Z"}};
    return j;
}

} // namespace exotic
