// exotic: command-line driver over the header-only library.
//
// Exit status: 0 success, 1 verification failure, 2 malformed input or an
// input outside an operation's precondition.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "exotic/exotic.hpp"

namespace {

using namespace exotic;

enum class Format { json, table };

struct Session {
    Format format = Format::json;
    int rank_bound = kDefaultWeylRankBound;
};

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string pad(std::string s, std::size_t w)
{
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

std::string partition_text(const Partition& p)
{
    std::string s = "(";
    for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
    return s + ")";
}

Weight parse_char_weight(const std::string& text, int n)
{
    std::vector<int> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            c.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidInput("--char: '" + text + "' is not a comma-separated integer list");
        }
    }
    if (static_cast<int>(c.size()) != n)
        throw InvalidInput("--char: expected " + std::to_string(n) + " coordinates in '" + text + "'");
    return Weight(std::move(c));
}

// ---------------------------------------------------------------- commands

int hecke_verify(const Session& cfg, int rank, int box, const std::string& spec, const std::string& family)
{
    if (rank < 1 || rank > cfg.rank_bound) throw BoundExceeded("rank outside [1, rank bound]");
    OperatorFamily fam = family == "geometric" ? OperatorFamily::geometric() : OperatorFamily::basic();
    fam = fam.specialized(Specialization::preset(spec));
    const RelationReport rep = verify_relations(rank, box, fam);
    if (cfg.format == Format::json) {
        Json j{{"command", "hecke verify"}};
        j.update(to_json(rep));
        emit(j);
    } else {
        std::cout << "rank " << rep.rank << ", box " << rep.box << ", family " << rep.family << "\n";
        for (const auto& l : rep.specialization) std::cout << "  specialized: " << l << "\n";
        for (const auto& r : rep.results) {
            std::cout << pad(r.relation, 40) << (r.passed ? "pass" : "FAIL");
            if (r.witness) std::cout << "  at " << r.witness->to_string();
            std::cout << "\n";
        }
        for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
    }
    return rep.all_passed() ? 0 : 1;
}

void print_classification(const ClassificationReport& rep)
{
    std::cout << "count " << rep.count() << " (symmetry order " << rep.symmetry.size() << ")\n";
    for (std::size_t k = 0; k < rep.representatives.size(); ++k) {
        const auto& r = rep.representatives[k];
        std::cout << pad(std::to_string(k + 1), 4);
        if (r.provenance.empty()) {
            std::cout << support_to_string(r.support);
        } else {
            std::cout << pad(support_to_string(r.support), 48);
            for (const auto& p : r.provenance) std::cout << " " << p.sigma.to_string();
        }
        std::cout << "\n";
    }
    if (rep.continuous_families) std::cout << "continuous families: " << rep.continuous_families << "\n";
    if (rep.ambiguous) std::cout << "undecided supports: " << rep.ambiguous << "\n";
    for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
}

int orbits_enumerate(const Session& cfg, const std::string& input)
{
    const auto doc = input_document_from_json(read_json_file(input));
    const auto rep = torus_orbit_enumeration(doc.point);
    if (cfg.format == Format::json) {
        Json j{{"command", "orbits enumerate"}};
        j.update(to_json(rep, "torus"));
        j["provenance"] = {{"count", "torus-stable supports of fixed weights in the nilcone, up to the stabilizer of s in W"},
                           {"representatives", "generic coefficients on each canonical support"}};
        emit(j);
    } else {
        print_classification(rep);
    }
    return 0;
}

int classify_lambda(const Session& cfg, const std::string& input)
{
    const auto doc = input_document_from_json(read_json_file(input));
    const auto rep = lambda_a_classification(doc.point);
    if (cfg.format == Format::json) {
        Json j{{"command", "classify lambda"}};
        j.update(to_json(rep, "clans"));
        j["provenance"] = {{"count", "product over clans of classes of strict marked partitions fixed by s"},
                           {"clans", "strict marked partition, Weyl translate and V1 copy used on each clan"}};
        emit(j);
    } else {
        print_classification(rep);
    }
    return 0;
}

int springer_dim(const Session& cfg, const std::string& input, const std::vector<std::string>& chars)
{
    const auto doc = input_document_from_json(read_json_file(input));
    if (!doc.X) throw JsonInputError("", "missing required member 'X'");
    std::vector<Weight> lambdas;
    for (const auto& c : chars) lambdas.push_back(parse_char_weight(c, doc.point.n));
    const auto rep = standard_module({doc.point, *doc.X}, lambdas, cfg.rank_bound);
    if (cfg.format == Format::json) {
        Json j{{"command", "springer dim"}};
        j.update(to_json(rep));
        emit(j);
    } else {
        std::cout << "fixed points " << rep.fixed_points.size() << "\n";
        std::cout << "torus regular " << (rep.torus_regular ? "yes" : "no") << "\n";
        std::cout << "dim " << (rep.dim ? std::to_string(*rep.dim) : "not computed") << "\n";
        for (const auto& [l, c] : rep.characters)
            std::cout << "char " << pad(l.to_string(), 12) << character_to_string(c) << "\n";
    }
    return 0;
}

int params_classify(const Session& cfg, const std::string& input)
{
    const auto doc = input_document_from_json(read_json_file(input));
    Json r = params_report_json(doc.point);
    if (cfg.format == Format::json) {
        Json j{{"command", "params classify"}};
        j.update(r);
        emit(j);
    } else {
        std::cout << "verdict " << r["verdict"].get<std::string>() << "\n";
        for (const auto& reason : r["reasons"]) std::cout << "  violated: " << reason.get<std::string>() << "\n";
        std::cout << "clans";
        for (const auto& c : clan_decompose(doc.point)) {
            std::cout << " {";
            for (std::size_t k = 0; k < c.size(); ++k) std::cout << (k ? "," : "") << c[k];
            std::cout << "}";
        }
        std::cout << "\n";
        if (r.contains("fixed_weights")) {
            std::cout << "fixed weights";
            for (const auto& v : fixed_weight_space(doc.point)) std::cout << " " << v.to_string();
            std::cout << "\n";
        }
    }
    return 0;
}

int strict_enumerate(const Session& cfg, int rank)
{
    const auto list = enumerate_strict(rank, std::max(cfg.rank_bound, kDefaultStrictRankBound));
    if (cfg.format == Format::json) {
        Json items = Json::array();
        for (const auto& s : list)
            items.push_back({{"sigma", to_json(s)},
                             {"text", s.to_string()},
                             {"bipartition", to_json(springer_bipartition(s))},
                             {"normal_form", to_json(normal_form(s))}});
        emit({{"command", "strict enumerate"},
              {"rank", rank},
              {"count", list.size()},
              {"partitions", items},
              {"provenance", {{"bipartition", "Springer-type labelling of the orbit by a bipartition of n"},
                              {"normal_form", "torus-supported representative of the orbit"}}}});
    } else {
        std::cout << pad("#", 4) << pad("marked partition", 28) << "bipartition\n";
        for (std::size_t k = 0; k < list.size(); ++k) {
            const auto b = springer_bipartition(list[k]);
            std::cout << pad(std::to_string(k + 1), 4) << pad(list[k].to_string(), 28) << "("
                      << partition_text(b.lambda1) << "," << partition_text(b.lambda2) << ")\n";
        }
    }
    return 0;
}

int nilcone_test(const Session& cfg, const std::string& input, int level)
{
    const Json root = read_json_file(input);
    const ExoticVector X = exotic_vector_from_json({root, ""});
    if (level < 0) level = std::max(1, X.level());
    const auto v = in_nilcone(X, level);
    if (cfg.format == Format::json) {
        emit({{"command", "nilcone test"},
              {"level", level},
              {"vector", to_json(X)},
              {"verdict", to_string(v)},
              {"provenance", "nilpotency of the V2 part, the symplectic pairing invariants, then a positive cocharacter on the support"}});
    } else {
        std::cout << "level " << level << ": " << to_string(v) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    Session cfg;
    CLI::App app{"Exact computations for the three-parameter affine Hecke algebra of type C and exotic nilpotent orbits"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--rank-bound", cfg.rank_bound, "largest rank for Weyl group enumeration")->check(CLI::Range(1, 8));

    std::string input, spec = "none", family = "basic";
    int rank = 0, box = 0, level = -1;
    std::vector<std::string> chars;
    std::function<int()> action;

    auto* hecke = app.add_subcommand("hecke", "Hecke algebra relations")->require_subcommand(1);
    auto* verify = hecke->add_subcommand("verify", "check the defining relations on a monomial box");
    verify->add_option("--rank", rank)->required();
    verify->add_option("--box", box)->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--specialize", spec)->check(CLI::IsMember({"none", "b", "eqB", "eqC"}));
    verify->add_option("--family", family)->check(CLI::IsMember({"basic", "geometric"}));
    verify->callback([&] { action = [&] { return hecke_verify(cfg, rank, box, spec, family); }; });

    auto* orbits = app.add_subcommand("orbits", "orbits on the fixed nilpotent cone")->require_subcommand(1);
    auto* enumerate = orbits->add_subcommand("enumerate", "torus-centralizer orbit enumeration");
    enumerate->add_option("--input", input)->required();
    enumerate->callback([&] { action = [&] { return orbits_enumerate(cfg, input); }; });

    auto* classify = app.add_subcommand("classify", "parameter classification")->require_subcommand(1);
    auto* lambda = classify->add_subcommand("lambda", "classes of parameters over an admissible point");
    lambda->add_option("--input", input)->required();
    lambda->callback([&] { action = [&] { return classify_lambda(cfg, input); }; });

    auto* springer = app.add_subcommand("springer", "standard modules")->require_subcommand(1);
    auto* dim = springer->add_subcommand("dim", "dimension and characters by fixed-point counting");
    dim->add_option("--input", input)->required();
    dim->add_option("--char", chars, "weight lambda as comma-separated coordinates; repeatable");
    dim->callback([&] { action = [&] { return springer_dim(cfg, input, chars); }; });

    auto* params = app.add_subcommand("params", "central characters")->require_subcommand(1);
    auto* pclass = params->add_subcommand("classify", "clans, admissibility and fixed weights");
    pclass->add_option("--input", input)->required();
    pclass->callback([&] { action = [&] { return params_classify(cfg, input); }; });

    auto* strict = app.add_subcommand("strict", "strict marked partitions")->require_subcommand(1);
    auto* senum = strict->add_subcommand("enumerate", "list strict marked partitions with bipartitions");
    senum->add_option("--rank", rank)->required()->check(CLI::Range(1, 8));
    senum->callback([&] { action = [&] { return strict_enumerate(cfg, rank); }; });

    auto* nilcone = app.add_subcommand("nilcone", "nilpotent cone membership")->require_subcommand(1);
    auto* ntest = nilcone->add_subcommand("test", "membership verdict for an exotic vector");
    ntest->add_option("--input", input)->required();
    ntest->add_option("--level", level)->check(CLI::Range(0, 2));
    ntest->callback([&] { action = [&] { return nilcone_test(cfg, input, level); }; });

    // global options are also accepted after the subcommand
    std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
        for (auto* sub : a->get_subcommands({})) {
            sub->fallthrough();
            fall(sub);
        }
    };
    fall(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }
    cfg.format = format == "table" ? Format::table : Format::json;

    try {
        return action();
    } catch (const PreconditionFailed& e) {
        std::cerr << "error: precondition: " << e.what() << "\n";
    } catch (const BoundExceeded& e) {
        std::cerr << "error: bound: " << e.what() << "\n";
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
