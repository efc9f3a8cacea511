#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "mcd/angulation.hpp"
#include "mcd/error.hpp"
#include "mcd/homcalc.hpp"
#include "mcd/ptolemy.hpp"
#include "mcd/quiver.hpp"

namespace mcd::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<long long> to_int(std::string_view s) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return value;
}

nlohmann::ordered_json arc_to_json(const PairedArc &arc) {
    nlohmann::ordered_json j;
    if (arc.is_diameter()) {
        j["type"] = "diameter";
        j["i"] = arc.base();
        j["color"] = to_string(arc.color());
    } else {
        j["type"] = "arc";
        j["a"] = arc.a();
        j["b"] = arc.b();
    }
    return j;
}

}  // namespace

PairedArc parse_arc_literal(const ModelParams &params, std::string_view text) {
    const std::string token(trim(text));
    if (token.empty()) throw ParseError("empty arc literal", token);
    if (token.front() == 'd') {
        if (token.size() < 3 || (token.back() != 'r' && token.back() != 'g')) {
            throw ParseError("malformed diameter literal '" + token + "', expected dIr or dIg", token);
        }
        auto base = to_int(std::string_view(token).substr(1, token.size() - 2));
        if (!base) throw ParseError("malformed diameter literal '" + token + "'", token);
        if (*base < 1 || *base > params.big_n()) {
            throw ParseError("diameter base in '" + token + "' must lie in 1.." + std::to_string(params.big_n()),
                             token);
        }
        return PairedArc::diameter(static_cast<int>(*base), token.back() == 'r' ? Color::Red : Color::Green);
    }
    const auto dash = token.find('-');
    if (dash == std::string::npos) throw ParseError("malformed arc literal '" + token + "', expected a-b", token);
    auto a = to_int(std::string_view(token).substr(0, dash));
    auto b = to_int(std::string_view(token).substr(dash + 1));
    if (!a || !b) throw ParseError("malformed arc literal '" + token + "', expected a-b", token);
    for (long long v : {*a, *b}) {
        if (v < 1 || v > params.vertex_count()) {
            throw ParseError("vertex " + std::to_string(v) + " in '" + token + "' is outside 1.." +
                                 std::to_string(params.vertex_count()),
                             token);
        }
    }
    auto arc = arc_from_endpoints(params, *a, *b);
    if (!arc) throw ParseError("'" + token + "' joins equal or neighbouring vertices", token);
    if (arc->is_diameter()) {
        throw ParseError("'" + token + "' joins opposite vertices; write d" + std::to_string(arc->base()) + "r or d" +
                             std::to_string(arc->base()) + "g",
                         token);
    }
    if (!is_m_arc(params, *arc)) {
        throw ParseError("'" + token + "' is not an m-arc for m = " + std::to_string(params.m()), token);
    }
    return *arc;
}

ArcSet parse_arc_list(const ArcUniverse &universe, std::string_view text) {
    ArcSet set(universe.size());
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const auto piece = trim(text.substr(start, comma - start));
        if (!piece.empty()) set.insert(universe.require_index(parse_arc_literal(universe.params(), piece)));
        start = comma + 1;
    }
    return set;
}

nlohmann::ordered_json set_to_json(const ArcUniverse &universe, const ArcSet &set) {
    nlohmann::ordered_json doc;
    doc["n"] = universe.params().n();
    doc["m"] = universe.params().m();
    auto arcs = nlohmann::ordered_json::array();
    set.for_each([&](std::size_t i) { arcs.push_back(arc_to_json(universe.arc(i))); });
    doc["arcs"] = std::move(arcs);
    return doc;
}

ParsedSet set_from_json(const nlohmann::json &doc) {
    auto need_int = [&](const nlohmann::json &obj, const char *key) -> int {
        if (!obj.is_object() || !obj.contains(key) || !obj[key].is_number_integer()) {
            throw ParseError(std::string("set document needs an integer '") + key + "'", key);
        }
        return obj[key].get<int>();
    };
    auto params = ModelParams::make(need_int(doc, "n"), need_int(doc, "m"));
    ArcUniverse universe(params);
    if (!doc.contains("arcs") || !doc["arcs"].is_array()) throw ParseError("set document needs an 'arcs' array", "arcs");
    ArcSet set(universe.size());
    for (const auto &rec : doc["arcs"]) {
        const std::string type = rec.is_object() && rec.contains("type") && rec["type"].is_string()
                                     ? rec["type"].get<std::string>()
                                     : std::string();
        std::string literal;
        if (type == "arc") {
            literal = std::to_string(need_int(rec, "a")) + "-" + std::to_string(need_int(rec, "b"));
        } else if (type == "diameter") {
            const std::string color = rec.contains("color") && rec["color"].is_string() ? rec["color"].get<std::string>()
                                                                                        : std::string();
            if (color != "red" && color != "green") throw ParseError("diameter colour must be red or green", rec.dump());
            literal = "d" + std::to_string(need_int(rec, "i")) + color.front();
        } else {
            throw ParseError("arc record type must be 'arc' or 'diameter'", rec.dump());
        }
        set.insert(universe.require_index(parse_arc_literal(params, literal)));
    }
    return ParsedSet{params, std::move(set)};
}

std::string set_to_text(const ArcUniverse &universe, const ArcSet &set) {
    if (set.empty()) return "{}";
    std::string out;
    set.for_each([&](std::size_t i) {
        if (!out.empty()) out += ',';
        out += to_literal(universe.arc(i));
    });
    return out;
}

namespace {

struct UsageError : Error {
    using Error::Error;
};

struct Options {
    int n = 0;
    int m = 0;
    std::string set;
    std::string file;
    std::string format = "text";
    std::string side = "right";
    std::string kind = "ptolemy";
    std::string strategy = "exhaustive";
    bool count_only = false;
    std::uint64_t limit = 0;
    std::uint64_t seed = 1;
    std::uint64_t samples = 100000;
    std::size_t max_generators = 2;
    std::size_t max_bits = 20;
    unsigned threads = 0;
    std::string model = "polygon";
    std::string out;
    std::string n_range;
    std::string m_list;
    std::string kinds = "ptolemy,angulation";
};

ModelParams params_from_flags(const Options &o) {
    if (o.n == 0 || o.m == 0) throw UsageError("--n and --m are required");
    return ModelParams::make(o.n, o.m);
}

ParsedSet load_set(const Options &o) {
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw UsageError("cannot read " + o.file);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error &e) {
            throw ParseError(std::string("invalid JSON in ") + o.file + ": " + e.what(), o.file);
        }
        ParsedSet parsed = set_from_json(doc);
        if ((o.n != 0 && o.n != parsed.params.n()) || (o.m != 0 && o.m != parsed.params.m())) {
            throw UsageError("--n/--m disagree with the parameters in " + o.file);
        }
        return parsed;
    }
    auto params = params_from_flags(o);
    ArcUniverse universe(params);
    return ParsedSet{params, parse_arc_list(universe, o.set)};
}

void require_odd(const ModelParams &params) {
    if (!params.m_is_odd()) {
        throw UnsupportedRegime("torsion pairs and Ptolemy diagrams are only defined for odd m; got m = " +
                                std::to_string(params.m()));
    }
}

void write_set(std::ostream &os, const Options &o, const ArcUniverse &universe, const ArcSet &set) {
    if (o.format == "json") {
        os << set_to_json(universe, set).dump(2) << '\n';
    } else {
        os << set_to_text(universe, set) << '\n';
    }
}

int cmd_arcs(const Options &o, std::ostream &out) {
    ArcUniverse universe(params_from_flags(o));
    if (o.format == "json") {
        out << set_to_json(universe, ArcSet::full(universe.size())).dump(2) << '\n';
    } else {
        for (const auto &arc : universe.arcs()) out << to_literal(arc) << '\n';
    }
    return 0;
}

int cmd_check(const Options &o, std::ostream &out) {
    auto [params, set] = load_set(o);
    require_odd(params);
    PtolemyChecker checker(params);
    const auto &universe = checker.universe();
    const auto violations = checker.violations(set);
    if (o.format == "json") {
        auto doc = set_to_json(universe, set);
        doc["ptolemy"] = violations.empty();
        auto list = nlohmann::ordered_json::array();
        for (const auto &v : violations) {
            nlohmann::ordered_json item;
            item["pair"] = {to_literal(universe.arc(v.first)), to_literal(universe.arc(v.second))};
            auto missing = nlohmann::ordered_json::array();
            v.missing.for_each([&](std::size_t i) { missing.push_back(to_literal(universe.arc(i))); });
            item["missing"] = std::move(missing);
            list.push_back(std::move(item));
        }
        doc["violations"] = std::move(list);
        out << doc.dump(2) << '\n';
    } else if (violations.empty()) {
        out << "Ptolemy diagram: " << set_to_text(universe, set) << '\n';
    } else {
        out << "not a Ptolemy diagram: " << set_to_text(universe, set) << '\n';
        for (const auto &v : violations) {
            out << "  " << to_literal(universe.arc(v.first)) << " x " << to_literal(universe.arc(v.second))
                << " missing " << set_to_text(universe, v.missing) << '\n';
        }
    }
    return violations.empty() ? 0 : 1;
}

int cmd_perp(const Options &o, std::ostream &out) {
    auto [params, set] = load_set(o);
    require_odd(params);
    PairTable table(params);
    if (o.side != "left" && o.side != "right") throw UsageError("--side must be left or right");
    write_set(out, o, table.universe(), o.side == "left" ? left_perp(table, set) : right_perp(table, set));
    return 0;
}

int cmd_complete(const Options &o, std::ostream &out) {
    auto [params, set] = load_set(o);
    require_odd(params);
    PtolemyChecker checker(params);
    write_set(out, o, checker.universe(), checker.complete(set));
    return 0;
}

int cmd_pair(const Options &o, std::ostream &out, std::ostream &err) {
    auto [params, set] = load_set(o);
    require_odd(params);
    PtolemyChecker checker(params);
    const auto &universe = checker.universe();
    if (!checker.is_ptolemy(set)) {
        err << "not a Ptolemy diagram, so it is not the torsion part of a torsion pair\n";
        for (const auto &v : checker.violations(set)) {
            err << "  " << to_literal(universe.arc(v.first)) << " x " << to_literal(universe.arc(v.second))
                << " missing " << set_to_text(universe, v.missing) << '\n';
        }
        return 1;
    }
    const TorsionPair pair = checker.torsion_pair(set);
    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["n"] = params.n();
        doc["m"] = params.m();
        doc["torsion"] = set_to_json(universe, pair.torsion)["arcs"];
        doc["torsion_free"] = set_to_json(universe, pair.torsion_free)["arcs"];
        out << doc.dump(2) << '\n';
    } else {
        out << "torsion: " << set_to_text(universe, pair.torsion) << '\n';
        out << "torsion-free: " << set_to_text(universe, pair.torsion_free) << '\n';
    }
    return 0;
}

unsigned worker_count(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

int cmd_enumerate(const Options &o, std::ostream &out) {
    const auto params = params_from_flags(o);
    require_odd(params);
    std::vector<ArcSet> sets;
    auto sink = [&](const ArcSet &s) {
        if (!o.count_only) sets.push_back(s);
        return o.limit == 0 || (o.count_only ? true : sets.size() < o.limit);
    };
    std::uint64_t count = 0;
    bool exact = true;
    std::string strategy = o.strategy;
    std::unique_ptr<PtolemyChecker> checker;
    std::unique_ptr<PairTable> table;
    const ArcUniverse *universe = nullptr;
    if (o.kind == "ptolemy") {
        checker = std::make_unique<PtolemyChecker>(params);
        universe = &checker->universe();
        EnumerationStrategy chosen;
        if (strategy == "exhaustive") {
            chosen = Exhaustive{o.max_bits, worker_count(o.threads)};
        } else if (strategy == "closure") {
            chosen = ClosureGenerated{o.max_generators};
        } else if (strategy == "random") {
            chosen = RandomSample{o.samples, o.seed};
        } else {
            throw UsageError("--strategy must be exhaustive, closure or random");
        }
        auto result = enumerate_ptolemy(*checker, chosen, sink);
        count = result.count;
        exact = result.exact;
    } else if (o.kind == "rigid" || o.kind == "angulation") {
        table = std::make_unique<PairTable>(params);
        universe = &table->universe();
        strategy = "backtracking";
        auto result = o.kind == "rigid" ? enumerate_rigid(*table, sink) : enumerate_angulations(*table, sink);
        count = result.count;
        exact = result.complete;
    } else {
        throw UsageError("--kind must be ptolemy, rigid or angulation");
    }

    const std::string shown = (exact ? "" : ">=") + std::to_string(count);
    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["n"] = params.n();
        doc["m"] = params.m();
        doc["kind"] = o.kind;
        doc["strategy"] = strategy;
        doc["count"] = count;
        doc["exact"] = exact;
        if (!o.count_only) {
            auto list = nlohmann::ordered_json::array();
            for (const auto &s : sets) {
                auto lits = nlohmann::ordered_json::array();
                s.for_each([&](std::size_t i) { lits.push_back(to_literal(universe->arc(i))); });
                list.push_back(std::move(lits));
            }
            doc["sets"] = std::move(list);
        }
        out << doc.dump(2) << '\n';
    } else if (o.count_only) {
        out << shown << '\n';
    } else {
        for (const auto &s : sets) out << set_to_text(*universe, s) << '\n';
        out << "# count " << shown << '\n';
    }
    return 0;
}

int cmd_quiver(const Options &o, std::ostream &out) {
    const auto params = params_from_flags(o);
    if (o.format != "dot" && o.format != "json") throw UsageError("--format must be dot or json");
    const auto format = o.format == "dot" ? QuiverFormat::Dot : QuiverFormat::Json;
    if (o.model == "polygon") {
        out << export_quiver(build_delta(params), format);
    } else if (o.model == "punctured") {
        out << export_quiver(build_gamma(params), format);
    } else {
        throw UsageError("--model must be polygon or punctured");
    }
    return 0;
}

int cmd_render(const Options &o, std::ostream &out) {
    auto [params, set] = load_set(o);
    ArcUniverse universe(params);
    const std::string svg = render_svg(universe, set);
    if (o.out.empty()) {
        out << svg;
        return 0;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!(file << svg)) throw UsageError("cannot write " + o.out);
    return 0;
}

std::vector<int> parse_int_list(const std::string &text, const char *flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        auto v = to_int(trim(piece));
        if (!v) throw UsageError(std::string("bad value '") + piece + "' in " + flag);
        out.push_back(static_cast<int>(*v));
    }
    if (out.empty()) throw UsageError(std::string(flag) + " is empty");
    return out;
}

int cmd_census(const Options &o, std::ostream &out) {
    const auto dots = o.n_range.find("..");
    if (dots == std::string::npos) throw UsageError("--n-range must look like A..B");
    auto lo = to_int(o.n_range.substr(0, dots));
    auto hi = to_int(o.n_range.substr(dots + 2));
    if (!lo || !hi || *lo > *hi) throw UsageError("--n-range must look like A..B with A <= B");
    const auto ms = parse_int_list(o.m_list, "--m-list");
    for (int m : ms) {
        if (m % 2 == 0) {
            throw UnsupportedRegime("census counts torsion pairs, which are only defined for odd m; got m = " +
                                    std::to_string(m));
        }
    }
    std::vector<std::string> kinds;
    {
        std::stringstream ss(o.kinds);
        std::string k;
        while (std::getline(ss, k, ',')) {
            if (k != "ptolemy" && k != "angulation" && k != "rigid") throw UsageError("unknown census kind " + k);
            kinds.push_back(k);
        }
    }

    std::ostringstream csv;
    csv << "n,m,arc_universe_size,kind,strategy,count,exact,elapsed_ms\n";
    for (long long n = *lo; n <= *hi; ++n) {
        for (int m : ms) {
            const auto params = ModelParams::make(static_cast<int>(n), m);
            PtolemyChecker checker(params);
            for (const auto &kind : kinds) {
                const auto start = std::chrono::steady_clock::now();
                std::string strategy;
                std::uint64_t count = 0;
                bool exact = false;
                if (kind == "ptolemy") {
                    if (checker.size() <= o.max_bits) {
                        strategy = "exhaustive";
                        auto r = enumerate_ptolemy(checker, Exhaustive{o.max_bits, worker_count(o.threads)});
                        count = r.count;
                        exact = r.exact;
                    } else {
                        strategy = "closure";
                        count = enumerate_ptolemy(checker, ClosureGenerated{o.max_generators}).count;
                    }
                } else {
                    strategy = "backtracking";
                    auto r = kind == "rigid" ? enumerate_rigid(checker.table()) : enumerate_angulations(checker.table());
                    count = r.count;
                    exact = r.complete;
                }
                const double ms_elapsed =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                csv << n << ',' << m << ',' << checker.size() << ',' << kind << ',' << strategy << ',' << count << ','
                    << (exact ? "true" : "false") << ',' << std::fixed << std::setprecision(3) << ms_elapsed << '\n';
                csv.unsetf(std::ios::floatfield);
            }
        }
    }
    if (o.out.empty()) {
        out << csv.str();
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!(file << csv.str())) throw UsageError("cannot write " + o.out);
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Geometric model of m-cluster categories of type D"};
    app.name("mcd");
    app.require_subcommand(1);

    auto add_model = [&](CLI::App *cmd) {
        cmd->add_option("--n", o.n, "rank n >= 3");
        cmd->add_option("--m", o.m, "level m >= 1");
    };
    auto add_set = [&](CLI::App *cmd) {
        add_model(cmd);
        cmd->add_option("--set", o.set, "comma-separated arc literals such as 1-5,d1r");
        cmd->add_option("--file", o.file, "JSON set document");
    };
    auto add_format = [&](CLI::App *cmd, std::vector<std::string> choices) {
        cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(std::move(choices)));
    };

    auto *arcs = app.add_subcommand("arcs", "list the m-arcs in index order");
    add_model(arcs);
    add_format(arcs, {"text", "json"});

    auto *check = app.add_subcommand("check", "test the Ptolemy conditions; exit 1 on violations");
    add_set(check);
    add_format(check, {"text", "json"});

    auto *perp = app.add_subcommand("perp", "left or right perpendicular set");
    add_set(perp);
    add_format(perp, {"text", "json"});
    perp->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));

    auto *complete = app.add_subcommand("complete", "smallest Ptolemy diagram containing the set");
    add_set(complete);
    add_format(complete, {"text", "json"});

    auto *pair = app.add_subcommand("pair", "torsion pair (U, U-perp) of a Ptolemy diagram");
    add_set(pair);
    add_format(pair, {"text", "json"});

    auto *enumerate = app.add_subcommand("enumerate", "enumerate Ptolemy diagrams, rigid sets or angulations");
    add_model(enumerate);
    add_format(enumerate, {"text", "json"});
    enumerate->add_option("--kind", o.kind)->check(CLI::IsMember({"ptolemy", "rigid", "angulation"}));
    enumerate->add_option("--strategy", o.strategy)->check(CLI::IsMember({"exhaustive", "closure", "random"}));
    enumerate->add_flag("--count-only", o.count_only);
    enumerate->add_option("--limit", o.limit, "stop after this many sets");
    enumerate->add_option("--seed", o.seed);
    enumerate->add_option("--samples", o.samples, "random subsets to draw");
    enumerate->add_option("--max-generators", o.max_generators);
    enumerate->add_option("--max-bits", o.max_bits, "exhaustive cap on the arc universe");
    enumerate->add_option("--threads", o.threads, "0 picks a default");

    auto *quiver = app.add_subcommand("quiver", "export the translation quiver");
    add_model(quiver);
    o.format = "text";
    quiver->add_option("--model", o.model)->check(CLI::IsMember({"polygon", "punctured"}));
    quiver->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));

    auto *render = app.add_subcommand("render", "draw the set as SVG");
    add_set(render);
    render->add_option("--out", o.out, "output file, default stdout");

    auto *census = app.add_subcommand("census", "CSV census of counts");
    census->add_option("--n-range", o.n_range, "A..B")->required();
    census->add_option("--m-list", o.m_list, "comma-separated odd levels")->required();
    census->add_option("--out", o.out, "output file, default stdout");
    census->add_option("--kinds", o.kinds, "subset of ptolemy,angulation,rigid");
    census->add_option("--max-bits", o.max_bits);
    census->add_option("--max-generators", o.max_generators);
    census->add_option("--threads", o.threads);

    std::vector<std::string> argv_storage{"mcd"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "mcd: " << e.what() << '\n';
        return 2;
    }
    if (quiver->parsed() && o.format == "text") o.format = "dot";

    std::ostringstream buffer;
    int code = 0;
    try {
        if (arcs->parsed()) {
            code = cmd_arcs(o, buffer);
        } else if (check->parsed()) {
            code = cmd_check(o, buffer);
        } else if (perp->parsed()) {
            code = cmd_perp(o, buffer);
        } else if (complete->parsed()) {
            code = cmd_complete(o, buffer);
        } else if (pair->parsed()) {
            code = cmd_pair(o, buffer, err);
        } else if (enumerate->parsed()) {
            code = cmd_enumerate(o, buffer);
        } else if (quiver->parsed()) {
            code = cmd_quiver(o, buffer);
        } else if (render->parsed()) {
            code = cmd_render(o, buffer);
        } else if (census->parsed()) {
            code = cmd_census(o, buffer);
        }
    } catch (const ParseError &e) {
        err << "mcd: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        err << "mcd: " << e.what() << '\n';
        return 2;
    }
    out << buffer.str();
    return code;
}

}  // namespace mcd::cli
