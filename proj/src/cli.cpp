#include "spiral/cli.hpp"

#include "spiral/block.hpp"
#include "spiral/errors.hpp"
#include "spiral/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>

namespace spiral {

namespace {

struct Options {
    std::string type;
    int rank = 0;
    int twist = 1;
    std::string x;
    int m = 0;
    int eta = 1;
    std::string point;
    std::optional<int> window;
    int depth = 2;
    std::string registry;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::vector<std::string> exprs;
    std::string nu;
};

void add_datum_flags(CLI::App* app, Options& o) {
    app->add_option("--type", o.type, "Series letter A-G")->required();
    app->add_option("--rank", o.rank, "Rank of the split group")->required();
    app->add_option("--twist", o.twist, "Order of the pinned outer automorphism (1, 2 or 3)");
    app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app->add_option("--seed", o.seed, "Seed for randomized certificates");
}

void add_grading_flags(CLI::App* app, Options& o, bool required) {
    auto* x = app->add_option("--x", o.x, "Integral cocharacter, comma separated");
    auto* m = app->add_option("--m", o.m, "Order of the grading");
    app->add_option("--eta", o.eta, "Nonzero integer; its sign is epsilon");
    if (required) {
        x->required();
        m->required();
    }
}

CLI::Option* add_point_flag(CLI::App* app, Options& o, const std::string& names) {
    return app->add_option(names, o.point, "Apartment point in simple-root coordinates");
}

void add_registry_flag(CLI::App* app, Options& o) {
    app->add_option("--registry", o.registry, "Cuspidal registry JSON (default: $SPIRAL_REGISTRY)");
}

char series_of(const Options& o) {
    if (o.type.size() != 1) fail(ErrorCode::InvalidType, "type must be a single letter, got '" + o.type + "'");
    return static_cast<char>(std::toupper(static_cast<unsigned char>(o.type[0])));
}

std::vector<CuspidalDatum> registry_of(const Options& o) {
    std::string path = o.registry;
    if (path.empty())
        if (const char* env = std::getenv("SPIRAL_REGISTRY")) path = env;
    return path.empty() ? parse_registry("") : load_registry(path);
}

Vec point_of(const RootDatum& d, const Options& o) {
    if (o.point.empty()) return fundamental_alcove(d).witness;
    Vec y = parse_vector(o.point);
    if (static_cast<int>(y.size()) != d.dim)
        fail(ErrorCode::InvalidArgument, "point has " + std::to_string(y.size()) + " coordinates, expected " +
                                             std::to_string(d.dim));
    return y;
}

GradingDatum grading_of(const RootDatum& d, const Options& o) {
    return GradingDatum::make(d, parse_vector(o.x), o.m, o.eta);
}

int window_of(const Options& o, int fallback) {
    if (!o.window) return fallback;
    if (*o.window < 0) fail(ErrorCode::InvalidArgument, "window must be non-negative");
    return *o.window;
}

struct Relative {
    Facet A;
    RelevantSubspace E;
    CuspidalDatum datum;
    CuspidalCertificate cert;
    RelWeylGroup G;
};

Relative relative_of(const RootDatum& d, const Options& o) {
    auto registry = registry_of(o);
    Facet A = facet_of(d, point_of(d, o));
    auto E = span_of_facet(d, A);
    if (E.dim() == 0) fail(ErrorCode::ZeroDimensional, "the facet is a vertex; its span is a point");
    auto type = pseudo_levi(d, E).type;
    auto datum = find_datum(registry, type);
    if (!datum) fail(ErrorCode::NoCuspidalDatum, "no cuspidal datum of type " + type + " in the registry");
    auto cert = validate_datum(d, *datum, E, o.seed);
    auto G = rel_weyl_group(d, E, A, &cert.representative);
    return {A, E, *datum, cert, std::move(G)};
}

void emit(std::ostream& out, const Options& o, const Json& j) {
    if (o.format == "text")
        out << render_text(j);
    else
        out << j.dump(2) << '\n';
}

int run(const std::string& cmd, const Options& o, std::ostream& out, std::istream& in) {
    auto d = build_root_datum(series_of(o), o.rank, o.twist);
    std::optional<GradingDatum> g;
    if (!o.x.empty() || o.m != 0) g = grading_of(d, o);

    if (cmd == "roots") {
        emit(out, o, datum_json(d));
    } else if (cmd == "facet") {
        Vec y = point_of(d, o);
        auto red = reduce_to_fundamental(d, y);
        Json j;
        j["schema"] = "spiral.facet/1";
        j["facet"] = facet_json(d, facet_of(d, y));
        j["reduced"] = {{"point", to_json(red.reduced)}, {"word", red.word}};
        j["pseudoLeviType"] = pseudo_levi_of(d, facet_of(d, y)).type;
        emit(out, o, j);
    } else if (cmd == "pseudolevi") {
        Facet f = facet_of(d, point_of(d, o));
        auto E = span_of_facet(d, f);
        Json j;
        j["schema"] = "spiral.pseudolevi/1";
        j["facet"] = facet_json(d, f);
        j["base"] = to_json(E.base);
        Json dirs = Json::array();
        for (const auto& v : E.directions) dirs.push_back(to_json(v));
        j["directions"] = dirs;
        j["levi"] = pseudolevi_json(d, f);
        emit(out, o, j);
    } else if (cmd == "spiral") {
        Vec y = point_of(d, o);
        int w = window_of(o, std::max(1, 2 * natural_window(d, spiral_lambda(*g, y))));
        emit(out, o, spiral_json(d, spiral_of_point(d, *g, y, w)));
    } else if (cmd == "splitting") {
        Facet f = facet_of(d, point_of(d, o));
        int w = window_of(o, std::max(1, natural_window(d, spiral_lambda(*g, f.witness))));
        emit(out, o, splitting_json(d, f, splitting_of_facet(d, *g, f, w)));
    } else if (cmd == "block") {
        if (o.depth < 0) fail(ErrorCode::InvalidArgument, "depth must be non-negative");
        auto registry = registry_of(o);
        Facet base = facet_of(d, reduce_to_fundamental(d, point_of(d, o)).reduced);
        emit(out, o, block_json(*g, block_facets(d, *g, base, o.depth, registry, o.seed), o.depth));
    } else if (cmd == "relweyl") {
        auto rel = relative_of(d, o);
        emit(out, o, relweyl_json(d, rel.G, rel.datum));
    } else if (cmd == "daha eval") {
        std::optional<Rational> nu;
        if (!o.nu.empty()) nu = parse_rational(o.nu);
        auto rel = relative_of(d, o);
        DahaAlgebra H(std::move(rel.G));
        std::vector<std::string> lines = o.exprs;
        if (lines.empty()) {
            std::string line;
            while (std::getline(in, line)) {
                auto first = line.find_first_not_of(" \t\r");
                if (first == std::string::npos || line[first] == '#') continue;
                lines.push_back(line);
            }
        }
        Json results = Json::array();
        for (const auto& text : lines) {
            auto a = H.parse(text);
            Json r{{"input", text}, {"normalForm", H.to_string(a)}};
            if (nu) r["specialized"] = H.to_string(H.specialize(a, *nu));
            results.push_back(r);
        }
        if (o.format == "text") {
            for (const auto& r : results) out << (nu ? r["specialized"] : r["normalForm"]).get<std::string>() << '\n';
            return 0;
        }
        Json j;
        j["schema"] = "spiral.daha/1";
        j["variables"] = H.num_variables();
        j["simple"] = H.num_simple();
        j["c"] = H.group().params;
        if (nu) j["nu"] = to_json(*nu);
        j["results"] = results;
        emit(out, o, j);
    } else if (cmd == "cuspidal validate") {
        auto registry = registry_of(o);
        Json j;
        j["schema"] = "spiral.cuspidal/1";
        Json reg = Json::array();
        for (const auto& c : registry) reg.push_back(cuspidal_datum_json(c));
        j["registry"] = reg;
        if (!o.point.empty()) {
            auto E = span_of_facet(d, facet_of(d, point_of(d, o)));
            auto type = pseudo_levi(d, E).type;
            auto datum = find_datum(registry, type);
            if (!datum) fail(ErrorCode::NoCuspidalDatum, "no cuspidal datum of type " + type + " in the registry");
            j["certificate"] = certificate_json(validate_datum(d, *datum, E, o.seed));
        }
        emit(out, o, j);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    Options o;
    CLI::App app{"Spirals, facets, relative affine Weyl groups and graded DAHAs", "spiral"};
    app.require_subcommand(1);

    auto* roots = app.add_subcommand("roots", "Print the restricted root datum");
    add_datum_flags(roots, o);

    auto* facet = app.add_subcommand("facet", "Classify the facet of a point");
    add_datum_flags(facet, o);
    add_point_flag(facet, o, "--point")->required();

    auto* levi = app.add_subcommand("pseudolevi", "Pseudo-Levi system of a facet");
    add_datum_flags(levi, o);
    add_point_flag(levi, o, "--point,--facet");

    auto* spiral = app.add_subcommand("spiral", "Spiral of a facet over a window of degrees");
    add_datum_flags(spiral, o);
    add_grading_flags(spiral, o, true);
    add_point_flag(spiral, o, "--facet,--point");
    spiral->add_option("--window", o.window, "Largest |n| expanded");

    auto* split = app.add_subcommand("splitting", "Splitting and grading element of a facet");
    add_datum_flags(split, o);
    add_grading_flags(split, o, true);
    add_point_flag(split, o, "--facet,--point");
    split->add_option("--window", o.window, "Largest |n| expanded");

    auto* block = app.add_subcommand("block", "Orbit classes of E-alcoves and eigenvalue points");
    add_datum_flags(block, o);
    add_grading_flags(block, o, true);
    add_point_flag(block, o, "--base-facet,--facet-point,--facet");
    block->add_option("--depth", o.depth, "Gallery depth of the window");
    add_registry_flag(block, o);

    auto* rel = app.add_subcommand("relweyl", "Relative affine Weyl group and parameters");
    add_datum_flags(rel, o);
    add_grading_flags(rel, o, false);
    add_point_flag(rel, o, "--facet,--facet-point");
    add_registry_flag(rel, o);

    auto* daha = app.add_subcommand("daha", "Graded double affine Hecke algebra");
    daha->require_subcommand(1);
    auto* eval = daha->add_subcommand("eval", "Normal forms of expressions, one per line of stdin");
    add_datum_flags(eval, o);
    add_grading_flags(eval, o, false);
    add_point_flag(eval, o, "--facet,--facet-point");
    add_registry_flag(eval, o);
    eval->add_option("--expr", o.exprs, "Expression to evaluate instead of stdin");
    eval->add_option("--nu", o.nu, "Specialize at u = -nu, delta = 1");

    auto* cusp = app.add_subcommand("cuspidal", "Cuspidal registry");
    cusp->require_subcommand(1);
    auto* validate = cusp->add_subcommand("validate", "Validate the registry, and a datum against a facet");
    add_datum_flags(validate, o);
    add_point_flag(validate, o, "--point,--facet");
    add_registry_flag(validate, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int status = app.exit(e, out, err);
        return status == 0 ? 0 : 1;
    }

    std::string cmd;
    for (auto* sub : app.get_subcommands()) {
        cmd = sub->get_name();
        for (auto* inner : sub->get_subcommands()) cmd += " " + inner->get_name();
    }
    try {
        return run(cmd, o, out, in);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_status(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace spiral
