#include "spiral/report.hpp"

#include "spiral/errors.hpp"

#include <sstream>

namespace spiral {

namespace {

Json matrix_json(const linalg::QMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(to_json(row));
    return out;
}

Json int_matrix_json(const std::vector<IntVec>& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(row);
    return out;
}

std::string coxeter_entry(int m) { return m == kInfiniteOrder ? "inf" : std::to_string(m); }

Json element_json(const AlgebraElement& x) {
    Json out = Json::array();
    for (const auto& [index, c] : x.coeffs) out.push_back({{"basis", index}, {"coeff", c.str()}});
    return out;
}

Json components_json(const PseudoLevi& levi) {
    Json out = Json::array();
    for (const auto& c : levi.components) out.push_back({{"letter", std::string(1, c.letter)}, {"rank", c.rank}});
    return out;
}

Json type_json(const RootDatum& d) {
    return {{"series", std::string(1, d.series)}, {"rank", d.rank}, {"twist", d.e}};
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Json labels_json(const std::vector<GradedLabel>& labels) {
    Json out = Json::array();
    for (const auto& [root, cls] : labels) out.push_back({root, cls});
    return out;
}

Json datum_json(const RootDatum& d) {
    Json j;
    j["schema"] = "spiral.roots/1";
    j["type"] = type_json(d);
    j["apartmentDim"] = d.dim;
    j["algebraDim"] = d.ambient_dim();
    j["numPositive"] = d.num_positive;
    Json roots = Json::array();
    for (std::size_t a = 0; a < d.roots.size(); ++a)
        roots.push_back({{"index", a}, {"coeffs", d.roots[a]}, {"classes", d.classes_of(static_cast<int>(a))}});
    j["roots"] = roots;
    j["cartanGradedDims"] = d.cartan_graded_dims;
    j["killing"] = matrix_json(d.killing);
    Json coroots = Json::array();
    for (const auto& c : d.coroots) coroots.push_back(to_json(c));
    j["coroots"] = coroots;
    Json fams = Json::array();
    for (const auto& f : d.families) fams.push_back({{"root", f.root}, {"denom", f.denom}, {"residues", f.residues}});
    j["hyperplaneFamilies"] = fams;
    return j;
}

Json facet_json(const RootDatum& d, const Facet& f) {
    Json j;
    j["witness"] = to_json(f.witness);
    j["dim"] = span_of_facet(d, f).dim();
    j["isAlcove"] = is_alcove(f);
    Json van = Json::array();
    for (const auto& a : f.vanishing) van.push_back({{"root", a.root}, {"level", a.level}});
    j["vanishing"] = van;
    j["key"] = {{"face", f.key.face}, {"word", f.key.word}};
    return j;
}

Json pseudolevi_json(const RootDatum& d, const Facet& f) {
    auto levi = pseudo_levi_of(d, f);
    Json j;
    j["type"] = levi.type;
    j["semisimpleRank"] = levi.semisimple_rank;
    j["weylOrder"] = levi.order;
    j["numPositive"] = levi.ell;
    j["components"] = components_json(levi);
    j["roots"] = labels_json(levi.R_E);
    std::vector<GradedLabel> simple;
    for (int i : levi.simple) simple.push_back(levi.R_E[i]);
    j["simple"] = labels_json(simple);
    j["cartan"] = int_matrix_json(levi.cartan);
    return j;
}

Json grading_json(const GradingDatum& g) {
    return {{"x", to_json(g.x)}, {"m", g.m}, {"eta", g.eta}, {"epsilon", g.epsilon}};
}

Json spiral_json(const RootDatum& d, const Spiral& s) {
    Json j;
    j["schema"] = "spiral.spiral/1";
    j["facet"] = facet_json(d, s.facet);
    j["grading"] = grading_json(s.datum);
    j["lambda"] = to_json(s.lambda);
    Json deg = Json::object();
    for (const auto& [n, piece] : s.degrees)
        deg[std::to_string(n)] = {{"roots", labels_json(piece.roots)}, {"cartan", piece.cartan}};
    j["degrees"] = deg;
    return j;
}

Json splitting_json(const RootDatum& d, const Facet& f, const SplittingDatum& s) {
    Json j;
    j["schema"] = "spiral.splitting/1";
    j["facet"] = facet_json(d, f);
    j["levi"] = pseudolevi_json(d, f);
    Json pair = Json::array();
    for (const auto& [label, v] : s.grading.pairings) pair.push_back({{"label", {label.first, label.second}}, {"value", to_json(v)}});
    j["gradingElement"] = {{"j", to_json(s.grading.j)}, {"pairings", pair}};
    j["lambda"] = to_json(s.lambda);
    Json deg = Json::object();
    for (const auto& [n, labels] : s.graded_roots) deg[std::to_string(n)] = labels_json(labels);
    j["degrees"] = deg;
    j["cartanDegreeZero"] = s.cartan_degree_zero;
    return j;
}

Json relweyl_json(const RootDatum& d, const RelWeylGroup& G, const CuspidalDatum& datum) {
    Json j;
    j["schema"] = "spiral.relweyl/1";
    j["base"] = facet_json(d, G.base);
    j["spanDim"] = G.geom.dim();
    j["origin"] = to_json(G.geom.origin);
    Json dirs = Json::array();
    for (const auto& v : G.geom.E.directions) dirs.push_back(to_json(v));
    j["directions"] = dirs;
    j["datum"] = cuspidal_datum_json(datum);
    j["ellE"] = G.ell_E;
    Json walls = Json::array();
    for (const auto& w : G.walls) {
        Json wj;
        wj["alpha"] = to_json(w.alpha);
        wj["constant"] = to_json(w.alpha_constant);
        wj["coroot"] = to_json(w.coroot);
        wj["point"] = to_json(w.point);
        wj["ell"] = w.ell();
        wj["nPlus"] = labels_json(w.n_plus);
        wj["weightRatios"] = w.weight_ratios;
        wj["c"] = w.c ? Json(*w.c) : Json(nullptr);
        walls.push_back(wj);
    }
    j["walls"] = walls;
    Json cox = Json::array();
    for (const auto& row : G.coxeter) {
        Json r = Json::array();
        for (int m : row) r.push_back(coxeter_entry(m));
        cox.push_back(r);
    }
    j["coxeter"] = cox;
    j["c"] = G.params;
    return j;
}

Json cuspidal_datum_json(const CuspidalDatum& c) {
    Json j;
    j["leviType"] = c.levi_type;
    j["orbitMarks"] = c.orbit_marks;
    j["systemLabel"] = c.system_label;
    if (!c.notes.empty()) j["notes"] = c.notes;
    j["builtin"] = c.builtin;
    return j;
}

Json certificate_json(const CuspidalCertificate& c) {
    Json j;
    j["datum"] = cuspidal_datum_json(c.datum);
    j["leviType"] = c.levi.type;
    j["h"] = to_json(c.h);
    j["representative"] = element_json(c.representative);
    j["rank"] = c.rank;
    j["degreeTwoDim"] = c.degree_two_dim;
    j["attempts"] = c.attempts;
    return j;
}

Json block_json(const GradingDatum& g, const Block& b, int depth) {
    Json j;
    j["schema"] = "spiral.block/1";
    j["grading"] = grading_json(g);
    j["datum"] = cuspidal_datum_json(b.datum);
    j["spanDim"] = b.E.dim();
    j["depth"] = depth;
    j["groupOrder"] = b.partition.group_order;
    j["stabilizerOrder"] = b.partition.stabilizer_order;
    Json alc = Json::array();
    for (std::size_t i = 0; i < b.alcoves.size(); ++i) alc.push_back({{"index", i}, {"witness", to_json(b.alcoves[i].witness)}});
    j["alcoves"] = alc;
    Json classes = Json::array();
    for (const auto& c : b.classes) {
        Json pts = Json::array();
        for (const auto& p : c.eigen_points) pts.push_back(to_json(p));
        classes.push_back({{"members", c.members}, {"eigenPoint", to_json(c.eigen_point)}, {"eigenPoints", pts}});
    }
    j["classes"] = classes;
    j["numClasses"] = b.classes.size();
    return j;
}

SpiralReadback spiral_from_json(const Json& j) {
    SpiralReadback out;
    try {
        for (const auto& x : j.at("lambda")) out.lambda.push_back(parse_rational(x.get<std::string>()));
        for (const auto& [key, value] : j.at("degrees").items()) {
            SpiralDegree deg;
            for (const auto& l : value.at("roots")) deg.roots.emplace_back(l.at(0).get<int>(), l.at(1).get<int>());
            deg.cartan = value.at("cartan").get<int>();
            out.degrees[std::stoi(key)] = deg;
        }
    } catch (const Json::exception& e) {
        fail(ErrorCode::SchemaError, e.what());
    }
    return out;
}

namespace {

bool is_flat(const Json& j) {
    if (!j.is_array()) return !j.is_object();
    for (const auto& x : j)
        if (x.is_object() || (x.is_array() && !is_flat(x))) return false;
    return true;
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
        return s + "]";
    }
    return j.dump();
}

void render(const Json& j, int indent, std::ostringstream& os) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (is_flat(v)) {
                os << pad << k << ": " << scalar_text(v) << '\n';
            } else {
                os << pad << k << ":\n";
                render(v, indent + 2, os);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (is_flat(v)) {
                os << pad << "- " << scalar_text(v) << '\n';
            } else {
                os << pad << "-\n";
                render(v, indent + 2, os);
            }
        }
    } else {
        os << pad << scalar_text(j) << '\n';
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    render(j, 0, os);
    return os.str();
}

}  // namespace spiral
