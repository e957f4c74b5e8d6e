#include "spiral/cuspidal.hpp"

#include "spiral/errors.hpp"
#include "spiral/relweyl.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace spiral {

namespace {

using json = nlohmann::json;

CartanMatrix canonical_cartan(const AbstractType& t) {
    std::vector<int> order;
    for (const auto& c : t.components) order.insert(order.end(), c.nodes.begin(), c.nodes.end());
    const int n = static_cast<int>(order.size());
    CartanMatrix out(n, IntVec(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out[a][b] = t.cartan[order[a]][order[b]];
    return out;
}

CuspidalDatum parse_entry(const json& entry, std::size_t index) {
    auto where = "entry " + std::to_string(index);
    if (!entry.is_object()) fail(ErrorCode::SchemaError, where + " is not an object");
    for (const auto& [key, value] : entry.items())
        if (key != "leviType" && key != "orbitMarks" && key != "systemLabel" && key != "notes")
            fail(ErrorCode::SchemaError, where + ": unknown key '" + key + "'");
    if (!entry.contains("leviType") || !entry["leviType"].is_string())
        fail(ErrorCode::SchemaError, where + ": leviType must be a string");
    if (!entry.contains("orbitMarks") || !entry["orbitMarks"].is_array())
        fail(ErrorCode::SchemaError, where + ": orbitMarks must be an array");
    if (!entry.contains("systemLabel") || !entry["systemLabel"].is_string())
        fail(ErrorCode::SchemaError, where + ": systemLabel must be a string");
    if (entry.contains("notes") && !entry["notes"].is_string())
        fail(ErrorCode::SchemaError, where + ": notes must be a string");

    CuspidalDatum d;
    std::string label = entry["leviType"].get<std::string>();
    AbstractType t;
    try {
        t = parse_type_label(label);
    } catch (const Error& e) {
        fail(ErrorCode::SchemaError, where + ": " + e.what());
    }
    if (t.label != label)
        fail(ErrorCode::SchemaError, where + ": write leviType in canonical form '" + t.label + "'");
    d.levi_type = t.label;
    for (const auto& m : entry["orbitMarks"]) {
        if (!m.is_number_integer()) fail(ErrorCode::SchemaError, where + ": marks must be integers");
        d.orbit_marks.push_back(m.get<int>());
    }
    d.system_label = entry["systemLabel"].get<std::string>();
    if (entry.contains("notes")) d.notes = entry["notes"].get<std::string>();
    if (d.orbit_marks.size() != t.cartan.size())
        fail(ErrorCode::SchemaError, where + ": " + label + " needs " + std::to_string(t.cartan.size()) + " marks");
    for (int m : d.orbit_marks)
        if (m < 0) fail(ErrorCode::SchemaError, where + ": marks must be non-negative");
    if (!t.cartan.empty() && !is_distinguished(canonical_cartan(t), d.orbit_marks))
        fail(ErrorCode::NotDistinguished, where + ": marks do not define a distinguished orbit");
    return d;
}

}  // namespace

CuspidalDatum torus_datum() {
    CuspidalDatum d;
    d.levi_type = "T";
    d.system_label = "trivial";
    d.builtin = true;
    return d;
}

std::vector<CuspidalDatum> parse_registry(const std::string& text) {
    std::vector<CuspidalDatum> out{torus_datum()};
    bool blank = text.find_first_not_of(" \t\r\n") == std::string::npos;
    if (blank) return out;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::SchemaError, std::string("registry is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) fail(ErrorCode::SchemaError, "registry must be a JSON array");
    std::set<std::pair<std::string, IntVec>> seen{{"T", {}}};
    for (std::size_t i = 0; i < doc.size(); ++i) {
        auto d = parse_entry(doc[i], i);
        if (!seen.insert({d.levi_type, d.orbit_marks}).second)
            fail(ErrorCode::DuplicateDatum, "entry " + std::to_string(i) + " repeats " + d.levi_type);
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<CuspidalDatum> load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::SchemaError, "cannot read registry " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_registry(buf.str());
}

std::optional<CuspidalDatum> find_datum(const std::vector<CuspidalDatum>& registry, const std::string& levi_type) {
    for (const auto& d : registry)
        if (d.levi_type == levi_type) return d;
    return std::nullopt;
}

CuspidalCertificate validate_datum(const RootDatum& d, const CuspidalDatum& datum, const RelevantSubspace& E,
                                   std::uint64_t seed) {
    CuspidalCertificate cert;
    cert.datum = datum;
    cert.levi = pseudo_levi(d, E);
    if (cert.levi.type != datum.levi_type)
        fail(ErrorCode::TypeMismatch, "datum is for " + datum.levi_type + " but E has type " + cert.levi.type);
    if (static_cast<int>(datum.orbit_marks.size()) != cert.levi.semisimple_rank)
        fail(ErrorCode::TypeMismatch, "mark count does not match the rank of " + cert.levi.type);
    cert.h = Vec(d.dim, Rational(0));
    if (cert.levi.semisimple_rank > 0) {
        linalg::QMatrix rows;
        Vec rhs;
        for (int k = 0; k < cert.levi.semisimple_rank; ++k) {
            rows.push_back(d.covector(cert.levi.R_E[cert.levi.simple[k]].first));
            rhs.emplace_back(datum.orbit_marks[k]);
        }
        auto h = linalg::solve(rows, rhs, d.dim);
        if (!h) fail(ErrorCode::InvalidArgument, "simple roots of R_E are dependent");
        cert.h = *h;
    }
    auto levi = levi_subalgebra(d, cert.levi);
    if (!is_distinguished(*d.algebra, levi, cert.h))
        fail(ErrorCode::NotDistinguished, "orbit is not distinguished in " + cert.levi.type);
    auto oc = orbit_representative(*d.algebra, levi, cert.h, seed);
    cert.representative = oc.representative;
    cert.rank = oc.rank;
    cert.degree_two_dim = oc.degree_two_dim;
    cert.attempts = oc.attempts;
    return cert;
}

std::vector<int> c_parameters(const RootDatum& d, const RelevantSubspace& E, const Facet& A,
                              const CuspidalDatum& datum, std::uint64_t seed) {
    auto cert = validate_datum(d, datum, E, seed);
    return rel_weyl_group(d, E, A, &cert.representative).params;
}

}  // namespace spiral
