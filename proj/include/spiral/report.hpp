#pragma once

// JSON documents for the command-line tool and the Python module. Rationals are "p/q" strings.
// Every top-level document carries a "schema" tag "spiral.<kind>/1".

#include "spiral/block.hpp"
#include "spiral/cuspidal.hpp"
#include "spiral/grading.hpp"
#include "spiral/relweyl.hpp"

#include <json.hpp>

#include <string>

namespace spiral {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Vec& v);
Json labels_json(const std::vector<GradedLabel>& labels);

Json datum_json(const RootDatum& d);
Json facet_json(const RootDatum& d, const Facet& f);
Json pseudolevi_json(const RootDatum& d, const Facet& f);
Json grading_json(const GradingDatum& g);
Json spiral_json(const RootDatum& d, const Spiral& s);
Json splitting_json(const RootDatum& d, const Facet& f, const SplittingDatum& s);
Json relweyl_json(const RootDatum& d, const RelWeylGroup& G, const CuspidalDatum& datum);
Json block_json(const GradingDatum& g, const Block& b, int depth);
Json cuspidal_datum_json(const CuspidalDatum& c);
Json certificate_json(const CuspidalCertificate& c);

/// Reads back the lambda and degrees of a spiral document. Throws SchemaError.
struct SpiralReadback {
    Vec lambda;
    std::map<int, SpiralDegree> degrees;
};
SpiralReadback spiral_from_json(const Json& j);

/// Indented "key: value" rendering of a document.
std::string render_text(const Json& j);

}  // namespace spiral
