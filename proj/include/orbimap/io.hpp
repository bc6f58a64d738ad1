#pragma once

// JSON wire formats and report serializers.
//
//   group   {"dim": n, "generators": [[flat row-major entries]], "label": "..."}
//   polymap [[{"monomial": [e1, ..., en], "coeff": "p/q"}, ...], ...]   one list per component
//   map     {"src": group, "dst": group, "lift": polymap, "theta": [generator image indices]}
//   atlas   {"charts": [group with label], "embeddings": [{"from", "to",
//            "affine": {"A": [flat], "b": [..]}, "theta": [generator image indices]}],
//            "triples": [["z", "y", "x"]]}
//
// Rational entries are strings "p" or "p/q" or JSON integers. Structural
// problems raise MalformedInput.

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orbimap/bundles.hpp"
#include "orbimap/error.hpp"
#include "orbimap/groups.hpp"
#include "orbimap/maps.hpp"
#include "orbimap/orbifold.hpp"
#include "orbimap/polymap.hpp"
#include "orbimap/strata.hpp"

namespace orbimap {

using Json = nlohmann::ordered_json;

/// Throws MalformedInput on syntax errors.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);  // flat row-major

QuotientChart chart_from_json(const Json& j, const std::string& default_label,
                              std::size_t closure_cap = kDefaultClosureCap,
                              std::vector<std::string>* warnings = nullptr);
Json chart_to_json(const QuotientChart& chart);  // round-trips through chart_from_json

PolyMap polymap_from_json(const Json& j, std::size_t src_dim);
Json to_json(const PolyMap& p);

struct MapInput {
  OrbifoldMap map;
  std::optional<CompleteMap> complete;  // when "theta" is present
};

MapInput map_from_json(const Json& j, std::size_t closure_cap = kDefaultClosureCap,
                       std::size_t hom_cap = kDefaultHomEnumerationCap);

struct AtlasInput {
  std::vector<QuotientChart> charts;
  std::vector<AtlasEmbedding> embeddings;
  std::vector<std::array<std::string, 3>> triples;
};

AtlasInput atlas_from_json(const Json& j, std::size_t closure_cap = kDefaultClosureCap);

Json group_report(const FiniteMatrixGroup& g, const GroupPtr& ptr);
Json to_json(const GroupHom& h);
Json to_json(const Subspace& s);
Json complete_map_to_json(const CompleteMap& m);
Json bundle_to_json(const PullbackBundleData& b);
Json glued_to_json(const GluedPullbackReport& r);
Json poset_to_json(const StrataPoset& p);
Json idgroup_to_json(const IdentityLiftGroup& id, const SequenceCheck& check);
Json atlas_report_to_json(const AtlasReport& r);
Json error_to_json(const Error& e);

}  // namespace orbimap
