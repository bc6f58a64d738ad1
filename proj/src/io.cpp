#include "orbimap/io.hpp"

#include <fstream>
#include <sstream>

namespace orbimap {

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(ErrorCode::MalformedInput, what); }

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) malformed(where + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(where + " is missing \"" + key + "\"");
  return *it;
}

std::size_t index_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) malformed(where + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Matrix flat_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) malformed(where + " must be an array");
  if (j.size() != rows * cols) {
    fail(ErrorCode::DimensionMismatch, where + " has " + std::to_string(j.size()) + " entries, expected " +
                                           std::to_string(rows * cols));
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r * cols + c]);
  return m;
}

std::vector<std::size_t> generator_images(const Json& j, const GroupPtr& target, const std::string& where) {
  if (!j.is_array()) malformed(where + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& entry : j) {
    if (entry.is_array()) {
      const Matrix m = flat_matrix(entry, target->dim(), target->dim(), where);
      auto idx = target->index_of(m);
      if (!idx) fail(ErrorCode::NotAHomomorphism, where + " names a matrix outside the target group");
      out.push_back(*idx);
    } else {
      const std::size_t idx = index_from_json(entry, where);
      if (idx >= target->order()) fail(ErrorCode::NotAHomomorphism, where + " index out of range");
      out.push_back(idx);
    }
  }
  return out;
}

Json label_list(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  malformed("rational entries must be integers or \"p/q\" strings");
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (const auto& x : m.entries()) out.push_back(to_string(x));
  return out;
}

QuotientChart chart_from_json(const Json& j, const std::string& default_label, std::size_t closure_cap,
                              std::vector<std::string>* warnings) {
  const Json& dim_j = require(j, "dim", "group");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() <= 0) malformed("group dim must be a positive integer");
  const auto dim = dim_j.get<std::size_t>();
  std::vector<Matrix> gens;
  if (auto it = j.find("generators"); it != j.end()) {
    if (!it->is_array()) malformed("group generators must be an array");
    for (const auto& g : *it) gens.push_back(flat_matrix(g, dim, dim, "generator"));
  }
  std::string label = default_label;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) malformed("group label must be a string");
    label = it->get<std::string>();
  }
  return QuotientChart{label, close_group(dim, gens, closure_cap, warnings)};
}

Json chart_to_json(const QuotientChart& chart) {
  Json gens = Json::array();
  for (auto g : chart.group->generators()) gens.push_back(to_json(chart.group->element(g)));
  return Json{{"label", chart.label}, {"dim", chart.dim()}, {"generators", gens}};
}

PolyMap polymap_from_json(const Json& j, std::size_t src_dim) {
  if (!j.is_array()) malformed("polymap must be an array of components");
  std::vector<Polynomial> comps;
  for (const auto& comp : j) {
    if (!comp.is_array()) malformed("polymap component must be an array of terms");
    Polynomial p(src_dim);
    for (const auto& term : comp) {
      const Json& mono = require(term, "monomial", "term");
      if (!mono.is_array() || mono.size() != src_dim) {
        malformed("monomial must list " + std::to_string(src_dim) + " exponents");
      }
      Exponents e;
      for (const auto& x : mono) e.push_back(static_cast<unsigned>(index_from_json(x, "exponent")));
      p.add_term(e, rational_from_json(require(term, "coeff", "term")));
    }
    comps.push_back(std::move(p));
  }
  return PolyMap(src_dim, std::move(comps));
}

Json to_json(const PolyMap& p) {
  Json out = Json::array();
  for (const auto& comp : p.components()) {
    Json terms = Json::array();
    for (const auto& [e, c] : comp.terms()) {
      Json mono = Json::array();
      for (auto x : e) mono.push_back(x);
      terms.push_back(Json{{"monomial", mono}, {"coeff", to_string(c)}});
    }
    out.push_back(terms);
  }
  return out;
}

MapInput map_from_json(const Json& j, std::size_t closure_cap, std::size_t hom_cap) {
  QuotientChart src = chart_from_json(require(j, "src", "map"), "src", closure_cap);
  QuotientChart dst = chart_from_json(require(j, "dst", "map"), "dst", closure_cap);
  PolyMap lift = polymap_from_json(require(j, "lift", "map"), src.dim());
  MapInput in{make_orbifold_map(src, dst, lift, hom_cap), std::nullopt};
  if (auto it = j.find("theta"); it != j.end()) {
    const auto images = generator_images(*it, dst.group, "theta");
    in.complete = make_complete(src, dst, std::move(lift), images);
  }
  return in;
}

AtlasInput atlas_from_json(const Json& j, std::size_t closure_cap) {
  AtlasInput in;
  const Json& charts = require(j, "charts", "atlas");
  if (!charts.is_array()) malformed("atlas charts must be an array");
  for (const auto& c : charts) {
    if (!c.contains("label")) malformed("atlas charts need labels");
    in.charts.push_back(chart_from_json(c, "", closure_cap));
  }
  auto chart = [&](const Json& label) -> const QuotientChart& {
    if (!label.is_string()) malformed("chart references must be strings");
    for (const auto& c : in.charts)
      if (c.label == label.get<std::string>()) return c;
    fail(ErrorCode::UnknownLabel, "no chart labelled '" + label.get<std::string>() + "'");
  };
  if (auto it = j.find("embeddings"); it != j.end()) {
    if (!it->is_array()) malformed("atlas embeddings must be an array");
    for (const auto& e : *it) {
      const QuotientChart& from = chart(require(e, "from", "embedding"));
      const QuotientChart& to = chart(require(e, "to", "embedding"));
      const Json& affine = require(e, "affine", "embedding");
      AffineMap map{flat_matrix(require(affine, "A", "affine"), to.dim(), from.dim(), "affine A"), {}};
      const Json& b = require(affine, "b", "affine");
      if (!b.is_array()) malformed("affine b must be an array");
      if (b.size() != to.dim()) fail(ErrorCode::DimensionMismatch, "affine b has the wrong length");
      for (const auto& x : b) map.offset.push_back(rational_from_json(x));
      const auto images = generator_images(require(e, "theta", "embedding"), to.group, "embedding theta");
      in.embeddings.push_back(AtlasEmbedding{from.label, to.label, std::move(map),
                                             GroupHom::from_generator_images(from.group, to.group, images)});
    }
  }
  if (auto it = j.find("triples"); it != j.end()) {
    if (!it->is_array()) malformed("atlas triples must be an array");
    for (const auto& t : *it) {
      if (!t.is_array() || t.size() != 3) malformed("each triple lists three chart labels");
      std::array<std::string, 3> labels;
      for (std::size_t i = 0; i < 3; ++i) {
        if (!t[i].is_string()) malformed("triple entries must be strings");
        labels[i] = t[i].get<std::string>();
      }
      in.triples.push_back(labels);
    }
  }
  return in;
}

Json group_report(const FiniteMatrixGroup& g, const GroupPtr& ptr) {
  Json elements = Json::array();
  for (const auto& m : g.elements()) elements.push_back(to_json(m));
  return Json{{"dim", g.dim()},
              {"order", g.order()},
              {"abelian", g.is_abelian()},
              {"identity", g.identity()},
              {"generators", label_list(g.generators())},
              {"center_order", center(ptr).order()},
              {"inner_automorphisms", inner_automorphism_count(ptr)},
              {"elements", elements}};
}

Json to_json(const GroupHom& h) {
  Json gens = Json::array();
  for (auto g : h.source()->generators()) gens.push_back(h(g));
  return Json{{"images", label_list(h.images())},
              {"generator_images", gens},
              {"injective", h.is_injective()},
              {"image_order", h.image().order()}};
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(v));
  return Json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", basis}};
}

Json complete_map_to_json(const CompleteMap& m) {
  return Json{{"src", m.src.label}, {"dst", m.dst.label}, {"lift", to_json(m.lift)}, {"theta", to_json(m.theta)}};
}

Json bundle_to_json(const PullbackBundleData& b) {
  Json action = Json::array();
  for (const auto& m : b.fiber_action) action.push_back(to_json(m));
  return Json{{"base_dim", b.base.src.dim()},
              {"fiber_dim", b.fiber_dim},
              {"fiber_action", action},
              {"admissible", to_json(admissible_subspace(b))}};
}

Json glued_to_json(const GluedPullbackReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json related = Json::array();
    for (bool x : p.basis_related) related.push_back(x);
    pairs.push_back(Json{{"i", p.i}, {"j", p.j}, {"basis_related", related}});
  }
  Json pieces = Json::array();
  for (const auto& p : r.pieces) {
    pieces.push_back(Json{{"J", label_list(p.indices)}, {"dim", p.subspace.dim()}, {"subspace", to_json(p.subspace)}});
  }
  return Json{{"lift_count", r.lifts.size()}, {"fiber_dim", r.fiber_dim}, {"pairs", pairs}, {"pieces", pieces}};
}

Json poset_to_json(const StrataPoset& p) {
  Json lifts = Json::array();
  for (std::size_t i = 0; i < p.lifts.size(); ++i) {
    lifts.push_back(Json{{"index", i + 1}, {"theta", to_json(p.lifts[i].theta)}});
  }
  Json strata = Json::array();
  for (const auto& s : p.strata) {
    Json entry{{"J", label_list(s.indices)}, {"dim", s.subspace.dim()}, {"nonempty", s.nonempty}};
    if (s.witness) entry["witness"] = to_json(*s.witness);
    strata.push_back(entry);
  }
  Json covers = Json::array();
  for (const auto& [lower, upper] : p.covers) covers.push_back(Json{{"lower", label_list(lower)}, {"upper", label_list(upper)}});
  return Json{{"degree", p.degree},
              {"coefficient_space_dim", coeff_space_dim(p.base.src.dim(), p.base.dst.dim(), p.degree)},
              {"lift_count", p.lifts.size()},
              {"lifts", lifts},
              {"strata", strata},
              {"covers", covers}};
}

Json idgroup_to_json(const IdentityLiftGroup& id, const SequenceCheck& check) {
  Json reduced = Json::array();
  for (const auto& r : id.reduced) reduced.push_back(label_list(r));
  return Json{{"chart", id.chart.label},
              {"order", id.order()},
              {"center_order", id.center.order()},
              {"reduced_order", id.reduced_order()},
              {"reduced", reduced},
              {"quotient_map", label_list(id.quotient_map)},
              {"sequence",
               Json{{"order_identity", check.order_identity},
                    {"quotient_homomorphism", check.quotient_homomorphism},
                    {"quotient_surjective", check.quotient_surjective},
                    {"kernel_is_center", check.kernel_is_center},
                    {"exact", check.ok()}}}};
}

Json atlas_report_to_json(const AtlasReport& r) {
  Json embeddings = Json::array();
  for (const auto& e : r.embeddings) {
    embeddings.push_back(Json{{"from", e.from},
                              {"to", e.to},
                              {"injective_map", e.injective_map},
                              {"injective_theta", e.injective_theta},
                              {"equivariant", e.equivariant},
                              {"ok", e.ok()}});
  }
  Json triples = Json::array();
  for (const auto& t : r.triples) {
    Json entry{{"labels", Json{t.labels[0], t.labels[1], t.labels[2]}}, {"valid", t.valid}};
    entry["delta"] = t.delta ? Json(*t.delta) : Json(nullptr);
    entry["detail"] = t.detail;
    triples.push_back(entry);
  }
  return Json{{"valid", r.valid()}, {"embeddings", embeddings}, {"triples", triples}};
}

Json error_to_json(const Error& e) {
  return Json{{"error", Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
}

}  // namespace orbimap
