#include "orbimap/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "orbimap/fixtures.hpp"
#include "orbimap/io.hpp"

namespace orbimap::cli {

namespace {

struct Settings {
  std::string format = "json";
  unsigned degree = 3;
  std::size_t closure_cap = kDefaultClosureCap;
  std::size_t hom_cap = kDefaultHomEnumerationCap;
  std::size_t coeff_cap = kDefaultCoeffSpaceCap;
  std::size_t max_lifts = kDefaultMaxLifts;

  std::string input, src, dst, map, group, atlas, name, generators;
  std::size_t dim = 0;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

StrataOptions strata_options(const Settings& s) {
  return StrataOptions{s.max_lifts, s.hom_cap, s.coeff_cap, seed_from_env()};
}

std::string classify(const PullbackBundleData& b) {
  const auto& src = b.base.src;
  if (b.fiber_dim == src.dim() && pullbacks_equivalent(b, tangent_bundle(src))) return "tangent-equivalent";
  std::vector<Matrix> trivial(b.fiber_action.size(), Matrix::identity(b.fiber_dim));
  if (representations_equivalent(*b.base_group(), b.fiber_action, trivial)) return "trivial";
  return "other";
}

Json lifts_report(const OrbifoldMap& f, const std::vector<CompleteMap>& lifts) {
  Json entries = Json::array();
  std::vector<ConjugacyClassMap> classes;
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    const auto c = q_dagger(q_diamond(lifts[i]));
    if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
    Json entry{{"index", i + 1}, {"theta", to_json(lifts[i].theta)}};
    entry["fixed_subspace"] = to_json(fixed_subspace(lifts[i].theta));
    entries.push_back(entry);
  }
  return Json{{"src", chart_to_json(f.src)},
              {"dst", chart_to_json(f.dst)},
              {"lift", to_json(f.lift)},
              {"reduced_representative", to_json(q_bullet(f).representative)},
              {"count", lifts.size()},
              {"conjugacy_classes", classes.size()},
              {"lifts", entries}};
}

Json pullback_report(const OrbifoldMap& f, const std::vector<CompleteMap>& lifts, const Settings& s) {
  std::vector<PullbackBundleData> bundles;
  Json entries = Json::array();
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    bundles.push_back(pullback(lifts[i]));
    std::size_t cls = i + 1;
    for (std::size_t j = 0; j < i; ++j)
      if (pullbacks_equivalent(bundles[j], bundles[i])) {
        cls = j + 1;
        break;
      }
    Json entry{{"index", i + 1}, {"bundle", bundle_to_json(bundles[i])}};
    entry["class"] = classify(bundles[i]);
    entry["equivalent_to"] = cls;
    entries.push_back(entry);
  }
  return Json{{"tangent_bundle", bundle_to_json(tangent_bundle(f.src))},
              {"pullbacks", entries},
              {"glued", glued_to_json(glued_pullback(f, s.max_lifts, s.hom_cap))}};
}

Json isotropy_report(const std::vector<CompleteMap>& lifts) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    const Subgroup c = centralizer(lifts[i].dst.group, lifts[i].theta.image());
    const auto r = orbit_and_isotropy(lifts[i], c);
    entries.push_back(Json{{"index", i + 1},
                           {"centralizer_order", c.order()},
                           {"orbit_size", r.orbit.size()},
                           {"isotropy_order", r.isotropy.order()}});
  }
  return entries;
}

std::string cmd_group(const Settings& s) {
  std::vector<std::string> warnings;
  QuotientChart chart;
  if (!s.input.empty()) {
    chart = chart_from_json(read_json_file(s.input), "group", s.closure_cap, &warnings);
  } else {
    if (s.dim == 0) fail(ErrorCode::MalformedInput, "group needs --input or --dim");
    Json request{{"dim", s.dim}, {"generators", Json::array()}};
    if (!s.generators.empty() && s.generators != "empty") request["generators"] = parse_json(s.generators);
    chart = chart_from_json(request, "group", s.closure_cap, &warnings);
  }
  Json report = group_report(*chart.group, chart.group);
  Json w = Json::array();
  for (const auto& x : warnings) w.push_back(x);
  report["warnings"] = w;
  return dump(report);
}

std::string cmd_homs(const Settings& s) {
  const auto src = chart_from_json(read_json_file(s.src), "src", s.closure_cap);
  const auto dst = chart_from_json(read_json_file(s.dst), "dst", s.closure_cap);
  const auto homs = enumerate_homomorphisms(src.group, dst.group, s.hom_cap);
  Json list = Json::array();
  for (const auto& h : homs) list.push_back(to_json(h));
  return dump(Json{{"source_order", src.group->order()},
                   {"target_order", dst.group->order()},
                   {"count", homs.size()},
                   {"homomorphisms", list}});
}

MapInput load_map(const Settings& s) { return map_from_json(read_json_file(s.map), s.closure_cap, s.hom_cap); }

std::string cmd_lifts(const Settings& s) {
  const MapInput in = load_map(s);
  const auto lifts = complete_lifts_over(in.map, s.hom_cap);
  Json report = lifts_report(in.map, lifts);
  if (in.complete) {
    const auto it = std::find(lifts.begin(), lifts.end(), *in.complete);
    report["given_index"] = static_cast<std::size_t>(it - lifts.begin()) + 1;
  }
  return dump(report);
}

std::string cmd_strata(const Settings& s) {
  const MapInput in = load_map(s);
  const auto p = strata_poset(in.map, s.degree, strata_options(s));
  return export_poset(p, s.format == "dot" ? PosetFormat::Dot : PosetFormat::Json);
}

std::string cmd_pullback(const Settings& s) {
  const MapInput in = load_map(s);
  return dump(pullback_report(in.map, complete_lifts_over(in.map, s.hom_cap), s));
}

std::string cmd_idgroup(const Settings& s) {
  const auto chart = chart_from_json(read_json_file(s.group), "chart", s.closure_cap);
  const auto id = identity_lift_group(chart);
  return dump(idgroup_to_json(id, sequence_check(id)));
}

std::string cmd_verify(const Settings& s) {
  const AtlasInput in = atlas_from_json(read_json_file(s.atlas), s.closure_cap);
  return dump(atlas_report_to_json(verify_atlas(in.charts, in.embeddings, in.triples)));
}

std::string cmd_example(const Settings& s) {
  const OrbifoldMap f = fixtures::example_map(s.name);
  const auto lifts = complete_lifts_over(f, s.hom_cap);
  const auto poset = strata_poset(f, s.degree, strata_options(s));
  if (s.format == "dot") return export_poset(poset, PosetFormat::Dot);
  const auto id = identity_lift_group(f.dst);
  return dump(Json{{"example", s.name},
                   {"lifts", lifts_report(f, lifts)},
                   {"pullback", pullback_report(f, lifts, s)},
                   {"strata", poset_to_json(poset)},
                   {"isotropy", isotropy_report(lifts)},
                   {"identity_lifts", idgroup_to_json(id, sequence_check(id))}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact finite data of orbifold maps on global-quotient charts", "orbimap"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Report format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--degree", s.degree, "Degree bound for perturbation spaces")->check(CLI::Range(0, 64));
  app.add_option("--closure-cap", s.closure_cap, "Maximum group order during closure");
  app.add_option("--hom-cap", s.hom_cap, "Maximum source order for homomorphism enumeration");
  app.add_option("--coeff-cap", s.coeff_cap, "Maximum coefficient-space dimension");
  app.add_option("--max-lifts", s.max_lifts, "Maximum number of complete lifts");

  auto* group = app.add_subcommand("group", "Close generators and report the group");
  auto* input = group->add_option("--input", s.input, "Group JSON file");
  group->add_option("--generators", s.generators, "'empty' or a JSON list of flat matrices")->excludes(input);
  group->add_option("--dim", s.dim, "Ambient dimension")->excludes(input);

  auto* homs = app.add_subcommand("homs", "Enumerate homomorphisms");
  homs->add_option("--src", s.src, "Source group JSON")->required();
  homs->add_option("--dst", s.dst, "Target group JSON")->required();

  auto* lifts = app.add_subcommand("lifts", "Complete lifts of a map");
  auto* strata = app.add_subcommand("strata", "Stratification poset of a map neighborhood");
  auto* pull = app.add_subcommand("pullback", "Pullback bundles of every complete lift");
  for (auto* sub : {lifts, strata, pull}) sub->add_option("--map", s.map, "Map JSON file")->required();

  auto* idgroup = app.add_subcommand("idgroup", "Group of lifts of the identity");
  idgroup->add_option("--group", s.group, "Chart group JSON")->required();

  auto* verify = app.add_subcommand("verify", "Check atlas compatibility");
  verify->add_option("--atlas", s.atlas, "Atlas JSON file")->required();

  auto* example = app.add_subcommand("example", "Replay a worked example");
  example->add_option("--name", s.name, "Example name")->required()->check(CLI::IsMember(fixtures::example_names()));

  std::vector<const char*> argv{"orbimap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? 0 : 1;
  }

  std::string report;
  try {
    if (s.format == "dot" && !strata->parsed() && !example->parsed()) {
      fail(ErrorCode::MalformedInput, "--format dot is only available for strata and example");
    }
    if (group->parsed()) report = cmd_group(s);
    else if (homs->parsed()) report = cmd_homs(s);
    else if (lifts->parsed()) report = cmd_lifts(s);
    else if (strata->parsed()) report = cmd_strata(s);
    else if (pull->parsed()) report = cmd_pullback(s);
    else if (idgroup->parsed()) report = cmd_idgroup(s);
    else if (verify->parsed()) report = cmd_verify(s);
    else report = cmd_example(s);
  } catch (const Error& e) {
    out << dump(error_to_json(e));
    return e.is_validation() ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    out << dump(error_to_json(Error(ErrorCode::MalformedInput, std::string("MalformedInput: ") + e.what())));
    return 1;
  }
  out << report;
  out.flush();
  return 0;
}

}  // namespace orbimap::cli
