#include <doctest.h>

#include <sstream>

#include "orbimap/cli.hpp"
#include "orbimap/io.hpp"
#include "support.hpp"

using namespace orbimap;

namespace {

const std::string kData = ORBIMAP_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("rational and matrix json") {
  CHECK(rational_from_json(Json(3)) == Rational(3));
  CHECK(rational_from_json(Json("-2/6")) == Rational(-1, 3));
  CHECK_THROWS_AS(rational_from_json(Json("x")), Error);
  CHECK(to_json(Rational(5, 4)) == Json("5/4"));
  CHECK(to_json(fixtures::j_matrix()).size() == 9);
  CHECK_THROWS_AS(parse_json("{"), Error);
}

TEST_CASE("charts and maps round-trip") {
  for (const auto& c : {fixtures::line_z2(), fixtures::z2xz2(), fixtures::s3(), fixtures::z2_cubed()}) {
    const QuotientChart back = chart_from_json(chart_to_json(c), "x");
    CHECK(back.label == c.label);
    CHECK(back.group->order() == c.group->order());
    for (const auto& m : c.group->elements()) CHECK(back.group->index_of(m).has_value());
  }
  const PolyMap p = fixtures::axis_inclusion();
  CHECK(polymap_from_json(to_json(p), 1) == p);
  const MapInput in = map_from_json(read_json_file(kData + "/z2xz2_inclusion.json"));
  REQUIRE(in.complete);
  CHECK(in.complete->theta.image_matrix(1 - in.map.src.group->identity()) == fixtures::j_matrix());
  CHECK(complete_lifts_over(in.map).size() == 2);
}

TEST_CASE("redundant generators warn") {
  std::vector<std::string> warnings;
  const Json request{{"dim", 1}, {"generators", Json::array({Json::array({-1}), Json::array({-1})})}};
  const QuotientChart c = chart_from_json(request, "g", kDefaultClosureCap, &warnings);
  CHECK(c.group->order() == 2);
  CHECK_FALSE(warnings.empty());
}

TEST_CASE("cli group") {
  const auto r = run_cli({"group", "--generators", "empty", "--dim", "2"});
  REQUIRE(r.code == 0);
  CHECK(parse_json(r.out)["order"] == 1);
  const auto g = run_cli({"group", "--input", kData + "/s3.json"});
  REQUIRE(g.code == 0);
  CHECK(parse_json(g.out)["order"] == 6);
}

TEST_CASE("cli homs matches brute force") {
  const auto r = run_cli({"homs", "--src", kData + "/z2.json", "--dst", kData + "/z2xz2.json"});
  REQUIRE(r.code == 0);
  const Json j = parse_json(r.out);
  const auto oracle = support::brute_force_homs(*fixtures::line_z2().group, *fixtures::z2xz2().group);
  CHECK(j["count"] == 4);
  CHECK(oracle.size() == 4);
}

TEST_CASE("cli map commands") {
  const std::string map = kData + "/z2xz2_inclusion.json";
  const auto l = run_cli({"lifts", "--map", map});
  REQUIRE(l.code == 0);
  CHECK(parse_json(l.out)["count"] == 2);
  CHECK(parse_json(l.out)["given_index"] == 2);

  const auto s = run_cli({"--format", "dot", "strata", "--map", map});
  REQUIRE(s.code == 0);
  CHECK(s.out.rfind("digraph strata {", 0) == 0);
  const auto sj = run_cli({"strata", "--map", map});
  CHECK(parse_json(sj.out)["strata"].size() == 3);

  const auto p = run_cli({"pullback", "--map", kData + "/rz2_constant.json"});
  REQUIRE(p.code == 0);
  const Json pj = parse_json(p.out);
  CHECK(pj["pullbacks"][0]["class"] == "tangent-equivalent");
  CHECK(pj["pullbacks"][1]["class"] == "trivial");

  const auto id = run_cli({"idgroup", "--group", kData + "/s3.json"});
  REQUIRE(id.code == 0);
  const auto v = run_cli({"verify", "--atlas", kData + "/atlas.json"});
  REQUIRE(v.code == 0);
  CHECK_NOTHROW(parse_json(v.out));
}

TEST_CASE("cli examples") {
  for (const auto& name : fixtures::example_names()) {
    const auto r = run_cli({"example", "--name", name});
    INFO(name);
    REQUIRE(r.code == 0);
    const Json j = parse_json(r.out);
    CHECK(j["example"] == name);
    CHECK(r.out == run_cli({"example", "--name", name}).out);
    CHECK(run_cli({"--format", "dot", "example", "--name", name}).code == 0);
  }
  const Json rz2 = parse_json(run_cli({"example", "--name", "rz2-constant"}).out);
  CHECK(rz2["lifts"]["count"] == 2);
  CHECK(rz2["pullback"]["pullbacks"].size() == 2);
  const Json cube = parse_json(run_cli({"example", "--name", "ocube-inclusion"}).out);
  for (const auto& e : cube["isotropy"]) {
    CHECK(e["orbit_size"] == 2);
    CHECK(e["isotropy_order"] == 4);
  }
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"bogus"}).code == 1);
  CHECK(run_cli({"group", "--dim", "1", "--nope"}).code == 1);
  CHECK(run_cli({"--format", "dot", "lifts", "--map", kData + "/z2xz2_inclusion.json"}).code == 1);
  CHECK(run_cli({"lifts", "--map", kData + "/missing.json"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);

  const auto bad = run_cli({"lifts", "--map", kData + "/not_equivariant.json"});
  CHECK(bad.code == 2);
  const Json err = parse_json(bad.out);
  CHECK(err["error"]["code"] == "NotEquivariant");
  CHECK(run_cli({"example", "--name", "nope"}).code == 1);
}
