#include <doctest.h>

#include "orbimap/bundles.hpp"
#include "orbimap/error.hpp"
#include "support.hpp"

using namespace orbimap;

namespace {

Polynomial y_pow(unsigned e) {
  Polynomial p(1);
  p.add_term({e}, 1);
  return p;
}

CompleteMap into(const QuotientChart& dst, const PolyMap& lift, const Matrix& alpha_image) {
  const std::vector<std::size_t> gen{dst.group->index_of(alpha_image).value()};
  return make_complete(fixtures::line_z2(), dst, lift, gen);
}

std::size_t alpha() { return 1 - fixtures::line_z2().group->identity(); }

Subspace fixed_by_oracle(const PullbackBundleData& b) {
  Subspace s = Subspace::whole(b.fiber_dim);
  for (const auto& m : b.fiber_action) s = s.intersect(Subspace::null_space(m - Matrix::identity(b.fiber_dim)));
  return s;
}

}  // namespace

TEST_CASE("tangent bundles") {
  const auto t = tangent_bundle(fixtures::line_z2());
  CHECK(t.fiber_dim == 1);
  CHECK(t.fiber_action[alpha()] == Matrix::from_rows({{-1}}));
  const auto triv = tangent_bundle(fixtures::trivial_chart(2));
  CHECK(triv.fiber_action.size() == 1);
  CHECK(triv.fiber_action[0].is_identity());
  const auto v4 = fixtures::z2xz2();
  const auto tv = tangent_bundle(v4);
  for (std::size_t g = 0; g < v4.group->order(); ++g) CHECK(tv.fiber_action[g] == v4.group->element(g));
}

TEST_CASE("pullbacks over the constant map are inequivalent") {
  const auto lifts = complete_lifts_over(fixtures::example_map("rz2-constant"));
  const auto b_id = pullback(lifts[0]);
  const auto b_e = pullback(lifts[1]);
  CHECK(b_id.fiber_action[alpha()] == Matrix::from_rows({{-1}}));
  CHECK(b_e.fiber_action[alpha()].is_identity());
  CHECK(pullbacks_equivalent(b_id, tangent_bundle(fixtures::line_z2())));
  CHECK_FALSE(pullbacks_equivalent(b_id, b_e));
  CHECK(combined_action_is_group_action(b_id));
  CHECK(combined_action_is_group_action(b_e));
}

TEST_CASE("pullbacks along the two inclusions are isomorphic") {
  const auto v4 = fixtures::z2xz2();
  const auto bj = pullback(into(v4, fixtures::axis_inclusion(), fixtures::j_matrix()));
  const auto bk = pullback(into(v4, fixtures::axis_inclusion(), fixtures::k_matrix()));
  CHECK(bj.fiber_action[alpha()] == Matrix::diagonal({-1, 1, -1}));
  CHECK(pullbacks_equivalent(bj, bk));
  CHECK(support::conjugate_by_solve(*bj.base_group(), bj.fiber_action, bk.fiber_action));
  CHECK_THROWS_AS(pullbacks_equivalent(bj, tangent_bundle(fixtures::line_z2())), Error);
  CHECK_THROWS_AS(pullbacks_equivalent(bj, tangent_bundle(v4)), Error);
}

TEST_CASE("identity map pulls back the tangent bundle exactly") {
  for (const auto& chart : {fixtures::line_z2(), fixtures::z2xz2(), fixtures::s3(), fixtures::z2_cubed()}) {
    const auto p = pullback(identity_complete_map(chart));
    const auto t = tangent_bundle(chart);
    CHECK(p.fiber_action == t.fiber_action);
    CHECK(p.fiber_dim == t.fiber_dim);
  }
}

TEST_CASE("admissible subspaces") {
  const auto v4 = fixtures::z2xz2();
  const auto bj = pullback(into(v4, fixtures::axis_inclusion(), fixtures::j_matrix()));
  const std::vector<Vector> e2{{0, 1, 0}};
  CHECK(admissible_subspace(bj) == Subspace::span(3, e2));
  CHECK(admissible_subspace(bj, false).dim() == 3);
  const auto lifts = complete_lifts_over(fixtures::example_map("rz2-constant"));
  CHECK(admissible_subspace(pullback(lifts[1])).dim() == 1);
  CHECK(admissible_subspace(tangent_bundle(fixtures::line_z2())).dim() == 0);

  for (const auto& name : fixtures::example_names())
    for (const auto& m : complete_lifts_over(fixtures::example_map(name))) {
      const auto b = pullback(m);
      CHECK(admissible_subspace(b) == fixed_by_oracle(b));
    }
}

TEST_CASE("orbisections form a vector space") {
  const auto v4 = fixtures::z2xz2();
  const auto bj = pullback(into(v4, fixtures::axis_inclusion(), fixtures::j_matrix()));
  CHECK_NOTHROW(zero_section(bj));
  CHECK_NOTHROW(make_orbisection(bj, zero_section(bj).section));
  const Orbisection s = make_orbisection(bj, PolyMap(1, {y_pow(3), y_pow(2), y_pow(1)}));
  const Orbisection t = make_orbisection(bj, PolyMap(1, {y_pow(1), Polynomial(1), y_pow(3)}));
  const Orbisection sum = orbisection_add(s, orbisection_scale(2, s));
  CHECK(sum.section == Rational(3) * s.section);
  CHECK_NOTHROW(orbisection_add(s, t));
  CHECK_NOTHROW(orbisection_scale(Rational(-5, 3), t));
  try {
    make_orbisection(bj, PolyMap(1, {y_pow(2), Polynomial(1), Polynomial(1)}));
    FAIL("expected NotEquivariant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotEquivariant);
  }
  const auto bk = pullback(into(v4, fixtures::axis_inclusion(), fixtures::k_matrix()));
  CHECK_THROWS_AS(orbisection_add(s, zero_section(bk)), Error);
}

TEST_CASE("glued pullback") {
  const auto g = glued_pullback(fixtures::example_map("z2xz2-inclusion"));
  REQUIRE(g.pieces.size() == 3);
  CHECK(g.pieces[2].indices == std::vector<std::size_t>{2});
  const auto& both = g.pieces[1];
  CHECK(both.indices == std::vector<std::size_t>{1, 2});
  const std::vector<Vector> e1{{1, 0, 0}};
  CHECK(both.subspace == Subspace::span(3, e1));
  REQUIRE(g.pairs.size() == 1);
  CHECK(g.pairs[0].basis_related == std::vector<bool>{true, false, false});

  const auto single = glued_pullback(fixtures::example_map("identity-map"));
  REQUIRE(single.pieces.size() == 1);
  CHECK(single.pieces[0].subspace.dim() == 3);

  const auto constant = glued_pullback(fixtures::example_map("rz2-constant"));
  CHECK(constant.pieces[1].indices == std::vector<std::size_t>{1, 2});
  CHECK(constant.pieces[1].subspace.dim() == 0);

  const auto cube = glued_pullback(fixtures::example_map("ocube-inclusion"));
  for (const auto& big : cube.pieces)
    for (const auto& small : cube.pieces)
      if (std::includes(big.indices.begin(), big.indices.end(), small.indices.begin(), small.indices.end()))
        CHECK(small.subspace.contains(big.subspace));
  CHECK_THROWS_AS(glued_pullback(fixtures::example_map("ocube-inclusion"), 3), Error);
}
