#include "orbimap/maps.hpp"

#include <algorithm>

#include "orbimap/error.hpp"

namespace orbimap {

namespace {

void check_charts(const QuotientChart& src, const QuotientChart& dst, const PolyMap& lift) {
  if (lift.src_dim() != src.dim() || lift.dst_dim() != dst.dim()) {
    fail(ErrorCode::DimensionMismatch,
         "lift is R^" + std::to_string(lift.src_dim()) + " -> R^" + std::to_string(lift.dst_dim()) +
             " but charts are R^" + std::to_string(src.dim()) + " -> R^" + std::to_string(dst.dim()));
  }
}

void require_target(const IdentityLift& i, const QuotientChart& dst) {
  if (!(i.chart == dst)) {
    fail(ErrorCode::ChartMismatch, "identity lift on '" + i.chart.label +
                                       "' cannot act on maps into '" + dst.label + "'");
  }
  if (i.element >= dst.group->order()) fail(ErrorCode::ChartMismatch, "identity lift index out of range");
}

bool coeff_less(const PolyMap& a, const PolyMap& b, unsigned degree) {
  return lex_less(to_coeffs(a, degree).coeffs, to_coeffs(b, degree).coeffs);
}

// Distinct η·f̃ over the target group, ordered by coefficient vector.
std::vector<PolyMap> post_composition_orbit(const QuotientChart& dst, const PolyMap& lift) {
  std::vector<PolyMap> orbit;
  for (const Matrix& eta : dst.group->elements()) {
    PolyMap image = post_compose(eta, lift);
    if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) orbit.push_back(std::move(image));
  }
  const unsigned degree = lift.degree();
  std::sort(orbit.begin(), orbit.end(),
            [degree](const PolyMap& a, const PolyMap& b) { return coeff_less(a, b, degree); });
  return orbit;
}

}  // namespace

CompleteMap make_complete(const QuotientChart& src, const QuotientChart& dst, PolyMap lift,
                          GroupHom theta) {
  check_charts(src, dst, lift);
  if (!same_group(theta.source(), src.group) || !same_group(theta.target(), dst.group)) {
    fail(ErrorCode::ChartMismatch, "theta does not run between the chart groups");
  }
  if (!is_equivariant(lift, theta)) {
    fail(ErrorCode::NotEquivariant, "lift is not equivariant for the given theta");
  }
  return CompleteMap{src, dst, std::move(lift), std::move(theta)};
}

CompleteMap make_complete(const QuotientChart& src, const QuotientChart& dst, PolyMap lift,
                          std::span<const std::size_t> generator_images) {
  check_charts(src, dst, lift);
  GroupHom theta = GroupHom::from_generator_images(src.group, dst.group, generator_images);
  return make_complete(src, dst, std::move(lift), std::move(theta));
}

std::vector<CompleteMap> complete_lifts_over(const OrbifoldMap& f, std::size_t hom_cap) {
  check_charts(f.src, f.dst, f.lift);
  std::vector<CompleteMap> lifts;
  for (auto& theta : enumerate_homomorphisms(f.src.group, f.dst.group, hom_cap)) {
    if (is_equivariant(f.lift, theta)) lifts.push_back(CompleteMap{f.src, f.dst, f.lift, std::move(theta)});
  }
  return lifts;
}

OrbifoldMap make_orbifold_map(const QuotientChart& src, const QuotientChart& dst, PolyMap lift,
                              std::size_t hom_cap) {
  OrbifoldMap f{src, dst, std::move(lift)};
  if (complete_lifts_over(f, hom_cap).empty()) {
    fail(ErrorCode::NoLifts, "no homomorphism makes the lift equivariant");
  }
  return f;
}

ReducedMap reduce(const QuotientChart& src, const QuotientChart& dst, const PolyMap& lift) {
  return ReducedMap{src, dst, post_composition_orbit(dst, lift).front()};
}

OrbifoldMap q(const CompleteMap& m) { return OrbifoldMap{m.src, m.dst, m.lift}; }

CompleteReducedMap q_diamond(const CompleteMap& m) {
  return CompleteReducedMap{m.src, m.dst, m.theta, m.lift};
}

ReducedMap q_star(const CompleteMap& m) { return reduce(m.src, m.dst, m.lift); }

ReducedMap q_bullet(const OrbifoldMap& f) { return reduce(f.src, f.dst, f.lift); }

ReducedMap q_triangle(const CompleteReducedMap& m) { return reduce(m.src, m.dst, m.witness_lift); }

ConjugacyClassMap q_dagger(const CompleteReducedMap& m) {
  std::vector<GroupHom> members;
  for (std::size_t eta = 0; eta < m.dst.group->order(); ++eta) {
    GroupHom c = m.theta.conjugated_by(eta);
    if (std::find(members.begin(), members.end(), c) == members.end()) members.push_back(std::move(c));
  }
  std::sort(members.begin(), members.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.images() < b.images(); });
  return ConjugacyClassMap{m.src, m.dst, std::move(members), m.witness_lift};
}

ReducedMap q_ddagger(const ConjugacyClassMap& m) { return reduce(m.src, m.dst, m.witness_lift); }

AnyMap project(const CompleteMap& m, Projection which) {
  switch (which) {
    case Projection::Q: return q(m);
    case Projection::QDiamond: return q_diamond(m);
    case Projection::QStar: return q_star(m);
    case Projection::QBullet: return q_bullet(q(m));
    case Projection::QTriangle: return q_triangle(q_diamond(m));
    case Projection::QDagger: return q_dagger(q_diamond(m));
    case Projection::QDdagger: return q_ddagger(q_dagger(q_diamond(m)));
  }
  throw std::logic_error("unknown projection");
}

std::vector<CompleteMap> fiber_of_q_over(const OrbifoldMap& f, std::size_t hom_cap) {
  return complete_lifts_over(f, hom_cap);
}

std::vector<OrbifoldMap> fiber_of_qdot_over(const ReducedMap& rf) {
  std::vector<OrbifoldMap> fiber;
  for (auto& lift : post_composition_orbit(rf.dst, rf.representative))
    fiber.push_back(OrbifoldMap{rf.src, rf.dst, std::move(lift)});
  return fiber;
}

CompleteMap id_action(const IdentityLift& i, const CompleteMap& m) {
  require_target(i, m.dst);
  return CompleteMap{m.src, m.dst, post_compose(m.dst.group->element(i.element), m.lift),
                     m.theta.conjugated_by(i.element)};
}

CompleteReducedMap id_action(const IdentityLift& i, const CompleteReducedMap& m) {
  require_target(i, m.dst);
  return CompleteReducedMap{m.src, m.dst, m.theta.conjugated_by(i.element),
                            post_compose(m.dst.group->element(i.element), m.witness_lift)};
}

OrbifoldMap id_action(const IdentityLift& i, const OrbifoldMap& m) {
  require_target(i, m.dst);
  return OrbifoldMap{m.src, m.dst, post_compose(m.dst.group->element(i.element), m.lift)};
}

ConjugacyClassMap id_action(const IdentityLift& i, const ConjugacyClassMap& m) {
  require_target(i, m.dst);
  return m;
}

ReducedMap id_action(const IdentityLift& i, const ReducedMap& m) {
  require_target(i, m.dst);
  return m;
}

NeighborhoodVerdict neighborhood_compatible(const CompleteMap& f, const CompleteMap& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) {
    fail(ErrorCode::ChartMismatch, "maps live on different charts");
  }
  NeighborhoodVerdict v;
  v.compatible = f.theta == g.theta;
  v.same_stratum = fixed_subspace(f.theta).contains(g.lift.evaluate(zero_vector(g.src.dim())));
  return v;
}

bool image_fixing_identity(const CompleteMap& a, const CompleteMap& b) {
  if (!(a.lift == b.lift)) return false;
  const auto& dst = *a.dst.group;
  for (std::size_t g = 0; g < a.src.group->order(); ++g) {
    const std::size_t element = dst.multiply(dst.inverse(b.theta(g)), a.theta(g));
    if (!(post_compose(dst.element(element), a.lift) == a.lift)) return false;
  }
  return true;
}

std::vector<std::size_t> connecting_elements(const CompleteMap& a, const CompleteMap& b) {
  std::vector<std::size_t> out;
  for (std::size_t eta = 0; eta < a.dst.group->order(); ++eta)
    if (post_compose(a.dst.group->element(eta), a.lift) == b.lift) out.push_back(eta);
  return out;
}

CompleteMap identity_complete_map(const QuotientChart& chart) {
  return make_complete(chart, chart, PolyMap::identity(chart.dim()), GroupHom::identity(chart.group));
}

}  // namespace orbimap
