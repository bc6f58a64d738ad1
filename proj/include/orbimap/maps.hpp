#pragma once

// The four notions of orbifold map on global-quotient charts, the quotient
// maps between them, their fibers, and the action of the identity lifts.
//
//   CompleteMap         (f, f̃, Θ)
//   OrbifoldMap         (f, f̃)          forgets Θ            (q)
//   CompleteReducedMap  (f, Θ)          forgets f̃            (q♦)
//   ConjugacyClassMap   [(f, Θ)]        Θ up to conjugation  (q†)
//   ReducedMap          f               forgets both         (q★, q•, q▽, q‡)

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "orbimap/error.hpp"
#include "orbimap/groups.hpp"
#include "orbimap/orbifold.hpp"
#include "orbimap/polymap.hpp"

namespace orbimap {

struct CompleteMap {
  QuotientChart src;
  QuotientChart dst;
  PolyMap lift;
  GroupHom theta;

  friend bool operator==(const CompleteMap& a, const CompleteMap& b) {
    return a.src == b.src && a.dst == b.dst && a.lift == b.lift && a.theta == b.theta;
  }
};

struct OrbifoldMap {
  QuotientChart src;
  QuotientChart dst;
  PolyMap lift;

  friend bool operator==(const OrbifoldMap&, const OrbifoldMap&) = default;
};

struct CompleteReducedMap {
  QuotientChart src;
  QuotientChart dst;
  GroupHom theta;
  PolyMap witness_lift;

  /// The lift is only a witness; equality is on Θ.
  friend bool operator==(const CompleteReducedMap& a, const CompleteReducedMap& b) {
    return a.src == b.src && a.dst == b.dst && a.theta == b.theta;
  }
};

struct ConjugacyClassMap {
  QuotientChart src;
  QuotientChart dst;
  std::vector<GroupHom> members;  // sorted by image tuples
  PolyMap witness_lift;

  friend bool operator==(const ConjugacyClassMap& a, const ConjugacyClassMap& b) {
    return a.src == b.src && a.dst == b.dst && a.members == b.members;
  }
};

struct ReducedMap {
  QuotientChart src;
  QuotientChart dst;
  /// Lexicographically least coefficient vector in {η·f̃ : η ∈ Γ_dst}.
  PolyMap representative;

  friend bool operator==(const ReducedMap&, const ReducedMap&) = default;
};

using AnyMap =
    std::variant<CompleteMap, OrbifoldMap, CompleteReducedMap, ConjugacyClassMap, ReducedMap>;

/// Throws DimensionMismatch, ChartMismatch or NotEquivariant.
CompleteMap make_complete(const QuotientChart& src, const QuotientChart& dst, PolyMap lift,
                          GroupHom theta);
/// Θ given by generator images; additionally throws NotAHomomorphism.
CompleteMap make_complete(const QuotientChart& src, const QuotientChart& dst, PolyMap lift,
                          std::span<const std::size_t> generator_images);

/// Throws NoLifts when no Θ makes the lift equivariant.
OrbifoldMap make_orbifold_map(const QuotientChart& src, const QuotientChart& dst, PolyMap lift,
                              std::size_t hom_cap = kDefaultHomEnumerationCap);

/// q⁻¹(f): every Θ ∈ Hom(Γ_src, Γ_dst) for which the lift is equivariant,
/// ordered by image tuples.
std::vector<CompleteMap> complete_lifts_over(const OrbifoldMap& f,
                                             std::size_t hom_cap = kDefaultHomEnumerationCap);

OrbifoldMap q(const CompleteMap& m);
CompleteReducedMap q_diamond(const CompleteMap& m);
ReducedMap q_star(const CompleteMap& m);
ReducedMap q_bullet(const OrbifoldMap& f);
ReducedMap q_triangle(const CompleteReducedMap& m);
ConjugacyClassMap q_dagger(const CompleteReducedMap& m);
ReducedMap q_ddagger(const ConjugacyClassMap& m);

enum class Projection { Q, QDiamond, QStar, QBullet, QTriangle, QDagger, QDdagger };

/// Applies the named quotient, composing through the diagram when its
/// natural source is not a complete map (q• = q•∘q, q▽ = q▽∘q♦,
/// q† = q†∘q♦, q‡ = q‡∘q†∘q♦).
AnyMap project(const CompleteMap& m, Projection which);

ReducedMap reduce(const QuotientChart& src, const QuotientChart& dst, const PolyMap& lift);

std::vector<CompleteMap> fiber_of_q_over(const OrbifoldMap& f,
                                         std::size_t hom_cap = kDefaultHomEnumerationCap);
/// q•⁻¹(•f): distinct post-compositions η·f̃, ordered by coefficient vector.
std::vector<OrbifoldMap> fiber_of_qdot_over(const ReducedMap& rf);

/// The identity lift ỹ ↦ γ·ỹ of `chart`.
struct IdentityLift {
  QuotientChart chart;
  std::size_t element;
};

/// I∘m for each notion; throws ChartMismatch unless I lives on m's target.
CompleteMap id_action(const IdentityLift& i, const CompleteMap& m);
CompleteReducedMap id_action(const IdentityLift& i, const CompleteReducedMap& m);
OrbifoldMap id_action(const IdentityLift& i, const OrbifoldMap& m);
ConjugacyClassMap id_action(const IdentityLift& i, const ConjugacyClassMap& m);
ReducedMap id_action(const IdentityLift& i, const ReducedMap& m);

template <class MapT>
struct OrbitResult {
  std::vector<MapT> orbit;
  Subgroup isotropy;
};

/// Orbit and stabilizer of m under the identity lifts drawn from `lifts`
/// (a subgroup of the target chart group). Throws ChartMismatch.
template <class MapT>
OrbitResult<MapT> orbit_and_isotropy(const MapT& m, const Subgroup& lifts) {
  if (!same_group(lifts.parent(), m.dst.group)) {
    fail(ErrorCode::ChartMismatch, "identity lifts must come from the target chart group");
  }
  std::vector<MapT> orbit;
  std::vector<std::size_t> stabilizer;
  for (std::size_t eta : lifts.members()) {
    MapT image = id_action(IdentityLift{m.dst, eta}, m);
    if (image == m) stabilizer.push_back(eta);
    if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) orbit.push_back(std::move(image));
  }
  OrbitResult<MapT> out{std::move(orbit), Subgroup::from_members(lifts.parent(), stabilizer)};
  if (out.orbit.size() * out.isotropy.order() != lifts.order()) {
    throw std::logic_error("orbit-stabilizer identity violated");
  }
  return out;
}

struct NeighborhoodVerdict {
  bool compatible = false;     // Θ_f = Θ_g
  bool same_stratum = false;   // g̃(0) fixed by Θ_f(Γ)
};

/// Throws ChartMismatch.
NeighborhoodVerdict neighborhood_compatible(const CompleteMap& f, const CompleteMap& g);

/// (Θ′(γ)⁻¹·Θ(γ))·f̃ = f̃ for all γ, for two complete maps sharing a lift.
bool image_fixing_identity(const CompleteMap& a, const CompleteMap& b);
/// All η ∈ Γ_dst with η·ã = b̃.
std::vector<std::size_t> connecting_elements(const CompleteMap& a, const CompleteMap& b);

CompleteMap identity_complete_map(const QuotientChart& chart);

}  // namespace orbimap
